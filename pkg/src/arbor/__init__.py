"""Exact spanning-forest enumeration on Archimedean lattice strips."""

from .bounds import (
    BoundReport,
    bound_bcl1,
    bound_bcl2,
    bound_bcl34,
    bound_report,
    bound_ssg,
    crossover_delta,
    eta,
    product_bound,
    ratio_r_phi,
)
from .lattice import (
    LATTICES,
    ColumnDecomposition,
    Lattice,
    LatticeError,
    StripSpec,
    build_strip,
    column_decomposition,
    get_lattice,
    glue_columns,
    verify_lattice,
)
from .multigraph import (
    GraphError,
    GraphStats,
    Multigraph,
    build_graph,
    contract_edge,
    cycle_graph,
    cycle_with_loops,
    delete_edge,
    from_edge_text,
    stats,
    to_edge_text,
)
from .tables import LATTICE_DATA, emit_table1, emit_table2
from .transfer import (
    GrowthEstimate,
    TransferMatrix,
    build_transfer,
    count_forests_strip,
    dominant_eigenvalue,
    enumerate_states,
    phi_estimate,
)
from .tutte import (
    ResourceLimitError,
    TutteCoeffs,
    brute_count_cssg,
    brute_count_forests,
    count_connected_spanning_subgraphs,
    count_spanning_forests,
    tutte,
)

__version__ = "0.1.0"
