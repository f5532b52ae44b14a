"""Degeneration criteria, section-space models and enumeration for dual
graphs of stable curves."""

__version__ = "0.1.0"

from .graph import (  # noqa: F401
    DualGraph,
    GraphError,
    betti1,
    delete_edges,
    incident_edge_set,
    stability_check,
    total_genus,
)
from .canonical import canonical_code, canonical_graph  # noqa: F401
from .criteria import (  # noqa: F401
    CriterionError,
    CriterionReport,
    n_max,
    penalty_maximize,
    remark_margin,
    theorem_margin,
)
from .residue_model import (  # noqa: F401
    build_section_space,
    edge,
    prop1_witness_dim,
    restriction_kernel_dim,
    vertex,
)
from .exact import exact_rank  # noqa: F401
from .determinantal import (  # noqa: F401
    empirical_codim,
    enumerate_rank_counts,
    rank_count_exact,
    rank_count_table,
    tuple_rank_deficient,
)
from .enumeration import (  # noqa: F401
    EnumerationQuery,
    EnumerationStats,
    enumerate_stable_graphs,
    minimal_genus,
    search_witnesses,
)
from .fixtures import figure1, heawood  # noqa: F401
from .io import parse_graph, serialize_graph, to_dot  # noqa: F401
