"""Turán numbers for graphs avoiding a clique together with long cycles or a long path."""

from .constructions import (
    build,
    construct_F,
    construct_G1,
    construct_G2,
    construct_G3,
    construct_G4,
    construct_Gr,
    construct_H,
    construct_KX,
    turan_graph,
    verify_construction,
)
from .formulas import (
    ConstructionId,
    ExtremalResult,
    LemmaAuditReport,
    RangeError,
    Status,
    audit_lemmas,
    ex_clique,
    f_value,
    g_value,
    h_value,
    t_edges,
    turan_number_cycles,
    turan_number_cycles_2conn,
    turan_number_paths,
)
from .graph import (
    Graph,
    GraphError,
    amalgam,
    complete_graph,
    disjoint_union,
    empty_graph,
    graph6_decode,
    graph6_encode,
    join,
)
from .invariants import (
    BudgetExceeded,
    Certificate,
    ForbiddenFamily,
    block_decomposition,
    circumference,
    clique_number,
    core,
    is_free,
    is_kr_saturated,
    is_two_connected,
    longest_path_order,
)
from .oracle import (
    Connectivity,
    EnumerationTask,
    OracleResult,
    brute_force_ex,
    enumerate_free_graphs,
    lower_bound_search,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Certificate",
    "Connectivity",
    "ConstructionId",
    "EnumerationTask",
    "ExtremalResult",
    "ForbiddenFamily",
    "Graph",
    "GraphError",
    "LemmaAuditReport",
    "OracleResult",
    "RangeError",
    "Status",
    "amalgam",
    "audit_lemmas",
    "block_decomposition",
    "brute_force_ex",
    "build",
    "circumference",
    "clique_number",
    "complete_graph",
    "construct_F",
    "construct_G1",
    "construct_G2",
    "construct_G3",
    "construct_G4",
    "construct_Gr",
    "construct_H",
    "construct_KX",
    "core",
    "disjoint_union",
    "empty_graph",
    "enumerate_free_graphs",
    "ex_clique",
    "f_value",
    "g_value",
    "graph6_decode",
    "graph6_encode",
    "h_value",
    "is_free",
    "is_kr_saturated",
    "is_two_connected",
    "join",
    "longest_path_order",
    "lower_bound_search",
    "t_edges",
    "turan_graph",
    "turan_number_cycles",
    "turan_number_cycles_2conn",
    "turan_number_paths",
    "verify_construction",
]
