"""Graph minors, spectral radii and small-n extremal search."""

from ._speclab import (
    Graph,
    SpeclabError,
    canonical_code,
    check_structure,
    clique_closure_check,
    construct,
    contract_edge,
    delete_vertex,
    disjoint_union,
    edge_bound_audit,
    enumerate_connected,
    extremal_search,
    find_minor_model,
    fs_subgraph_witness,
    has_fs_minor,
    has_qt_minor,
    join,
    layout,
    perron_audit,
    qt_subgraph_witness,
    rho_closed_form,
    spectral_radius,
    verify_certificate,
)

__all__ = [
    "Graph",
    "SpeclabError",
    "canonical_code",
    "check_structure",
    "clique_closure_check",
    "construct",
    "contract_edge",
    "delete_vertex",
    "disjoint_union",
    "edge_bound_audit",
    "enumerate_connected",
    "extremal_search",
    "find_minor_model",
    "fs_subgraph_witness",
    "has_fs_minor",
    "has_qt_minor",
    "join",
    "layout",
    "perron_audit",
    "qt_subgraph_witness",
    "rho_closed_form",
    "spectral_radius",
    "verify_certificate",
]
