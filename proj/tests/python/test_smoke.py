import math

import pytest

import speclab


def test_graph_round_trip():
    g = speclab.Graph.from_g6("Cl")
    assert g.order == 4
    assert g.edge_count == 4
    assert g.g6() == "Cl"
    assert speclab.Graph(3, [(0, 1), (1, 2), (0, 2)]).g6() == "Bw"
    assert speclab.contract_edge(g, 0, 1) == speclab.construct("complete:n=3")


def test_errors_carry_codes():
    with pytest.raises(speclab.SpeclabError, match="MalformedGraph6"):
        speclab.Graph.from_g6("B!")
    with pytest.raises(speclab.SpeclabError, match="InvalidSpec"):
        speclab.construct("nonsense:n=3")


def test_spectral():
    r = speclab.spectral_radius(speclab.construct("complete-bipartite:a=2,b=9"))
    assert abs(r["rho"] - math.sqrt(18)) < 1e-9
    assert abs(speclab.rho_closed_form("ks-join-independent:s=2,n=6") - (1 + math.sqrt(33)) / 2) < 1e-12
    assert speclab.perron_audit(speclab.construct("complete-bipartite:a=1,b=5"))["satisfied"]


def test_minors_and_certificates():
    host = speclab.construct("ks-join-independent:s=3,n=10")
    found = speclab.has_fs_minor(host, 2)
    assert found["status"] == "Found"
    assert speclab.verify_certificate(host, found["certificate"])
    assert speclab.has_fs_minor(speclab.construct("ks-join-independent:s=2,n=8"), 2)["status"] == "NotFound"
    assert speclab.has_qt_minor(speclab.construct("cycle:n=6"), 1)["status"] == "Found"
    k32 = speclab.construct("complete-bipartite:a=3,b=2")
    assert speclab.find_minor_model(k32, k32)["status"] == "Found"


def test_subgraph_witnesses():
    assert speclab.fs_subgraph_witness(speclab.construct("complete:n=4"), 2) is None
    w = speclab.qt_subgraph_witness(speclab.construct("complete-bipartite:a=3,b=4"), 2)
    assert len(w["paths"]) == 2


def test_structure_and_closure():
    g = speclab.construct("ks-join-independent:s=2,n=8")
    rep = speclab.check_structure(g, [0, 1], list(range(2, 8)), "fs")
    assert rep["bipartite_complete"] and rep["b_path_free"]
    closure = speclab.clique_closure_check(speclab.construct("complete-bipartite:a=2,b=10"), [0, 1], "fs", 2)
    assert closure["consistent"]


def test_search_and_audit():
    assert [len(speclab.enumerate_connected(n)) for n in range(1, 6)] == [1, 1, 2, 6, 21]
    rep = speclab.extremal_search(7, "fs-minor:s=1", workers=2)
    assert rep["match"]
    assert abs(rep["best_rho"] - math.sqrt(6)) < 1e-9
    audit = speclab.edge_bound_audit(["efgg:s=3,n=450"], 3)
    assert audit["entries"][0]["edges"] == 50631
    assert speclab.canonical_code(speclab.Graph.from_g6("Cl")) == speclab.canonical_code(
        speclab.construct("cycle:n=4"))
