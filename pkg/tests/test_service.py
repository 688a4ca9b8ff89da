import pytest
from fastapi.testclient import TestClient

from clab.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def _k3_doc(lists=True):
    doc = {"name": "K3", "vertices": ["a", "b", "c"],
           "edges": [["a", "b"], ["b", "c"], ["a", "c"]]}
    if lists:
        doc["lists"] = {v: [0, 1] for v in "abc"}
        doc["b"] = 1
    return doc


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_gadget_endpoint(client):
    resp = client.post("/gadget", json={"m": 1})
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["verdict"] == "ok"
    assert len(doc["details"]["graph"]["vertices"]) == 18
    assert len(doc["details"]["graph"]["edges"]) == 47
    assert doc["details"]["params"] == {"m": 1, "k": 0, "a": 4, "p": 12}


def test_gadget_dot_format(client):
    resp = client.post("/gadget", json={"m": 2, "format": "dot"})
    assert resp.json()["details"]["dot"].count(" -- ") == 47


def test_solve_endpoint(client):
    resp = client.post("/solve", json={"graph": _k3_doc()})
    assert resp.status_code == 200
    assert resp.json()["verdict"] == "infeasible"


def test_solve_with_palette(client):
    resp = client.post("/solve",
                       json={"graph": _k3_doc(lists=False), "b": 1, "palette": 3})
    assert resp.json()["verdict"] == "feasible"


def test_solve_missing_lists_is_400(client):
    resp = client.post("/solve", json={"graph": _k3_doc(lists=False), "b": 1})
    assert resp.status_code == 400
    assert "lists" in resp.json()["error"]


def test_unknown_graph_key_is_422(client):
    doc = _k3_doc()
    doc["mystery"] = True
    assert client.post("/solve", json={"graph": doc}).status_code == 422


def test_loop_edge_is_400(client):
    resp = client.post("/solve", json={
        "graph": {"vertices": ["a"], "edges": [["a", "a"]]}, "b": 1, "palette": 1})
    assert resp.status_code == 400
    assert "loop" in resp.json()["error"]


def test_encode_endpoint(client):
    resp = client.post("/encode", json={"graph": _k3_doc()})
    doc = resp.json()
    assert doc["verdict"] == "ok"
    assert "p cnf" in doc["details"]["dimacs"]
    assert doc["details"]["primary_variables"] == 6


def test_verify_lemma_endpoint(client):
    resp = client.post("/verify/lemma", json={"m": 1, "method": "replay"})
    doc = resp.json()
    assert doc["verdict"] == "verified"
    assert doc["details"]["replay"]["branches_checked"] == 2


def test_verify_theorem_endpoint(client):
    resp = client.post("/verify/theorem", json={"m": 1})
    doc = resp.json()
    assert doc["verdict"] == "verified"
    assert doc["details"]["details"]["copies_verified"] == 12


def test_verify_theorem_whole_graph_endpoint(client):
    resp = client.post("/verify/theorem", json={"m": 1, "whole_graph": True})
    doc = resp.json()
    assert doc["verdict"] == "verified"
    assert doc["details"]["details"]["vertices"] == 194


def test_verify_theorem_cap_exceeded_is_400(client):
    resp = client.post("/verify/theorem", json={"m": 3, "whole_graph": True})
    assert resp.status_code == 400
    assert "cap" in resp.json()["error"]


def test_verify_arithmetic_endpoint(client):
    resp = client.post("/verify/arithmetic", json={"max_m": 1000})
    assert resp.json()["verdict"] == "verified"


def test_witness_endpoint(client):
    resp = client.post("/witness", json={"graph": _k3_doc(lists=False), "a": 2, "b": 1,
                                         "universe": 6})
    doc = resp.json()
    assert doc["verdict"] == "witness"
    assert doc["details"]["lists"] == {"a": [0, 1], "b": [0, 1], "c": [0, 1]}


def test_chif_endpoint(client):
    c5 = {"name": "C5", "vertices": [f"v{i}" for i in range(5)],
          "edges": [[f"v{i}", f"v{(i + 1) % 5}"] for i in range(5)]}
    resp = client.post("/chif", json={"graph": c5, "max_b": 2})
    assert resp.json()["details"]["value"] == "5/2"


def test_export_dot_endpoint(client):
    resp = client.post("/export-dot", json={"graph": _k3_doc()})
    dot = resp.json()["details"]["dot"]
    assert dot.count(" -- ") == 3
    assert 'label="a:{0,1}"' in dot


def test_report_envelope_fields(client):
    doc = client.post("/verify/arithmetic", json={"max_m": 5}).json()
    assert set(doc) == {"command", "inputs", "verdict", "details", "timing"}
    assert doc["command"] == "verify arithmetic"
    assert "seconds" in doc["timing"]
