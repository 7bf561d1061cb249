import json
from pathlib import Path

import jsonschema
import networkx as nx
import pytest

import graphprod as gp

ROOT = Path(__file__).resolve().parents[2]
DATA = ROOT / "data"
SCHEMAS = ROOT / "schemas"


def fixture(name):
    return json.loads((DATA / f"{name}.json").read_text())


def validate(doc, schema):
    jsonschema.validate(doc, json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))


def labeled(g, label):
    return {"n": g.number_of_nodes(), "edges": [list(e) for e in g.edges()], "labels": [label] * g.number_of_nodes()}


RAAG = {"class": "L(Z)", "diffuse": True, "amenable": True, "factor": False}


def test_graph6_round_trip_matches_networkx():
    for n in range(1, 6):
        for code in gp.catalog(n):
            g = nx.from_graph6_bytes(code.encode())
            assert g.number_of_nodes() == n
            assert gp.to_graph6({"n": n, "edges": [list(e) for e in g.edges()]}) == code


def test_catalog_counts():
    assert [len(gp.catalog(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_analyze():
    r = gp.analyze("Cl")
    validate(r, "analyze")
    assert r["strongly_reduced"] is False
    assert len(r["join_decomposition"]["parts"]) == 2
    p = gp.analyze(fixture("petersen_factor"))
    validate(p, "analyze")
    assert p["symmetry"]["acting_group"]["order"] == 120


def test_words():
    edge = {"n": 2, "edges": [[0, 1]]}
    assert gp.reduce(edge, [0, 1, 0]) == [1]
    assert gp.reduce("A?", [0, 1, 1, 0]) == []
    c5 = "Dhc"
    w = [0, 2, 1, 3]
    assert gp.reduce(c5, gp.multiply(c5, w, gp.inverse(c5, w))) == []
    assert gp.parabolic_member(c5, [0, 2, 0], [0, 2])
    assert not gp.parabolic_member(c5, [0, 1], [0, 2])
    assert gp.product_member(c5, [1, 0], [[1], [0]])
    b = gp.boundary(c5, [0, 2])
    assert b["support"] == [0, 2]
    d = gp.split(c5, [0, 1, 2], [0], [2])
    assert gp.reduce(c5, d["left"] + d["core"] + d["right"]) == gp.reduce(c5, [0, 1, 2])


def test_enumerate():
    e = gp.enumerate_words("Dhc", 2)
    validate(e, "enumerate")
    assert e["size"] == 21
    assert gp.enumerate_words("A?", 4, elements=True)["strata"] == [1, 2, 2, 2, 2]
    with pytest.raises(gp.CapExceeded):
        gp.enumerate_words("Dhc", 30, cap=100)


def test_classify_fixtures():
    v = gp.classify(fixture("c5_raag"), fixture("c6_raag"))
    validate(v, "verdict")
    assert (v["kind"], v["theorem_tag"]) == ("DistinctCertified", "Cor-RAAG")
    v = gp.classify(fixture("c5_raag"), fixture("c5_rotated_raag"))
    assert v["kind"] == "IsomorphicCertified"
    a, b = fixture("c5_raag"), fixture("c5_rotated_raag")
    m = v["witness"]
    ea = {frozenset((m[u], m[w])) for u, w in a["edges"]}
    assert ea == {frozenset(e) for e in b["edges"]}
    v = gp.classify(fixture("k33_raag"), fixture("k25_raag"))
    assert (v["kind"], v["theorem_tag"]) == ("EquivalentKnown", "Radulescu")
    assert gp.classify(fixture("c4_factor"), fixture("c4_factor"))["kind"] == "Undecided"


def test_classify_symmetric_on_small_pairs():
    graphs = [nx.from_graph6_bytes(c.encode()) for c in gp.catalog(5)][:12]
    for g in graphs:
        for h in graphs:
            a, b = labeled(g, RAAG), labeled(h, RAAG)
            assert gp.classify(a, b)["kind"] == gp.classify(b, a)["kind"]


def test_isomorphism():
    assert gp.isomorphism("Dhc", fixture("c5_raag"))["isomorphic"]
    assert gp.isomorphism("Dhc", "Cl")["witness"] == "none"
    r = gp.isomorphism(fixture("c5_raag"), fixture("c5_hyperfinite"), mode="strict-class")
    validate(r, "iso")
    assert not r["isomorphic"]


def test_verify_and_sample():
    r = gp.verify(max_n=5)
    validate(r, "verify")
    assert r["total_counterexamples"] == 0
    assert set(gp.lemmas()) == {rep["lemma"] for rep in r["reports"]}
    s1 = gp.sample(50, 0.5, 200, 7, threads=1)
    s2 = gp.sample(50, 0.5, 200, 7, threads=0)
    validate(s1, "sample")
    assert s1 == s2


def test_errors():
    with pytest.raises(gp.InputError, match="byte offset"):
        gp.analyze("C~~")
    with pytest.raises(gp.InputError):
        gp.reduce("Dhc", [0, 9])
    with pytest.raises(gp.InputError):
        gp.classify({"n": 1, "edges": []}, fixture("c5_raag"))
    with pytest.raises(TypeError):
        gp.analyze(5)
    assert issubclass(gp.InputError, ValueError)
