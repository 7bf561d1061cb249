"""End-to-end checks of the command-line tool: outputs, exit codes, schemas
and determinism. Usage: test_cli.py <graphprod binary>"""

import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
import networkx as nx

ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"
DATA = ROOT / "data"
BIN = sys.argv[1]

C4 = "Cl"
C5 = "Dhc"
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("GRAPHPROD_THREADS", None)
    if env:
        full_env.update(env)
    p = subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)
    return p.returncode, p.stdout, p.stderr


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def json_case(name, args, schema_name, expect_code=0, env=None):
    code, out, err = run(*args, env=env)
    check(code == expect_code, f"{name}: exit {code}, expected {expect_code}: {err.strip()}")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError:
        check(False, f"{name}: output is not JSON")
        return None
    try:
        jsonschema.validate(doc, schema(schema_name))
    except jsonschema.ValidationError as e:
        check(False, f"{name}: schema {schema_name}: {e.message}")
    return doc


def data(name):
    return str(DATA / name)


# Fixtures are valid labeled-graph documents.
for f in sorted(DATA.glob("*.json")):
    doc = json.loads(f.read_text())
    jsonschema.validate(doc, schema("labeled_graph" if "labels" in doc else "graph"))

# analyze
c4 = json_case("analyze C4", ["analyze", "--graph6", C4], "analyze")
check(c4["strongly_reduced"] is False, "C4 strongly reduced")
check(len(c4["join_decomposition"]["parts"]) == 2, "C4 join parts")
c5 = json_case("analyze C5", ["analyze", "--graph6", C5], "analyze")
check(c5["girth"] == 5 and c5["transvection_free"], "C5 report")
check(c5["hypotheses"]["A"]["ok"] and not c5["labels_checked"], "C5 hypothesis matrix")
pet = json_case("analyze Petersen", ["analyze", "--graph", data("petersen_factor.json")], "analyze")
check(pet["symmetry"]["acting_group"]["order"] == 120, "Petersen acting group")
check(pet["symmetry"]["amplification_note"] == "t=1 forced", "Petersen amplification")
check(pet["prime_factorization"]["certified"], "Petersen prime factorization")
c4l = json_case("analyze C4 labeled", ["analyze", "--graph", data("c4_factor.json")], "analyze")
check(c4l["symmetry"]["acting_group"] == "not certified", "C4 symmetry not certified")

code, out, _ = run("analyze", "--graph6", C5, "--dot")
check(code == 0 and out.startswith("graph") and "--" in out, "dot output")

# classify
v = json_case("classify C5/C6", ["classify", data("c5_raag.json"), data("c6_raag.json")], "verdict")
check(v["kind"] == "DistinctCertified" and v["theorem_tag"] == "Cor-RAAG", "C5/C6 verdict")
v = json_case("classify rotated", ["classify", data("c5_raag.json"), data("c5_rotated_raag.json")], "verdict")
check(v["kind"] == "IsomorphicCertified" and v["witness"] is not None, "rotated verdict")
v = json_case("classify K33/K25", ["classify", data("k33_raag.json"), data("k25_raag.json")], "verdict")
check(v["kind"] == "EquivalentKnown" and v["theorem_tag"] == "Radulescu", "bipartite verdict")
v = json_case("classify hyperfinite", ["classify", data("c5_hyperfinite.json"), data("c6_hyperfinite.json")], "verdict")
check(v["kind"] == "DistinctCertified" and v["theorem_tag"] == "Cor-hyperfinite", "hyperfinite verdict")
v = json_case("classify C4", ["classify", data("c4_factor.json"), data("c4_factor.json")], "verdict")
check(v["kind"] == "Undecided" and v["unmet"], "C4 undecided")
json_case("require decision", ["classify", data("c4_factor.json"), data("c4_factor.json"), "--require-decision"],
          "verdict", expect_code=1)
json_case("require decision decided", ["classify", data("c5_raag.json"), data("c6_raag.json"), "--require-decision"],
          "verdict", expect_code=0)

# words
code, out, _ = run("words", "--graph", data("edge.json"), "reduce", "0", "1", "0")
check(code == 0 and out == "[1] length 1\n", f"words reduce: {out!r}")
code, out, _ = run("words", "--graph", '{"n":2,"edges":[[0,1]]}', "reduce", "0", "1", "0")
check(code == 0 and out == "[1] length 1\n", "words with inline JSON")
for op, extra in [("reduce", []), ("inverse", []), ("boundary", []), ("member", ["--subset", "0 2"]),
                  ("product", ["--factor", "0 1", "--factor", "2 3 4"]), ("split", ["--left", "0", "--right", "2"])]:
    json_case(f"words {op}", ["words", "--graph6", C5, op, *extra, "--json", "0", "2", "1"], "words")
w = json_case("words equal", ["words", "--graph6", C5, "equal", "--json", "1", "0", "/", "0", "1"], "words")
check(w["equal"] is True, "commuting letters are equal")

# enumerate
e = json_case("enumerate C5", ["enumerate", "--graph6", C5, "--max-len", "2"], "enumerate")
check(e["size"] == 21, "C5 ball size")
e = json_case("enumerate edgeless", ["enumerate", "--graph6", "A?", "--max-len", "5", "--elements"], "enumerate")
check(e["strata"] == [1, 2, 2, 2, 2, 2], "edgeless strata")
cat = json_case("catalog", ["enumerate", "--catalog", "5"], "catalog")
check(cat["count"] == 34, "catalog count")

# verify, sample, iso
r = json_case("verify", ["verify", "--max-n", "5"], "verify")
check(r["total_counterexamples"] == 0, "lemmas hold")
r = json_case("verify control", ["verify", "--max-n", "5", "--lemma", "collapsible-components", "--drop-hypothesis"],
              "verify")
found = [nx.from_graph6_bytes(c["graph6"].encode()) for c in r["reports"][0]["counterexamples"]]
check(any(nx.is_isomorphic(g, nx.cycle_graph(4)) for g in found), "control finds C4")
s = json_case("sample", ["sample", "--n", "50", "--p", "0.5", "--trials", "200", "--seed", "3"], "sample")
check(s["fractions"]["transvection_free"] >= 0.95, "sample fraction")
i = json_case("iso", ["iso", "--graph6", C5, "--graph", data("c5_raag.json")], "iso")
check(i["isomorphic"], "C5 iso")
i = json_case("iso none", ["iso", "--graph6", C5, "--graph6", C4], "iso")
check(i["witness"] == "none", "C4/C5 iso none")
i = json_case("iso labeled", ["iso", "--graph", data("c5_raag.json"), "--graph", data("c5_hyperfinite.json"),
                              "--mode", "strict-class"], "iso")
check(not i["isomorphic"], "labels separate")

# errors
code, _, err = run("analyze", "--graph6", "C~~")
check(code == 2 and "byte offset" in err, f"graph6 error: {err}")
code, _, err = run("words", "--graph6", C5, "reduce", "0", "x")
check(code == 2 and "byte offset 2" in err, f"word error: {err}")
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    f.write('{"n": 3, "edges": [[0, 1],, ]}')
code, _, err = run("analyze", "--graph", f.name)
check(code == 2 and "byte offset" in err, f"json error: {err}")
os.unlink(f.name)
code, _, _ = run("classify", data("c5_raag.json"))
check(code == 2, "classify arity")
code, _, _ = run("frobnicate")
check(code == 2, "unknown subcommand")
code, _, err = run("enumerate", "--graph6", C5, "--max-len", "30", "--cap", "100")
check(code == 3, f"cap exit: {err}")
code, _, _ = run("sample", env={"GRAPHPROD_THREADS": "two"})
check(code == 2, "bad thread count")

# determinism across runs and thread counts
for args in (["sample", "--trials", "300", "--seed", "9"], ["verify", "--max-n", "6"],
             ["enumerate", "--catalog", "6"], ["analyze", "--graph", data("petersen_factor.json")]):
    outs = {run(*args, env={"GRAPHPROD_THREADS": t})[1] for t in ("1", "3", "0", "1")}
    check(len(outs) == 1, f"deterministic: {' '.join(args)}")

if failures:
    print(f"{len(failures)} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")
