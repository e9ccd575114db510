"""Runs the maxsemi binary on a few instances, checks exit codes and counts,
validates every JSON document against the shipped schema, and checks that
output is byte-identical across two runs."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)
failures = []


def run(args, expect_code):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures.append(f"{args}: exit {proc.returncode}, expected {expect_code}\n{proc.stderr}")
    return proc.stdout


def run_json(args, expect_code=0):
    out = run(["--format", "json", *args], expect_code)
    again = run(["--format", "json", *args], expect_code)
    if out != again:
        failures.append(f"{args}: output differs between runs")
    doc = json.loads(out)
    for err in validator.iter_errors(doc):
        failures.append(f"{args}: schema: {err.message} at {list(err.absolute_path)}")
    return doc


def expect(cond, what):
    if not cond:
        failures.append(what)


doc = run_json(["info", "--family", "J", "--degree", "4"])
expect(doc["order"] == 14 and doc["units"]["order"] == 1, "J_4 info")
expect([j["rank"] for j in doc["j_classes"]] == [4, 2, 0], "J_4 ranks")

doc = run_json(["info", "--family", "B", "--degree", "3"])
expect(doc["order"] == 15 and doc["units"]["order"] == 6, "B_3 info")

doc = run_json(["info", "--family", "PT", "--degree", "1"])
expect(doc["order"] == 2 and doc["semilattice"], "PT_1 info")

doc = run_json(["maximal", "--family", "POI", "--degree", "3", "--mode", "theorem"])
expect(doc["count"] == 7 and all(e["verdict"]["maximal"] for e in doc["entries"]), "POI_3 theorem")
expect(doc["cross_check"]["agreement"], "POI_3 cross-check")

doc = run_json(["maximal", "--family", "I", "--degree", "2", "--mode", "oracle"])
expect(doc["count"] == 2, "I_2 oracle")

doc = run_json(["maximal", "--family", "AJ", "--degree", "6"])
expect(doc["count"] == 3, "AJ_6 theorem")

doc = run_json(["maximal", "--family", "PB", "--degree", "3", "--mode", "classify"], 2)
expect(doc["status"] == "incomplete" and doc["cross_check"]["agreement"], "PB_3 classify is partial but agrees")

doc = run_json(["table1", "--degrees", "4..4", "--families", "M,PORI,J"])
rows = {r["family"]: r for r in doc["rows"]}
expect(rows["M"]["constructed_count"] == 21 and rows["M"]["verified"], "M_4 row")
expect(rows["PORI"]["formula_count"] == 4 and rows["PORI"]["verified"], "PORI_4 row")

doc = run_json(["table1", "--degrees", "6..6", "--families", "PORI"])
expect(doc["rows"][0]["formula_count"] == 7 and doc["rows"][0]["verified"], "PORI_6 row")

doc = run_json(["table1", "--degrees", "2..2", "--families", "PODI,OR"], 3)
rows = {r["family"]: r for r in doc["rows"]}
expect(rows["PODI"]["status"] == "verified-exception", "PODI_2 exception row")
expect(rows["OR"]["status"] == "mismatch", "OR_2 stated count is flagged")

doc = run_json(["table1", "--degrees", "9..9", "--families", "T"], 2)
expect(doc["rows"][0]["status"] == "capacity", "T_9 capacity recorded in-row")

csv = run(["--format", "csv", "table1", "--degrees", "3..3", "--families", "POI"], 0)
expect(csv.splitlines()[0] == "family,n,formula,formula_count,constructed_count,verified,status,note",
       "CSV header")
expect(csv.splitlines()[1].startswith("POI,3,2^n - 1,7,7,true,verified"), "CSV row")

run(["maximal", "--family", "XX", "--degree", "3"], 1)

doc = run_json(["cayley", "--family", "T", "--degree", "2"])
expect(len(doc["table"]) == 4, "T_2 Cayley table")

for f in failures:
    print("FAIL:", f)
print("cli smoke:", "ok" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
