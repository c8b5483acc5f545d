#!/usr/bin/env python3
"""End-to-end checks of the convexa command line."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

EXE = sys.argv[1]
ROOT = sys.argv[2]
failures = []


def run(*args, stdin=None):
    p = subprocess.run([EXE, *args], input=stdin, capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f"  ({detail})" if detail and not cond else ""))
    if not cond:
        failures.append(name)


with open(os.path.join(ROOT, "schema", "report.schema.json")) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)


def data(name):
    return os.path.join(ROOT, "data", name)


# exit codes
for name, want in [("C15", 3), ("C6", 3), ("D5", 3), ("C8", 0), ("C_star", 0), ("S3", 0)]:
    rc, _, _ = run("analyze", "--name", name, "--no-timing")
    check(f"analyze {name} exit {want}", rc == want, f"got {rc}")
rc, _, err = run("analyze", "--file", "-", stdin="12 3 xx\n")
check("malformed input exits 1", rc == 1 and "xx" in err, err)
rc, _, _ = run("analyze", "--name", "no_such_code")
check("unknown name exits 1", rc == 1)
rc, _, _ = run("analyze", "--name", "C8", "--budget-max-pairs", "3", "--no-timing")
check("exhausted budget exits 4", rc == 4, f"got {rc}")
rc, out, _ = run("analyze", "--file", "-", "--no-timing", stdin="123 12 13 1 {}\n")
check("stdin text input", rc == 0 and "no certificate found" in out)

# schema, verdict agreement, determinism
for name in ["C6", "C8", "C15", "C_star", "C_theta", "RemoveHyp", "D7"]:
    rc, js, _ = run("analyze", "--name", name, "--json")
    doc = json.loads(js)
    errs = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    check(f"{name} report validates", not errs, errs[0].message if errs else "")
    check(f"{name} has timings", "timing_ms" in doc)
    _, text, _ = run("analyze", "--name", name, "--no-timing")
    check(f"{name} text and JSON verdicts agree", ("verdict: " + doc["verdict"]) in text, doc["verdict"])
    a = run("analyze", "--name", name, "--json", "--no-timing")[1]
    b = run("analyze", "--name", name, "--json", "--no-timing")[1]
    check(f"{name} output deterministic", a == b and "timing_ms" not in json.loads(a))

rc, js, _ = run("analyze", "--name", "C_theta", "--realization", data("theta_figure.json"), "--nondegeneracy",
                "--json", "--no-timing")
doc = json.loads(js)
check("report with realization validates", not list(validator.iter_errors(doc)))
check("theta realization block", doc["realization"]["match"]
      and doc["realization"]["nondegeneracy"]["verdict"] == "degenerate")

# verify-realization
rc, js, _ = run("verify-realization", "--name", "S3", "--realization", data("sunflower_3.json"), "--json")
check("S3 sunflower matches", rc == 0 and json.loads(js)["match"])
rc, out, _ = run("verify-realization", "--name", "C_theta", "--realization", data("theta_figure.json"),
                 "--nondegeneracy")
check("theta figure degenerate", rc == 0 and "degenerate" in out and "nondegenerate" not in out, out)
rc, js, _ = run("verify-realization", "--file", "-", "--realization", data("intervals_touching_open.json"),
                "--nondegeneracy", "--json", stdin="1 2 {}\n")
doc = json.loads(js)
check("open touching intervals match, degenerate", rc == 0 and doc["match"]
      and doc["nondegeneracy"]["verdict"] == "degenerate", js)
rc, js, _ = run("verify-realization", "--file", "-", "--realization", data("intervals_touching_closed.json"),
                "--json", stdin="1 2 {}\n")
doc = json.loads(js)
check("closed touching intervals mismatch exits 2", rc == 2 and doc["extra"] == [[1, 2]], js)
rc, _, _ = run("verify-realization", "--name", "S2", "--realization", data("sunflower_3.json"))
check("body count mismatch exits 1", rc == 1, f"got {rc}")
with tempfile.TemporaryDirectory() as tmp:
    svg = os.path.join(tmp, "theta.svg")
    rc, _, _ = run("verify-realization", "--name", "C_theta", "--realization", data("theta_figure.json"), "--svg", svg)
    ok = rc == 0 and os.path.exists(svg) and open(svg).read().lstrip().startswith("<svg")
    check("svg drawing written", ok)

# build-realization round trip
rc, js, _ = run("build-realization", "--sunflower", "3")
with open(data("sunflower_3.json")) as f:
    check("built sunflower equals stored file", rc == 0 and json.loads(js) == json.load(f))
rc, _, _ = run("build-realization", "--sunflower", "9")
check("sunflower n>6 rejected", rc == 1)

# rf-check
rc, js, _ = run("rf-check", "--name", "C6", "--additions", "--json")
doc = json.loads(js)
tuples = [(t["i"], t["j"], t["k"], t["l"], t["m"]) for t in doc["tuples"]]
adds = doc["additions"]
check("rf-check C6 tuple", rc == 3 and (3, 2, 1, 5, 4) in tuples, js[:200])
check("rf-check C6 additions", all(w in adds for w in ([3], [3, 4], [4, 5], [5])))
rc, out, _ = run("rf-check", "--name", "RemoveHyp", "--tuple", "1,2,3,5,4")
check("rf-check single tuple rows", rc == 0 and "row3=F" in out and out.count("=T") == 6, out)
rc, _, _ = run("rf-check", "--name", "C8")
check("rf-check C8 none", rc == 0)

# canonical-form, rigid-search, catalog
rc, out, _ = run("canonical-form", "--name", "C6")
check("canonical-form C6", rc == 0 and len(out.strip().splitlines()) == 10 and "U_35 = empty" in out)
rc, js, _ = run("rigid-search", "--name", "C10", "--all", "--json")
subcodes = [c["subcode"] for c in json.loads(js)["certificates"]] if rc == 3 else []
check("rigid-search C10", [[1, 3, 5], [2, 4, 5]] in subcodes, js[:200])
rc, out, _ = run("catalog", "list")
names = {line.split("\t")[0] for line in out.splitlines()}
check("catalog list", rc == 0 and {"C6", "C8", "C15", "C_star", "C_theta", "D<k>", "S<k>"} <= names, out)
rc, js, _ = run("catalog", "show", "C6", "--json")
check("catalog show", rc == 0 and json.loads(js)["n"] == 5)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
