#!/usr/bin/env python3
"""End-to-end checks of the command-line interface: output formats, file
inputs, exit codes."""

import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1] if len(sys.argv) > 1 else "./build/tools/riordan"
failures = []


def run(*args, expect_rc=0):
    r = subprocess.run([CLI, *args], capture_output=True, text=True)
    if r.returncode != expect_rc:
        failures.append(f"{args}: rc={r.returncode}, expected {expect_rc}\n{r.stderr}")
    return r.stdout


def check(name, cond):
    if not cond:
        failures.append(name)
    print(("ok   " if cond else "FAIL ") + name)


# Delannoy triangle, text format
out = run("riordan", "--g", "1/(1-x)", "--f", "x*(1+x)/(1-x)", "--size", "7")
rows = [line.split() for line in out.strip().splitlines()]
check("riordan text matrix", rows[6] == "1 11 41 63 41 11 1".split())
check("riordan text alignment", all(len(line) == len(out.splitlines()[0]) for line in out.splitlines()))

# JSON output round-trips through the documented schema
out = run("riordan", "--g", "1/(1-x)", "--f", "x/(1-x)", "--size", "5", "--format", "json")
m = json.loads(out)
check("riordan json matrix", m[4] == ["1", "4", "6", "4", "1"])

# csv
out = run("riordan", "--g", "1/(1-x)", "--f", "x/(1-x)", "--size", "3", "--format", "csv")
check("riordan csv", out == "1,0,0\n1,1,0\n1,2,1\n")

# views
out = run("riordan", "--g", "1/(1-x)", "--f", "x*(1+x)/(1-x)", "--size", "4", "--view", "rectify", "--format", "csv")
check("riordan rectify", out.splitlines()[2] == "1,5,13,25")
out = run("riordan", "--g", "1/(1-x)", "--f", "x*(1+x)/(1-x)", "--size", "4", "--view", "triangulate", "--format", "csv")
check("riordan triangulate", out.splitlines()[3] == "1,6,12,8")
out = run("riordan", "--g", "1/(1-x)", "--f", "x*(1+x)/(1-x)", "--size", "8", "--sums", "diagonal", "--format", "csv")
check("riordan diagonal sums", out.strip() == "1,1,2,4,7,13,24,44")

# series and definitions; the division by 2x inside the definition costs one
# coefficient of the requested order
out = run("series", "--def", "c=(1-sqrt(1-4*x))/(2*x)", "--expr", "1+x*c^2", "--order", "9", "--format", "csv")
check("series with def", out.strip() == "1,1,2,5,14,42,132,429")
out = run("series", "--fix", "g=1+x*g^3", "--order", "7", "--format", "csv")
check("series with fixpoint", out.strip() == "1,1,3,12,55,273,1428")

# paths from a spec file
with tempfile.TemporaryDirectory() as td:
    spec = os.path.join(td, "catalan.json")
    with open(spec, "w") as f:
        json.dump({"steps": [{"dx": 1, "dy": 1}, {"dx": 0, "dy": -1}], "region": "triangle"}, f)
    out = run("paths", "--spec", spec, "--size", "5", "--format", "csv")
    check("paths from file", out.splitlines()[4] == "14,14,9,4,1")
    out = run("paths", "--spec", spec, "--size", "6", "--sums", "--format", "csv")
    check("left factors", out.strip() == "1,2,5,14,42,132")

# inline spec JSON
out = run("paths", "--spec", '{"steps":[{"dx":1,"dy":0},{"dx":1,"dy":1},{"dx":2,"dy":1}]}',
          "--size", "5", "--format", "csv")
check("paths inline", out.splitlines()[4] == "1,7,13,7,1")

# production matrix
out = run("production", "--g", "(1-sqrt(1-4*x))/(2*x)", "--f", "(1-sqrt(1-4*x))/2",
          "--size", "5", "--format", "json")
p = json.loads(out)
check("production z/a", p["z"] == ["1"] * 5 and p["a"] == ["1"] * 5)

# amatrix solve and verify
out = run("amatrix", "--spec", '{"rows":[[1,1]],"rho":[1]}', "--order", "8", "--format", "csv")
check("amatrix solve", out.strip() == "0,1,2,6,22,90,394,1806")
out = run("amatrix", "--spec", '{"rows":[[1]],"rho":[1]}', "--verify",
          "--g", "(1-sqrt(1-4*x))/(2*x)", "--f", "(1-sqrt(1-4*x))/2", "--size", "10")
check("amatrix verify", out.strip() == "true")

# transforms
out = run("transform", "--op", "hankel", "--seq", "1,3,13,60,283,1348,6454,30992,149091", "--format", "csv")
check("hankel", out.strip() == "1,4,15,56,209")
out = run("transform", "--op", "invert", "--expr", "1/(1-2*x-2*x^2)", "--order", "6", "--format", "csv")
check("invert", out.strip() == "1,3,11,39,139,495")
out = run("transform", "--op", "cf", "--cf", '{"kind":"thron","b":[1,1,1,1,1,1,1,1,1,1],"lam":[1,1,1,1,1,1,1,1,1,1]}',
          "--order", "6", "--format", "csv")
check("thron cf", out.strip() == "1,2,6,22,90,394")
out = run("transform", "--op", "jextract", "--expr", "(1-x-sqrt(1-6*x+x^2))/(2*x)", "--depth", "4")
j = json.loads(out)
check("jextract", j["b"] == ["2", "3", "3", "3"] and j["lam"] == ["2", "2", "2", "2"])
out = run("transform", "--op", "somos4", "--seq", "1,1,1,1,2,3,7,23,59,314", "--A", "1", "--B", "1")
check("somos4", out.strip() == "true")

# --output writes a file
with tempfile.TemporaryDirectory() as td:
    path = os.path.join(td, "out.json")
    run("series", "--expr", "1/(1-x)", "--order", "4", "--format", "json", "--output", path)
    with open(path) as f:
        check("output file", json.load(f) == ["1", "1", "1", "1"])

# exit codes: 2 for usage problems, 1 for computational errors
run("nonsense", expect_rc=2)
run("riordan", "--g", "1/(1-x)", expect_rc=2)                       # missing --f
run("riordan", "--g", "1/(1-x)", "--f", "x/(1-x)", "--order", "0", expect_rc=2)
run("series", "--expr", "1/(x-x)", expect_rc=1)                     # division by zero series
run("series", "--expr", "1+", expect_rc=1)                          # parse error
run("riordan", "--g", "x", "--f", "x", expect_rc=1)                 # invalid array
run("transform", "--op", "hankel", expect_rc=2)                     # missing --seq

# check subcommand: filtered run passes and is quick
out = run("check", "--filter", "golden-matrices/pascal")
check("check filter", "ok   golden-matrices/pascal" in out)

print()
if failures:
    print("FAILURES:")
    for f in failures:
        print(" -", f)
    sys.exit(1)
print("cli surface ok")
