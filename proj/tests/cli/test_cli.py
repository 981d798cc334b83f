"""End-to-end checks of the ptlab binary: exit codes, file round trips,
determinism and report schema validity.

usage: test_cli.py <ptlab binary> <report.schema.json>
"""
import itertools
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
SCHEMA = json.loads(Path(sys.argv[2]).read_text())
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)
failures = []


def run(*args, env=None, cwd=None):
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, env=env, cwd=cwd)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else f": {detail}"))
    if not cond:
        failures.append(name)


def read_el(path):
    lines = [l.split() for l in Path(path).read_text().splitlines() if l.strip() and not l.startswith("#")]
    n, m = int(lines[0][0]), int(lines[0][1])
    edges = {tuple(sorted((int(a), int(b)))) for a, b in lines[1:]}
    assert len(edges) == m
    return n, edges


def write_el(path, n, edges):
    Path(path).write_text(f"{n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in sorted(edges)))


def triangles(n, edges):
    return sum(1 for a, b, c in itertools.combinations(range(n), 3)
               if {(a, b), (a, c), (b, c)} <= edges)


def has_induced_p3(n, edges):
    for quad in itertools.combinations(range(n), 4):
        inner = [(u, v) for u, v in itertools.combinations(quad, 2) if (u, v) in edges]
        if len(inner) != 3:
            continue
        deg = sorted(sum(x in e for e in inner) for x in quad)
        if deg == [1, 1, 2, 2]:
            return True
    return False


def report(proc, name):
    try:
        j = json.loads(proc.stdout)
    except json.JSONDecodeError as e:
        check(name + " emits JSON", False, f"{e}: {proc.stdout[:200]} {proc.stderr[:200]}")
        return None
    errors = sorted(VALIDATOR.iter_errors(j), key=str)
    check(name + " report validates", not errors, errors[0].message if errors else "")
    return j


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    # rs construction with an explicit set and with the exact maximum set.
    p = run("gen", "rs", "--k", 5, "--S", "1,2,4", "--out", tmp / "rs.el")
    check("gen rs --S exit 0", p.returncode == 0, p.stderr)
    n, edges = read_el(tmp / "rs.el")
    cert = json.loads((tmp / "rs.el.cert.json").read_text())
    check("rs with S={1,2,4}: 30 vertices", n == 30)
    check("rs with S={1,2,4}: 15 certified triangles", len(cert["packing"]["tuples"]) == 15)
    check("rs with S={1,2,4}: brute-force triangle count 15", triangles(n, edges) == 15)
    check("rs sidecar keys", set(cert) == {"construction", "params", "seed", "packing", "farness"})

    p = run("gen", "rs", "--k", 5, "--ap", "exact", "--out", tmp / "rs_exact.el")
    n, edges = read_el(tmp / "rs_exact.el")
    cert = json.loads((tmp / "rs_exact.el.cert.json").read_text())
    check("rs with maximum 3-AP-free set: triangles = k|S|",
          triangles(n, edges) == len(cert["packing"]["tuples"]) == 5 * len(cert["params"]["S"]))

    p = run("gen", "cograph", "--n", 1)
    check("gen cograph --n 1", p.returncode == 0 and p.stdout.split()[:2] == ["1", "0"], p.stdout)

    write_el(tmp / "k4.el", 4, set(itertools.combinations(range(4), 2)))
    p = run("gen", "c5-gadget", "--from", tmp / "k4.el")
    check("c5-gadget from non-tripartite graph exits 2", p.returncode == 2, p.returncode)

    write_el(tmp / "k3.el", 3, {(0, 1), (0, 2), (1, 2)})
    p = run("gen", "c5-gadget", "--from", tmp / "k3.el", "--out", tmp / "g.el")
    gn, gedges = read_el(tmp / "g.el")
    check("c5-gadget from K3 has 15 vertices", p.returncode == 0 and gn == 15, p.stderr)

    # Exit codes.
    check("no subcommand exits 2", run().returncode == 2)
    check("unknown property exits 2", run("recognize", "--property", "nope", tmp / "k3.el").returncode == 2)
    check("missing file exits 3", run("recognize", "--property", "cograph", tmp / "missing.el").returncode == 3)
    (tmp / "bad.el").write_text("3 1\n0 7\n")
    check("malformed graph exits 3", run("recognize", "--property", "cograph", tmp / "bad.el").returncode == 3)

    # Generated graphs parse back identically and agree with brute force.
    for seed in range(6):
        out = tmp / f"gnp{seed}.el"
        p = run("--seed", seed, "gen", "gnp", "--n", 8, "--p", 0.5, "--out", out)
        n, edges = read_el(out)
        write_el(tmp / "copy.el", n, edges)
        q = run("recognize", "--property", "cograph", tmp / "copy.el")
        j = report(q, f"recognize gnp seed {seed}")
        if j:
            member = j["results"]["recognition"]["member"]
            check(f"cograph verdict seed {seed} matches brute force", member == (not has_induced_p3(n, edges)))
            check(f"graph summary seed {seed}", j["graphs"][0]["n"] == n and j["graphs"][0]["m"] == len(edges))
            if not member:
                w = j["results"]["recognition"]["witness"]
                check(f"cograph witness seed {seed} is a path",
                      all(tuple(sorted(w[i:i + 2])) in edges for i in range(3)) and
                      sum(tuple(sorted(pr)) in edges for pr in itertools.combinations(w, 2)) == 3)

    # Seed fallback through the environment.
    env = dict(os.environ, PTLAB_SEED="17")
    a = run("gen", "gnp", "--n", 12, "--p", 0.4, env=env).stdout
    b = run("--seed", 17, "gen", "gnp", "--n", 12, "--p", 0.4).stdout
    check("PTLAB_SEED matches --seed", a == b)

    # Tester reports: determinism across thread counts, schema validity.
    args = ["test", "--tester", "universal", "--property", "comparability", "--budget", 10, "--trials", 300,
            tmp / "rs.el"]
    r1 = report(run("--seed", 3, "--threads", 1, *args), "test universal")
    r4 = report(run("--seed", 3, "--threads", 4, *args), "test universal threads")
    if r1 and r4:
        check("thread count leaves results unchanged", r1["results"] == r4["results"])

    p = run("--seed", 2, "--format", "csv", "curve", "--tester", "triangle", "--budgets", "1,4,16", "--trials", 200,
            tmp / "rs.el")
    rows = p.stdout.strip().splitlines()
    check("curve csv has header and three rows", p.returncode == 0 and len(rows) == 4, p.stdout + p.stderr)

    j = report(run("curve", "--tester", "triangle", "--min-budget", "--target", 0.5, "--cap", 4096,
                   "--trials", 200, tmp / "rs.el"), "curve min-budget")

    j = report(run("decompose", "--beta", 0.1, tmp / "gnp0.el"), "decompose")
    j = report(run("distance", "--property", "triangle-free", tmp / "k3.el"), "distance")
    if j:
        check("distance K3 to triangle-free is 1", j["results"]["distance"] == 1, j["results"])

    p = run("--seed", 1, "--out", tmp / "rec", "search-extremal", "--quantity", "c", "--n", 5, "--beta", 0.2,
            "--effort", 4)
    check("search-extremal exits 0", p.returncode == 0, p.stderr)
    report(p, "search-extremal")
    sidecar = json.loads((tmp / "rec.json").read_text())
    record_schema = dict(SCHEMA["$defs"]["extremal_record"], **{"$defs": SCHEMA["$defs"]})
    errors = list(jsonschema.Draft202012Validator(record_schema).iter_errors(sidecar))
    check("extremal sidecar validates", not errors, errors[0].message if errors else "")
    n, edges = read_el(tmp / "rec.el")
    check("extremal sidecar matches graph", sidecar["n"] == n and sidecar["m"] == len(edges))
    check("extremal graph file exists", (tmp / "rec.el").exists())

    p = run("verify-suite", "packing", "--seeds", 10)
    check("verify-suite packing passes", p.returncode == 0, p.stderr)

    # Pipelines write report.json and curve.csv; reruns are identical.
    for name, extra in [("pipeline-easy", ["--n", 16, "--flips", "0,8", "--ts", "1,4", "--trials", 100]),
                        ("pipeline-hardness", ["--ks", "3", "--ds", "0,6", "--trials", 20])]:
        outs = []
        for run_id in range(2):
            d = tmp / f"{name}{run_id}"
            p = run("--seed", 5, "--out", d, name, *extra)
            check(f"{name} exits 0", p.returncode == 0, p.stderr)
            rep = json.loads((d / "report.json").read_text())
            errors = list(VALIDATOR.iter_errors(rep))
            check(f"{name} report validates", not errors, errors[0].message if errors else "")
            check(f"{name} writes curve.csv", (d / "curve.csv").exists())
            outs.append((rep["results"], (d / "curve.csv").read_text()))
        check(f"{name} rerun is byte-identical", json.dumps(outs[0][0], sort_keys=True) ==
              json.dumps(outs[1][0], sort_keys=True) and outs[0][1] == outs[1][1])
        if name == "pipeline-hardness":
            rows = [l.split(",") for l in outs[0][1].strip().splitlines()[1:]]
            check("d = 0 never rejects", all(float(r[5]) == 0.0 for r in rows if r[4] == "0"))

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
