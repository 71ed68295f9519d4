"""CLI integration checks: determinism, exit codes, report shape."""

import json
import subprocess
import sys

BIN = sys.argv[1]


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def report(proc):
    return json.loads(proc.stdout)


def check(cond, what):
    if not cond:
        raise SystemExit(f"FAIL: {what}")
    print(f"ok: {what}")


def main():
    # determinism modulo the timing field
    a = report(run("dimension", "--a", "group:C3", "--b", "group:C3", "--field", "Q"))
    b = report(run("dimension", "--a", "group:C3", "--b", "group:C3", "--field", "Q"))
    a.pop("timing_ms")
    b.pop("timing_ms")
    check(a == b, "reports are byte-identical modulo timing")
    check(a["results"]["dimension"] == 6, "dimension command reports 6 for the C3 self-pair")
    check(a["inputs_digest"] == b["inputs_digest"], "inputs digest is stable")

    p = run("comeasure", "--a", "group:C2", "--b", "group:C3", "--field", "Q")
    check(p.returncode == 0, "comeasure exits 0")
    check(report(p)["results"]["status"] == "Trivial", "C2 -> C3 reported Trivial")

    p = run("validate", "--spec", "group:C4", "--field", "F5")
    check(p.returncode == 0 and report(p)["results"]["valid"], "validate accepts C4 over F5")

    p = run("validate", "--spec", "group:C0")
    check(p.returncode == 2, "validation failure exits 2")

    p = run("dimension", "--a", "group:C4", "--b", "group:C4", "--degree", "20")
    check(p.returncode == 3, "degree beyond the hard cap exits 3")

    p = run("grouplikes", "--a", "group:C2", "--b", "group:C2", "--field", "F5")
    check(report(p)["results"]["count"] == 2, "grouplikes command over F5")

    p = run("grouplikes", "--a", "group:C2", "--b", "group:C2", "--field", "Q")
    check(p.returncode == 3, "grouplike enumeration over Q exits 3 (budget)")

    p = run("primitives", "--a", "group:C2", "--b", "group:C2", "--field", "F2")
    check(report(p)["results"]["dimension_of_space"] == 1, "primitives command over F2")

    p = run("antipode", "--a", "group:C2", "--b", "group:C2", "--field", "F5")
    check(p.returncode == 0, "antipode command runs")

    p = run("dual-coalgebra", "--a", "group:C2", "--b", "group:C2", "--field", "Q")
    check(report(p)["results"]["dimension"] == 2, "dual-coalgebra command runs")

    p = run("hopf-check", "--objects", "group:C2,k", "--field", "Q")
    check(p.returncode == 0 and report(p)["results"]["pass"], "hopf-check passes")

    p = run("duality-check", "--a", "group:C2", "--b", "group:C2", "--field", "F5")
    check(p.returncode == 0 and report(p)["results"]["pass"], "duality-check passes")

    p = run("reproduce", "c2-self")
    check(p.returncode == 0 and report(p)["results"]["pass"], "reproduce c2-self passes")

    p = run("reproduce", "no-such-id")
    check(p.returncode == 2, "unknown reproduce id exits 2")

    print("all cli checks passed")


if __name__ == "__main__":
    main()
