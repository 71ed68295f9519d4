"""Smoke tests for the python bindings: drive the main operations end to end."""

import frobhopf


def check(cond, what):
    if not cond:
        raise SystemExit(f"FAIL: {what}")
    print(f"ok: {what}")


def main():
    check(isinstance(frobhopf.__version__, str), "version string present")

    v = frobhopf.validate("group:C4", field="Q")
    check(v["valid"] and v["dimension"] == 4 and v["symmetric"], "C4 validates, dim 4, symmetric")

    built = frobhopf.build("matrix:2", field="F7")
    check(built["frobenius"] and len(built["basis"]) == 4, "M2 built over F7")

    d = frobhopf.dimension("group:C2", "group:C2", field="Q")
    check(d["status"] == "Finite" and d["dimension"] == 2, "self-pair of C2 has dim 2")

    d = frobhopf.dimension("group:C2", "group:C3", field="Q")
    check(d["status"] == "Trivial", "C2 against C3 is trivial")

    d = frobhopf.dimension("group:C3", "group:C3", field="Q")
    check(d["dimension"] == 6, "self-pair of C3 has dim 6")

    cm = frobhopf.comeasure("group:C2", "group:C2", field="F5")
    check(cm["quotient"]["status"] == "SaturatedFinite", "C2 quotient certified finite")
    check(len(cm["rho"]) == 2 and len(cm["rho"][0]) == 2, "coaction shape 2x2")

    g = frobhopf.grouplikes("group:C2", "group:C2", "F5")
    check(g["count"] == 2, "two grouplikes over F5")
    g = frobhopf.grouplikes("group:C2", "group:C2", "F2")
    check(g["count"] == 1, "one grouplike over F2")

    p = frobhopf.unit_primitives("group:C2", "group:C2", "F2")
    check(p["dimension_of_space"] == 1, "one unit-primitive over F2")

    h = frobhopf.hopf_check(["group:C2", "k"], field="Q")
    check(h["pass"] and h["hom_dims"][0][1] == 0, "two-object Hopf check passes")

    dual = frobhopf.duality_check("group:C2", "group:C2", field="F5")
    check(dual["pass"] and dual["dim_C_AB"] == 2, "duality suite passes over F5")

    r = frobhopf.reproduce("c2-self")
    check(r["pass"], "c2-self replay passes")
    check("c2-self" in frobhopf.reproduce_ids(), "reproduce id listed")

    try:
        frobhopf.validate("group:C0")
        raise SystemExit("FAIL: invalid group accepted")
    except frobhopf.EngineError:
        print("ok: invalid spec raises EngineError")

    print("all python smoke tests passed")


if __name__ == "__main__":
    main()
