"""Built-in corpus of worked examples with their expected verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .criteria import Config, analyze, upper_bound_valuation
from .factorize import split_by_primes, verify_product
from .newton import newton_polygon
from .rings import Valuation
from .sparser import parse_series


@dataclass(frozen=True)
class Case:
    group: str
    expr: str
    ring: str
    expect: str
    check: Callable[["Case"], tuple[bool, str]]


def _series(case):
    return parse_series(case.expr, case.ring)


def f4_expr(p: int, k: int, sign: str = "") -> str:
    """``±p^k + p^k z + p^{k-1} z^2 + ... + p z^k + z^{k+1}/(1-z)``."""
    terms = [f"{sign}{p}^{k}"]
    for i in range(1, k + 1):
        terms.append(f"{p}^{k - i + 1}*z^{i}")
    terms.append(f"z^{k + 1}*inv(1-z)")
    return " + ".join(terms)


def f7_expr(k: int, unit: str, g: str) -> str:
    tail = "" if g == "0" else f" + z^{k}*({g})"
    return f"19^{k}*(4+3i)*{unit} + 4*z^{k - 1}{tail}"


def _check_bounds_power(p, n):
    def check(case):
        f = _series(case)
        verdict = analyze(f, Config(ring=case.ring))
        cb = verdict.find("constant_bounds")
        ok_bounds = cb is not None and (cb.lower, cb.upper) == (1, n)
        ok_verdict = (verdict.lower, verdict.upper) == (1, n)
        factors = [parse_series(f"{p}+z")] * n
        ok_split = verify_product(factors, f, 32)
        return ok_bounds and ok_verdict and ok_split, f"bounds=({verdict.lower},{verdict.upper}) product_ok={ok_split}"

    return check


def _check_upper_j(p, k, j):
    def check(case):
        f = _series(case)
        ub = upper_bound_valuation(f, Valuation.p_adic(p), k)
        verdict = analyze(f, Config(ring=case.ring))
        ok = ub.upper == j and verdict.upper <= j
        if j == 1:
            ok = ok and verdict.status == "irreducible"
        return ok, f"valuation_bound={ub.upper} verdict={verdict.status}({verdict.lower},{verdict.upper})"

    return check


def _check_f4(k):
    def check(case):
        f = _series(case)
        verdict = analyze(f, Config(ring=case.ring))
        pat, dum = verdict.find("pattern"), verdict.find("dumas")
        p = int(case.expr.split("^")[0].lstrip("-"))
        poly = newton_polygon(f, Valuation.p_adic(p), 2 * k + 2)
        neg = [(e.start, e.end) for e in poly.edges if e.slope < 0]
        ok = (
            verdict.status == "irreducible"
            and pat is not None and pat.params["m"] == 1
            and dum is not None and dum.params["n"] == k + 1
            and neg == [((0, k), (k + 1, 0))]
        )
        return ok, f"status={verdict.status} fired={verdict.fired} edges={neg}"

    return check


def _check_irreducible_via(name):
    def check(case):
        verdict = analyze(_series(case), Config(ring=case.ring))
        ok = verdict.status == "irreducible" and verdict.find(name) is not None
        return ok, f"status={verdict.status} fired={verdict.fired}"

    return check


def _check_exact_split(r, order=32):
    def check(case):
        f = _series(case)
        verdict = analyze(f, Config(ring=case.ring))
        split = split_by_primes(f)
        ok_split = len(split.factors) == r and verify_product(split.factors, f, order)
        ok = verdict.status == "exact" and verdict.lower == r and verdict.find("multi_prime") is not None and ok_split
        return ok, f"status={verdict.status}({verdict.lower},{verdict.upper}) split_ok={ok_split}"

    return check


def _check_not_certified(case):
    verdict = analyze(_series(case), Config(ring=case.ring))
    return verdict.status != "irreducible", f"status={verdict.status}({verdict.lower},{verdict.upper})"


def build_corpus() -> list[Case]:
    cases: list[Case] = []
    for p in (2, 3, 5):
        for n in range(2, 7):
            cases.append(Case("power of p+z", f"({p}+z)^{n}", "int", f"bounds (1,{n}); {n}-fold product", _check_bounds_power(p, n)))
    for p in (2, 3):
        for k, j in ((3, 2), (5, 3), (4, 1)):
            for sign in "+-":
                for g in ("", f" + z^{j + 1}*inv(1-z)"):
                    expr = f"{p}^{k} {sign} z^{j}{g}"
                    expect = "irreducible" if j == 1 else f"at most {j} factors"
                    cases.append(Case("p^k +- z^j + ...", expr, "int", expect, _check_upper_j(p, k, j)))
    for p in (2, 3):
        for k in range(2, 6):
            for sign in ("", "-"):
                cases.append(Case("pattern family", f4_expr(p, k, sign), "int", "irreducible (pattern m=1, dumas n=k+1)", _check_f4(k)))
    for p, k, j in ((2, 3, 2), (3, 2, 3), (5, 3, 4)):
        for sign in ("", "-"):
            cases.append(Case("gcd-Eisenstein family", f"({sign}{p}^{k} + z^{j})*inv(1-z)", "int", "irreducible (gcd_eisenstein)", _check_irreducible_via("gcd_eisenstein")))
            cases.append(Case("gcd-Eisenstein family", f"{sign}{p}^{k} + z^{j}", "int", "irreducible (gcd_eisenstein)", _check_irreducible_via("gcd_eisenstein")))
    for k in (2, 3, 4):
        for unit in ("1", "i"):
            for g in ("0", "1+z"):
                cases.append(Case("Gaussian two primes", f7_expr(k, unit, g), "gauss", "exactly 2 factors (multi_prime); split verifies", _check_exact_split(2)))
    cases.append(Case("bivariate instance", "[1+y]^8 + [1+y]^4*z + [1+y]^2*z^2 + [y]*z^3", "polyq",
                      "not certified (a_3 = y is not a constant)", _check_not_certified))
    return cases


def run_corpus(cases=None):
    """Evaluate every case; returns a list of ``(case, ok, detail)``."""
    results = []
    for case in cases or build_corpus():
        try:
            ok, detail = case.check(case)
        except Exception as exc:  # reported as a failed row
            ok, detail = False, f"error: {exc}"
        results.append((case, ok, detail))
    return results
