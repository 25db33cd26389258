"""Irreducibility and factor-count criteria, and the verdict engine.

Every criterion here is a sufficient condition.  When its witness search
runs out of window the criterion simply does not fire; :func:`analyze`
then reports the best bounds it has, never a guess.

Over Z and Z[i] the single-prime criteria (valuation bound, pattern,
gcd-Eisenstein, Dumas) are used only when the constant term is a unit
times one prime power.  They are proved over the localization at that
prime, a discrete valuation ring, and a factorization of ``f`` over
R[[z]] stays a factorization into nonunits over the localization, so
irreducibility there carries back to R[[z]].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import UnsupportedError
from .newton import single_edge_test
from .rings import (
    INF,
    POLYQ,
    ConstantFactorization,
    QPoly,
    Valuation,
    factor_constant,
    is_associate,
    valuation_of,
)
from .series import Series, strip_z

DEFAULT_J = 256
DEFAULT_M_BOUND = 64
DEFAULT_DUMAS_N = 512
DEFAULT_PROBE = 1024


@dataclass(frozen=True)
class Config:
    ring: str = "int"
    prime: object = None
    order: int = 64
    J: int = DEFAULT_J
    m_bound: int = DEFAULT_M_BOUND
    dumas_N: int = DEFAULT_DUMAS_N
    probe: int = DEFAULT_PROBE
    valuation_mode: str = "y-adic"

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        for name in ("J", "m_bound", "dumas_N", "probe"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.valuation_mode not in ("y-adic", "degree"):
            raise ValueError(f"unknown valuation mode {self.valuation_mode!r}")

    def window(self) -> dict:
        return {"probe": self.probe, "J": self.J, "m_bound": self.m_bound, "dumas_N": self.dumas_N}


@dataclass(frozen=True)
class Criterion:
    """A fired criterion: the factor-count bounds it proves, and its witness."""

    name: str
    lower: int | None = None
    upper: int | None = None
    params: dict = field(default_factory=dict)
    experimental: bool = False

    @property
    def irreducible(self) -> bool:
        return self.upper == 1 and self.lower == 1

    def to_json(self) -> dict:
        out = {"name": self.name}
        if self.lower is not None:
            out["lower"] = self.lower
        if self.upper is not None:
            out["upper"] = self.upper
        out.update(self.params)
        if self.experimental:
            out["experimental"] = True
        return out


def _irreducible(name, **params) -> Criterion:
    return Criterion(name, 1, 1, params)


STATUSES = ("unit", "irreducible", "exact", "unknown")


@dataclass
class Verdict:
    status: str
    lower: int
    upper: int
    criteria: list = field(default_factory=list)
    window: dict = field(default_factory=dict)
    z_power: int = 0
    notes: list = field(default_factory=list)
    constant: ConstantFactorization | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.lower > self.upper:
            raise AssertionError(f"inconsistent bounds {self.lower} > {self.upper}")
        if self.status == "irreducible" and not self.lower == self.upper == 1:
            raise AssertionError("irreducible verdict needs bounds (1, 1)")
        if self.status == "exact" and self.lower != self.upper:
            raise AssertionError("exact verdict needs equal bounds")

    @property
    def fired(self) -> list[str]:
        return [c.name for c in self.criteria]

    def find(self, name: str) -> Criterion | None:
        for c in self.criteria:
            if c.name == name:
                return c
        return None

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "lower": self.lower,
            "upper": self.upper,
            "z_power": self.z_power,
            "criteria": [c.to_json() for c in self.criteria],
            "window": dict(self.window),
            "notes": list(self.notes),
        }
        if self.constant is not None:
            out["constant_term"] = {
                "unit": str(self.constant.unit),
                "factors": [[str(p), e] for p, e in self.constant.factors],
            }
        return out


# --------------------------------------------------------------------------
# helpers


def first_unit_index(f: Series, v: Valuation, bound: int, start: int = 1) -> int | None:
    """Least ``n`` in ``start..bound`` with ``v(a_n) == 0``."""
    for n in range(start, bound + 1):
        if valuation_of(f.coeff(n), v) == 0:
            return n
    return None


def _valuation_for(prime, ring) -> Valuation:
    if ring is POLYQ:
        q = QPoly.coerce(prime)
        if q.degree != 1:
            raise UnsupportedError("only linear uniformizers y - c are supported in Q[y]")
        return Valuation.y_adic(-q.coeffs[0] / q.coeffs[1])
    return Valuation.p_adic(prime)


# --------------------------------------------------------------------------
# single-prime criteria


def check_prime_power_basic(f: Series, fact: ConstantFactorization, v: Valuation | None = None):
    """Prime-power constant term with ``k == 1`` or ``p`` not dividing ``a_1``."""
    if fact.omega != 1:
        return None
    p, k = fact.factors[0]
    v = v or _valuation_for(p, f.ring)
    if k == 1:
        return _irreducible("prime_power_basic", k=1)
    if valuation_of(f.coeff(1), v) == 0:
        return _irreducible("prime_power_basic", k=k, v_a1=0)
    return None


def bounds_from_constant(fact: ConstantFactorization) -> Criterion:
    """``omega(a_0) <= Omega_f <= Omega(a_0)``; exact when ``a_0`` is square-free."""
    lo, hi = fact.omega, fact.big_omega
    name = "square_free" if fact.square_free else "constant_bounds"
    return Criterion(name, lo, hi, {"omega": lo, "big_omega": hi})


def check_nonassociate_a1(f: Series, fact: ConstantFactorization):
    """Exactly ``omega(a_0)`` factors when ``a_1`` is not an associate of ``a_0``.

    Sound only with an extra guard: no prime occurring in ``a_0`` with
    exponent >= 2 may divide ``a_1``.  Without it, (4+2z)(3+z) has
    ``a_1 = 10`` nonassociate to 12 yet three irreducible factors.
    """
    if fact.omega < 1:
        return None
    a0, a1 = f.coeff(0), f.coeff(1)
    if a1 and is_associate(a0, a1):
        return None
    for p, k in fact.factors:
        if k >= 2 and valuation_of(a1, _valuation_for(p, f.ring)) != 0:
            return None
    r = fact.omega
    return Criterion("nonassociate_a1", r, r, {"r": r})


def upper_bound_valuation(f: Series, v: Valuation, k: int, J: int = DEFAULT_J) -> Criterion:
    """``min(k, v(a_j) + j)`` over ``1 <= j <= J``."""
    best, witness = k, None
    exhausted = True
    for j in range(1, J + 1):
        if j >= best:
            # v(a_j) + j >= j >= best from here on
            exhausted = False
            break
        val = valuation_of(f.coeff(j), v)
        if val != INF and val + j < best:
            best, witness = val + j, (j, val)
    params = {"k": k}
    if witness:
        params.update(j=witness[0], ell=witness[1])
    elif exhausted:
        params["note"] = "search bound J may be too small"
    if best == 1:
        return Criterion("valuation_bound", 1, 1, params)
    return Criterion("valuation_bound", None, best, params)


def check_pattern(f: Series, v: Valuation, k: int, m_bound: int = DEFAULT_M_BOUND):
    """``v(a_{(k-l)m+i}) == l`` for ``l = 1..k``, ``i = 1..m``, and ``v(a_{km+1}) == 0``."""
    if k < 2:
        return None
    vals = [None]
    for m in range(1, m_bound + 1):
        top = k * m + 1
        while len(vals) <= top:
            vals.append(valuation_of(f.coeff(len(vals)), v))
        # the indices 1..km must all have valuations in 1..k for every m,
        # so a unit or zero coefficient there rules out this m and all larger
        ok = True
        for t in range(1, k * m + 1):
            if vals[t] == 0 or vals[t] == INF:
                return None
            if vals[t] != k - (t - 1) // m:
                ok = False
                break
        if ok and vals[top] == 0:
            return _irreducible("pattern", k=k, m=m)
    return None


def check_gcd_eisenstein(f: Series, v: Valuation, k: int, J: int = DEFAULT_J):
    """Least ``j`` with ``v(a_j) == 0``: fires if ``gcd(k, j) == 1`` and ``v(a_i) >= k`` below it."""
    j = first_unit_index(f, v, J)
    if j is None or math.gcd(k, j) != 1:
        return None
    if all(valuation_of(f.coeff(i), v) >= k for i in range(1, j)):
        return _irreducible("gcd_eisenstein", k=k, j=j)
    return None


def check_dumas(f: Series, v: Valuation, k: int, N: int = DEFAULT_DUMAS_N):
    """Single polygon edge from ``(0, k)`` to ``(n, 0)`` with ``gcd(k, n) == 1``."""
    n = first_unit_index(f, v, N)
    if n is None or math.gcd(k, n) != 1:
        return None
    if single_edge_test(f, v, k, n):
        return _irreducible("dumas", k=k, n=n)
    return None


def check_degree_dumas(f: Series, N: int = DEFAULT_DUMAS_N):
    """Experimental: the Dumas conditions read with the degree valuation on Q[y].

    ``a_0 = u * l^k`` for a linear ``l``; ``a_n`` constant with ``gcd(k, n) == 1``;
    ``k*(n - i) > n*deg(a_i)`` for ``0 < i < n``.  The valuation ring of
    ``-deg`` is not Q[y], so the result never changes a verdict.
    """
    a0 = QPoly.coerce(f.coeff(0))
    k = a0.degree
    if k < 1 or not _is_power_of_linear(a0):
        return None
    n = None
    for i in range(1, N + 1):
        a = QPoly.coerce(f.coeff(i))
        if a and a.degree == 0:
            n = i
            break
    if n is None or math.gcd(k, n) != 1:
        return None
    for i in range(1, n):
        a = QPoly.coerce(f.coeff(i))
        if a and not k * (n - i) > n * a.degree:
            return None
    return Criterion("degree_dumas", None, None, {"k": k, "n": n}, experimental=True)


def _is_power_of_linear(a: QPoly) -> bool:
    k = a.degree
    lead = a.coeffs[-1]
    root = -a.coeffs[-2] / (k * lead)
    return valuation_of(a, Valuation.y_adic(root)) == k


# --------------------------------------------------------------------------
# several primes


def _pattern_m(f: Series, v: Valuation, k: int, n: int):
    if k < 2 or (n - 1) % k:
        return None
    m = (n - 1) // k
    if m < 1:
        return None
    c = check_pattern(f, v, k, m)
    return c.params["m"] if c and c.params["m"] == m else None


def check_multi_prime(f: Series, fact: ConstantFactorization, N: int = DEFAULT_DUMAS_N) -> list:
    """One Dumas edge per prime of ``a_0``: exactly ``omega(a_0)`` factors.

    Returns the fired criteria: ``multi_prime``, plus ``multi_prime_eisenstein``
    or ``multi_prime_pattern`` when every prime's witness also has that
    special shape.
    """
    r = fact.omega
    if r < 2:
        return []
    witnesses = []
    for p, k in fact.factors:
        v = _valuation_for(p, f.ring)
        n = first_unit_index(f, v, N)
        if n is None or math.gcd(k, n) != 1 or not single_edge_test(f, v, k, n):
            return []
        w = {"prime": str(p), "k": k, "n": n}
        if all(valuation_of(f.coeff(t), v) >= k for t in range(1, n)):
            w["eisenstein"] = True
        m = _pattern_m(f, v, k, n)
        if m is not None:
            w["m"] = m
        witnesses.append(w)
    out = [Criterion("multi_prime", r, r, {"r": r, "witnesses": witnesses})]
    if all(w.get("eisenstein") for w in witnesses):
        out.append(Criterion("multi_prime_eisenstein", r, r, {"r": r}))
    if all("m" in w for w in witnesses):
        out.append(Criterion("multi_prime_pattern", r, r, {"r": r, "m": [w["m"] for w in witnesses]}))
    return out


# --------------------------------------------------------------------------
# aggregation


def single_prime_criteria(f: Series, fact: ConstantFactorization, v: Valuation, cfg: Config) -> list:
    """All criteria for a constant term ``u * p^k``, cheapest first."""
    _, k = fact.factors[0]
    fired = [bounds_from_constant(fact)]
    for c in (
        check_prime_power_basic(f, fact, v),
        upper_bound_valuation(f, v, k, cfg.J),
        check_pattern(f, v, k, cfg.m_bound),
        check_gcd_eisenstein(f, v, k, cfg.J) if k >= 2 else None,
    ):
        if c is not None:
            fired.append(c)
    # both shapes are single edges ending at a unit coefficient; widen the
    # search so that edge is always seen
    N = cfg.dumas_N
    for c in fired:
        if c.name == "pattern":
            N = max(N, k * c.params["m"] + 1)
        elif c.name == "gcd_eisenstein":
            N = max(N, c.params["j"])
    c = check_dumas(f, v, k, N)
    if c is not None:
        fired.append(c)
    return fired


def multi_prime_criteria(f: Series, fact: ConstantFactorization, cfg: Config) -> list:
    fired = [bounds_from_constant(fact)]
    c = check_nonassociate_a1(f, fact)
    if c is not None:
        fired.append(c)
    fired.extend(check_multi_prime(f, fact, cfg.dumas_N))
    return fired


def _combine(criteria, base_lower=1, base_upper=None):
    lo, hi = base_lower, base_upper
    for c in criteria:
        if c.experimental:
            continue
        if c.lower is not None:
            lo = max(lo, c.lower)
        if c.upper is not None:
            hi = c.upper if hi is None else min(hi, c.upper)
    return lo, hi


def _status(lo, hi) -> str:
    if lo == hi == 1:
        return "irreducible"
    if lo == hi:
        return "exact"
    return "unknown"


def _polyq_constant(a0: QPoly, v: Valuation):
    """``a_0 = c * (y - center)^k`` as a factorization, or None."""
    k = valuation_of(a0, v)
    q = a0
    for _ in range(k):
        q, _ = q.shift_divide(v.center)
    if q.degree != 0:
        return None
    return ConstantFactorization(q, ((v.uniformizer(), k),))


def analyze(f: Series, cfg: Config | None = None) -> Verdict:
    """Run every applicable criterion on ``f`` and combine the results."""
    cfg = cfg or Config(ring=f.ring.tag)
    ring = f.ring
    t, g = strip_z(f, cfg.probe)
    a0 = g.coeff(0)
    notes = []
    criteria = []
    fact = None

    if ring.is_unit(a0):
        lo = hi = 0
    elif ring is POLYQ:
        v = _valuation_for(cfg.prime, ring) if cfg.prime is not None else Valuation.y_adic(0)
        fact = _polyq_constant(QPoly.coerce(a0), v)
        if cfg.valuation_mode == "degree":
            c = check_degree_dumas(g, cfg.dumas_N)
            if c is not None:
                criteria.append(c)
            notes.append("degree valuation is experimental and does not affect the verdict")
        if fact is None:
            notes.append(
                f"constant term {a0} is not a power of the uniformizer {v.uniformizer()}; "
                "factorization over Q[y] is not supported")
            lo, hi = 1, QPoly.coerce(a0).degree
        else:
            criteria = single_prime_criteria(g, fact, v, cfg) + criteria
            lo, hi = _combine(criteria)
    else:
        fact = factor_constant(a0)
        if fact.omega == 1:
            v = Valuation.p_adic(fact.factors[0][0])
            criteria = single_prime_criteria(g, fact, v, cfg)
            if not any(c.name == "dumas" for c in criteria) and first_unit_index(g, v, cfg.dumas_N) is None:
                notes.append("no unit coefficient found within window")
        else:
            criteria = multi_prime_criteria(g, fact, cfg)
        lo, hi = _combine(criteria)

    if t:
        lo, hi = lo + t, hi + t
        notes.insert(0, f"f = z^{t} * f', criteria refer to f'")
    if lo == hi == 0:
        status = "unit"
    else:
        status = _status(lo, hi)
    return Verdict(status, lo, hi, criteria, cfg.window(), t, notes, fact)
