"""Explicit factorizations from coprime splittings of the constant term.

Given ``a_0 = m * n`` with ``m, n`` coprime and Bezout ``m*u + n*v = 1``,
the series ``g = sum b_i z^i`` with

    b_0 = 0,  b_i = a_i - u*v * sum_{t=1}^{i-1} b_t * b_{i-t}

gives ``f = (m + v*g) * (n + u*g)``.  Coefficient ``i`` of either factor
depends only on ``a_0 .. a_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import SplitError
from .rings import ConstantFactorization, exact_quotient, ext_gcd, factor_constant
from .series import Series, _dot


@dataclass(frozen=True)
class SplitResult:
    factors: tuple
    constant_terms: tuple
    verified_to: int = 0

    def truncations(self, order: int) -> list[list]:
        return [fac.head(order + 1) for fac in self.factors]


def split_coprime(f: Series, m, n, bezout=None) -> tuple[Series, Series]:
    """Split ``f`` into two factors with constant terms ``m`` and ``n``.

    ``bezout`` optionally fixes the pair ``(u, v)`` with ``m*u + n*v == 1``;
    by default it comes from :func:`ext_gcd`.
    """
    ring = f.ring
    m, n = ring.coerce(m), ring.coerce(n)
    a0 = f.coeff(0)
    if m * n != a0:
        raise SplitError("not a factorization of the constant term")
    if ring.is_unit(m) or ring.is_unit(n):
        raise SplitError("trivial split rejected")
    g, u, v = ext_gcd(m, n)
    if not ring.is_unit(g):
        raise SplitError("factors must be coprime")
    if bezout is not None:
        u, v = (ring.coerce(x) for x in bezout)
        if m * u + n * v != ring.one:
            raise SplitError("bezout pair does not satisfy m*u + n*v = 1")
    uv = u * v
    zero = ring.zero

    def rule(i):
        if i == 0:
            return zero
        b = gs.memo
        return f.coeff(i) - uv * _dot(b[1:i], b[i - 1 : 0 : -1], zero)

    gs = Series(ring, rule, label="split-g")

    def left(i):
        return m if i == 0 else v * gs.coeff(i)

    def right(i):
        return n if i == 0 else u * gs.coeff(i)

    return Series(ring, left, label="factor"), Series(ring, right, label="factor")


def split_by_primes(f: Series, fact: ConstantFactorization | None = None, check_order: int | None = None) -> SplitResult:
    """Split ``f`` into one factor per prime of its constant term.

    Factor ``i`` has constant term ``p_i^{k_i}``; the unit of ``a_0`` goes
    into the first factor.  Primes are taken in the order of ``fact``
    (ascending, as produced by :func:`factor_constant`).
    """
    a0 = f.coeff(0)
    fact = fact if fact is not None else factor_constant(a0)
    if fact.omega < 2:
        raise SplitError("nothing to split: the constant term is a unit times one prime power")
    factors, consts = [], []
    rest = f
    for idx, (p, k) in enumerate(fact.factors[:-1]):
        m = p**k
        if idx == 0:
            m = fact.unit * m
        n = exact_quotient(rest.coeff(0), m)
        left, rest = split_coprime(rest, m, n)
        factors.append(left)
        consts.append(m)
    factors.append(rest)
    consts.append(rest.coeff(0))
    verified = 0
    if check_order is not None:
        bad = first_mismatch(factors, f, check_order)
        if bad is not None:
            raise SplitError(f"internal error: product differs from f at index {bad}")
        verified = check_order
    return SplitResult(tuple(factors), tuple(consts), verified)


def first_mismatch(factors: Sequence[Series], f: Series, order: int):
    """Least index ``<= order`` where the product of ``factors`` differs from ``f``."""
    ring = f.ring
    prod = [ring.one] + [ring.zero] * order
    for fac in factors:
        cs = fac.head(order + 1)
        out = [ring.zero] * (order + 1)
        for i, x in enumerate(prod):
            if not x:
                continue
            for j in range(order + 1 - i):
                y = cs[j]
                if y:
                    out[i + j] = out[i + j] + x * y
        prod = out
    target = f.head(order + 1)
    for i in range(order + 1):
        if prod[i] != target[i]:
            return i
    return None


def verify_product(factors: Sequence[Series], f: Series, order: int) -> bool:
    """Does the product of ``factors`` agree with ``f`` on ``a_0 .. a_order``?"""
    return first_mismatch(factors, f, order) is None
