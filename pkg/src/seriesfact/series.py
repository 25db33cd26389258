"""Lazily evaluated formal power series with memoized coefficients."""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import IndeterminateError, MemoLimitError, NotInvertibleError, RingMismatchError
from .rings import INTEGERS, Elem, Ring, get_ring, ring_of

DEFAULT_MAX_MEMO = 1 << 16


def max_memo() -> int:
    raw = os.environ.get("SERIESFACT_MAX_MEMO")
    return int(raw) if raw else DEFAULT_MAX_MEMO


def _dot(xs, ys_rev, zero):
    """sum(x * y) for two equal-length sequences."""
    acc = zero
    for x, y in zip(xs, ys_rev):
        if x and y:
            acc = acc + x * y
    return acc


class Series:
    """A power series ``sum a_i z^i`` over one of the coefficient rings.

    Coefficients are produced on demand by ``rule(i)``, in increasing
    order of ``i``, and cached.  A rule may read earlier coefficients of
    its own series through :attr:`memo`.  Access is serialized by a
    re-entrant lock, so a series may be shared between threads.
    """

    def __init__(self, ring: Ring, rule: Callable[[int], Elem], label: str = "series"):
        self.ring = ring
        self._rule = rule
        self.memo: list = []
        self.label = label
        self._lock = threading.RLock()
        self.cap = max_memo()

    # -- constructors ---------------------------------------------------

    @classmethod
    def polynomial(cls, coeffs: Sequence, ring=None) -> "Series":
        ring = get_ring(ring) if ring is not None else ring_of(*coeffs)
        cs = [ring.coerce(c) for c in coeffs]
        zero = ring.zero

        def rule(i):
            return cs[i] if i < len(cs) else zero

        return cls(ring, rule, label="poly")

    @classmethod
    def constant(cls, c, ring=None) -> "Series":
        return cls.polynomial([c], ring)

    @classmethod
    def z(cls, ring=INTEGERS) -> "Series":
        ring = get_ring(ring)
        return cls.polynomial([ring.zero, ring.one], ring)

    @classmethod
    def geometric(cls, ring=INTEGERS) -> "Series":
        """``1 + z + z^2 + ...``, the inverse of ``1 - z``."""
        ring = get_ring(ring)
        one = ring.one
        return cls(ring, lambda i: one, label="geometric")

    # -- access -----------------------------------------------------------

    def coeff(self, i: int) -> Elem:
        if i < 0:
            raise IndexError("coefficient index must be nonnegative")
        memo = self.memo
        if i < len(memo):
            return memo[i]
        if i >= self.cap:
            raise MemoLimitError(f"coefficient index {i} exceeds memo cap {self.cap}")
        with self._lock:
            while len(memo) <= i:
                memo.append(self._rule(len(memo)))
        return memo[i]

    __getitem__ = coeff

    def head(self, n: int) -> list:
        """The first ``n`` coefficients ``a_0 .. a_{n-1}``."""
        if n > 0:
            self.coeff(n - 1)
        return self.memo[:n]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(self.head(order + 1)))

    def agrees_with(self, other: "Series", order: int) -> bool:
        _check_same_ring(self, other)
        return self.head(order + 1) == other.head(order + 1)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.memo[:6])
        more = ", ..." if len(self.memo) > 6 else ""
        return f"<Series {self.label} over {self.ring.tag}: [{shown}{more}]>"

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other) -> "Series":
        if isinstance(other, Series):
            _check_same_ring(self, other)
            return other
        return Series.constant(self.ring.coerce(other), self.ring)

    def __add__(self, other):
        return add(self, self._lift(other))

    def __radd__(self, other):
        return add(self._lift(other), self)

    def __sub__(self, other):
        return sub(self, self._lift(other))

    def __rsub__(self, other):
        return sub(self._lift(other), self)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return scale(self, self.ring.coerce(other))
        return mul(self, self._lift(other))

    def __rmul__(self, other):
        return scale(self, self.ring.coerce(other))

    def __neg__(self):
        return neg(self)

    def __pow__(self, n: int):
        return power(self, n)


@dataclass(frozen=True)
class TruncatedSeries:
    """Immutable window ``a_0 .. a_N`` of a series."""

    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


def _check_same_ring(f: Series, g: Series):
    if f.ring is not g.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring.tag} vs {g.ring.tag}")


def add(f: Series, g: Series) -> Series:
    _check_same_ring(f, g)
    return Series(f.ring, lambda i: f.coeff(i) + g.coeff(i), label="add")


def sub(f: Series, g: Series) -> Series:
    _check_same_ring(f, g)
    return Series(f.ring, lambda i: f.coeff(i) - g.coeff(i), label="sub")


def neg(f: Series) -> Series:
    return Series(f.ring, lambda i: -f.coeff(i), label="neg")


def scale(f: Series, c) -> Series:
    c = f.ring.coerce(c)
    return Series(f.ring, lambda i: c * f.coeff(i), label="scale")


def mul(f: Series, g: Series) -> Series:
    """Cauchy product."""
    _check_same_ring(f, g)
    zero = f.ring.zero

    def rule(i):
        f.coeff(i)
        g.coeff(i)
        return _dot(f.memo[: i + 1], g.memo[i::-1], zero)

    return Series(f.ring, rule, label="mul")


def invert(f: Series) -> Series:
    """Multiplicative inverse; requires a unit constant term."""
    ring = f.ring
    a0 = f.coeff(0)
    if not ring.is_unit(a0):
        raise NotInvertibleError(f"series is not invertible: constant term {a0} is not a unit")
    inv0 = ring.unit_inverse(a0)
    zero = ring.zero
    out: Series

    def rule(i):
        if i == 0:
            return inv0
        f.coeff(i)
        s = _dot(f.memo[1 : i + 1], out.memo[i - 1 :: -1], zero)
        return -(inv0 * s)

    out = Series(ring, rule, label="inv")
    return out


def power(f: Series, n: int) -> Series:
    if n < 0:
        raise ValueError("negative exponent")
    if n == 0:
        return Series.constant(f.ring.one, f.ring)
    result = None
    base = f
    while True:
        if n & 1:
            result = base if result is None else mul(result, base)
        n >>= 1
        if not n:
            return result
        base = mul(base, base)


def truncate(f: Series, order: int) -> TruncatedSeries:
    return f.truncate(order)


def strip_z(f: Series, probe: int) -> tuple[int, Series]:
    """Write ``f = z^t * f'`` with ``f'(0) != 0``, looking at ``a_0 .. a_probe``."""
    for t in range(probe + 1):
        if f.coeff(t):
            break
    else:
        raise IndeterminateError(
            f"indeterminate: increase probe bound (a_0..a_{probe} are all zero)")
    if t == 0:
        return 0, f
    return t, Series(f.ring, lambda i: f.coeff(i + t), label="shift")
