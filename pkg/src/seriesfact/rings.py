"""Coefficient rings: the integers, the Gaussian integers and Q[y].

Elements are plain Python values (``int``), :class:`GaussInt` or
:class:`QPoly`.  A small descriptor object per ring (:data:`INTEGERS`,
:data:`GAUSSIAN`, :data:`POLYQ`) carries the structural operations:
units, coercion, parsing of tags.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import FactorizationOverflow, UnsupportedError

INF = math.inf


# --------------------------------------------------------------------------
# Gaussian integers


@dataclass(frozen=True, slots=True)
class GaussInt:
    re: int
    im: int = 0

    @staticmethod
    def coerce(x) -> "GaussInt":
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return GaussInt(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = GaussInt.coerce(other)
        if o is NotImplemented:
            return o
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussInt.coerce(other)
        if o is NotImplemented:
            return o
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussInt.coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = GaussInt.coerce(other)
        if o is NotImplemented:
            return o
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = GaussInt(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re or self.im)

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    @property
    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def divmod_round(self, other: "GaussInt") -> tuple["GaussInt", "GaussInt"]:
        """Euclidean division with nearest-integer rounding; N(r) <= N(other)/2."""
        other = GaussInt.coerce(other)
        d = other.norm
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian integer")
        num = self * other.conj()
        q = GaussInt(_round_div(num.re, d), _round_div(num.im, d))
        return q, self - q * other

    def exact_div(self, other) -> "GaussInt | None":
        other = GaussInt.coerce(other)
        d = other.norm
        num = self * other.conj()
        if num.re % d or num.im % d:
            return None
        return GaussInt(num.re // d, num.im // d)

    def __str__(self):
        a, b = self.re, self.im
        if b == 0:
            return str(a)
        ib = "i" if abs(b) == 1 else f"{abs(b)}i"
        if a == 0:
            return ("-" if b < 0 else "") + ib
        return f"{a}{'-' if b < 0 else '+'}{ib}"

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"


def _round_div(n: int, d: int) -> int:
    return (2 * n + d) // (2 * d)


I = GaussInt(0, 1)
GAUSS_UNITS = (GaussInt(1), I, GaussInt(-1), GaussInt(0, -1))


# --------------------------------------------------------------------------
# Polynomials over Q in the variable y


class QPoly:
    """Polynomial in ``y`` with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def coerce(x) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return QPoly([x])
        return NotImplemented

    @classmethod
    def y(cls) -> "QPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        o = QPoly.coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = QPoly.coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = QPoly.coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = QPoly.coerce(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = QPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = QPoly.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, y0):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * y0 + c
        return acc

    def shift_divide(self, c: Fraction) -> tuple["QPoly", Fraction]:
        """Divide by ``y - c``; returns (quotient, remainder)."""
        if not self.coeffs:
            return QPoly(), Fraction(0)
        out = []
        acc = Fraction(0)
        for coef in reversed(self.coeffs):
            acc = acc * c + coef
            out.append(acc)
        rem = out.pop()
        return QPoly(reversed(out)), rem

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"QPoly({[str(c) for c in self.coeffs]})"


Elem = Union[int, GaussInt, QPoly]


# --------------------------------------------------------------------------
# Ring descriptors


class Ring:
    tag = ""
    zero: Elem
    one: Elem

    def coerce(self, x) -> Elem:
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def unit_inverse(self, x) -> Elem:
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.tag}>"


class _Integers(Ring):
    tag = "int"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, GaussInt) and x.im == 0:
            return x.re
        raise UnsupportedError(f"{x!s} is not an integer")

    def contains(self, x):
        return isinstance(x, int)

    def is_unit(self, x):
        return x in (1, -1)

    def unit_inverse(self, x):
        if x not in (1, -1):
            raise ValueError(f"{x} is not a unit")
        return x

    def units(self):
        return (1, -1)


class _Gaussian(Ring):
    tag = "gauss"
    zero = GaussInt(0)
    one = GaussInt(1)

    def coerce(self, x):
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return GaussInt(x)
        raise UnsupportedError(f"{x!s} is not a Gaussian integer")

    def contains(self, x):
        return isinstance(x, GaussInt)

    def is_unit(self, x):
        return GaussInt.coerce(x).norm == 1

    def unit_inverse(self, x):
        x = GaussInt.coerce(x)
        if x.norm != 1:
            raise ValueError(f"{x} is not a unit")
        return x.conj()

    def units(self):
        return GAUSS_UNITS


class _PolyQ(Ring):
    tag = "polyq"
    zero = QPoly()
    one = QPoly([1])

    def coerce(self, x):
        if isinstance(x, QPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return QPoly([x])
        raise UnsupportedError(f"{x!s} is not a polynomial in y")

    def contains(self, x):
        return isinstance(x, QPoly)

    def is_unit(self, x):
        return QPoly.coerce(x).degree == 0

    def unit_inverse(self, x):
        x = QPoly.coerce(x)
        if x.degree != 0:
            raise ValueError(f"{x} is not a unit")
        return QPoly([1 / x.coeffs[0]])


INTEGERS = _Integers()
GAUSSIAN = _Gaussian()
POLYQ = _PolyQ()

_TAGS = {
    "int": INTEGERS, "integers": INTEGERS, "zz": INTEGERS,
    "gauss": GAUSSIAN, "gaussian": GAUSSIAN,
    "polyq": POLYQ, "qy": POLYQ,
}


def get_ring(tag) -> Ring:
    if isinstance(tag, Ring):
        return tag
    try:
        return _TAGS[str(tag).lower()]
    except KeyError:
        raise UnsupportedError(f"unknown ring {tag!r}") from None


def ring_of(*xs) -> Ring:
    """The smallest of our rings containing all of ``xs``."""
    if any(isinstance(x, QPoly) for x in xs):
        return POLYQ
    if any(isinstance(x, GaussInt) for x in xs):
        return GAUSSIAN
    return INTEGERS


# --------------------------------------------------------------------------
# Associates and gcd


def normalize(x) -> tuple[Elem, Elem]:
    """Split ``x`` as ``unit * canonical``.

    Canonical associates: positive in Z, first quadrant (re > 0, im >= 0)
    in Z[i], monic in Q[y].  Zero maps to ``(1, 0)``.
    """
    ring = ring_of(x)
    if ring is INTEGERS:
        if x < 0:
            return -1, -x
        return 1, x
    if ring is GAUSSIAN:
        x = GaussInt.coerce(x)
        if not x:
            return GaussInt(1), x
        for u in GAUSS_UNITS:
            y = x * u.conj()
            if y.re > 0 and y.im >= 0:
                return u, y
        raise AssertionError("unreachable")
    x = QPoly.coerce(x)
    if not x:
        return POLYQ.one, x
    lead = x.coeffs[-1]
    return QPoly([lead]), QPoly(c / lead for c in x.coeffs)


def is_associate(a, b) -> bool:
    ring = ring_of(a, b)
    a, b = ring.coerce(a), ring.coerce(b)
    if not a or not b:
        return not a and not b
    return normalize(a)[1] == normalize(b)[1]


def ext_gcd(a, b) -> tuple[Elem, Elem, Elem]:
    """Extended Euclid: ``(g, u, v)`` with ``u*a + v*b == g``.

    ``g`` is normalized (positive in Z, first quadrant in Z[i]).
    """
    ring = ring_of(a, b)
    if ring is POLYQ:
        raise UnsupportedError("unsupported ring for gcd")
    a, b = ring.coerce(a), ring.coerce(b)
    if not a and not b:
        raise ValueError("gcd undefined")
    old_r, r = a, b
    old_s, s = ring.one, ring.zero
    old_t, t = ring.zero, ring.one
    while r:
        if ring is INTEGERS:
            q = old_r // r
        else:
            q, _ = old_r.divmod_round(r)
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    unit, g = normalize(old_r)
    inv = ring.unit_inverse(unit)
    return g, old_s * inv, old_t * inv


def divides(d, x) -> bool:
    ring = ring_of(d, x)
    d, x = ring.coerce(d), ring.coerce(x)
    if not d:
        return not x
    if ring is INTEGERS:
        return x % d == 0
    if ring is GAUSSIAN:
        return x.exact_div(d) is not None
    raise UnsupportedError("divisibility in Q[y] is not supported")


def exact_quotient(x, d):
    ring = ring_of(d, x)
    d, x = ring.coerce(d), ring.coerce(x)
    if ring is INTEGERS:
        q, r = divmod(x, d)
        if r:
            raise ValueError(f"{d} does not divide {x}")
        return q
    if ring is GAUSSIAN:
        q = x.exact_div(d)
        if q is None:
            raise ValueError(f"{d} does not divide {x}")
        return q
    raise UnsupportedError("division in Q[y] is not supported")


# --------------------------------------------------------------------------
# Integer factorization: trial division, Miller-Rabin, Pollard rho

TRIAL_LIMIT = 1 << 16
MAX_COFACTOR = 10**18
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 with the fixed bases."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        y = rng.randrange(0, n)
        m, g, r, q = 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError("factor_int expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    while p < TRIAL_LIMIT and p * p <= n:
        for q in (p, p + 2):
            while n % q == 0:
                out[q] = out.get(q, 0) + 1
                n //= q
        p += 6
    if n == 1:
        return dict(sorted(out.items()))
    if n > MAX_COFACTOR and not is_probable_prime(n):
        raise FactorizationOverflow(
            f"cofactor {n} exceeds the desk-scale factorization limit 10^18")
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return dict(sorted(out.items()))


def two_squares(p: int) -> tuple[int, int]:
    """``(a, b)`` with ``a*a + b*b == p`` for a prime ``p`` that is 2 or 1 mod 4."""
    if p == 2:
        return 1, 1
    if p % 4 != 1:
        raise ValueError(f"{p} is not a sum of two squares")
    c = 2
    while pow(c, (p - 1) // 2, p) != p - 1:
        c += 1
    x = pow(c, (p - 1) // 4, p)
    a, b = p, x
    limit = math.isqrt(p)
    while b > limit:
        a, b = b, a % b
    return b, math.isqrt(p - b * b)


# --------------------------------------------------------------------------
# Factorization of constants


@dataclass(frozen=True)
class ConstantFactorization:
    unit: Elem
    factors: tuple[tuple[Elem, int], ...]

    @property
    def omega(self) -> int:
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        return sum(e for _, e in self.factors)

    @property
    def primes(self) -> list:
        return [p for p, _ in self.factors]

    @property
    def square_free(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def expand(self) -> Elem:
        acc = self.unit
        for p, e in self.factors:
            acc = acc * p**e
        return acc

    def __str__(self):
        body = " * ".join(f"({p})^{e}" if e > 1 else f"({p})" for p, e in self.factors)
        return f"{self.unit} * {body}" if body else str(self.unit)


def _gauss_prime_sort_key(p: GaussInt):
    return (p.norm, p.re, p.im)


def factor_constant(a) -> ConstantFactorization:
    """Unit times canonical primes, ordered by ascending prime (norm in Z[i])."""
    ring = ring_of(a)
    if ring is POLYQ:
        raise UnsupportedError("unsupported: factorization over Q[y]")
    if not a:
        raise ValueError("zero has no factorization")
    if ring is INTEGERS:
        unit, n = normalize(a)
        return ConstantFactorization(unit, tuple(factor_int(n).items()) if n > 1 else ())
    a = GaussInt.coerce(a)
    rest = a
    found: dict[GaussInt, int] = {}
    for q, e in (factor_int(a.norm).items() if a.norm > 1 else ()):
        if q == 2:
            cands = [GaussInt(1, 1)]
        elif q % 4 == 3:
            cands = [GaussInt(q)]
        else:
            x, y = two_squares(q)
            cands = [normalize(GaussInt(x, y))[1], normalize(GaussInt(x, -y))[1]]
        for pi in cands:
            while True:
                quo = rest.exact_div(pi)
                if quo is None:
                    break
                rest = quo
                found[pi] = found.get(pi, 0) + 1
    if rest.norm != 1:
        raise AssertionError(f"incomplete Gaussian factorization of {a}")
    factors = tuple(sorted(found.items(), key=lambda kv: _gauss_prime_sort_key(kv[0])))
    return ConstantFactorization(rest, factors)


def omega(a) -> int:
    _require_nonunit(a)
    return factor_constant(a).omega


def big_omega(a) -> int:
    _require_nonunit(a)
    return factor_constant(a).big_omega


def _require_nonunit(a):
    ring = ring_of(a)
    if not a:
        raise ValueError("omega is undefined for zero")
    if ring.is_unit(a):
        raise ValueError("omega is undefined for a unit")


# --------------------------------------------------------------------------
# Valuations


@dataclass(frozen=True)
class Valuation:
    """A discrete valuation on one of the coefficient rings.

    ``kind`` is ``"p-adic"`` (``prime`` is an integer or Gaussian prime),
    ``"y-adic"`` (order of vanishing at ``y = center``), or ``"degree"``
    (minus the degree; experimental, its valuation ring is not Q[y]).
    """

    kind: str
    prime: Elem | None = None
    center: Fraction = Fraction(0)

    @classmethod
    def p_adic(cls, prime) -> "Valuation":
        return cls("p-adic", prime=prime)

    @classmethod
    def y_adic(cls, center=0) -> "Valuation":
        return cls("y-adic", center=Fraction(center))

    @classmethod
    def degree(cls) -> "Valuation":
        return cls("degree")

    @property
    def experimental(self) -> bool:
        return self.kind == "degree"

    def uniformizer(self) -> Elem:
        if self.kind == "p-adic":
            return self.prime
        if self.kind == "y-adic":
            return QPoly([-self.center, 1])
        raise UnsupportedError("degree valuation has no uniformizer in Q[y]")

    def __str__(self):
        if self.kind == "p-adic":
            return f"v_{self.prime}"
        if self.kind == "y-adic":
            return f"v_(y-{self.center})" if self.center else "v_y"
        return "v_inf"


def valuation_of(a, v: Valuation):
    """Exponent of the uniformizer in ``a``; ``math.inf`` for zero."""
    if not a:
        return INF
    if v.kind == "p-adic":
        ring = ring_of(a, v.prime)
        if ring is POLYQ:
            raise UnsupportedError("p-adic valuation on Q[y] is not supported")
        if ring is INTEGERS:
            p = abs(v.prime)
            if p < 2:
                raise ValueError("valuation needs a prime")
            k = 0
            while a % p == 0:
                a //= p
                k += 1
            return k
        a, pi = GaussInt.coerce(a), GaussInt.coerce(v.prime)
        if pi.norm < 2:
            raise ValueError("valuation needs a prime")
        k = 0
        while True:
            q = a.exact_div(pi)
            if q is None:
                return k
            a = q
            k += 1
    a = QPoly.coerce(a)
    if v.kind == "degree":
        return -a.degree
    k = 0
    while True:
        q, r = a.shift_divide(v.center)
        if r != 0:
            return k
        a = q
        k += 1
