import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from seriesfact.errors import SplitError
from seriesfact.factorize import first_mismatch, split_by_primes, split_coprime, verify_product
from seriesfact.rings import GaussInt, factor_constant, is_associate
from seriesfact.series import Series
from seriesfact.sparser import parse_series

Z = sympy.Symbol("z")


def sympy_product(factors, order):
    prod = sympy.Poly(1, Z)
    for fac in factors:
        prod = prod * sympy.Poly(list(reversed(fac.head(order + 1))), Z)
    return [int(prod.coeff_monomial(Z**i)) for i in range(order + 1)]


def test_split_coprime_with_fixed_bezout():
    f = parse_series("6+z")
    left, right = split_coprime(f, 2, 3, bezout=(2, -1))
    assert left.head(5) == [2, -1, -2, -8, -40]
    assert right.head(5) == [3, 2, 4, 16, 80]
    assert verify_product([left, right], f, 40)


def test_split_coprime_rejects():
    f = parse_series("12+z")
    with pytest.raises(SplitError, match="not a factorization"):
        split_coprime(f, 2, 5)
    with pytest.raises(SplitError, match="trivial"):
        split_coprime(f, 1, 12)
    with pytest.raises(SplitError, match="coprime"):
        split_coprime(f, 2, 6)
    with pytest.raises(SplitError):
        split_coprime(f, 4, 3, bezout=(1, 1))


def test_split_by_primes_three_factors():
    f = parse_series("30+z")
    res = split_by_primes(f, check_order=64)
    assert res.constant_terms == (2, 3, 5)
    assert res.verified_to == 64
    assert sympy_product(res.factors, 30) == f.head(31)


def test_unit_goes_to_first_factor():
    res = split_by_primes(parse_series("-12 + z + z^2"))
    assert res.constant_terms == (-4, 3)


def test_gaussian_split():
    a0 = GaussInt(5)
    f = Series.polynomial([a0, 1, GaussInt(0, 2)], "gauss")
    res = split_by_primes(f, check_order=24)
    c1, c2 = res.constant_terms
    assert c1 * c2 == a0
    assert not is_associate(c1, c2)


def test_nothing_to_split():
    with pytest.raises(SplitError):
        split_by_primes(parse_series("8+z"))


def test_first_mismatch_finds_index():
    f = parse_series("6+z")
    assert first_mismatch([parse_series("2+z"), parse_series("3")], f, 10) == 1


@st.composite
def splittable(draw):
    primes = draw(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13]), min_size=2, max_size=4, unique=True))
    a0 = draw(st.sampled_from([1, -1]))
    for p in primes:
        a0 *= p ** draw(st.integers(1, 2))
    tail = draw(st.lists(st.integers(-20, 20), max_size=8))
    return [a0] + tail, draw(st.booleans())


@given(splittable())
@settings(max_examples=100, deadline=None)
def test_split_product_matches_sympy(data):
    coeffs, geometric = data
    f = Series.polynomial(coeffs)
    if geometric:
        f = f * Series.geometric()
    res = split_by_primes(f)
    assert len(res.factors) == factor_constant(coeffs[0]).omega
    assert sympy_product(res.factors, 24) == f.head(25)
