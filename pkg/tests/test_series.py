import threading

import pytest
from hypothesis import given, settings

from conftest import series_exprs, sympy_coeffs
from seriesfact.errors import IndeterminateError, MemoLimitError, NotInvertibleError, RingMismatchError
from seriesfact.rings import GAUSSIAN, INTEGERS, GaussInt
from seriesfact.series import Series, invert, power, strip_z
from seriesfact.sparser import parse_series


def test_polynomial_and_geometric():
    p = Series.polynomial([1, 2, 3])
    assert p.head(5) == [1, 2, 3, 0, 0]
    assert Series.geometric().head(4) == [1, 1, 1, 1]
    assert (p * Series.geometric()).head(5) == [1, 3, 6, 6, 6]


def test_inverse_of_one_minus_z_is_geometric():
    one_minus_z = Series.polynomial([1, -1])
    assert invert(one_minus_z).agrees_with(Series.geometric(), 40)


def test_inverse_roundtrip_gauss():
    f = Series.polynomial([GaussInt(0, 1), 3, GaussInt(2, -1)], GAUSSIAN)
    prod = f * invert(f)
    assert prod.head(20) == [1] + [0] * 19


def test_not_invertible():
    with pytest.raises(NotInvertibleError):
        invert(Series.polynomial([2, 1])).coeff(0)


def test_power_matches_repeated_product():
    f = Series.polynomial([2, 1, -1])
    direct = f * f * f * f * f
    assert power(f, 5).head(15) == direct.head(15)
    assert (f**0).head(3) == [1, 0, 0]


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        Series.polynomial([1], INTEGERS) + Series.polynomial([GaussInt(1, 1)], GAUSSIAN)


def test_strip_z():
    t, g = strip_z(parse_series("z^3*(5+z)"), 16)
    assert t == 3 and g.head(3) == [5, 1, 0]
    with pytest.raises(IndeterminateError):
        strip_z(Series.polynomial([0]), 16)


def test_memo_cap(monkeypatch):
    monkeypatch.setenv("SERIESFACT_MAX_MEMO", "10")
    f = Series.geometric()
    f.coeff(9)
    with pytest.raises(MemoLimitError):
        f.coeff(10)


def test_truncate_is_immutable_window():
    t = parse_series("(8+z^2)*inv(1-z)").truncate(3)
    assert t.coeffs == (8, 8, 9, 9)
    assert t.order == 3


def test_concurrent_access_is_consistent():
    f = invert(Series.polynomial([1, -1, -1]))  # Fibonacci
    results = []

    def work():
        results.append(f.head(300))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(r == results[0] for r in results)
    assert results[0][:8] == [1, 1, 2, 3, 5, 8, 13, 21]


@given(series_exprs)
@settings(max_examples=150, deadline=None)
def test_arithmetic_against_sympy_taylor(expr):
    assert parse_series(expr).head(10) == sympy_coeffs(expr, 10)
