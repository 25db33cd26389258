import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seriesfact.criteria import (
    Config,
    Verdict,
    analyze,
    check_dumas,
    check_gcd_eisenstein,
    check_nonassociate_a1,
    check_pattern,
    upper_bound_valuation,
)
from seriesfact.rings import QPoly, Valuation, factor_constant
from seriesfact.series import Series
from seriesfact.sparser import parse_series

V2 = Valuation.p_adic(2)


def verdict(expr, ring="int", **kw):
    return analyze(parse_series(expr, ring), Config(ring=ring, **kw))


@pytest.mark.parametrize(
    "expr,status,lo,hi",
    [
        ("1+z", "unit", 0, 0),
        ("-1+5*z", "unit", 0, 0),
        ("7+z", "irreducible", 1, 1),
        ("6+z", "exact", 2, 2),
        ("30+z^5", "exact", 3, 3),
        ("(2+z)^4", "unknown", 1, 4),
        ("(2+z)^2", "unknown", 1, 2),
        ("4+2*z+z^2", "unknown", 1, 2),
        ("12+10*z+2*z^2", "unknown", 2, 3),
        ("(8+z^2)*inv(1-z)", "irreducible", 1, 1),
        ("z^2*(3+z)", "exact", 3, 3),
        ("z", "irreducible", 1, 1),
        ("8 + z", "irreducible", 1, 1),
        ("36+6*z+z^2*inv(1-z)", "unknown", 2, 4),
    ],
)
def test_known_verdicts(expr, status, lo, hi):
    v = verdict(expr)
    assert (v.status, v.lower, v.upper) == (status, lo, hi)


def test_irreducible_witnesses():
    v = verdict("(8+z^2)*inv(1-z)")
    assert v.find("gcd_eisenstein").params == {"k": 3, "j": 2}
    assert v.find("dumas").params == {"k": 3, "n": 2}
    v = verdict("2^3 + 2^3*z + 2^2*z^2 + 2*z^3 + z^4*inv(1-z)")
    assert v.find("pattern").params["m"] == 1
    assert v.find("dumas").params["n"] == 4


def test_valuation_bound():
    f = parse_series("2^5 + z^3 + z^4*inv(1-z)")
    c = upper_bound_valuation(f, V2, 5)
    assert c.upper == 3 and c.params["j"] == 3
    f = parse_series("2^4 + 2*z")
    assert upper_bound_valuation(f, V2, 4).upper == 2


def test_pattern_m2():
    # k=2, m=2: v(a_1)=v(a_2)=2, v(a_3)=v(a_4)=1, v(a_5)=0
    f = Series.polynomial([4, 4, 12, 2, 6, 1])
    c = check_pattern(f, V2, 2)
    assert c is not None and c.params["m"] == 2


def test_gcd_eisenstein_needs_coprime_j():
    f = parse_series("2^4 + z^2")  # gcd(4, 2) = 2
    assert check_gcd_eisenstein(f, V2, 4) is None
    assert check_dumas(f, V2, 4) is None
    assert verdict("2^4 + z^2").status == "unknown"


def test_nonassociate_guard():
    # (4+2z)(3+z) = 12 + 10z + 2z^2 has three irreducible factors
    f = parse_series("12 + 10*z + 2*z^2")
    assert check_nonassociate_a1(f, factor_constant(12)) is None
    f = parse_series("12 + z")
    c = check_nonassociate_a1(f, factor_constant(12))
    assert (c.lower, c.upper) == (2, 2)


def test_gaussian_verdicts():
    v = verdict("(1+2i)*(2+i) + z", "gauss")  # 5 = -i (1+2i)(2+i)
    assert (v.status, v.lower) == ("exact", 2)
    v = verdict("3 + z", "gauss")  # 3 is a Gaussian prime
    assert v.status == "irreducible"
    v = verdict("(1+i)^3 + z^2", "gauss")
    assert v.status == "irreducible"


def test_polyq():
    v = verdict("[1+y]^3 + z^2", "polyq")
    assert v.status == "unknown"  # a_0 is not a power of y
    v = verdict("[1+y]^3 + z^2", "polyq", prime=QPoly([1, 1]))
    assert v.status == "irreducible"
    assert verdict("[y]^2 + [y]^2*z + z^3", "polyq").status == "irreducible"
    # two edges (0,2)-(1,1)-(3,0): no single-edge certificate
    assert verdict("[y]^2 + [y]*z + z^3", "polyq").status == "unknown"


def test_degree_mode_is_experimental():
    v = verdict("[1+y]^3 + z^2", "polyq", valuation_mode="degree")
    assert any("experimental" in n for n in v.notes)
    c = v.find("degree_dumas")
    assert c is not None and c.experimental


def test_verdict_rejects_inconsistency():
    with pytest.raises(AssertionError):
        Verdict("irreducible", 1, 2)
    with pytest.raises(AssertionError):
        Verdict("unknown", 3, 2)


def test_config_validation():
    with pytest.raises(ValueError):
        Config(order=0)
    with pytest.raises(ValueError):
        Config(valuation_mode="bogus")


def test_no_unit_coefficient_note():
    v = verdict("4 + 2*z", J=8, dumas_N=8)
    assert v.status == "unknown"
    assert any("no unit coefficient" in n for n in v.notes)


# -- soundness against products of known irreducibles ------------------------

PRIMES = [2, 3, 5, 7]


@st.composite
def irreducible_factor(draw):
    """A series that is irreducible for a reason independent of the criteria:
    prime constant term, or prime power constant term with a unit a_1."""
    p = draw(st.sampled_from(PRIMES))
    sign = draw(st.sampled_from([1, -1]))
    if draw(st.booleans()):
        a0, a1 = sign * p, draw(st.integers(-6, 6))
    else:
        a0 = sign * p ** draw(st.integers(2, 3))
        a1 = draw(st.integers(1, 6).filter(lambda x: x % p))
    tail = draw(st.lists(st.integers(-6, 6), max_size=4))
    return [a0, a1] + tail


@given(st.lists(irreducible_factor(), min_size=1, max_size=3), st.booleans())
@settings(max_examples=300, deadline=None)
def test_bounds_contain_true_count(factors, geometric):
    f = Series.polynomial([1])
    for cs in factors:
        f = f * Series.polynomial(cs)
    if geometric:
        f = f * Series.geometric()
    r = len(factors)
    v = analyze(f, Config(J=64, dumas_N=64, m_bound=16))
    assert v.lower <= r <= v.upper
    if v.status == "irreducible":
        assert r == 1


def test_dumas_window_widens_to_pattern_witness():
    f = Series.polynomial([4, 4, 12, 2, 6, 1])  # pattern with k=2, m=2: unit at index 5
    v = analyze(f, Config(dumas_N=2))
    assert v.find("pattern") is not None
    assert v.find("dumas").params["n"] == 5


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("k", [3, 4, 5])
def test_localized_example_scaled_to_integers(p, k):
    # (p+1) times p^k/(p+1) + p z + ... + p z^(k-1) + (p+1) z^k + z^(k+1)/(1-z)
    terms = [f"{p}^{k}"] + [f"{p * (p + 1)}*z^{i}" for i in range(1, k)]
    terms += [f"{(p + 1) ** 2}*z^{k}", f"{p + 1}*z^{k + 1}*inv(1-z)"]
    f = parse_series(" + ".join(terms))
    c = upper_bound_valuation(f, Valuation.p_adic(p), k)
    assert c.upper == 2 and c.params["j"] == 1
    assert analyze(f).upper <= 2
