import sympy
from hypothesis import strategies as st

Z = sympy.Symbol("z")


def _leaf():
    return st.one_of(
        st.integers(-9, 9).map(str),
        st.just("z"),
        st.integers(1, 4).map(lambda n: f"z^{n}"),
    )


def _extend(children):
    binop = st.tuples(children, st.sampled_from(["+", "-", "*"]), children).map(
        lambda t: f"({t[0]} {t[1]} {t[2]})")
    power = st.tuples(children, st.integers(0, 3)).map(lambda t: f"({t[0]})^{t[1]}")
    # unit constant term so the inverse exists over Z
    inverse = st.tuples(st.sampled_from(["1", "-1"]), children).map(lambda t: f"inv({t[0]} + z*{t[1]})")
    return st.one_of(binop, power, inverse, children.map(lambda c: f"-{c}"))


series_exprs = st.recursive(_leaf(), _extend, max_leaves=8)


def sympy_coeffs(expr: str, n: int) -> list[int]:
    """Taylor coefficients a_0..a_{n-1} computed by sympy from the same text."""
    text = expr.replace("^", "**").replace("inv(", "(1)/(")
    e = sympy.sympify(text, locals={"z": Z})
    poly = sympy.series(e, Z, 0, n).removeO()
    return [int(poly.coeff(Z, i)) if i else int(poly.subs(Z, 0)) for i in range(n)]


ACCEPTANCE_LINES: list[str] = []


def report(label: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
