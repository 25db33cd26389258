"""Command-line front end.

Exit codes: 0 success (any verdict, including unknown); 1 negative
result (verification failed, factorization refused, corpus failure);
2 input errors (syntax, invalid values); 3 unsupported ring or
operation; 4 integer too large to factor.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .criteria import DEFAULT_DUMAS_N, DEFAULT_J, DEFAULT_M_BOUND, DEFAULT_PROBE, Config, analyze
from .errors import SeriesFactError, UnsupportedError
from .factorize import first_mismatch, split_by_primes
from .newton import newton_polygon
from .rings import GAUSSIAN, INTEGERS, POLYQ, GaussInt, QPoly, Valuation, factor_constant, get_ring, is_probable_prime
from .sparser import Const, Expr, Inv, Var, parse, parse_series

GRAMMAR_HELP = """\
expression grammar:
  expr   := term (('+'|'-') term)*
  term   := unary ('*' unary)*
  unary  := '-' unary | factor
  factor := atom ('^' NAT)?
  atom   := '(' expr ')' | 'inv' '(' expr ')' | CONST | 'z'
constants: integers; Gaussian literals 4+3i, 2i, i (--ring gauss);
  polynomials in y inside brackets, e.g. [1+y], [y^2/3] (--ring polyq).

factor: the unit of a_0 is absorbed into the first factor's constant term;
  factors follow the primes of a_0 in ascending order.
exit codes: 0 ok, 1 negative result, 2 input error, 3 unsupported, 4 overflow.
"""


def _bounds(text: str):
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 3 or min(parts) < 1:
        raise argparse.ArgumentTypeError("--bounds takes J,M,D with positive integers")
    return parts


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default="int", choices=["int", "gauss", "polyq"])
    common.add_argument("--prime", help="prime (int/gauss) or linear uniformizer such as [1+y] (polyq)")
    common.add_argument("--order", type=int, default=64, help="truncation order N (default 64)")
    common.add_argument("--bounds", type=_bounds, metavar="J,M,D",
                        default=[DEFAULT_J, DEFAULT_M_BOUND, DEFAULT_DUMAS_N],
                        help="search bounds: valuation J, pattern m, Dumas N")
    common.add_argument("--probe", type=int, default=DEFAULT_PROBE, help="zero-prefix probe bound")
    common.add_argument("--valuation", dest="valuation_mode", default="y-adic", choices=["y-adic", "degree"],
                        help="valuation on Q[y]; 'degree' is experimental")
    common.add_argument("--format", default="json", choices=["json", "text"])

    parser = argparse.ArgumentParser(
        prog="seriesfact",
        description="Irreducibility and factorization of formal power series over Z, Z[i] and Q[y].",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"seriesfact {__version__}")
    parser.add_argument("--seed-corpus", action="store_true", help="run the built-in example corpus")
    sub = parser.add_subparsers(dest="command")
    p = sub.add_parser("analyze", parents=[common], help="decide irreducibility / bound the factor count")
    p.add_argument("expr")
    p = sub.add_parser("factor", parents=[common], help="split along the primes of the constant term")
    p.add_argument("expr")
    p = sub.add_parser("polygon", parents=[common], help="Newton polygon with respect to --prime")
    p.add_argument("expr")
    p.add_argument("--svg", metavar="FILE", help="also write an SVG drawing")
    p = sub.add_parser("verify", parents=[common], help="check that factors multiply to f up to --order")
    p.add_argument("expr", help="the series f")
    p.add_argument("factors", nargs="*", help="candidate factors")
    return parser


def _config(args) -> Config:
    J, M, D = args.bounds
    ring = get_ring(args.ring)
    prime = parse_constant(args.prime, ring) if args.prime else None
    return Config(ring=ring.tag, prime=prime, order=args.order, J=J, m_bound=M, dumas_N=D,
                  probe=args.probe, valuation_mode=args.valuation_mode)


def parse_constant(text: str, ring):
    ring = get_ring(ring)
    if ring is POLYQ and not text.strip().startswith("["):
        text = f"[{text}]"
    node = parse(text, ring)
    if _mentions_z(node):
        raise SeriesFactError(f"{text!r} is not a constant")
    return parse_series(text, ring).coeff(0)


def _mentions_z(node: Expr) -> bool:
    if isinstance(node, Var):
        return True
    if isinstance(node, (Const,)):
        return False
    if isinstance(node, Inv):
        return _mentions_z(node.arg)
    return any(_mentions_z(getattr(node, f)) for f in ("left", "right", "base", "arg") if hasattr(node, f))


def _s(x) -> str:
    return str(x)


# --------------------------------------------------------------------------
# commands


def cmd_analyze(args, out) -> int:
    cfg = _config(args)
    f = parse_series(args.expr, cfg.ring)
    verdict = analyze(f, cfg)
    data = {"input": args.expr, "ring": cfg.ring, **verdict.to_json()}
    if args.format == "json":
        _dump(data, out)
    else:
        print(f"input:    {args.expr}  (ring {cfg.ring})", file=out)
        print(f"status:   {verdict.status}", file=out)
        print(f"bounds:   {verdict.lower} <= factors <= {verdict.upper}", file=out)
        if verdict.z_power:
            print(f"z-power:  {verdict.z_power}", file=out)
        if verdict.constant is not None:
            print(f"a0:       {verdict.constant}", file=out)
        for c in verdict.criteria:
            extra = ", ".join(f"{k}={v}" for k, v in c.params.items() if k != "witnesses")
            lo = "-" if c.lower is None else c.lower
            hi = "-" if c.upper is None else c.upper
            print(f"  fired:  {c.name} ({lo}..{hi}) {extra}".rstrip(), file=out)
        for note in verdict.notes:
            print(f"  note:   {note}", file=out)
    return 0


def cmd_factor(args, out) -> int:
    cfg = _config(args)
    ring = get_ring(cfg.ring)
    if ring is POLYQ:
        raise UnsupportedError("unsupported: factorization over Q[y]")
    f = parse_series(args.expr, ring)
    a0 = f.coeff(0)
    if not a0:
        raise UnsupportedError("constant term is zero: factor out z first")
    fact = factor_constant(a0)
    if fact.omega < 2:
        msg = ("refused: splitting needs a constant term that is a product of two "
               "nonassociate coprime elements; here a0 = " + str(fact))
        if fact.omega == 1 and fact.big_omega == 1:
            msg += " (prime constant term, so f is irreducible)"
        elif fact.omega == 0:
            msg += " (unit constant term, so f is a unit)"
        if args.format == "json":
            _dump({"input": args.expr, "ring": cfg.ring, "refused": True, "message": msg}, out)
        else:
            print(msg, file=out)
        return 1
    split = split_by_primes(f, fact)
    bad = first_mismatch(split.factors, f, cfg.order)
    factors = [
        {"constant_term": _s(c), "coeffs": [_s(x) for x in fac.head(cfg.order + 1)]}
        for c, fac in zip(split.constant_terms, split.factors)
    ]
    if args.format == "json":
        _dump({"input": args.expr, "ring": cfg.ring, "order": cfg.order, "factors": factors,
               "verified": bad is None, "first_mismatch": bad}, out)
    else:
        for k, fac in enumerate(factors, 1):
            print(f"factor {k}: " + ", ".join(fac["coeffs"]) + ", ...", file=out)
        print(f"verified to order {cfg.order}: {bad is None}", file=out)
    return 0 if bad is None else 1


def _polygon_valuation(cfg: Config) -> Valuation:
    ring = get_ring(cfg.ring)
    if ring is POLYQ:
        if cfg.valuation_mode == "degree":
            return Valuation.degree()
        if cfg.prime is None:
            return Valuation.y_adic(0)
        q = QPoly.coerce(cfg.prime)
        if q.degree != 1:
            raise UnsupportedError("only linear uniformizers y - c are supported in Q[y]")
        return Valuation.y_adic(-q.coeffs[0] / q.coeffs[1])
    if cfg.prime is None:
        raise UnsupportedError(f"polygon over {ring.tag} needs --prime")
    p = cfg.prime
    if ring is INTEGERS and not is_probable_prime(abs(p)):
        raise SeriesFactError(f"{p} is not prime")
    if ring is GAUSSIAN:
        p = GaussInt.coerce(p)
        fact = factor_constant(p) if p else None
        if fact is None or fact.big_omega != 1:
            raise SeriesFactError(f"{p} is not a Gaussian prime")
    return Valuation.p_adic(p)


def cmd_polygon(args, out) -> int:
    cfg = _config(args)
    v = _polygon_valuation(cfg)
    f = parse_series(args.expr, cfg.ring)
    poly = newton_polygon(f, v, cfg.order)
    data = {"input": args.expr, "ring": cfg.ring, "valuation": str(v), **poly.to_json()}
    if args.svg:
        from .svg import polygon_svg
        from .newton import np_points

        with open(args.svg, "w") as fh:
            fh.write(polygon_svg(np_points(f, v, cfg.order), poly))
    if args.format == "json":
        _dump(data, out)
    else:
        print(f"window {poly.window}, valuation {v}, censored={poly.censored}", file=out)
        for e in poly.edges:
            print(f"  edge {tuple(e.start)} -> {tuple(e.end)}  slope {e.slope}  length {e.hlen}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    cfg = _config(args)
    f = parse_series(args.expr, cfg.ring)
    factors = [parse_series(t, cfg.ring) for t in args.factors]
    bad = first_mismatch(factors, f, cfg.order)
    if args.format == "json":
        _dump({"verified": bad is None, "order": cfg.order, "first_mismatch": bad}, out)
    else:
        print(f"verified to order {cfg.order}" if bad is None else f"mismatch at index {bad}", file=out)
    return 0 if bad is None else 1


def cmd_corpus(out) -> int:
    from .corpus import run_corpus

    results = run_corpus()
    width = max(len(c.expr) for c, _, _ in results)
    failed = 0
    for case, ok, detail in results:
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {case.group:24} {case.expr:{width}}  {detail}", file=out)
    print(f"{len(results) - failed}/{len(results)} passed", file=out)
    return 0 if not failed else 1


def _dump(data, out):
    json.dump(data, out, indent=2, default=_json_default)
    out.write("\n")


def _json_default(x):
    if isinstance(x, Fraction):
        return [str(x.numerator), str(x.denominator)]
    return str(x)


COMMANDS = {"analyze": cmd_analyze, "factor": cmd_factor, "polygon": cmd_polygon, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed_corpus:
        return cmd_corpus(out)
    if not args.command:
        parser.print_help(out)
        return 2
    try:
        return COMMANDS[args.command](args, out)
    except SeriesFactError as exc:
        print(f"seriesfact: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"seriesfact: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
