"""Factorization and irreducibility of formal power series over Z, Z[i] and Q[y]."""

__version__ = "0.1.0"

from .criteria import Config, Verdict, analyze
from .factorize import SplitResult, split_by_primes, split_coprime, verify_product
from .newton import NewtonPolygon, f_star, lower_hull, newton_polygon, np_points, single_edge_test
from .rings import (
    GAUSSIAN,
    INTEGERS,
    POLYQ,
    ConstantFactorization,
    GaussInt,
    QPoly,
    Valuation,
    ext_gcd,
    factor_constant,
    valuation_of,
)
from .series import Series, invert, strip_z
from .sparser import parse, parse_series

__all__ = [
    "Config", "Verdict", "analyze",
    "SplitResult", "split_by_primes", "split_coprime", "verify_product",
    "NewtonPolygon", "f_star", "lower_hull", "newton_polygon", "np_points", "single_edge_test",
    "GAUSSIAN", "INTEGERS", "POLYQ", "ConstantFactorization", "GaussInt", "QPoly", "Valuation",
    "ext_gcd", "factor_constant", "valuation_of",
    "Series", "invert", "strip_z", "parse", "parse_series",
]
