"""q-analogs of super Catalan numbers and q-Ballot numbers, lattice-path
statistics and bijections, and a brute-force verification harness."""

from .errors import DomainError, InvariantViolation, NotDivisible, ParseError
from .paths import FamilySpec, LatticePath, PathStats, enumerate_family, gen_fun, parse_path, stats
from .qpoly import (
    PolyFraction, QPoly, ballot_q, ballot_q_binomial_form, exact_div, gaussian_binomial,
    q_factorial, q_int, super_catalan_q, super_catalan_t_q,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError", "InvariantViolation", "NotDivisible", "ParseError",
    "FamilySpec", "LatticePath", "PathStats", "enumerate_family", "gen_fun", "parse_path", "stats",
    "PolyFraction", "QPoly", "ballot_q", "ballot_q_binomial_form", "exact_div", "gaussian_binomial",
    "q_factorial", "q_int", "super_catalan_q", "super_catalan_t_q",
]
