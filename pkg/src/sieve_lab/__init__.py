"""Exact arithmetic for cyclic sieving of bounded multisets and b-bounded symmetric functions."""

from .cyclotomic import CycElem, as_integer, reduce
from .poly import IntPoly, NonExactDivision, exact_div
from .qanalogs import UNBOUNDED, bnomial, cyclotomic, gaussian_binomial, q_integer, qbnomial
from .symfun import SymPoly, h_k_b, schur

__version__ = "0.1.0"

__all__ = [
    "CycElem",
    "IntPoly",
    "NonExactDivision",
    "SymPoly",
    "UNBOUNDED",
    "as_integer",
    "bnomial",
    "cyclotomic",
    "exact_div",
    "gaussian_binomial",
    "h_k_b",
    "q_integer",
    "qbnomial",
    "reduce",
    "schur",
]
