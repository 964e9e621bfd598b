"""Exact computation in SL(N) web spaces over integer Laurent polynomials.

Subpackages:
  ring      exact Laurent-polynomial arithmetic and quantum combinatorics
  tableaux  column-strict tableaux, orderings, the peeling procedure
  tensor    standard bases and elementary intertwiners
  webs      webs as slice sequences, ladders, two evaluators, the web form
  howe      the quantum group action in tableau coordinates
  bases     intermediate and dual canonical bases
  webalg    graded Cartan matrices and Frobenius diagnostics
  verify    relation and property sweeps
  cli       the command line front end
"""

from .ring import LaurentPoly, bar, exact_divide, qbinom, qint, symmetrize_correction

__all__ = [
    "LaurentPoly",
    "bar",
    "exact_divide",
    "qbinom",
    "qint",
    "symmetrize_correction",
]
