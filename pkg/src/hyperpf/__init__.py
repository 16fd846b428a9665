"""Exact hyperpfaffian engine for correlation functions of beta ensembles
with beta an even perfect square.

Everything upstream of plot emission is computed in exact arithmetic:
arbitrary-precision integers, rationals, and integer polynomials.  The
package exposes the exterior-algebra kernel (``exterior``), index-set
combinatorics (``indexcomb``), Wronskians of monic families
(``wronskian``), moment functionals (``moments``), Gram vectors
(``gram``), correlation assembly (``correlation``), a hyperpfaffian
identity suite (``evaluations``), and an independent constant-term
oracle (``oracle``).
"""

from .correlation import CorrelationReport, pair_correlation
from .exterior import Multivector, hyperpfaffian, pfaffian_classical, wedge
from .gram import EnsembleSpec, gram_vector

__all__ = [
    "CorrelationReport",
    "pair_correlation",
    "Multivector",
    "hyperpfaffian",
    "pfaffian_classical",
    "wedge",
    "EnsembleSpec",
    "gram_vector",
]

__version__ = "0.1.0"
