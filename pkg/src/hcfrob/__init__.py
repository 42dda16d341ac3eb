"""Point counting on odd-degree hyperelliptic curves over finite fields of
odd characteristic via p-adic cohomology.

The pipeline: lift the curve to the Witt ring at finite precision, compute
the matrix of the p-power Frobenius on the anti-invariant part of de Rham
cohomology by cohomological reduction, change to an integral basis cut out
by series truncation at infinity, and extract the zeta numerator and point
counts, all verifiable against exhaustive enumeration.
"""

__version__ = "0.1.0"

from .backend import backend_name
from .errors import HcError, InvariantViolation, ValidationError
from .padic import RingContext, ZqElem, make_context

__all__ = [
    "HcError",
    "InvariantViolation",
    "RingContext",
    "ValidationError",
    "ZqElem",
    "backend_name",
    "make_context",
    "__version__",
]
