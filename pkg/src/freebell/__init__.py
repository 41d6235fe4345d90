"""Free Bell polynomials: noncommutative and q-Bell polynomials, their lift to
free quasi-symmetric functions, dendriform half-products on FQSym, QSym and
WQSym, dual immaculate functions, and the Hopf algebra of Bell classes."""

from .core.qpoly import QPoly
from .core.setpartition import SetPartition
from .freemod import LinComb, Tensor2, render

__version__ = "0.1.0"

__all__ = ["QPoly", "SetPartition", "LinComb", "Tensor2", "render", "__version__"]
