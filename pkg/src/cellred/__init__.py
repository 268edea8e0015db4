"""cellred: exact Weyl-group / Hecke-algebra cell computations and audits."""

__version__ = "0.1.0"

from .rootdata import CartanType, Weight, build_root_system, weyl_dim
from .coxeter import WeylElt, WeylGroup, generate
from .poly import IntPoly, LaurentPoly

__all__ = [
    "CartanType",
    "Weight",
    "WeylElt",
    "WeylGroup",
    "IntPoly",
    "LaurentPoly",
    "build_root_system",
    "generate",
    "weyl_dim",
    "__version__",
]
