"""Exact-arithmetic non-symmetric Jack polynomials and their Pieri-type expansions."""

from .compositions import eta_bar, hooks
from .jack import JackTable, generate_E
from .polyring import Poly

__version__ = "0.1.0"

__all__ = ["JackTable", "Poly", "eta_bar", "generate_E", "hooks"]
