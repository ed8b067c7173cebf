"""finwald: a workbench for K-theory of finite categories with cofibrations.

Validates categorical and homotopical structure exhaustively, builds the
simplicial system of totally filtered objects, and computes K0 along two
independent routes: a universal generators-and-relations presentation and
the fundamental group of the realized nerve of interior groupoids.
"""

from ._backend import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
