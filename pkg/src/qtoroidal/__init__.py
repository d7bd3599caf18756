"""Exact symbolic representations of the type-A quantum toroidal algebra.

Vector representations, Drinfeld tensor products and their submodule and
quotient variants, column Young-tableaux modules, mechanical verification of
the defining relations, and root-of-unity specializations; all arithmetic is
exact over Q(q, parameters).
"""

from ._kernel import BACKEND

__all__ = ["BACKEND"]
__version__ = "0.1.0"
