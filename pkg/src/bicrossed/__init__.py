"""Exact symbolic machinery for bicrossed-product Hopf algebras and the
cyclic cocycles they induce on convolution algebras."""

from .scalars import Scalar
from .forms import PolyForm
from .simplex import AffineSimplex, integrate_over_simplex

__all__ = ["Scalar", "PolyForm", "AffineSimplex", "integrate_over_simplex"]
