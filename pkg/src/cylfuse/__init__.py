"""Cylindric reverse plane partitions, cylindric complete symmetric functions
and fusion coefficients of generalised Verlinde algebras."""

from .affine import (
    AffinePermutation,
    CylindricShape,
    LoopFunction,
    alcove,
    reduce_to_alcove,
)
from .fusion import FusionElement, LaurentZ, n_coefficient, n_reduced
from .rppgen import chi_cyl, chi_cyl_by_count, cyl_h_expansion, h_skew_expansion
from .symcore import MExpansion, chi_skew, h_expansion, partition

__version__ = "0.1.0"
