"""Exact invariant theory of binary forms and homogeneous plane-curve germs."""

from .binform import BinaryForm, DomainError, LinearMap2, act, discriminant, hessian, resultant, transvectant
from .classical import (
    InvariantValue,
    inv_J,
    inv_M,
    quartic_invariants,
    quintic_invariants,
    sextic_invariants,
)
from .equiv import (
    EquivalenceVerdict,
    equivalent_quartics,
    equivalent_quintics,
    germ_equiv_family_st,
    germ_equiv_family_t,
    numeric_eval,
)
from .milnor import MilnorAlgebra, NonIsolatedSingularity, associated_form, milnor_build, normal_form
from .ratpoly import MultiPoly, symbols

__all__ = [
    "BinaryForm", "DomainError", "LinearMap2", "act", "discriminant", "hessian", "resultant",
    "transvectant", "InvariantValue", "inv_J", "inv_M", "quartic_invariants",
    "quintic_invariants", "sextic_invariants", "EquivalenceVerdict", "equivalent_quartics",
    "equivalent_quintics", "germ_equiv_family_st", "germ_equiv_family_t", "numeric_eval",
    "MilnorAlgebra", "NonIsolatedSingularity", "associated_form", "milnor_build",
    "normal_form", "MultiPoly", "symbols",
]

__version__ = "0.1.0"
