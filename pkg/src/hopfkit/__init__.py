"""Exact computations with finite-dimensional Hopf algebras over cyclotomic fields."""

from .catalog import catalog_get, catalog_names
from .cyclo import CycScalar, FieldSpec
from .hopf import HopfAlgebra, dual, fingerprint, iso_search, tensor_product

__version__ = "0.1.0"

__all__ = [
    "CycScalar",
    "FieldSpec",
    "HopfAlgebra",
    "catalog_get",
    "catalog_names",
    "dual",
    "fingerprint",
    "iso_search",
    "tensor_product",
]
