"""The Hopf layer."""

from .core import (
    HopfAlgebra,
    HopfError,
    dual,
    hopf_problems,
    in_tensor_square,
    make_hopf,
    restrict_hopf,
    tensor_map,
    tensor_mul,
    tensor_of,
    tensor_product,
    tensors_equal,
)
from .iso import IsoResult, choose_generators, iso_search, refute
from .stefan import ComatrixBasis, stefan_comatrix_basis
from .structure import (
    Coradical,
    ExactSequenceReport,
    Fingerprint,
    GeneratedSubalgebra,
    GroupLikes,
    HopfMorphism,
    antipode_order,
    antipode_property_problems,
    check_exact_sequence,
    coinvariants,
    coradical,
    coradical_filtration,
    filtration_problems,
    fingerprint,
    generated_subalgebra,
    grouplikes,
    has_chevalley,
    is_grouplike,
    is_subalgebra,
    is_subcoalgebra,
    skew_primitive_table,
    skew_primitives,
    translation_action,
    translation_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
