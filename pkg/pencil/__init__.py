"""Pencils of conics: characteristic cubic, pair classification and normal forms."""

from pencil.classify import base_points_from_member, classify_pair
from pencil.errors import (
    AlphaOutOfRangeError,
    ContactOrderTooHighError,
    DegenerateConfigurationError,
    IdenticalConicsError,
    LineMeetsConicError,
    NoDoubleContactError,
    PencilError,
    VertexNotInsideError,
    WrongMultiplicityPatternError,
)
from pencil.models import (
    BasePoint,
    BothSingularNormalForm,
    IntersectionTag,
    IntersectionType,
    PencilSpectrum,
    RootCluster,
    SingularCircumscribedNormalForm,
    SingularInscribedNormalForm,
    SpectralCurve,
    TangentPairNormalForm,
    parabola_matrix,
    tangent_conic_matrix,
)
from pencil.normal_forms import (
    normalize_both_singular,
    normalize_singular_circumscribed,
    normalize_singular_inscribed,
    normalize_tangent_pair,
    spectral_curve,
)
from pencil.spectrum import (
    alpha_from_spectrum,
    pencil_char_poly,
    pencil_spectrum,
    spectrum_from_cubic,
)

__all__ = [
    "AlphaOutOfRangeError",
    "BasePoint",
    "BothSingularNormalForm",
    "ContactOrderTooHighError",
    "DegenerateConfigurationError",
    "IdenticalConicsError",
    "IntersectionTag",
    "IntersectionType",
    "LineMeetsConicError",
    "NoDoubleContactError",
    "PencilError",
    "PencilSpectrum",
    "RootCluster",
    "SingularCircumscribedNormalForm",
    "SingularInscribedNormalForm",
    "SpectralCurve",
    "TangentPairNormalForm",
    "VertexNotInsideError",
    "WrongMultiplicityPatternError",
    "alpha_from_spectrum",
    "base_points_from_member",
    "classify_pair",
    "normalize_both_singular",
    "normalize_singular_circumscribed",
    "normalize_singular_inscribed",
    "normalize_tangent_pair",
    "parabola_matrix",
    "pencil_char_poly",
    "pencil_spectrum",
    "spectral_curve",
    "spectrum_from_cubic",
    "tangent_conic_matrix",
]
