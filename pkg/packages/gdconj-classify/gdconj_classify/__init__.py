from gdconj_classify.affine import AffineParams, affine_params, classify_affine, ratio_set
from gdconj_classify.dispatch import classify_pair
from gdconj_classify.errors import ClassificationError, NoTheoremApplies
from gdconj_classify.lf import (
    LFSystemSpec,
    TransposeCheck,
    admissible_region,
    admissible_region_transformed,
    alpha,
    classify_lf,
    involution_c,
    normalized,
    smooth_family_matrices,
    transpose_conditions,
)
from gdconj_classify.nonlinear import SINGULAR_PRODUCT, classify_nonlinear
from gdconj_classify.verdict import Verdict, VerdictKind

__all__ = [
    "SINGULAR_PRODUCT",
    "AffineParams",
    "ClassificationError",
    "LFSystemSpec",
    "NoTheoremApplies",
    "TransposeCheck",
    "Verdict",
    "VerdictKind",
    "admissible_region",
    "admissible_region_transformed",
    "affine_params",
    "alpha",
    "classify_affine",
    "classify_lf",
    "classify_nonlinear",
    "classify_pair",
    "involution_c",
    "normalized",
    "ratio_set",
    "smooth_family_matrices",
    "transpose_conditions",
]
