"""Exact computations for affine normal SL2-varieties with a dense orbit."""

from .classify import ClassifyConfig, ClassLabel, classify, krull_dimension, normalize_dominant, weight_component_closure
from .exactmath import Cyclotomic, binom, verify_lemma_A1, verify_lemma_A2, verify_lemma_A3
from .finitegroups import FiniteSubgroup, catalog, molien_coefficients, reynolds_invariants
from .hwproduct import ProductDecomposition, decompose_product, verify_cg_embedding, w_vector, y_coeff
from .polyring import HomPoly2, MPoly, Poly4, multiply, newton_points, normal_form, total_degree_components
from .sl2action import GroupElement2, WeightVector, is_dominant, lower, module_basis, right_translate, right_weight_components
from .subalgebra import AdmissibilityReport, GradedAlgebraPresentation, check_admissible, contains, graded_piece, sl2_span_generators
from .toricmonoid import Semigroup2D, extremal_rays, hilbert_basis, is_saturated, monomial_admissible

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "ClassLabel",
    "ClassifyConfig",
    "Cyclotomic",
    "FiniteSubgroup",
    "GradedAlgebraPresentation",
    "GroupElement2",
    "HomPoly2",
    "MPoly",
    "Poly4",
    "ProductDecomposition",
    "Semigroup2D",
    "WeightVector",
    "binom",
    "catalog",
    "check_admissible",
    "classify",
    "contains",
    "decompose_product",
    "extremal_rays",
    "graded_piece",
    "hilbert_basis",
    "is_dominant",
    "is_saturated",
    "krull_dimension",
    "lower",
    "module_basis",
    "molien_coefficients",
    "monomial_admissible",
    "multiply",
    "newton_points",
    "normal_form",
    "normalize_dominant",
    "reynolds_invariants",
    "right_translate",
    "right_weight_components",
    "sl2_span_generators",
    "total_degree_components",
    "verify_cg_embedding",
    "verify_lemma_A1",
    "verify_lemma_A2",
    "verify_lemma_A3",
    "w_vector",
    "weight_component_closure",
    "y_coeff",
]
