"""Plane filling curves of degree q + 2 over finite fields.

The curve C_A is cut out by F_A = (x, y, z) A (U, V, W)^t where U, V, W
generate the ideal of P^2(F_q).  This package builds the fields and forms,
decides smoothness, classifies the smooth curves up to projective
equivalence and computes their automorphism groups.
"""

from .autgroup import AutGroupReport, aut_condition, b0_generator, enumerate_aut, pi_map
from .centralizer import CentralizerReport, centralizer_generator, centralizer_report
from .classify import ClassReport, Cubic, classes, curves_equivalent, special_case_detect
from .ffield import GF, FieldCtx, FieldElem, extension, field_of_order, frobenius, norm, trace
from .forms import HomForm, build_FA, canonical_form, uvw
from .linalg import Mat, MonicPoly, ProjPoint, char_poly, companion, eigen_points
from .smooth import is_smooth_criterion, singular_scan, smoothness_report

__all__ = [
    "AutGroupReport", "CentralizerReport", "ClassReport", "Cubic", "FieldCtx", "FieldElem",
    "GF", "HomForm", "Mat", "MonicPoly", "ProjPoint", "aut_condition", "b0_generator",
    "build_FA", "canonical_form", "centralizer_generator", "centralizer_report", "char_poly",
    "classes", "companion", "curves_equivalent", "eigen_points", "enumerate_aut", "extension",
    "field_of_order", "frobenius", "is_smooth_criterion", "norm", "pi_map", "singular_scan",
    "smoothness_report", "special_case_detect", "trace", "uvw",
]
