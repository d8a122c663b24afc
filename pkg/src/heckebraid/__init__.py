"""Decategorified braid-group actions: Weyl groups, Hecke algebras, KL bases, Demazure-Lusztig operators."""

from .rootdata import CartanDatum, RootSystem, build_cartan, generate_roots, reflection_matrix
from .laurent import LaurentPolyQ, q
from .weyl import WeylElement, WeylGroup, all_elements, bruhat_leq, from_word, group_order, longest_element
from .hecke import HeckeElement, KLTable, c_simple, t_basis, t_inverse, unit
from .braid import BraidWord, hecke_image, positive_lift, verify_braid_relation
from .kops import WeightLaurent, demazure, demazure_lusztig, hecke_action, poincare, steinberg_summary

__all__ = [
    "BraidWord",
    "CartanDatum",
    "HeckeElement",
    "KLTable",
    "LaurentPolyQ",
    "RootSystem",
    "WeightLaurent",
    "WeylElement",
    "WeylGroup",
    "all_elements",
    "build_cartan",
    "bruhat_leq",
    "c_simple",
    "demazure",
    "demazure_lusztig",
    "from_word",
    "generate_roots",
    "hecke_action",
    "hecke_image",
    "longest_element",
    "poincare",
    "positive_lift",
    "q",
    "reflection_matrix",
    "steinberg_summary",
    "t_basis",
    "t_inverse",
    "unit",
    "verify_braid_relation",
]
