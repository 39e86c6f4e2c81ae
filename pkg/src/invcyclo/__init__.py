"""Inverse ternary cyclotomic polynomials Psi_pqr with r = alpha*p + beta*q."""

from .coeffengine import EvalMethod, a_pq, c_coeff, c_trivial_case, e_closed, e_summation
from .exceptions import BudgetError, DomainError, InexactDivisionError
from .heightflat import FlatnessVerdict, HeightReport, h_witnesses, height_formula, is_flat, moree_bound_1996
from .numtheory import Decomposition, FamilyTriple, decompose_mod_pq, decompose_r, is_prime, make_family_triple, mod_inverse
from .polyoracle import IntPolynomial, cyclotomic, f_polynomial, height_of, inverse_cyclotomic, psi_product_form
from .search import SearchRecord, TpFamily, export, family_members, flat_set, min_ratio_experiment, tp_family

__all__ = [
    "BudgetError", "Decomposition", "DomainError", "EvalMethod", "FamilyTriple", "FlatnessVerdict",
    "HeightReport", "InexactDivisionError", "IntPolynomial", "SearchRecord", "TpFamily",
    "a_pq", "c_coeff", "c_trivial_case", "cyclotomic", "decompose_mod_pq", "decompose_r",
    "e_closed", "e_summation", "export", "f_polynomial", "family_members", "flat_set",
    "h_witnesses", "height_formula", "height_of", "inverse_cyclotomic", "is_flat",
    "is_prime", "make_family_triple", "min_ratio_experiment", "mod_inverse",
    "moree_bound_1996", "psi_product_form", "tp_family",
]
