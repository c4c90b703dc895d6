"""
Services Package
Algebra kernels: arithmetic, Groebner bases, decomposition, invariants and Cech evidence
"""

from app.services.arithmetic import ArithOp, poly_arith, power
from app.services.groebner import (
    contains,
    eliminate,
    ideal_membership,
    is_unit_ideal,
    krull_dimension,
    normal_form,
    reduced_groebner_basis,
    same_ideal,
)
from app.services.decompose import minimal_primes
from app.services.invariants import corollary_rules, ideal_in_quotient, invariant_report, quotient_ring
from app.services.cech import cech_cohomology_box, graded_piece_basis, stabilization_table
from app.services.toric import toric_presentation

__all__ = [
    "ArithOp",
    "poly_arith",
    "power",
    "contains",
    "eliminate",
    "ideal_membership",
    "is_unit_ideal",
    "krull_dimension",
    "normal_form",
    "reduced_groebner_basis",
    "same_ideal",
    "minimal_primes",
    "corollary_rules",
    "ideal_in_quotient",
    "invariant_report",
    "quotient_ring",
    "cech_cohomology_box",
    "graded_piece_basis",
    "stabilization_table",
    "toric_presentation",
]
