"""Serre weights of mod p Galois representations at a totally ramified prime."""

from .characters import (
    FieldParams,
    Niveau1Char,
    Niveau2Char,
    cyclotomic_exponent,
    frobenius_conjugate,
    n2_from_pair,
    restrict_to_niveau1,
)
from .engine import (
    ConsistencyFault,
    DerivationResult,
    GlobalHypotheses,
    derive,
    exceptional_weights,
    verify_theorems,
)
from .gl2 import (
    Cuspidal,
    PrincipalSeries,
    Scalar,
    SerreWeight,
    brace,
    bt_type_for_pair,
    companion,
    induction_ses,
    jh_factors,
)
from .lifts import CrysCharDescriptor, LiftDescriptor, niveau1_lifts, niveau2_lift, reduce_crystalline_char
from .predicted import Irreducible, ReducibleSplit, WeightSet, det_exponent, det_of_inertial, w_question

__all__ = [
    "ConsistencyFault", "CrysCharDescriptor", "Cuspidal", "DerivationResult", "FieldParams",
    "GlobalHypotheses", "Irreducible", "LiftDescriptor", "Niveau1Char", "Niveau2Char",
    "PrincipalSeries", "ReducibleSplit", "Scalar", "SerreWeight", "WeightSet", "brace",
    "bt_type_for_pair", "companion", "cyclotomic_exponent", "derive", "det_exponent",
    "det_of_inertial", "exceptional_weights", "frobenius_conjugate", "induction_ses",
    "jh_factors", "n2_from_pair", "niveau1_lifts", "niveau2_lift", "reduce_crystalline_char",
    "restrict_to_niveau1", "verify_theorems", "w_question",
]
