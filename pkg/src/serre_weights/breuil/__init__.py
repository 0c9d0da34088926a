from .families import (
    BreuilError,
    MbarJ,
    RankOneBreuil,
    allowed_kappas,
    build_mbar_j,
    character_module,
    generic_fibre_rank_one,
    hom_from_rank_one,
    kernel_genericity,
    mbar_hom_exponents,
    necessary_subchars,
    rank_one_module,
    reduction_of_mj,
    validate_rank_one,
)
from .field import CoeffField, coeff_field
from .module import BreuilHom, BreuilModule, check_breuil_axioms, check_hom

__all__ = [
    "BreuilError", "BreuilHom", "BreuilModule", "CoeffField", "MbarJ", "RankOneBreuil",
    "allowed_kappas", "build_mbar_j", "character_module", "check_breuil_axioms",
    "check_hom", "coeff_field", "generic_fibre_rank_one", "hom_from_rank_one",
    "kernel_genericity", "mbar_hom_exponents", "necessary_subchars", "rank_one_module", "reduction_of_mj",
    "validate_rank_one",
]
