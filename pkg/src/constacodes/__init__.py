"""Constacyclic codes over finite fields and finite chain rings."""

from .errors import CapExceeded, ConstacodesError, Inapplicable, NoRootError
from .ffield import Field, FieldElem, make_field, minus_one_is_square
from .chainring import (GaloisRing, PAdicRepr, RingElem, UAdicRing, hom_weight,
                        kernel_mu_star_order, lift_nth_root, make_chain_ring)
from .poly import Factorization, Poly
from .factor import (cyclotomic_cosets, factor_xn_minus_lambda_field,
                     factor_xn_minus_one_field, hensel_lift_factorization,
                     pairwise_coprime, substitute_scale)
from .codes import (ChainQuotient, ConstaCode, CrtSplit, EquivMap, QElem,
                    QuotientRing, chain_code, chain_quotient_build,
                    code_from_generators, crt_split, enumerate_all_ideals,
                    equiv_map_apply, galois_ps_root, is_constacyclic_closed,
                    shift, unit_in_chain_quotient, weight_enumerator)
from .verify import SUITES, run_suite

__all__ = [
    "CapExceeded", "ConstacodesError", "Inapplicable", "NoRootError",
    "Field", "FieldElem", "make_field", "minus_one_is_square",
    "GaloisRing", "PAdicRepr", "RingElem", "UAdicRing", "hom_weight",
    "kernel_mu_star_order", "lift_nth_root", "make_chain_ring",
    "Factorization", "Poly",
    "cyclotomic_cosets", "factor_xn_minus_lambda_field",
    "factor_xn_minus_one_field", "hensel_lift_factorization",
    "pairwise_coprime", "substitute_scale",
    "ChainQuotient", "ConstaCode", "CrtSplit", "EquivMap", "QElem",
    "QuotientRing", "chain_code", "chain_quotient_build",
    "code_from_generators", "crt_split", "enumerate_all_ideals",
    "equiv_map_apply", "galois_ps_root", "is_constacyclic_closed",
    "shift", "unit_in_chain_quotient", "weight_enumerator",
    "SUITES", "run_suite",
]

__version__ = "0.1.0"
