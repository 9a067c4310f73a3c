"""Exact arithmetic and morphism checks for the algebras A_p(l, u, K_q[s, t]).

The algebra is generated by x, y, s, t with

    xy - p yx = 1,  st = q ts,  sx = l xs,  sy = l^-1 ys,  tx = u xt,  ty = u^-1 yt

(``l`` and ``u`` stand for lambda and mu).  Modules cover PBW normal forms,
the generalized Weyl algebra presentation, the localization at z, s, t and
the associated quantum torus, and maps between these algebras.
"""

from .algebra import Algebra, AlgebraError, AlgebraMismatchError, NotAUnitError
from .gwa import GwaElement, from_gwa, gwa_multiply, sigma_apply, to_gwa
from .localization import (CommutationMatrix, LocElement, QuantumTorus, TorusElement,
                           ideal_membership, invert_unit, loc_multiply, torus_matrix,
                           torus_multiply)
from .morphisms import (EndoData, GenMap, IsoCase, classify_affine, compose, dixmier_invert,
                        identity, make_isomorphism, make_negative_aut, make_positive_endo,
                        make_scalar_aut, make_triangular_aut, psi_minus, psi_minus_inverse,
                        verify_relations, apply_morphism)
from .pbw import PbwElement, commutator, multiply, normalize_word, q_identity_check
from .probes import center_scan, normality_check, q_integer
from .scalars import (ParamConfig, ParamScalar, canonicalize, field_arith, solve_power_identity,
                      specialize)
from .serialize import parse_element

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraError",
    "AlgebraMismatchError",
    "NotAUnitError",
    "GwaElement",
    "from_gwa",
    "gwa_multiply",
    "sigma_apply",
    "to_gwa",
    "CommutationMatrix",
    "LocElement",
    "QuantumTorus",
    "TorusElement",
    "ideal_membership",
    "invert_unit",
    "loc_multiply",
    "torus_matrix",
    "torus_multiply",
    "EndoData",
    "GenMap",
    "IsoCase",
    "classify_affine",
    "compose",
    "dixmier_invert",
    "identity",
    "make_isomorphism",
    "make_negative_aut",
    "make_positive_endo",
    "make_scalar_aut",
    "make_triangular_aut",
    "psi_minus",
    "psi_minus_inverse",
    "verify_relations",
    "apply_morphism",
    "PbwElement",
    "commutator",
    "multiply",
    "normalize_word",
    "q_identity_check",
    "center_scan",
    "normality_check",
    "q_integer",
    "ParamConfig",
    "ParamScalar",
    "canonicalize",
    "field_arith",
    "solve_power_identity",
    "specialize",
    "parse_element",
]
