"""Exact-arithmetic toolkit for finite weak Hopf algebras, groupoid
gradings and actions, and their Galois / Morita / Frobenius properties."""

from .exactla import GF, QQ, Matrix, QuotientSpace, Subspace
from .groupoid import (Groupoid, cyclic_group, disjoint_union, from_group,
                       pair_groupoid)
from .weakhopf import (FinAlgebra, FinCoalgebra, WeakBialgebra,
                       WeakHopfAlgebra, dual_groupoid_algebra,
                       groupoid_algebra, pairing_check)
from .comod import (CanonicalMap, ComoduleAlgebra, Coring,
                    RelativeHopfModule, build_coring, canonical_map,
                    coinvariants, self_comodule, verify_can_inverse_formula)
from .graded import (GradedAlgebra, GradedModule, comodule_to_grading,
                     grading_to_comodule, is_strongly_graded,
                     theorem35_harness)
from .action import (GModuleAlgebra, Q_and_morita, action_can,
                     action_to_comodule, comodule_to_action, dual_ring_basis,
                     fixed_ring, frobenius_system, idempotent_decomposition)
from .morita import (dual_ring, eps_is_unit, hom_presentation,
                     morita_context, star_can, theorem25_harness)

__all__ = [
    "GF", "QQ", "Matrix", "QuotientSpace", "Subspace",
    "Groupoid", "cyclic_group", "disjoint_union", "from_group",
    "pair_groupoid",
    "FinAlgebra", "FinCoalgebra", "WeakBialgebra", "WeakHopfAlgebra",
    "dual_groupoid_algebra", "groupoid_algebra", "pairing_check",
    "CanonicalMap", "ComoduleAlgebra", "Coring", "RelativeHopfModule",
    "build_coring", "canonical_map", "coinvariants", "self_comodule",
    "verify_can_inverse_formula",
    "GradedAlgebra", "GradedModule", "comodule_to_grading",
    "grading_to_comodule", "is_strongly_graded", "theorem35_harness",
    "GModuleAlgebra", "Q_and_morita", "action_can", "action_to_comodule",
    "comodule_to_action", "dual_ring_basis", "fixed_ring",
    "frobenius_system", "idempotent_decomposition",
    "dual_ring", "eps_is_unit", "hom_presentation", "morita_context",
    "star_can", "theorem25_harness",
]
