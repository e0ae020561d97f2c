"""Conjugation-generated norms and the metric space of odd classes.

The library computes q_x(y), the least number of conjugates of x (or of
x^-1) whose product is y, certifies the value with checkable factorization
witnesses, builds the symmetrized log metric on nontrivial odd classes,
and decides relative simplicity of small finite groups.
"""

__version__ = "1.0.0"

from .perm import (CycleType, Permutation, canonical_gamma, canonical_iota,
                   canonical_rep, compose_all, conjugate, format_cycles,
                   parse_cycles)
from .witness import FactorizationWitness, compose_witnesses, verify_witness_json
from .characters import (CharacterTable, character_table, chartable_rows,
                         class_size, enumerate_partitions, product_classes,
                         verify_hook_dimensions, verify_orthogonality)
from .norms import (AsymmetricDistance, Budget, BudgetExceeded, DEFAULT_BUDGET,
                    INFINITE, NormResult, TsuboiDistance, block_iota_witness,
                    d_as, iota_upper_witness, q, q_bruteforce, q_classgraph,
                    q_infty, support_parity_lower_bound, tsuboi_d)
from .lemmas import (ConstructionError, LEMMA_NAMES, LemmaWitness,
                     ParityObstruction, cycle_as_two_involutions,
                     even_case_display, gamma_from_iota, iota_from_gamma_pair,
                     iota_from_gamma_triple, iota_from_sigma, n4_identity,
                     pair_involution_product, sigma_from_iota,
                     three_conjugates_iota)
from .space import (DensityCertificate, DistanceMatrix, MatrixEntry,
                    SpacePoint, density_certificate, density_sweep,
                    distance_matrix, enumerate_points, qi_report,
                    skeleton_check)
from .groups import (FiniteGroup, GroupError, Subgroup, all_normal_subgroups,
                     alternating, cyclic, dihedral, direct_product,
                     from_generators, from_table, group_from_name,
                     load_group_file, maximal_containment_check,
                     maximal_normal_subgroups, maximum_normal_subgroup,
                     normal_closure, q_in_group, quotient_group,
                     relative_simplicity_report, subgroup_closure, symmetric)

__all__ = [
    "__version__",
    # permutations
    "CycleType", "Permutation", "canonical_gamma", "canonical_iota",
    "canonical_rep", "compose_all", "conjugate", "format_cycles",
    "parse_cycles",
    # witnesses
    "FactorizationWitness", "compose_witnesses", "verify_witness_json",
    # characters
    "CharacterTable", "character_table", "chartable_rows", "class_size",
    "enumerate_partitions", "product_classes", "verify_hook_dimensions",
    "verify_orthogonality",
    # norms and distances
    "AsymmetricDistance", "Budget", "BudgetExceeded", "DEFAULT_BUDGET",
    "INFINITE", "NormResult", "TsuboiDistance", "block_iota_witness",
    "d_as", "iota_upper_witness", "q", "q_bruteforce", "q_classgraph",
    "q_infty", "support_parity_lower_bound", "tsuboi_d",
    # constructive lemmas
    "ConstructionError", "LEMMA_NAMES", "LemmaWitness", "ParityObstruction",
    "cycle_as_two_involutions", "even_case_display", "gamma_from_iota",
    "iota_from_gamma_pair", "iota_from_gamma_triple", "iota_from_sigma",
    "n4_identity", "pair_involution_product", "sigma_from_iota",
    "three_conjugates_iota",
    # the metric space
    "DensityCertificate", "DistanceMatrix", "MatrixEntry", "SpacePoint",
    "density_certificate", "density_sweep", "distance_matrix",
    "enumerate_points", "qi_report", "skeleton_check",
    # finite groups
    "FiniteGroup", "GroupError", "Subgroup", "all_normal_subgroups",
    "alternating", "cyclic", "dihedral", "direct_product", "from_generators",
    "from_table", "group_from_name", "load_group_file",
    "maximal_containment_check", "maximal_normal_subgroups",
    "maximum_normal_subgroup", "normal_closure", "q_in_group",
    "quotient_group", "relative_simplicity_report", "subgroup_closure",
    "symmetric",
]
