"""Exact symmetric signatures of Kleinian surface singularities.

The package computes, in exact cyclotomic arithmetic, the decomposition of
symmetric powers of the fundamental representation of the finite subgroups
of SL(2, C) (and their diagonal GL(2) cousins), assembles the symmetric and
differential symmetric signature partial sums with certified error bounds,
and carries a formal vector-bundle calculus reproducing the elliptic-cone
results (differential signature 0, syzygy signature bounded by 1/2).
"""

from .cyclotomic import (
    ConsistencyError,
    CycloContext,
    CycloElement,
    cyclotomic_polynomial,
    embed_complex,
    euler_phi,
    get_context,
    root_of_unity,
)
from .klein import (
    BinaryDihedral,
    BinaryIcosahedral,
    BinaryOctahedral,
    BinaryTetrahedral,
    Character,
    CharacterTable,
    Cyclic,
    GroupKind,
    KleinGroup,
    build_group,
    character_table,
    cyclic_weight_indices,
    fundamental_character,
    inner_product,
)
from .sympow import (
    Decomposition,
    decompose,
    decompose_inner,
    molien_coefficients,
    multiplicity_series,
    springer_series,
    sym_character,
    sym_character_eigen,
    sym_character_series,
)
from .signature import (
    SignatureSeries,
    error_bound,
    naive_ratio_series,
    oscillation_gap,
    signature_partial,
)
from .cyclic import (
    MonomialVector,
    SyzygyReport,
    WeightMultiset,
    action_scales_by,
    an_decomposition,
    format_monomial,
    module_generators,
    monomial_weights,
    relation_holds,
    syzygy_action_check,
    syzygy_vectors,
)
from .elliptic import (
    SYZYGY_BUNDLE,
    AtiyahTwist,
    BundleAtom,
    BundleExpr,
    FormalStable,
    FreeRank,
    LineTwist,
    bundle,
    degree,
    dsigma_partial,
    free_rank,
    rank,
    sigma_upper_bound,
    slope,
    sym_cotangent,
    sym_syzygy_free_rank_bound,
)

__version__ = "0.1.0"

__all__ = [
    "AtiyahTwist",
    "BinaryDihedral",
    "BinaryIcosahedral",
    "BinaryOctahedral",
    "BinaryTetrahedral",
    "BundleAtom",
    "BundleExpr",
    "Character",
    "CharacterTable",
    "ConsistencyError",
    "Cyclic",
    "CycloContext",
    "CycloElement",
    "Decomposition",
    "FormalStable",
    "FreeRank",
    "GroupKind",
    "KleinGroup",
    "LineTwist",
    "MonomialVector",
    "SYZYGY_BUNDLE",
    "SignatureSeries",
    "SyzygyReport",
    "WeightMultiset",
    "action_scales_by",
    "an_decomposition",
    "build_group",
    "bundle",
    "character_table",
    "cyclic_weight_indices",
    "cyclotomic_polynomial",
    "decompose",
    "decompose_inner",
    "degree",
    "dsigma_partial",
    "embed_complex",
    "error_bound",
    "euler_phi",
    "format_monomial",
    "free_rank",
    "fundamental_character",
    "get_context",
    "inner_product",
    "module_generators",
    "molien_coefficients",
    "monomial_weights",
    "multiplicity_series",
    "naive_ratio_series",
    "oscillation_gap",
    "rank",
    "relation_holds",
    "root_of_unity",
    "sigma_upper_bound",
    "signature_partial",
    "slope",
    "springer_series",
    "sym_character",
    "sym_character_eigen",
    "sym_character_series",
    "sym_cotangent",
    "sym_syzygy_free_rank_bound",
    "syzygy_action_check",
    "syzygy_vectors",
]
