"""Finite multi-ring spaces, analyzed by exhaustion.

A multi-ring space is a union of finite rings over one shared universe of
elements, each ring bringing its own addition/multiplication pair; operations
are partial on the union.  This package builds such spaces from explicit
operation tables, decides the subspace and ideal-subspace criteria (with
independent definition-replay oracles), constructs maximal ideal subspace
chains under any operation order, and produces directed-sum decompositions
via primitive orthogonal idempotents — verifying every certificate it emits.
"""

from .chains import (
    ArtinReport,
    IdealChain,
    OperationOrder,
    chain_is_valid,
    ideal_subspace_chain,
    is_artin,
    max_ideal_chain,
)
from .decomposition import (
    DirectedSumDecomposition,
    SumMode,
    decompose_artin,
    directed_sum_check,
    enumerate_ideal_subspaces,
    is_non_reducible,
)
from .errors import (
    AxiomViolation,
    CapExceeded,
    DuplicateLabel,
    EmptyFamily,
    EmptyOps,
    ForeignElement,
    MalformedTable,
    MixedLawViolationError,
    MixedModeMismatch,
    MultiRingError,
    NoDecomposition,
    NoUnit,
    NotIdealSubspace,
    RingInvalid,
    SpecError,
    SpecSyntaxError,
    StepInvalid,
    TableShape,
    UnknownKey,
)
from .rings import (
    DEFAULT_RING_CAP,
    DEFAULT_SUBSET_BUDGET,
    FiniteRing,
    Universe,
    ValidationReport,
    cyclic_ring_on,
    decompose_unit,
    enumerate_ideals,
    idempotents,
    is_add_subgroup,
    is_ideal,
    is_subring,
    make_cyclic_ring,
    make_product_ring,
    make_ring_from_tables,
    maximal_ideals,
    restrict_ring,
    ring_on_universe,
    validate_ring,
)
from .spaces import (
    MixedLawViolation,
    MultiRingSpace,
    SubsetSelection,
    build_multispace,
    ideal_subspace_report,
    ideal_subspace_within,
    is_ideal_subspace_direct,
    is_ideal_subspace_t23,
    is_multi_field,
    is_subspace_direct,
    is_subspace_t21,
    is_subspace_t22,
    multi_field_report,
    subspace_report,
)
from .specfile import (
    RingDescription,
    SpecDocument,
    build_space,
    document_for_space,
    load_space,
    parse_spec,
    serialize_spec,
)

__all__ = [
    "ArtinReport", "AxiomViolation", "CapExceeded", "DEFAULT_RING_CAP",
    "DEFAULT_SUBSET_BUDGET", "DirectedSumDecomposition", "DuplicateLabel",
    "EmptyFamily", "EmptyOps", "FiniteRing", "ForeignElement", "IdealChain",
    "MalformedTable", "MixedLawViolation", "MixedLawViolationError",
    "MixedModeMismatch", "MultiRingError", "MultiRingSpace", "NoDecomposition", "NoUnit",
    "NotIdealSubspace", "OperationOrder", "RingDescription", "RingInvalid",
    "SpecDocument", "SpecError", "SpecSyntaxError", "StepInvalid",
    "SubsetSelection", "SumMode", "TableShape", "UnknownKey", "Universe",
    "ValidationReport", "build_multispace", "build_space", "chain_is_valid",
    "cyclic_ring_on", "decompose_artin", "decompose_unit",
    "directed_sum_check", "document_for_space", "enumerate_ideal_subspaces",
    "enumerate_ideals", "ideal_subspace_chain", "ideal_subspace_report",
    "ideal_subspace_within", "idempotents", "is_add_subgroup", "is_artin",
    "is_ideal", "is_ideal_subspace_direct", "is_ideal_subspace_t23",
    "is_multi_field", "is_non_reducible", "is_subring", "is_subspace_direct",
    "is_subspace_t21", "is_subspace_t22", "load_space", "make_cyclic_ring",
    "make_product_ring", "make_ring_from_tables", "max_ideal_chain",
    "maximal_ideals", "multi_field_report", "parse_spec", "restrict_ring",
    "ring_on_universe", "serialize_spec", "subspace_report", "validate_ring",
]
