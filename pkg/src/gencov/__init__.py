"""Generalized covering designs: construction, bounds, verification,
products, exact search, and graph-based cross-checks."""

from ._kernels import active_backend
from .bounds import (
    BoundReport,
    bound_report,
    lower_best,
    lower_edges_clique,
    lower_edges_multipartite,
    lower_nested_ceiling,
    lower_restriction_single,
    lower_t1,
    schonheim,
    upper_minimax,
)
from .construct import (
    STAR,
    PlaceholderBlock,
    PlaceholderDesign,
    add_full_parts,
    amalgamate,
    construct_minimax,
    cover_t1,
    delete_points,
    drop_full_parts,
    expand_blocks,
    expand_equivalent,
    greedy_classical_cover,
    prune_redundant,
    reduce_equivalence,
    restrict,
)
from .core import (
    Block,
    Design,
    PartStructure,
    admissible_patterns,
    admissible_tuples,
    from_covering_array,
    make_block,
    make_structure,
    pattern_tuple_count,
    to_covering_array,
    tuple_in_block,
)
from .errors import (
    BasePartTooSmall,
    BudgetExhausted,
    CandidateSpaceTooLarge,
    DegenerateRestriction,
    DesignSemanticError,
    DesignSyntaxError,
    EmptyIndexSet,
    EntryOutOfAlphabet,
    GencovError,
    InvalidInput,
    LabelOutOfRange,
    LengthMismatch,
    NonPositiveEntry,
    NotUnitProfile,
    ParameterOrderViolated,
    PartCountMismatch,
    PlaceholdersPresent,
    ProfileBelowTwo,
    ProfileExceedsPart,
    SinglePart,
    StrengthExceedsParts,
    StrengthMismatch,
    StrengthNotTwo,
    StrengthTooLarge,
    StructureMismatch,
    TargetBelowProfile,
    TargetExceedsPart,
    UnitProfilePart,
)
from .graphview import Graph, check_clique_cover, check_multipartite_cover, join_graph, to_dot
from .io import DesignDocument, emit_design, parse_design
from .product import (
    mod1,
    product_concat,
    product_concat_improved,
    product_hadamard,
    set_lift,
)
from .search import SearchResult, certify_classical, exact_min, greedy_cover
from .verify import VerificationReport, coverage_deficit, verify

__version__ = "0.1.0"

__all__ = [
    "BasePartTooSmall", "Block", "BoundReport", "BudgetExhausted",
    "CandidateSpaceTooLarge", "DegenerateRestriction", "Design",
    "DesignDocument", "DesignSemanticError", "DesignSyntaxError",
    "EmptyIndexSet", "EntryOutOfAlphabet", "GencovError", "Graph",
    "InvalidInput", "LabelOutOfRange", "LengthMismatch", "NonPositiveEntry",
    "NotUnitProfile", "ParameterOrderViolated", "PartCountMismatch",
    "PartStructure", "PlaceholderBlock", "PlaceholderDesign",
    "PlaceholdersPresent", "ProfileBelowTwo", "ProfileExceedsPart",
    "STAR", "SinglePart", "StrengthExceedsParts", "StrengthMismatch",
    "StrengthNotTwo", "StrengthTooLarge", "StructureMismatch",
    "TargetBelowProfile", "TargetExceedsPart", "UnitProfilePart",
    "SearchResult", "VerificationReport", "active_backend", "add_full_parts",
    "admissible_patterns", "admissible_tuples", "amalgamate", "bound_report",
    "certify_classical", "check_clique_cover", "check_multipartite_cover",
    "construct_minimax", "cover_t1", "coverage_deficit", "delete_points",
    "drop_full_parts", "emit_design", "exact_min", "expand_blocks",
    "expand_equivalent", "from_covering_array", "greedy_classical_cover",
    "greedy_cover", "join_graph", "lower_best", "lower_edges_clique",
    "lower_edges_multipartite", "lower_nested_ceiling",
    "lower_restriction_single", "lower_t1", "make_block", "make_structure",
    "mod1", "parse_design", "pattern_tuple_count", "product_concat",
    "product_concat_improved", "product_hadamard", "prune_redundant",
    "reduce_equivalence", "restrict", "schonheim", "set_lift", "to_covering_array",
    "to_dot", "tuple_in_block", "upper_minimax", "verify",
]
