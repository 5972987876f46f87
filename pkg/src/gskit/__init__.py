"""Gallai-Schur partition toolkit.

Partitions of [1, n] into r color classes avoiding monochromatic sums
a + b = c (with a = b counted in the strong case only) and rainbow sums
(all three elements in pairwise different classes), with every class
non-empty.  The package verifies such partitions, constructs them from a
small catalogue of bases via order-doubling and order-quintupling
mappings, decomposes given partitions back into base and mapping chain,
searches orders exhaustively, and emits DIMACS CNF for external solvers.
"""

from .core import (
    Coloring,
    Kind,
    ParseError,
    Verdict,
    Violation,
    ViolationClass,
    canonicalize,
    check_partition,
    color_classes,
    is_canonical,
    parse_coloring,
    parse_coloring_with_kind,
    to_file_form,
)
from .construct import (
    BASE_CATALOGUE,
    GsFunctionValue,
    MappingTag,
    PatternError,
    apply_mappings,
    base_by_name,
    base_partitions,
    five_fold,
    gs_number,
    inverse_five_fold,
    inverse_two_fold,
    maximal_partition,
    two_fold,
)
from .structure import (
    Decomposition,
    StructureClass,
    classify,
    decompose_full,
    peel,
    verify_image_structure,
)
from .search import (
    PartialResultError,
    SearchConfig,
    SearchMode,
    SearchReport,
    SubtreeTask,
    enumerate_maximal,
    exists_partition,
    max_order,
    parallel_split,
    report_json,
    run_search,
    run_task,
)
from .satgen import (
    CnfDocument,
    clause_census,
    decode,
    encode,
    parse_model,
    satisfies,
    to_dimacs,
    var_index,
)

__all__ = [
    "BASE_CATALOGUE",
    "CnfDocument",
    "Coloring",
    "Decomposition",
    "GsFunctionValue",
    "Kind",
    "MappingTag",
    "ParseError",
    "PartialResultError",
    "PatternError",
    "SearchConfig",
    "SearchMode",
    "SearchReport",
    "StructureClass",
    "SubtreeTask",
    "Verdict",
    "Violation",
    "ViolationClass",
    "apply_mappings",
    "base_by_name",
    "base_partitions",
    "canonicalize",
    "check_partition",
    "classify",
    "clause_census",
    "color_classes",
    "decode",
    "decompose_full",
    "encode",
    "enumerate_maximal",
    "exists_partition",
    "five_fold",
    "gs_number",
    "inverse_five_fold",
    "inverse_two_fold",
    "is_canonical",
    "max_order",
    "maximal_partition",
    "parallel_split",
    "parse_coloring",
    "parse_coloring_with_kind",
    "parse_model",
    "peel",
    "report_json",
    "run_search",
    "run_task",
    "satisfies",
    "to_dimacs",
    "to_file_form",
    "two_fold",
    "var_index",
    "verify_image_structure",
]

__version__ = "0.1.0"
