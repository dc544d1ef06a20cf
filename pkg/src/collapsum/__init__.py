"""Discrete tomography with the collapsing sum.

Compute collapsing sums, build preimages, and complete partial matrices so
that their collapsing sum matches a target.
"""

from .completion import (
    INFINITE,
    CompletionOutcome,
    check_consistency,
    complete,
    enumerate_completions,
    find_inconsistency,
    is_cycle_balanced,
    uniqueness,
)
from .errors import (
    BudgetExceededError,
    CollapsumError,
    DimensionError,
    GroupMismatchError,
    GroupOverflowError,
    ParseError,
    UnsupportedError,
)
from .graph import Cycle, IncidenceGraph, build_graph
from .groups import Group, Integers, IntegersMod, Scalar, parse_group
from .matrix import BLANK, Matrix, PartialMatrix
from .operators import (
    Flavor,
    KernelElement,
    MongeClass,
    canonicalize,
    checkerboard,
    collapse,
    collapse_balanced,
    count_classes,
    count_preimages,
    equivalent,
    in_kernel,
    make_kernel_element,
    monge_class,
    plus_construction,
    preimage_of,
)

__all__ = [
    "INFINITE",
    "CompletionOutcome",
    "check_consistency",
    "complete",
    "enumerate_completions",
    "find_inconsistency",
    "is_cycle_balanced",
    "uniqueness",
    "BudgetExceededError",
    "CollapsumError",
    "DimensionError",
    "GroupMismatchError",
    "GroupOverflowError",
    "ParseError",
    "UnsupportedError",
    "Flavor",
    "KernelElement",
    "MongeClass",
    "canonicalize",
    "checkerboard",
    "collapse",
    "collapse_balanced",
    "count_classes",
    "count_preimages",
    "equivalent",
    "in_kernel",
    "make_kernel_element",
    "monge_class",
    "plus_construction",
    "preimage_of",
    "Cycle",
    "IncidenceGraph",
    "build_graph",
    "Group",
    "Integers",
    "IntegersMod",
    "Scalar",
    "parse_group",
    "BLANK",
    "Matrix",
    "PartialMatrix",
]
