"""Completing partial matrices to preimages of a collapsing sum.

All work happens on the balanced collapsing sum with the target reduced to
zero: for a fixed preimage ``T`` of the target, the completions ``C`` of ``a``
with ``collapse_balanced(C) == b`` are exactly ``T + D`` where ``D`` completes
``a - T`` and lies in the kernel, i.e. ``D[i, j] = p(x_i) + p(y_j)``.  Such a
``D`` exists iff the reduced partial matrix is cycle-balanced, and it is
unique up to one additive constant per connected component of the incidence
graph (with one global constant absorbed).

The unbalanced collapsing sum is handled by checkerboard conjugation of the
inputs and outputs.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .errors import DimensionError, GroupMismatchError, UnsupportedError
from .graph import Cycle, IncidenceGraph, build_graph, spanning_forest
from .matrix import Matrix, PartialMatrix
from .operators import (
    Flavor,
    checkerboard,
    collapse_with,
    make_kernel_element,
    preimage_of,
)

INFINITE = math.inf


@dataclass(frozen=True)
class CompletionOutcome:
    consistent: bool
    witness: Matrix | None
    component_count: int
    completion_count: int | float
    """Exact count for finite groups.  For infinite groups 1 when the graph is
    connected and :data:`INFINITE` otherwise.  Zero when inconsistent."""
    unique: bool
    cycle: Cycle | None = None
    """A violating cycle of the reduced partial matrix when inconsistent."""
    imbalance: int | None = None


def _validate(a: PartialMatrix, b: Matrix) -> None:
    if a.group != b.group:
        raise GroupMismatchError(f"{a.group.spec()} vs {b.group.spec()}")
    if a.m < 2 or a.n < 2:
        raise DimensionError(f"partial matrix must be at least 2x2, got {a.m}x{a.n}")
    if b.shape != (a.m - 1, a.n - 1):
        raise DimensionError(f"target must be {a.m - 1}x{a.n - 1} for a {a.m}x{a.n} partial matrix, got {b.m}x{b.n}")


def _to_balanced(a: PartialMatrix, b: Matrix, flavor: Flavor | str):
    _validate(a, b)
    if Flavor(flavor) is Flavor.UNBALANCED:
        return checkerboard(a), checkerboard(b)
    return a, b


def find_unbalanced_cycle(a: PartialMatrix) -> Cycle | None:
    """A cycle of ``a`` with nonzero alternating sum, or ``None`` if none exists."""
    forest = spanning_forest(a)
    if forest.violation is None:
        return None
    return forest.fundamental_cycle(*forest.violation)


def is_cycle_balanced(a: PartialMatrix) -> bool:
    """Whether every cycle of ``a`` has zero alternating sum.

    Decided by potentials on a spanning forest: the relation
    ``p(x_i) + p(y_j) == a[i, j]`` holds on every specified cell iff all
    cycles balance.
    """
    return spanning_forest(a).violation is None


def reduce_target(a: PartialMatrix, b: Matrix) -> tuple[PartialMatrix, Matrix]:
    """Return ``(a - T, T)`` where ``T = plus_construction(b)``; blanks stay blank."""
    base = preimage_of(b, Flavor.BALANCED)
    return a.minus(base), base


def check_consistency(a: PartialMatrix, b: Matrix, flavor: Flavor | str = Flavor.BALANCED) -> bool:
    """Whether some completion of ``a`` has collapsing sum ``b``."""
    a, b = _to_balanced(a, b, flavor)
    reduced, _ = reduce_target(a, b)
    return is_cycle_balanced(reduced)


def find_inconsistency(a: PartialMatrix, b: Matrix, flavor: Flavor | str = Flavor.BALANCED):
    """``(cycle, imbalance)`` certifying inconsistency, or ``None``.

    The imbalance is measured on the reduced (and, for the unbalanced flavor,
    checkerboard-conjugated) partial matrix.
    """
    a, b = _to_balanced(a, b, flavor)
    reduced, _ = reduce_target(a, b)
    cycle = find_unbalanced_cycle(reduced)
    if cycle is None:
        return None
    return cycle, cycle.alternating_sum(reduced)


def connecting_cells(graph: IncidenceGraph) -> list[tuple[int, int]]:
    """Blank cells that join all components into one tree of components.

    The anchor is the component of ``x_1``.  Every other component, in order
    of smallest vertex, gets one cell: its smallest row joined to the anchor's
    smallest column when both exist, otherwise ``x_1`` joined to its smallest
    column.  Lone row vertices seen before any column is in the tree are
    joined once one is.
    """
    m = graph.m
    comps = graph.components()
    anchor = comps[0]
    hub_y = next((v - m for v in anchor if v >= m), None)
    cells: list[tuple[int, int]] = []
    deferred: list[int] = []
    for comp in comps[1:]:
        min_x = next((v for v in comp if v < m), None)
        min_y = next((v - m for v in comp if v >= m), None)
        if min_x is not None and hub_y is not None:
            cells.append((min_x, hub_y))
        elif min_y is not None:
            cells.append((0, min_y))
            if hub_y is None:
                hub_y = min_y
        else:
            deferred.append(min_x)
    for x in deferred:
        cells.append((x, hub_y))
    return cells


def alternating_path_sum(a: PartialMatrix, path: Sequence[int]) -> int:
    """Sum along a path ``x_s, y_., x_., ..., y_t`` of vertex ids.

    Edges entered from a row vertex count positively, edges entered from a
    column vertex count negatively.
    """
    g, m = a.group, a.m
    total = g.zero
    for r, (u, w) in enumerate(zip(path, path[1:])):
        cell = (u, w - m) if u < m else (w, u - m)
        value = a[cell]
        total = g.add(total, value) if r % 2 == 0 else g.sub(total, value)
    return total


def _kernel_completion(reduced: PartialMatrix, graph: IncidenceGraph) -> Matrix:
    """The completion ``p(x_i) + p(y_j)`` of a cycle-balanced reduced matrix.

    Potentials over the connecting cells equal the alternating path sums
    along the augmented spanning tree.
    """
    forest = spanning_forest(reduced, graph, connecting_cells(graph))
    assert forest.violation is None
    m = graph.m
    p = forest.potential
    return make_kernel_element(reduced.group, p[:m], p[m:]).materialize()


def _count(group, component_count: int) -> int | float:
    if group.is_finite:
        return group.order ** (component_count - 1)
    return 1 if component_count == 1 else INFINITE


def _complete_balanced(a: PartialMatrix, b: Matrix) -> CompletionOutcome:
    graph = build_graph(a)
    reduced, base = reduce_target(a, b)
    forest = spanning_forest(reduced, graph)
    if forest.violation is not None:
        cycle = forest.fundamental_cycle(*forest.violation)
        return CompletionOutcome(
            consistent=False,
            witness=None,
            component_count=graph.component_count,
            completion_count=0,
            unique=False,
            cycle=cycle,
            imbalance=cycle.alternating_sum(reduced),
        )
    witness = base + _kernel_completion(reduced, graph)
    if not a.is_completed_by(witness) or collapse_with(witness, Flavor.BALANCED) != b:
        raise RuntimeError("internal error: constructed witness fails verification")
    return CompletionOutcome(
        consistent=True,
        witness=witness,
        component_count=graph.component_count,
        completion_count=_count(a.group, graph.component_count),
        unique=graph.connected,
    )


def complete(a: PartialMatrix, b: Matrix, flavor: Flavor | str = Flavor.BALANCED) -> CompletionOutcome:
    """Decide consistency, build a witness completion and count completions."""
    flavor = Flavor(flavor)
    ab, bb = _to_balanced(a, b, flavor)
    outcome = _complete_balanced(ab, bb)
    if flavor is Flavor.BALANCED or outcome.witness is None:
        return outcome
    witness = checkerboard(outcome.witness)
    if not a.is_completed_by(witness) or collapse_with(witness, flavor) != b:
        raise RuntimeError("internal error: constructed witness fails verification")
    return CompletionOutcome(
        consistent=True,
        witness=witness,
        component_count=outcome.component_count,
        completion_count=outcome.completion_count,
        unique=outcome.unique,
    )


def enumerate_completions(
    a: PartialMatrix, b: Matrix, flavor: Flavor | str = Flavor.BALANCED
) -> Iterator[Matrix]:
    """Yield every completion of ``a`` whose collapsing sum is ``b``, once each.

    The component of ``x_1`` keeps offset zero; each other component takes
    every group element ``g`` in ascending order (row vertices ``+g``, column
    vertices ``-g``), with the last component varying fastest.
    """
    flavor = Flavor(flavor)
    if not a.group.is_finite:
        raise UnsupportedError(f"cannot enumerate completions over {a.group.spec()}")
    ab, bb = _to_balanced(a, b, flavor)
    outcome = _complete_balanced(ab, bb)
    if not outcome.consistent:
        return
    g = a.group
    graph = build_graph(ab)
    m = graph.m
    comp = graph.component_of
    base = outcome.witness.rows
    elements = tuple(g.elements())
    for offsets in itertools.product(elements, repeat=graph.component_count - 1):
        shift = (g.zero,) + offsets
        u = [shift[comp[i]] for i in range(m)]
        v = [g.neg(shift[comp[m + j]]) for j in range(graph.n)]
        found = Matrix.build(g, m, graph.n, lambda i, j: g.add(base[i][j], g.add(u[i], v[j])))
        yield checkerboard(found) if flavor is Flavor.UNBALANCED else found


def uniqueness(a: PartialMatrix) -> bool:
    """Whether a consistent instance has exactly one completion (target-independent)."""
    return build_graph(a).connected
