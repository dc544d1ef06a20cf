"""Naive reference implementations for cross-checking on small finite groups.

Nothing here uses the graph, potential or prefix-sum machinery; only the
group arithmetic and the matrix containers are shared.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from typing import NamedTuple

from .errors import BudgetExceededError, UnsupportedError
from .groups import Group
from .matrix import Matrix, PartialMatrix

DEFAULT_BUDGET = 10**7
DEFAULT_MAX_VERTICES = 14


def _elements(g: Group) -> tuple[int, ...]:
    if not g.is_finite:
        raise UnsupportedError(f"brute force needs a finite group, got {g.spec()}")
    return tuple(g.elements())


def _check_budget(count: int, budget: int) -> None:
    if count > budget:
        raise BudgetExceededError(f"{count} candidates exceed the budget of {budget}")


def _window(g: Group, rows, i: int, j: int, balanced: bool) -> int:
    a, b, c, d = rows[i][j], rows[i + 1][j], rows[i][j + 1], rows[i + 1][j + 1]
    if balanced:
        return g.add(g.sub(a, b), g.sub(d, c))
    return g.add(g.add(a, b), g.add(c, d))


def _collapses_to(g: Group, rows, target, balanced: bool) -> bool:
    for i, trow in enumerate(target):
        for j, t in enumerate(trow):
            if _window(g, rows, i, j, balanced) != t:
                return False
    return True


def _is_balanced(flavor) -> bool:
    return str(getattr(flavor, "value", flavor)) == "balanced"


def all_matrices(m: int, n: int, g: Group, budget: int = DEFAULT_BUDGET) -> Iterator[Matrix]:
    """Every m x n matrix over ``g``, lexicographic in row-major cell order."""
    elements = _elements(g)
    _check_budget(len(elements) ** (m * n), budget)
    for cells in itertools.product(elements, repeat=m * n):
        yield Matrix(g, [cells[i * n : (i + 1) * n] for i in range(m)])


def brute_preimages(b: Matrix, flavor="balanced", budget: int = DEFAULT_BUDGET) -> list[Matrix]:
    """All matrices whose collapsing sum of the given flavor is ``b``."""
    g = b.group
    balanced = _is_balanced(flavor)
    return [
        x
        for x in all_matrices(b.m + 1, b.n + 1, g, budget)
        if _collapses_to(g, x.rows, b.rows, balanced)
    ]


def brute_completions(
    a: PartialMatrix, b: Matrix, flavor="balanced", budget: int = DEFAULT_BUDGET
) -> list[Matrix]:
    """All completions of ``a`` whose collapsing sum is ``b``, by exhaustive filling."""
    g = a.group
    elements = _elements(g)
    balanced = _is_balanced(flavor)
    holes = a.blanks()
    _check_budget(len(elements) ** len(holes), budget)
    grid = [list(row) for row in a.rows]
    found = []
    for fill in itertools.product(elements, repeat=len(holes)):
        for (i, j), value in zip(holes, fill):
            grid[i][j] = value
        if _collapses_to(g, grid, b.rows, balanced):
            found.append(Matrix(g, grid))
    return found


class BruteCycle(NamedTuple):
    """Cycle ``x_{rows[0]}, y_{cols[0]}, x_{rows[1]}, ...`` (0-based) with its alternating sum."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    total: int


def _vertices(a: PartialMatrix):
    m, n = a.shape
    nbrs = {v: [] for v in range(m + n)}
    for i in range(m):
        for j in range(n):
            if a.rows[i][j] is not None:
                nbrs[i].append(m + j)
                nbrs[m + j].append(i)
    return nbrs


def _walk_sum(a: PartialMatrix, rows, cols) -> int:
    g = a.group
    k = len(rows)
    total = g.zero
    for r in range(k):
        total = g.add(total, a.rows[rows[r]][cols[r]])
        total = g.sub(total, a.rows[rows[(r + 1) % k]][cols[r]])
    return total


def brute_cycles(a: PartialMatrix, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[BruteCycle]:
    """Every simple cycle of the incidence graph once, up to rotation and reflection.

    Each cycle starts at its smallest vertex (always a row vertex) and is
    oriented so that its second vertex is smaller than its last.
    """
    m, n = a.shape
    if m + n > max_vertices:
        raise BudgetExceededError(f"{m + n} vertices exceed the cycle enumeration limit {max_vertices}")
    nbrs = _vertices(a)
    found: list[BruteCycle] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        start, last = path[0], path[-1]
        for w in nbrs[last]:
            if w == start and len(path) >= 4 and path[1] < path[-1]:
                rows = tuple(path[0::2])
                cols = tuple(v - m for v in path[1::2])
                found.append(BruteCycle(rows, cols, _walk_sum(a, rows, cols)))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.remove(w)
                path.pop()

    for start in range(m):
        extend([start], {start})
    return found


def brute_paths(a: PartialMatrix, row: int, col: int, max_vertices: int = DEFAULT_MAX_VERTICES):
    """Every simple path from ``x_row`` to ``y_col`` as a list of vertex ids."""
    m, n = a.shape
    if m + n > max_vertices:
        raise BudgetExceededError(f"{m + n} vertices exceed the path enumeration limit {max_vertices}")
    nbrs = _vertices(a)
    goal = m + col
    paths = []

    def extend(path: list[int], on_path: set[int]) -> None:
        last = path[-1]
        if last == goal:
            paths.append(list(path))
            return
        for w in nbrs[last]:
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.remove(w)
                path.pop()

    extend([row], {row})
    return paths
