"""Bipartite incidence graph of a partial matrix.

Row i is vertex ``i`` and column j is vertex ``m + j``, so every row vertex
precedes every column vertex in the vertex order.  Each specified cell (i, j)
is an edge between them.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field

from .groups import Group
from .matrix import PartialMatrix


def vertex_label(vertex: int, m: int) -> str:
    """1-based display label, ``x3`` for row 3 or ``y2`` for column 2."""
    return f"x{vertex + 1}" if vertex < m else f"y{vertex - m + 1}"


@dataclass(frozen=True)
class Cycle:
    """A closed walk ``x_{rows[0]}, y_{cols[0]}, x_{rows[1]}, ..., y_{cols[-1]}, x_{rows[0]}``.

    Indices are 0-based.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols) or len(self.rows) < 2:
            raise ValueError("a cycle alternates at least two rows and two columns")

    def __len__(self) -> int:
        return 2 * len(self.rows)

    def alternating_sum(self, a: PartialMatrix) -> int:
        """``sum_r a[rows[r], cols[r]] - a[rows[r+1], cols[r]]`` with rows wrapping."""
        g = a.group
        k = len(self.rows)
        total = g.zero
        for r in range(k):
            i, j, nxt = self.rows[r], self.cols[r], self.rows[(r + 1) % k]
            total = g.add(total, g.sub(a[i, j], a[nxt, j]))
        return total

    def labels(self) -> list[str]:
        out = []
        for i, j in zip(self.rows, self.cols):
            out += [f"x{i + 1}", f"y{j + 1}"]
        out.append(f"x{self.rows[0] + 1}")
        return out

    def __str__(self) -> str:
        return " ".join(self.labels())


@dataclass(frozen=True)
class IncidenceGraph:
    m: int
    n: int
    edges: tuple[tuple[int, int], ...]
    component_of: tuple[int, ...]
    component_count: int
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def vertex_count(self) -> int:
        return self.m + self.n

    @property
    def connected(self) -> bool:
        return self.component_count == 1

    def components(self) -> list[list[int]]:
        """Vertex lists per component, in component-id order, vertices ascending."""
        out: list[list[int]] = [[] for _ in range(self.component_count)]
        for v, c in enumerate(self.component_of):
            out[c].append(v)
        return out

    def label(self, vertex: int) -> str:
        return vertex_label(vertex, self.m)


def build_graph(a: PartialMatrix) -> IncidenceGraph:
    """Incidence graph of ``a`` with components numbered by their smallest vertex."""
    m, n = a.shape
    edges = tuple((i, j) for i, j, _ in a.specified())
    adj: list[list[int]] = [[] for _ in range(m + n)]
    for i, j in edges:
        adj[i].append(m + j)
        adj[m + j].append(i)

    component_of = [-1] * (m + n)
    count = 0
    for start in range(m + n):
        if component_of[start] != -1:
            continue
        component_of[start] = count
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if component_of[w] == -1:
                    component_of[w] = count
                    queue.append(w)
        count += 1

    return IncidenceGraph(m, n, edges, tuple(component_of), count, tuple(tuple(x) for x in adj))


@dataclass
class SpanningForest:
    """BFS forest of an incidence graph with vertex potentials.

    Potentials satisfy ``p[x_i] + p[y_j] == a[i, j]`` along every tree edge,
    and every root has potential zero.  ``violation`` holds the first non-tree
    edge (in row-major order) that breaks the relation, if any.
    """

    graph: IncidenceGraph
    parent: list[int]
    depth: list[int]
    potential: list[int]
    violation: tuple[int, int] | None

    def tree_path(self, u: int, w: int) -> list[int]:
        """Vertex sequence from ``u`` to ``w`` along the forest (same tree)."""
        left, right = [u], [w]
        while self.depth[left[-1]] > self.depth[right[-1]]:
            left.append(self.parent[left[-1]])
        while self.depth[right[-1]] > self.depth[left[-1]]:
            right.append(self.parent[right[-1]])
        while left[-1] != right[-1]:
            left.append(self.parent[left[-1]])
            right.append(self.parent[right[-1]])
        right.pop()
        return left + right[::-1]

    def fundamental_cycle(self, i: int, j: int) -> Cycle:
        """Cycle closed by the non-tree edge (x_i, y_j)."""
        m = self.graph.m
        path = self.tree_path(m + j, i)  # y_j ... x_i
        walk = [i] + path[:-1]  # x_i, y_j, ..., last vertex before returning to x_i
        return Cycle(tuple(walk[0::2]), tuple(v - m for v in walk[1::2]))


def spanning_forest(
    a: PartialMatrix,
    graph: IncidenceGraph | None = None,
    extra_edges: Iterable[tuple[int, int]] = (),
) -> SpanningForest:
    """Grow a BFS forest from each component's smallest vertex and assign potentials.

    ``extra_edges`` are treated as additional specified cells with value zero.
    """
    g: Group = a.group
    if graph is None:
        graph = build_graph(a)
    m, n = graph.m, graph.n
    weight: dict[tuple[int, int], int] = {(i, j): v for i, j, v in a.specified()}
    adj = [list(x) for x in graph.adjacency]
    for i, j in extra_edges:
        weight[i, j] = g.zero
        adj[i].append(m + j)
        adj[m + j].append(i)

    parent = [-1] * (m + n)
    depth = [0] * (m + n)
    potential = [g.zero] * (m + n)
    seen = [False] * (m + n)
    for root in range(m + n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if seen[w]:
                    continue
                seen[w] = True
                parent[w] = v
                depth[w] = depth[v] + 1
                cell = (v, w - m) if v < m else (w, v - m)
                potential[w] = g.sub(weight[cell], potential[v])
                queue.append(w)

    violation = None
    for (i, j), value in weight.items():
        if g.add(potential[i], potential[m + j]) != value:
            violation = (i, j)
            break
    return SpanningForest(graph, parent, depth, potential, violation)
