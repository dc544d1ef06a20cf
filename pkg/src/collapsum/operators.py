"""Collapsing-sum operators and the algebra around their kernels.

The balanced collapsing sum is the core; everything about the plain collapsing
sum is obtained by conjugating with :func:`checkerboard`, using

    collapse(A) == checkerboard(collapse_balanced(checkerboard(A)))
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TypeVar

from .errors import DimensionError, GroupMismatchError, UnsupportedError
from .groups import Group, Integers
from .matrix import BLANK, Matrix, PartialMatrix, _trusted, sign_parity


class Flavor(str, enum.Enum):
    BALANCED = "balanced"
    UNBALANCED = "unbalanced"


class MongeClass(str, enum.Enum):
    MONGE = "monge"
    ANTI_MONGE = "anti-monge"
    BOTH = "both"
    NEITHER = "neither"


def _require_collapsible(a: Matrix | PartialMatrix) -> None:
    if a.m < 2 or a.n < 2:
        raise DimensionError(f"collapsing needs at least 2 rows and 2 columns, got {a.m}x{a.n}")


def collapse_balanced(a: Matrix) -> Matrix:
    """Entry (i, j) is ``a[i,j] - a[i+1,j] - a[i,j+1] + a[i+1,j+1]``."""
    _require_collapsible(a)
    g, r = a.group, a.rows
    return Matrix.build(
        g,
        a.m - 1,
        a.n - 1,
        lambda i, j: g.add(
            g.sub(g.sub(r[i][j], r[i + 1][j]), r[i][j + 1]),
            r[i + 1][j + 1],
        ),
    )


def collapse(a: Matrix) -> Matrix:
    """Entry (i, j) is the sum of the 2x2 window with top-left corner (i, j)."""
    _require_collapsible(a)
    return checkerboard(collapse_balanced(checkerboard(a)))


def collapse_with(a: Matrix, flavor: Flavor | str) -> Matrix:
    return collapse_balanced(a) if Flavor(flavor) is Flavor.BALANCED else collapse(a)


M = TypeVar("M", Matrix, PartialMatrix)


def checkerboard(a: M) -> M:
    """Multiply entry (i, j) by ``(-1)**(i+j)``; blanks stay blank.  Involution."""
    g = a.group
    rows = tuple(
        tuple(v if v is BLANK else g.signed(v, sign_parity(i, j)) for j, v in enumerate(row))
        for i, row in enumerate(a.rows)
    )
    return _trusted(type(a), g, rows)


def plus_construction(a: Matrix) -> Matrix:
    """The (m+1) x (n+1) summed-area table of ``a`` with a leading zero row and column.

    Entry (p, q) is the sum of ``a[i, j]`` over ``i < p`` and ``j < q``, so
    ``collapse_balanced(plus_construction(a)) == a``.
    """
    g = a.group
    out = [[g.zero] * (a.n + 1)]
    for i, row in enumerate(a.rows):
        above = out[i]
        running = g.zero
        new = [g.zero]
        for j, v in enumerate(row):
            running = g.add(running, v)
            new.append(g.add(above[j + 1], running))
        out.append(new)
    return _trusted(Matrix, g, tuple(map(tuple, out)))


def canonicalize(a: Matrix) -> Matrix:
    """The representative of ``a``'s class with zero first row and column.

    Entry (i, j) is ``a[i,j] - a[i,1] - a[1,j] + a[1,1]`` (1-based).
    """
    g, r = a.group, a.rows
    corner = r[0][0]
    return Matrix.build(
        g, a.m, a.n, lambda i, j: g.add(g.sub(g.sub(r[i][j], r[i][0]), r[0][j]), corner)
    )


@dataclass(frozen=True)
class KernelElement:
    """A pair of vectors ``(u, v)`` standing for a kernel matrix.

    Balanced: entry (i, j) is ``u_i + v_j``.  Unbalanced: entry (i, j) is
    ``(-1)**j * u_i + (-1)**i * v_j`` with 1-based i, j.
    """

    group: Group
    u: tuple[int, ...]
    v: tuple[int, ...]
    flavor: Flavor = Flavor.BALANCED

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.group.coerce(x) for x in self.u))
        object.__setattr__(self, "v", tuple(self.group.coerce(x) for x in self.v))
        object.__setattr__(self, "flavor", Flavor(self.flavor))
        if not self.u or not self.v:
            raise DimensionError("kernel element vectors must be non-empty")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.u), len(self.v)

    def materialize(self) -> Matrix:
        g, u, v = self.group, self.u, self.v
        if self.flavor is Flavor.BALANCED:
            return Matrix.build(g, len(u), len(v), lambda i, j: g.add(u[i], v[j]))
        # 0-based i, j: (-1)**(j+1) flips sign when j is even
        return Matrix.build(
            g,
            len(u),
            len(v),
            lambda i, j: g.add(g.signed(u[i], j + 1), g.signed(v[j], i + 1)),
        )


def make_kernel_element(
    group: Group,
    u: Sequence[int],
    v: Sequence[int],
    flavor: Flavor | str = Flavor.BALANCED,
) -> KernelElement:
    return KernelElement(group, tuple(u), tuple(v), Flavor(flavor))


def materialize(k: KernelElement) -> Matrix:
    return k.materialize()


def in_kernel(a: Matrix, flavor: Flavor | str = Flavor.BALANCED) -> bool:
    """Whether ``a`` is annihilated by the collapsing sum of the given flavor."""
    _require_collapsible(a)
    if Flavor(flavor) is Flavor.UNBALANCED:
        a = checkerboard(a)
    return canonicalize(a).is_zero()


def equivalent(a: Matrix, b: Matrix) -> bool:
    """True iff ``a - b`` is a balanced kernel matrix ``u e^T + e v^T``."""
    if a.group != b.group:
        raise GroupMismatchError(f"{a.group.spec()} vs {b.group.spec()}")
    if a.shape != b.shape:
        raise DimensionError(f"shape {a.shape} vs {b.shape}")
    return canonicalize(a) == canonicalize(b)


def monge_class(a: Matrix) -> MongeClass:
    """Classify an integer matrix by the signs of its balanced collapsing sum.

    Monge matrices have every entry of ``collapse_balanced(a)`` at most zero,
    anti-Monge at least zero; sum matrices are both.
    """
    if not isinstance(a.group, Integers):
        raise UnsupportedError(f"Monge classification needs an ordered group, got {a.group.spec()}")
    values = [x for row in collapse_balanced(a).rows for x in row]
    nonpos = all(x <= 0 for x in values)
    nonneg = all(x >= 0 for x in values)
    if nonpos and nonneg:
        return MongeClass.BOTH
    if nonpos:
        return MongeClass.MONGE
    if nonneg:
        return MongeClass.ANTI_MONGE
    return MongeClass.NEITHER


def preimage_of(b: Matrix, flavor: Flavor | str = Flavor.BALANCED) -> Matrix:
    """A matrix one row and column larger whose collapsing sum is ``b``."""
    if Flavor(flavor) is Flavor.BALANCED:
        return plus_construction(b)
    return checkerboard(plus_construction(checkerboard(b)))


def _finite_order(g: Group) -> int:
    if not g.is_finite:
        raise UnsupportedError(f"counting needs a finite group, got {g.spec()}")
    return g.order


def count_preimages(m: int, n: int, g: Group) -> int:
    """Number of m x n matrices over ``g`` with a given (m-1) x (n-1) collapsing sum."""
    if m < 2 or n < 2:
        raise DimensionError("m and n must be at least 2")
    return _finite_order(g) ** (m + n - 1)


def count_classes(m: int, n: int, g: Group) -> int:
    """Number of equivalence classes of m x n matrices over ``g``."""
    if m < 2 or n < 2:
        raise DimensionError("m and n must be at least 2")
    return _finite_order(g) ** ((m - 1) * (n - 1))
