"""Immutable dense and partial matrices over a :class:`~collapsum.groups.Group`.

Indexing is 0-based throughout the code.  Docstrings that quote formulas use
1-based ``a_{i,j}`` to match the usual mathematical convention; the shift is
confined to :func:`sign_parity`, where it does not change anything (the
parity of ``i + j`` is the same either way).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import DimensionError, GroupMismatchError
from .groups import Group

BLANK = None
"""Marker for an unspecified cell of a :class:`PartialMatrix`."""


def _freeze(group: Group, rows: Iterable[Iterable[int | None]], allow_blank: bool):
    frozen = []
    for row in rows:
        cells = []
        for value in row:
            if value is None:
                if not allow_blank:
                    raise ValueError("blank cell in a dense matrix")
                cells.append(None)
            else:
                cells.append(group.coerce(value))
        frozen.append(tuple(cells))
    if not frozen or not frozen[0]:
        raise DimensionError("matrices need at least one row and one column")
    width = len(frozen[0])
    for r, row in enumerate(frozen):
        if len(row) != width:
            raise DimensionError(f"row {r} has {len(row)} entries, expected {width}")
    return tuple(frozen)


def _trusted(cls, group: Group, rows):
    """Build without re-validating; ``rows`` must already be canonical tuples."""
    obj = object.__new__(cls)
    object.__setattr__(obj, "group", group)
    object.__setattr__(obj, "rows", rows)
    return obj


def sign_parity(i: int, j: int) -> int:
    """Parity of ``i + j`` for the checkerboard sign ``(-1)**(i+j)``."""
    return (i + j) & 1


class _Grid:
    group: Group
    rows: tuple[tuple, ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def __getitem__(self, index: tuple[int, int]):
        i, j = index
        return self.rows[i][j]

    def to_lists(self) -> list[list]:
        return [list(row) for row in self.rows]

    def _require_compatible(self, other: _Grid) -> None:
        if other.group != self.group:
            raise GroupMismatchError(f"{self.group.spec()} vs {other.group.spec()}")
        if other.shape != self.shape:
            raise DimensionError(f"shape {self.shape} vs {other.shape}")


@dataclass(frozen=True, eq=True)
class Matrix(_Grid):
    """A dense m x n matrix with entries in ``group``."""

    group: Group
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _freeze(self.group, self.rows, allow_blank=False))

    @classmethod
    def zeros(cls, group: Group, m: int, n: int) -> Matrix:
        return cls(group, [[group.zero] * n for _ in range(m)])

    @classmethod
    def build(cls, group: Group, m: int, n: int, entry) -> Matrix:
        """Matrix whose (i, j) entry is ``entry(i, j)`` (0-based).

        ``entry`` must return canonical elements (results of group operations).
        """
        return _trusted(cls, group, tuple(tuple(entry(i, j) for j in range(n)) for i in range(m)))

    def map2(self, other: Matrix, op) -> Matrix:
        self._require_compatible(other)
        return _trusted(
            Matrix,
            self.group,
            tuple(tuple(op(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.map2(other, self.group.add)

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.map2(other, self.group.sub)

    def __neg__(self) -> Matrix:
        neg = self.group.neg
        return _trusted(Matrix, self.group, tuple(tuple(neg(a) for a in row) for row in self.rows))

    def is_zero(self) -> bool:
        return all(a == self.group.zero for row in self.rows for a in row)

    def to_partial(self) -> PartialMatrix:
        return _trusted(PartialMatrix, self.group, self.rows)

    def __repr__(self) -> str:
        return f"Matrix({self.group.spec()}, {self.to_lists()})"


@dataclass(frozen=True, eq=True)
class PartialMatrix(_Grid):
    """An m x n matrix whose cells are group elements or :data:`BLANK`."""

    group: Group
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _freeze(self.group, self.rows, allow_blank=True))

    @classmethod
    def blank(cls, group: Group, m: int, n: int) -> PartialMatrix:
        return cls(group, [[BLANK] * n for _ in range(m)])

    @classmethod
    def from_mask(cls, values: Matrix, mask: Sequence[Sequence[bool]]) -> PartialMatrix:
        """Keep ``values[i, j]`` where ``mask[i][j]`` is true, blank elsewhere."""
        return cls(
            values.group,
            [[v if keep else BLANK for v, keep in zip(row, mrow)] for row, mrow in zip(values.rows, mask)],
        )

    def is_blank(self, i: int, j: int) -> bool:
        return self.rows[i][j] is None

    def specified(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(i, j, value)`` for every specified cell in row-major order."""
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v is not None:
                    yield i, j, v

    def blanks(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.rows) for j, v in enumerate(row) if v is None]

    @property
    def mask(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(v is not None for v in row) for row in self.rows)

    def is_complete(self) -> bool:
        return not self.blanks()

    def to_dense(self) -> Matrix:
        if not self.is_complete():
            raise ValueError("partial matrix still has blank cells")
        return Matrix(self.group, self.rows)

    def minus(self, other: Matrix) -> PartialMatrix:
        """Cellwise difference; blank wherever ``self`` is blank."""
        self._require_compatible(other)
        sub = self.group.sub
        return _trusted(
            PartialMatrix,
            self.group,
            tuple(
                tuple(BLANK if a is None else sub(a, b) for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def is_completed_by(self, candidate: Matrix) -> bool:
        """True iff ``candidate`` agrees with every specified cell."""
        if candidate.shape != self.shape or candidate.group != self.group:
            return False
        return all(candidate.rows[i][j] == v for i, j, v in self.specified())

    def __repr__(self) -> str:
        cells = [["*" if v is None else v for v in row] for row in self.rows]
        return f"PartialMatrix({self.group.spec()}, {cells})"
