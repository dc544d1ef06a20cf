"""Additive abelian groups used as matrix entry domains.

Elements are stored as plain Python ints in canonical form; a :class:`Group`
instance owns the arithmetic on them.  :class:`Scalar` bundles a value with
its group for callers who want operator syntax and mixed-group checking.
"""

from __future__ import annotations

import abc
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import GroupMismatchError, GroupOverflowError, ParseError, UnsupportedError


class Group(abc.ABC):
    """An additive abelian group acting on canonical int representations."""

    @property
    @abc.abstractmethod
    def order(self) -> int | None:
        """Number of elements, or ``None`` for an infinite group."""

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    def zero(self) -> int:
        return 0

    @abc.abstractmethod
    def coerce(self, value: int) -> int:
        """Map an integer literal to its canonical element."""

    @abc.abstractmethod
    def add(self, a: int, b: int) -> int: ...

    @abc.abstractmethod
    def neg(self, a: int) -> int: ...

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def sum(self, values: Iterable[int]) -> int:
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def signed(self, a: int, parity: int) -> int:
        """Return ``(-1)**parity * a``."""
        return self.neg(a) if parity % 2 else a

    def elements(self) -> Iterator[int]:
        raise UnsupportedError(f"cannot enumerate the infinite group {self.spec()}")

    def contains(self, value: int) -> bool:
        try:
            return self.coerce(value) == value
        except GroupOverflowError:
            return False

    @abc.abstractmethod
    def spec(self) -> str:
        """Text form used by matrix file headers (``int`` or ``zmod <k>``)."""

    def __call__(self, value: int) -> Scalar:
        return Scalar(self, self.coerce(value))


@dataclass(frozen=True)
class Integers(Group):
    """The integers.  ``bits=64`` checks every result against signed 64-bit
    bounds and raises :class:`GroupOverflowError`; ``bits=None`` is unbounded.
    """

    bits: int | None = 64

    @property
    def order(self) -> None:
        return None

    def _check(self, value: int) -> int:
        if self.bits is not None:
            bound = 1 << (self.bits - 1)
            if not -bound <= value < bound:
                raise GroupOverflowError(f"{value} does not fit in a signed {self.bits}-bit integer")
        return value

    def coerce(self, value: int) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"expected an int, got {type(value).__name__}")
        return self._check(value)

    def add(self, a: int, b: int) -> int:
        return self._check(a + b)

    def neg(self, a: int) -> int:
        return self._check(-a)

    def sub(self, a: int, b: int) -> int:
        return self._check(a - b)

    def spec(self) -> str:
        return "int"


@dataclass(frozen=True)
class IntegersMod(Group):
    """The cyclic group Z/kZ with residues stored in ``[0, k)``."""

    modulus: int

    def __post_init__(self):
        if isinstance(self.modulus, bool) or not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    @property
    def order(self) -> int:
        return self.modulus

    def coerce(self, value: int) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"expected an int, got {type(value).__name__}")
        return value % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def neg(self, a: int) -> int:
        return -a % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def elements(self) -> Iterator[int]:
        return iter(range(self.modulus))

    def spec(self) -> str:
        return f"zmod {self.modulus}"


def enumerate_group(group: Group) -> tuple[int, ...]:
    """All elements of a finite group in ascending residue order."""
    return tuple(group.elements())


_SPEC_RE = re.compile(r"^\s*(?:(int)|zmod\s+(\d+))\s*$")


def parse_group(text: str) -> Group:
    """Parse ``int`` or ``zmod <k>``."""
    match = _SPEC_RE.match(text)
    if match is None:
        raise ParseError(f"unknown group spec {text.strip()!r}; expected 'int' or 'zmod <k>'")
    if match.group(1):
        return Integers()
    k = int(match.group(2))
    if k < 2:
        raise ParseError(f"zmod modulus must be >= 2, got {k}")
    return IntegersMod(k)


@dataclass(frozen=True)
class Scalar:
    """A group element tagged with its group."""

    group: Group
    value: int

    def _same(self, other: object) -> Scalar:
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.group != self.group:
            raise GroupMismatchError(f"cannot combine {self.group.spec()} and {other.group.spec()} elements")
        return other

    def __add__(self, other: Scalar) -> Scalar:
        other = self._same(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.group, self.group.add(self.value, other.value))

    def __sub__(self, other: Scalar) -> Scalar:
        other = self._same(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.group, self.group.sub(self.value, other.value))

    def __neg__(self) -> Scalar:
        return Scalar(self.group, self.group.neg(self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Scalar({self.value}, {self.group.spec()})"


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def negate(a: Scalar) -> Scalar:
    return -a
