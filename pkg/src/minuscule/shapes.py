"""Partitions, staircases and Weyl-group dominant representatives.

The two Weyl groups supported are the symmetric group (type A, acting by
permuting coordinates) and the hyperoctahedral group (type C, acting by
signed permutations).  Their dominant representatives are what every local
rule in this package is built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Raised when a partition or staircase fails validation."""


SYMMETRIC = "symmetric"
HYPEROCTAHEDRAL = "hyperoctahedral"
_FAMILIES = (SYMMETRIC, HYPEROCTAHEDRAL)


@dataclass(frozen=True)
class WeylKind:
    """A Weyl group acting on integer vectors of length ``n``."""

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ShapeError(f"unknown Weyl family {self.family!r}")
        if self.n < 1:
            raise ShapeError(f"rank must be positive, got {self.n}")


def symmetric_group(n: int) -> WeylKind:
    return WeylKind(SYMMETRIC, n)


def hyperoctahedral_group(n: int) -> WeylKind:
    return WeylKind(HYPEROCTAHEDRAL, n)


def dom_vector(v: Sequence[int], family: str) -> tuple[int, ...]:
    """Dominant representative of ``v`` as a plain tuple.

    Symmetric: sort into weakly decreasing order.  Hyperoctahedral: sort
    absolute values into weakly decreasing order.
    """
    if family == SYMMETRIC:
        return tuple(sorted(v, reverse=True))
    if family == HYPEROCTAHEDRAL:
        return tuple(sorted((abs(x) for x in v), reverse=True))
    raise ShapeError(f"unknown Weyl family {family!r}")


@dataclass(frozen=True)
class Partition:
    """An integer partition; trailing zeros are never stored.

    >>> Partition((2, 1, 0)).parts
    (2, 1)
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ShapeError(f"partition parts must be positive, got {parts}")
            if i > 0 and parts[i - 1] < p:
                raise ShapeError(f"partition must be weakly decreasing, got {parts}")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, row: int) -> int:
        """Part in (0-based) ``row``, zero beyond the last stored part."""
        return self.parts[row] if 0 <= row < len(self.parts) else 0

    def as_vector(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise ShapeError(f"{self} does not fit in rank {n}")
        return self.parts + (0,) * (n - len(self.parts))

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= p for i, p in enumerate(other.parts))


EMPTY = Partition()


def partition_from_vector(v: Iterable[int]) -> Partition:
    """Partition from a weakly decreasing nonnegative vector (zeros dropped)."""
    return Partition(tuple(v))


@dataclass(frozen=True)
class Staircase:
    """A weakly decreasing integer vector of fixed length (a GL(n) dominant weight)."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ShapeError("staircase must have positive rank")
        for i in range(1, len(entries)):
            if entries[i - 1] < entries[i]:
                raise ShapeError(f"staircase must be weakly decreasing, got {entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)


def zero_staircase(n: int) -> Staircase:
    return Staircase((0,) * n)


def dom(v: Sequence[int], w: WeylKind) -> Staircase:
    """Unique dominant representative of the ``w``-orbit of ``v``."""
    if len(v) != w.n:
        raise ShapeError(f"vector of length {len(v)} under rank-{w.n} Weyl group")
    return Staircase(dom_vector(v, w.family))


def extent(s: Staircase) -> int:
    """Number of nonzero entries."""
    return sum(1 for e in s.entries if e != 0)


def split_staircase(s: Staircase) -> tuple[Partition, Partition]:
    """Positive and negative parts of a staircase.

    The positive part keeps entries ``> 0``; the negative part is the
    absolute values of the entries ``< 0``, reversed into decreasing order.
    """
    pos = tuple(e for e in s.entries if e > 0)
    neg = tuple(-e for e in reversed(s.entries) if e < 0)
    return Partition(pos), Partition(neg)


def assemble_staircase(pos: Partition, neg: Partition, n: int) -> Staircase:
    """Staircase with the given positive and negative part, padded to rank ``n``."""
    k = len(pos) + len(neg)
    if k > n:
        raise ShapeError(
            f"positive part {pos.parts} and negative part {neg.parts} need extent {k} > rank {n}"
        )
    return Staircase(
        pos.parts + (0,) * (n - k) + tuple(-p for p in reversed(neg.parts))
    )


def join(a: Partition, b: Partition) -> Partition:
    """Componentwise maximum."""
    m = max(len(a), len(b))
    return Partition(tuple(max(a.part(i), b.part(i)) for i in range(m)))


def meet(a: Partition, b: Partition) -> Partition:
    """Componentwise minimum."""
    m = max(len(a), len(b))
    return Partition(tuple(min(a.part(i), b.part(i)) for i in range(m)))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Ferrers diagram.

    >>> conjugate(Partition((3, 1))).parts
    (2, 1, 1)
    """
    if not p.parts:
        return EMPTY
    return Partition(
        tuple(sum(1 for q in p.parts if q > i) for i in range(p.parts[0]))
    )


def add_cell(p: Partition, row: int) -> Partition:
    """Add one cell in (0-based) ``row``; the result must be a partition."""
    if row < 0 or row > len(p):
        raise ShapeError(f"cannot add a cell in row {row} of {p.parts}")
    parts = list(p.parts)
    if row == len(parts):
        parts.append(1)
    else:
        parts[row] += 1
    return Partition(tuple(parts))


def remove_cell(p: Partition, row: int) -> Partition:
    """Remove one cell from (0-based) ``row``; the result must be a partition."""
    if row < 0 or row >= len(p):
        raise ShapeError(f"cannot remove a cell from row {row} of {p.parts}")
    parts = list(p.parts)
    parts[row] -= 1
    return Partition(tuple(parts))


def cell_diff(large: Partition, small: Partition) -> int:
    """The (0-based) row where ``large`` has one more cell than ``small``.

    Raises unless the shapes differ by exactly one cell.
    """
    rows = [
        i
        for i in range(max(len(large), len(small)))
        if large.part(i) != small.part(i)
    ]
    if len(rows) != 1 or large.part(rows[0]) != small.part(rows[0]) + 1:
        raise ShapeError(f"{large.parts} does not cover {small.parts}")
    return rows[0]


# ---------------------------------------------------------------------------
# Compact text forms.  Staircases are comma-separated signed integers;
# partitions are digit strings when all parts are at most 9 (so "211" is the
# partition (2,1,1)) and comma-separated otherwise.  The empty partition is
# the empty string.

def staircase_to_text(s: Staircase) -> str:
    return ",".join(str(e) for e in s.entries)


def staircase_from_text(text: str) -> Staircase:
    try:
        entries = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"bad staircase text {text!r}") from exc
    return Staircase(entries)


def partition_to_text(p: Partition) -> str:
    if not p.parts:
        return ""
    if p.parts[0] <= 9:
        return "".join(str(x) for x in p.parts)
    # the trailing comma keeps a lone large part distinct from a digit string
    return ",".join(str(x) for x in p.parts) + ("," if len(p.parts) == 1 else "")


def partition_from_text(text: str) -> Partition:
    text = text.strip()
    if not text:
        return EMPTY
    try:
        if "," in text:
            pieces = [x for x in text.split(",") if x]
            return Partition(tuple(int(x) for x in pieces))
        return Partition(tuple(int(c) for c in text))
    except ValueError as exc:
        raise ShapeError(f"bad partition text {text!r}") from exc


def vec_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b, strict=True))
