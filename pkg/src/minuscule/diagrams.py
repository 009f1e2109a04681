"""Chord diagrams: perfect matchings, partial permutations, noncrossing
set partitions, their symmetry operations and statistics.

Objects live on the vertex set {1, ..., r} of a counterclockwise labelled
regular r-gon.  Rotation shifts every index by one (mod r); reversal and
reverse-complement reflect the diagram on an axis.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class DiagramError(ValueError):
    """Raised when a chord diagram fails validation."""


@dataclass(frozen=True)
class PerfectMatching:
    """A perfect matching of a subset of {1, ..., r}; pairs stored (min, max)."""

    r: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.r < 0:
            raise DiagramError(f"ground size must be nonnegative, got {self.r}")
        norm = tuple(sorted((min(i, j), max(i, j)) for i, j in self.pairs))
        object.__setattr__(self, "pairs", norm)
        seen: set[int] = set()
        for i, j in norm:
            if i == j:
                raise DiagramError(f"pair ({i},{j}) is degenerate")
            if not (1 <= i <= self.r and 1 <= j <= self.r):
                raise DiagramError(f"pair ({i},{j}) out of range 1..{self.r}")
            if i in seen or j in seen:
                raise DiagramError(f"element reused in pairs at ({i},{j})")
            seen.update((i, j))

    def support(self) -> frozenset[int]:
        return frozenset(x for p in self.pairs for x in p)

    def is_perfect(self) -> bool:
        return len(self.support()) == self.r


@dataclass(frozen=True)
class PartialPermutation:
    """An injective partial map on {1, ..., r}; arcs stored (source, target)."""

    r: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.r < 0:
            raise DiagramError(f"ground size must be nonnegative, got {self.r}")
        norm = tuple(sorted(tuple(a) for a in self.arcs))
        object.__setattr__(self, "arcs", norm)
        sources = [i for i, _ in norm]
        targets = [j for _, j in norm]
        if len(set(sources)) != len(sources):
            raise DiagramError("partial permutation has a repeated source")
        if len(set(targets)) != len(targets):
            raise DiagramError("partial permutation is not injective")
        for i, j in norm:
            if not (1 <= i <= self.r and 1 <= j <= self.r):
                raise DiagramError(f"arc ({i},{j}) out of range 1..{self.r}")

    def domain(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.arcs)

    def range(self) -> frozenset[int]:
        return frozenset(j for _, j in self.arcs)

    @property
    def is_total(self) -> bool:
        return len(self.arcs) == self.r

    def __call__(self, i: int) -> int:
        for src, tgt in self.arcs:
            if src == i:
                return tgt
        raise DiagramError(f"{i} is not in the domain")

    def one_line(self) -> tuple[int, ...]:
        if not self.is_total:
            raise DiagramError("one-line notation requires a total permutation")
        return tuple(j for _, j in self.arcs)

    @staticmethod
    def from_one_line(values: Sequence[int]) -> "PartialPermutation":
        return PartialPermutation(
            len(values), tuple((i + 1, v) for i, v in enumerate(values))
        )


@dataclass(frozen=True)
class NoncrossingSetPartition:
    """A set partition of {1, ..., r} with no two crossing blocks."""

    r: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        norm = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", norm)
        elements = [x for b in norm for x in b]
        if sorted(elements) != list(range(1, self.r + 1)):
            raise DiagramError(f"blocks do not partition 1..{self.r}")
        for a, b in combinations(norm, 2):
            if blocks_cross(a, b):
                raise DiagramError(f"blocks {a} and {b} cross")

    def mirror(self) -> "NoncrossingSetPartition":
        """Reflection i -> r+1-i."""
        return NoncrossingSetPartition(
            self.r, tuple(tuple(self.r + 1 - x for x in b) for b in self.blocks)
        )


def blocks_cross(a: Sequence[int], b: Sequence[int]) -> bool:
    # a1 < b1 < a2 < b2 for some a1,a2 in a and b1,b2 in b
    for x, y in ((a, b), (b, a)):
        for x1, x2 in combinations(x, 2):
            if any(x1 < v < x2 for v in y) and any(v < x1 or v > x2 for v in y):
                return True
    return False


# ---------------------------------------------------------------------------
# Symmetry operations.

def rotate_matching(m: PerfectMatching) -> PerfectMatching:
    """Replace each pair (i, j) by (i mod r + 1, j mod r + 1)."""
    return PerfectMatching(
        m.r, tuple((i % m.r + 1, j % m.r + 1) for i, j in m.pairs)
    )


def reverse_matching(m: PerfectMatching) -> PerfectMatching:
    """Replace each pair (i, j) by (r+1-j, r+1-i); an involution."""
    return PerfectMatching(
        m.r, tuple((m.r + 1 - j, m.r + 1 - i) for i, j in m.pairs)
    )


def rotate_permutation(pi: PartialPermutation) -> PartialPermutation:
    """Replace each arc (i, pi(i)) by (i mod r + 1, pi(i) mod r + 1)."""
    return PartialPermutation(
        pi.r, tuple((i % pi.r + 1, j % pi.r + 1) for i, j in pi.arcs)
    )


def reverse_complement(pi: PartialPermutation) -> PartialPermutation:
    """The map sending r+1-i to r+1-pi(i); an involution."""
    return PartialPermutation(
        pi.r, tuple((pi.r + 1 - i, pi.r + 1 - j) for i, j in pi.arcs)
    )


def invert(pi: PartialPermutation) -> PartialPermutation:
    return PartialPermutation(pi.r, tuple((j, i) for i, j in pi.arcs))


# ---------------------------------------------------------------------------
# Statistics.

def _pairs_cross(p: tuple[int, int], q: tuple[int, int]) -> bool:
    (a, b), (c, d) = sorted((p, q))
    return a < c < b < d


def max_crossing_matching(m: PerfectMatching) -> int:
    """Largest k such that k pairs mutually cross.

    Mutually crossing pairs are i_1 < ... < i_k < j_1 < ... < j_k with
    {i_t, j_t} the pairs.  Brute-force search over the crossing graph with
    pruning; intended for desk-scale r.
    """
    pairs = list(m.pairs)

    def extend(chosen: list[tuple[int, int]], rest: list[tuple[int, int]]) -> int:
        best = len(chosen)
        for idx, cand in enumerate(rest):
            if len(chosen) + len(rest) - idx <= best:
                break
            if all(_pairs_cross(c, cand) for c in chosen):
                best = max(best, extend(chosen + [cand], rest[idx + 1 :]))
        return best

    if not pairs:
        return 0
    return max(1, extend([], pairs))


def lis_length(pi: PartialPermutation) -> int:
    """Length of the longest increasing subsequence, by patience sorting."""
    tops: list[int] = []
    for v in pi.one_line():
        k = bisect_left(tops, v)
        if k == len(tops):
            tops.append(v)
        else:
            tops[k] = v
    return len(tops)


def corteel_crossings(pi: PartialPermutation) -> frozenset[tuple[tuple[int, int], tuple[int, int]]]:
    """All crossing arc pairs: i < j <= pi(i) < pi(j) or pi(i) < pi(j) < i < j."""
    found = set()
    for (i, pi_i), (j, pi_j) in combinations(pi.arcs, 2):
        if i > j:
            (i, pi_i), (j, pi_j) = (j, pi_j), (i, pi_i)
        if (i < j <= pi_i < pi_j) or (pi_i < pi_j < i < j):
            found.add(((i, pi_i), (j, pi_j)))
    return frozenset(found)


# ---------------------------------------------------------------------------
# Noncrossing set partitions vs permutations: the blocks of a noncrossing
# partition, oriented clockwise, give a permutation with no Corteel
# crossings, and conversely the cycles of such a permutation are the
# blocks.

def perm_to_ncpartition(pi: PartialPermutation) -> NoncrossingSetPartition:
    if not pi.is_total:
        raise DiagramError("noncrossing partitions require a total permutation")
    if corteel_crossings(pi):
        raise DiagramError("permutation has crossing arcs")
    mapping = dict(pi.arcs)
    seen: set[int] = set()
    blocks = []
    for start in range(1, pi.r + 1):
        if start in seen:
            continue
        block = [start]
        seen.add(start)
        cur = mapping[start]
        while cur != start:
            block.append(cur)
            seen.add(cur)
            cur = mapping[cur]
        blocks.append(tuple(sorted(block)))
    return NoncrossingSetPartition(pi.r, tuple(blocks))


def ncpartition_to_perm(part: NoncrossingSetPartition) -> PartialPermutation:
    """Orient each block's boundary clockwise: sorted block (b_1,...,b_k)
    maps b_i to b_{i-1}, with b_1 to b_k."""
    arcs = []
    for block in part.blocks:
        k = len(block)
        for t, x in enumerate(block):
            arcs.append((x, block[(t - 1) % k]))
    return PartialPermutation(part.r, tuple(arcs))


# ---------------------------------------------------------------------------
# Serialization.

def matching_to_text(m: PerfectMatching) -> str:
    return "{" + ",".join("{%d,%d}" % p for p in m.pairs) + "}"


def permutation_to_text(pi: PartialPermutation) -> str:
    return "{" + ",".join("(%d,%d)" % a for a in pi.arcs) + "}"


def matching_to_json(m: PerfectMatching) -> str:
    return json.dumps({"r": m.r, "pairs": [list(p) for p in m.pairs]})


def matching_from_json(text: str) -> PerfectMatching:
    payload = json.loads(text)
    return PerfectMatching(int(payload["r"]), tuple(tuple(p) for p in payload["pairs"]))


def permutation_to_json(pi: PartialPermutation) -> str:
    return json.dumps({"r": pi.r, "map": [list(a) for a in pi.arcs]})


def permutation_from_json(text: str) -> PartialPermutation:
    payload = json.loads(text)
    return PartialPermutation(int(payload["r"]), tuple(tuple(a) for a in payload["map"]))


# ---------------------------------------------------------------------------
# SVG rendering: a counterclockwise labelled regular r-gon with chords for
# matchings, arrows for permutations (fixed points drawn as small loops).
# Output is deterministic for identical input.

def _vertex(k: int, r: int, cx: float, cy: float, radius: float) -> tuple[float, float]:
    angle = math.pi / 2 + 2 * math.pi * (k - 1) / r
    return cx + radius * math.cos(angle), cy - radius * math.sin(angle)


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_chord_svg(
    obj: PerfectMatching | PartialPermutation, size: int = 360, labels: bool = True
) -> str:
    """Deterministic SVG document for a chord diagram."""
    if isinstance(obj, PerfectMatching):
        r = obj.r
        edges = [(i, j, False) for i, j in obj.pairs]
    elif isinstance(obj, PartialPermutation):
        r = obj.r
        edges = [(i, j, True) for i, j in obj.arcs]
    else:
        raise DiagramError(f"cannot render {type(obj).__name__} as a chord diagram")
    if r < 1:
        raise DiagramError("cannot render an empty ground set")
    cx = cy = size / 2.0
    radius = size * 0.38
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>',
    ]
    ring = [
        _fmt(v) for k in range(1, r + 1) for v in _vertex(k, r, cx, cy, radius)
    ]
    out.append(
        '<polygon fill="none" stroke="#bbbbbb" stroke-width="1" points="'
        + " ".join(",".join(ring[2 * k : 2 * k + 2]) for k in range(r))
        + '"/>'
    )
    for i, j, directed in edges:
        x1, y1 = _vertex(i, r, cx, cy, radius)
        x2, y2 = _vertex(j, r, cx, cy, radius)
        if i == j:
            lx, ly = _vertex(i, r, cx, cy, radius * 1.08)
            out.append(
                f'<circle cx="{_fmt(lx)}" cy="{_fmt(ly)}" r="{_fmt(size * 0.02)}" '
                'fill="none" stroke="black" stroke-width="1.5"/>'
            )
            continue
        marker = ' marker-end="url(#arrow)"' if directed else ""
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="black" stroke-width="1.5"{marker}/>'
        )
    if labels:
        for k in range(1, r + 1):
            lx, ly = _vertex(k, r, cx, cy, radius * 1.14)
            out.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="{size // 24}" '
                f'text-anchor="middle" dominant-baseline="middle">{k}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def catalan(n: int) -> int:
    """The n-th Catalan number."""
    return math.comb(2 * n, n) // (n + 1)


def noncrossing_perfect_matchings(r2: int) -> Iterable[PerfectMatching]:
    """All noncrossing perfect matchings of {1, ..., r2} (r2 even)."""
    for m in perfect_matchings(r2):
        if max_crossing_matching(m) <= 1:
            yield m


def perfect_matchings(r2: int) -> Iterable[PerfectMatching]:
    """All perfect matchings of {1, ..., r2}; none if r2 is odd."""
    if r2 % 2 == 1:
        return
    def rec(remaining: tuple[int, ...]):
        if not remaining:
            yield ()
            return
        first, rest = remaining[0], remaining[1:]
        for k, partner in enumerate(rest):
            for tail in rec(rest[:k] + rest[k + 1 :]):
                yield ((first, partner),) + tail
    for pairs in rec(tuple(range(1, r2 + 1))):
        yield PerfectMatching(r2, pairs)
