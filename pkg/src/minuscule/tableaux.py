"""Oscillating, alternating and staircase tableaux, and their words.

An oscillating tableau encodes a highest weight word in a tensor power of
the vector representation of Sp(2n): letters are signed unit vectors, and
the tableau records the cumulative weights, which are partitions with at
most ``n`` parts.

An alternating tableau encodes a highest weight word in a tensor power of
the adjoint representation of GL(n): letters are pairs ``(e_k, -e_l)`` and
the tableau records the cumulative weights interleaved with the
intermediate ``+e_k`` step, which are staircases.

Words are represented as plain tuples: a symplectic letter is a signed
1-based index (``+j`` for ``e_j``, ``-j`` for ``-e_j``); an adjoint letter
is a pair ``(k, l)`` of 1-based indices standing for ``(e_k, -e_l)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .shapes import (
    EMPTY,
    Partition,
    ShapeError,
    Staircase,
    assemble_staircase,
    extent,
    join,
    meet,
    partition_from_text,
    partition_to_text,
    split_staircase,
    staircase_from_text,
    staircase_to_text,
    zero_staircase,
)

SymplecticWord = tuple[int, ...]
AdjointWord = tuple[tuple[int, int], ...]


class TableauError(ValueError):
    """Raised when a tableau fails validation."""


@dataclass(frozen=True)
class OscillatingTableau:
    """Sequence of partitions, consecutive ones differing by exactly one cell."""

    shapes: tuple[Partition, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "shapes", tuple(self.shapes))
        if self.n < 1:
            raise TableauError(f"rank bound must be positive, got {self.n}")
        if not self.shapes:
            raise TableauError("oscillating tableau must contain the empty shape")
        if self.shapes[0].parts:
            raise TableauError("oscillating tableau must start at the empty shape")
        for q, shape in enumerate(self.shapes):
            if len(shape) > self.n:
                raise TableauError(
                    f"shape {shape.parts} at position {q} has more than {self.n} parts"
                )
            if q == 0:
                continue
            prev = self.shapes[q - 1]
            if abs(shape.size - prev.size) != 1 or not (
                shape.contains(prev) or prev.contains(shape)
            ):
                raise TableauError(
                    f"shapes {prev.parts} and {shape.parts} do not differ by one cell"
                )

    @property
    def r(self) -> int:
        return len(self.shapes) - 1

    @property
    def shape(self) -> Partition:
        return self.shapes[-1]

    def word(self) -> SymplecticWord:
        return word_from_oscillating(self)

    def prefix(self, k: int) -> "OscillatingTableau":
        return OscillatingTableau(self.shapes[: k + 1], self.n)


@dataclass(frozen=True)
class AlternatingTableau:
    """Sequence of staircases alternately adding and subtracting one unit."""

    staircases: tuple[Staircase, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "staircases", tuple(self.staircases))
        sc = self.staircases
        if not sc or len(sc) % 2 == 0:
            raise TableauError("alternating tableau must have odd length 2r+1")
        n = sc[0].n
        if any(s.n != n for s in sc):
            raise TableauError("all staircases must have the same rank")
        if not sc[0].is_zero:
            raise TableauError("alternating tableau must start at the zero staircase")
        for i in range(len(sc) - 1):
            delta = sorted(b - a for a, b in zip(sc[i].entries, sc[i + 1].entries))
            want = 1 if i % 2 == 0 else -1
            expected = [0] * (n - 1) + [1] if want == 1 else [-1] + [0] * (n - 1)
            if delta != expected:
                raise TableauError(
                    f"staircases {sc[i].entries} -> {sc[i + 1].entries} are not a "
                    f"{'+1' if want == 1 else '-1'} step"
                )

    @property
    def n(self) -> int:
        return self.staircases[0].n

    @property
    def r(self) -> int:
        return (len(self.staircases) - 1) // 2

    @property
    def shape(self) -> Staircase:
        return self.staircases[-1]

    def word(self) -> AdjointWord:
        return word_from_alternating(self)

    def prefix(self, k: int) -> "AlternatingTableau":
        return AlternatingTableau(self.staircases[: 2 * k + 1])

    def max_extent(self) -> int:
        return max(extent(s) for s in self.staircases)


@dataclass(frozen=True)
class StaircaseTableau:
    """Sequence of staircases, consecutive ones differing by a unit vector."""

    staircases: tuple[Staircase, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "staircases", tuple(self.staircases))
        sc = self.staircases
        if not sc:
            raise TableauError("staircase tableau must be nonempty")
        n = sc[0].n
        if any(s.n != n for s in sc):
            raise TableauError("all staircases must have the same rank")
        for i in range(len(sc) - 1):
            delta = sorted(b - a for a, b in zip(sc[i].entries, sc[i + 1].entries))
            if delta != [0] * (n - 1) + [1] and delta != [-1] + [0] * (n - 1):
                raise TableauError(
                    f"staircases {sc[i].entries} -> {sc[i + 1].entries} do not differ "
                    "by a unit vector"
                )

    @property
    def n(self) -> int:
        return self.staircases[0].n

    @property
    def straight(self) -> bool:
        return self.staircases[0].is_zero


def _unit_step(prev: Staircase, cur: Staircase) -> int:
    """Signed 1-based position of the unit-vector step from prev to cur."""
    deltas = [b - a for a, b in zip(prev.entries, cur.entries)]
    hits = [(i, d) for i, d in enumerate(deltas) if d != 0]
    if len(hits) != 1 or hits[0][1] not in (1, -1):
        raise TableauError(f"{prev.entries} -> {cur.entries} is not a unit step")
    i, d = hits[0]
    return (i + 1) * d


def oscillating_from_word(word: Iterable[int], n: int) -> OscillatingTableau:
    """Tableau of cumulative weights of a symplectic highest weight word."""
    vec = [0] * n
    shapes = [EMPTY]
    for pos, letter in enumerate(word, start=1):
        j = abs(letter)
        if letter == 0 or j > n:
            raise TableauError(f"letter {letter} at position {pos} is not ±e_j, j <= {n}")
        vec[j - 1] += 1 if letter > 0 else -1
        try:
            shapes.append(Partition(tuple(vec)))
        except ShapeError as exc:
            raise TableauError(
                f"prefix of length {pos} has non-dominant weight {tuple(vec)}: "
                "not a highest weight word"
            ) from exc
    return OscillatingTableau(tuple(shapes), n)


def word_from_oscillating(o: OscillatingTableau) -> SymplecticWord:
    letters = []
    for q in range(1, len(o.shapes)):
        prev, cur = o.shapes[q - 1], o.shapes[q]
        rows = [
            i
            for i in range(max(len(prev), len(cur)))
            if prev.part(i) != cur.part(i)
        ]
        row = rows[0]
        letters.append((row + 1) if cur.part(row) > prev.part(row) else -(row + 1))
    return tuple(letters)


def alternating_from_word(word: Iterable[tuple[int, int]], n: int) -> AlternatingTableau:
    """Tableau of cumulative weights of an adjoint highest weight word."""
    vec = [0] * n
    sc = [zero_staircase(n)]
    for pos, (k, l) in enumerate(word, start=1):
        if not (1 <= k <= n and 1 <= l <= n):
            raise TableauError(f"letter ({k},{l}) at position {pos} out of range 1..{n}")
        vec[k - 1] += 1
        try:
            sc.append(Staircase(tuple(vec)))
        except ShapeError as exc:
            raise TableauError(
                f"intermediate weight {tuple(vec)} at letter {pos} is not dominant"
            ) from exc
        vec[l - 1] -= 1
        try:
            sc.append(Staircase(tuple(vec)))
        except ShapeError as exc:
            raise TableauError(
                f"weight {tuple(vec)} after letter {pos} is not dominant"
            ) from exc
    return AlternatingTableau(tuple(sc))


def word_from_alternating(a: AlternatingTableau) -> AdjointWord:
    letters = []
    for q in range(a.r):
        up = _unit_step(a.staircases[2 * q], a.staircases[2 * q + 1])
        down = _unit_step(a.staircases[2 * q + 1], a.staircases[2 * q + 2])
        letters.append((up, -down))
    return tuple(letters)


# ---------------------------------------------------------------------------
# Embedding of oscillating tableaux as alternating tableaux and back.

def min_embedding_rank(o: OscillatingTableau) -> int:
    """Smallest rank for which the alternating embedding of ``o`` is valid."""
    best = 1
    for i, shape in enumerate(o.shapes):
        best = max(best, 2 * len(shape))
        if i > 0:
            prev = o.shapes[i - 1]
            best = max(best, len(join(prev, shape)) + len(meet(prev, shape)))
    return best


def embed_osc_as_alt(o: OscillatingTableau, n: int) -> AlternatingTableau:
    """Alternating tableau with even entries ``[w,w]_n`` and odd entries
    ``[w ∨ w', w ∧ w']_n`` for consecutive shapes ``w, w'`` of ``o``."""
    sc = [assemble_staircase(o.shapes[0], o.shapes[0], n)]
    for i in range(1, len(o.shapes)):
        prev, cur = o.shapes[i - 1], o.shapes[i]
        sc.append(assemble_staircase(join(prev, cur), meet(prev, cur), n))
        sc.append(assemble_staircase(cur, cur, n))
    return AlternatingTableau(tuple(sc))


def restrict_alt_to_osc(a: AlternatingTableau) -> OscillatingTableau:
    """Oscillating tableau of the positive parts of every second staircase.

    Only valid when the filling of the growth diagram of ``a`` is symmetric
    across the main diagonal with no diagonal crosses.
    """
    from .growth import perm_growth  # local import to avoid a cycle

    pi, _, _ = perm_growth(a)
    arcs = dict(pi.arcs)
    if any(i == j for i, j in pi.arcs):
        raise TableauError("growth diagram has a diagonal cross; not an embedded tableau")
    if any(arcs.get(j) != i for i, j in pi.arcs):
        raise TableauError("growth diagram filling is not symmetric")
    shapes = tuple(split_staircase(a.staircases[2 * i])[0] for i in range(a.r + 1))
    return OscillatingTableau(shapes, a.n)


def reverse_alternating(a: AlternatingTableau) -> AlternatingTableau:
    """The staircase sequence read backwards (empty shape only)."""
    if not a.shape.is_zero:
        raise TableauError("only an empty-shape tableau can be reversed")
    return AlternatingTableau(tuple(reversed(a.staircases)))


# ---------------------------------------------------------------------------
# Rank changes: strip or pad zeros of every staircase.

def strip_zeros(a: AlternatingTableau, m: int) -> AlternatingTableau:
    """Reduce the rank to ``m``, preserving positive and negative parts."""
    sc = []
    for s in a.staircases:
        if extent(s) > m:
            raise TableauError(
                f"staircase {s.entries} has extent {extent(s)} > target rank {m}"
            )
        pos, neg = split_staircase(s)
        sc.append(assemble_staircase(pos, neg, m))
    return AlternatingTableau(tuple(sc))


def pad_zeros(a: AlternatingTableau, n: int) -> AlternatingTableau:
    """Raise the rank to ``n``, preserving positive and negative parts."""
    if n < a.n:
        raise TableauError(f"cannot pad rank {a.n} down to {n}")
    sc = []
    for s in a.staircases:
        pos, neg = split_staircase(s)
        sc.append(assemble_staircase(pos, neg, n))
    return AlternatingTableau(tuple(sc))


# ---------------------------------------------------------------------------
# Serialization.  Text: semicolon-separated compact shapes.  JSON:
# {"kind": "oscillating"|"alternating", "n": int, "shapes": [[ints], ...]}.

def tableau_to_text(t: OscillatingTableau | AlternatingTableau) -> str:
    if isinstance(t, OscillatingTableau):
        return ";".join(partition_to_text(p) for p in t.shapes)
    return ";".join(staircase_to_text(s) for s in t.staircases)


def oscillating_from_text(text: str, n: int) -> OscillatingTableau:
    shapes = tuple(partition_from_text(f) for f in text.strip().split(";"))
    return OscillatingTableau(shapes, n)


def alternating_from_text(text: str) -> AlternatingTableau:
    sc = tuple(staircase_from_text(f) for f in text.strip().split(";"))
    return AlternatingTableau(sc)


def tableau_to_json(t: OscillatingTableau | AlternatingTableau) -> str:
    if isinstance(t, OscillatingTableau):
        payload = {
            "kind": "oscillating",
            "n": t.n,
            "shapes": [list(p.parts) for p in t.shapes],
        }
    else:
        payload = {
            "kind": "alternating",
            "n": t.n,
            "shapes": [list(s.entries) for s in t.staircases],
        }
    return json.dumps(payload)


def tableau_from_json(text: str) -> OscillatingTableau | AlternatingTableau:
    payload = json.loads(text)
    kind = payload.get("kind")
    if kind == "oscillating":
        shapes = tuple(Partition(tuple(p)) for p in payload["shapes"])
        return OscillatingTableau(shapes, int(payload["n"]))
    if kind == "alternating":
        sc = tuple(Staircase(tuple(s)) for s in payload["shapes"])
        a = AlternatingTableau(sc)
        if a.n != int(payload["n"]):
            raise TableauError("rank in JSON does not match the staircases")
        return a
    raise TableauError(f"unknown tableau kind {kind!r}")
