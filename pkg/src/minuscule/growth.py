"""Fomin growth diagrams and the two bijections built on them.

Cell convention: a cell has corners kappa (top-left), mu (top-right),
lambda (bottom-left), nu (bottom-right); partition labels grow upwards and
to the right.  The forward rule computes mu, the backward rule recovers
lambda together with the cell content; a cross is detected when the
conjugate rule would produce a negative entry.

Sundaram's correspondence maps an oscillating tableau to a partial
matching plus a partial standard Young tableau via a triangular diagram.
The square-diagram variant maps an alternating tableau to a partial
permutation plus two partial standard Young tableaux, running the backward
rules on positive parts below the diagonal and on negative parts (rotated
by 180 degrees) above it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagrams import PartialPermutation, PerfectMatching
from .shapes import (
    EMPTY,
    Partition,
    ShapeError,
    Staircase,
    assemble_staircase,
    cell_diff,
    conjugate,
    meet,
    partition_to_text,
    split_staircase,
    staircase_to_text,
)
from .tableaux import AlternatingTableau, OscillatingTableau, TableauError


class GrowthError(ValueError):
    """Raised for inconsistent growth-diagram data."""


@dataclass(frozen=True)
class Filling:
    """Sparse crosses in a cols x rows grid, at most one per row and column.

    Crosses are (column, row) pairs, 1-based.
    """

    cols: int
    rows: int
    crosses: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        norm = tuple(sorted(tuple(c) for c in self.crosses))
        object.__setattr__(self, "crosses", norm)
        used_c: set[int] = set()
        used_r: set[int] = set()
        for c, r in norm:
            if not (1 <= c <= self.cols and 1 <= r <= self.rows):
                raise GrowthError(f"cross ({c},{r}) outside {self.cols}x{self.rows} grid")
            if c in used_c or r in used_r:
                raise GrowthError(f"two crosses share a line at ({c},{r})")
            used_c.add(c)
            used_r.add(r)


@dataclass(frozen=True)
class PartialSYT:
    """Distinct positive integers, strictly increasing along rows and columns."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        seen: set[int] = set()
        for i, row in enumerate(rows):
            if not row:
                raise GrowthError("partial tableau has an empty row")
            if i > 0 and len(rows[i - 1]) < len(row):
                raise GrowthError("row lengths must be weakly decreasing")
            for j, v in enumerate(row):
                if v < 1:
                    raise GrowthError(f"entry {v} is not a positive integer")
                if v in seen:
                    raise GrowthError(f"entry {v} repeated")
                seen.add(v)
                if j > 0 and row[j - 1] >= v:
                    raise GrowthError(f"row {i} is not strictly increasing")
                if i > 0 and rows[i - 1][j] >= v:
                    raise GrowthError(f"column {j} is not strictly increasing")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def entries(self) -> frozenset[int]:
        return frozenset(v for row in self.rows for v in row)


EMPTY_SYT = PartialSYT()


# ---------------------------------------------------------------------------
# The local growth rules on partitions.

def _conj_vec(p: Partition, width: int) -> tuple[int, ...]:
    return conjugate(p).as_vector(width)


def _covers_or_equal(big: Partition, small: Partition) -> bool:
    if big == small:
        return True
    return big.size == small.size + 1 and big.contains(small)


def forward_cell(lam: Partition, kappa: Partition, nu: Partition, has_cross: bool) -> Partition:
    """Top-right corner from the other three and the cell content."""
    if not (_covers_or_equal(kappa, lam) and _covers_or_equal(nu, lam)):
        raise GrowthError(
            f"forward corners {kappa.parts}, {lam.parts}, {nu.parts} are inconsistent"
        )
    if has_cross:
        if not (kappa == lam == nu):
            raise GrowthError("a crossed cell needs equal kappa, lambda, nu")
        return Partition((lam.part(0) + 1,) + lam.parts[1:])
    width = max(kappa.part(0), lam.part(0), nu.part(0), 1)
    kc, lc, nc = (_conj_vec(p, width) for p in (kappa, lam, nu))
    vec = sorted((k + n - l for k, n, l in zip(kc, nc, lc)), reverse=True)
    return conjugate(Partition(tuple(vec)))


def backward_cell(kappa: Partition, mu: Partition, nu: Partition) -> tuple[Partition, bool]:
    """Bottom-left corner and cell content from the other three corners.

    When the conjugate rule would produce a negative entry the cell must
    contain a cross and the bottom-left corner is ``mu`` minus one cell in
    its first row.
    """
    if not (_covers_or_equal(mu, kappa) and _covers_or_equal(mu, nu)):
        raise GrowthError(
            f"backward corners {kappa.parts}, {mu.parts}, {nu.parts} are inconsistent"
        )
    width = max(kappa.part(0), mu.part(0), nu.part(0), 1)
    kc, mc, nc = (_conj_vec(p, width) for p in (kappa, mu, nu))
    vec = tuple(k + n - m for k, n, m in zip(kc, nc, mc))
    if any(v < 0 for v in vec):
        lam = Partition((mu.part(0) - 1,) + mu.parts[1:])
        if kappa != lam or nu != lam:
            raise GrowthError(
                f"cross forced at corners {kappa.parts}, {mu.parts}, {nu.parts} "
                "but they do not fit the cross pattern"
            )
        return lam, True
    lam = conjugate(Partition(tuple(sorted(vec, reverse=True))))
    return lam, False


# ---------------------------------------------------------------------------
# Chains of partitions and partial standard Young tableaux.

def syt_from_chain(chain: Sequence[Partition], labels: Sequence[int] | None = None) -> PartialSYT:
    """Tableau placing label k in the cell added at step k of the chain."""
    if not chain or chain[0].parts:
        raise GrowthError("chain must start at the empty partition")
    if labels is None:
        labels = range(1, len(chain))
    else:
        if len(labels) != len(chain) - 1:
            raise GrowthError("need one label per chain step")
    grid: dict[tuple[int, int], int] = {}
    for step, label in zip(range(1, len(chain)), labels):
        prev, cur = chain[step - 1], chain[step]
        if prev == cur:
            continue
        if not (_covers_or_equal(cur, prev) and cur.size == prev.size + 1):
            raise GrowthError(
                f"chain step {prev.parts} -> {cur.parts} does not add one cell"
            )
        row = cell_diff(cur, prev)
        grid[(row, prev.part(row))] = label
    shape = chain[-1]
    return PartialSYT(
        tuple(
            tuple(grid[(i, j)] for j in range(shape.part(i)))
            for i in range(len(shape))
        )
    )


def chain_from_syt(t: PartialSYT, r: int) -> tuple[Partition, ...]:
    """Shapes of the sub-tableaux of entries at most 0, 1, ..., r."""
    entries = t.entries()
    if entries and max(entries) > r:
        raise GrowthError(f"entry {max(entries)} exceeds chain length {r}")
    chain = []
    for k in range(r + 1):
        parts = tuple(sum(1 for v in row if v <= k) for row in t.rows)
        chain.append(Partition(parts))
    return tuple(chain)


def syt_to_text(t: PartialSYT) -> str:
    """Rows as digit strings joined by commas, e.g. "57,8".

    Defined for entries up to 9 only; larger tableaux go through JSON.
    """
    if not t.rows:
        return ""
    if any(v > 9 for row in t.rows for v in row):
        raise GrowthError("compact tableau text needs all entries at most 9")
    return ",".join("".join(str(v) for v in row) for row in t.rows)


def syt_from_text(text: str) -> PartialSYT:
    text = text.strip()
    if not text:
        return EMPTY_SYT
    return PartialSYT(tuple(tuple(int(c) for c in part) for part in text.split(",")))


# ---------------------------------------------------------------------------
# Sundaram's correspondence (triangular growth diagram).

def _triangular_backward(o: OscillatingTableau):
    """Corner labels and crosses of the triangular diagram of ``o``."""
    r = o.r
    corners: dict[tuple[int, int], Partition] = {}
    for i in range(1, r + 2):
        corners[(i, i)] = o.shapes[i - 1]
    for i in range(1, r + 1):
        corners[(i, i + 1)] = meet(o.shapes[i - 1], o.shapes[i])
    crosses = []
    for d in range(1, r):
        for i in range(1, r - d + 1):
            j = i + d
            lam, crossed = backward_cell(
                corners[(i, j)], corners[(i + 1, j)], corners[(i + 1, j + 1)]
            )
            corners[(i, j + 1)] = lam
            if crossed:
                crosses.append((i, j))
    return corners, crosses


def sundaram(o: OscillatingTableau) -> tuple[PerfectMatching, PartialSYT]:
    """Partial matching and partial tableau of an oscillating tableau.

    The matching pairs {i, j} mark the crosses of the triangular growth
    diagram; the tableau is read off the bottom border and its entries are
    exactly the unmatched elements.
    """
    r = o.r
    corners, crosses = _triangular_backward(o)
    chain = [corners[(i, r + 1)] for i in range(1, r + 2)]
    tab = syt_from_chain(chain)
    matching = PerfectMatching(r, tuple(crosses))
    return matching, tab


def sundaram_inverse(
    matching: PerfectMatching,
    tab: PartialSYT,
    r: int,
    n: int | None = None,
) -> OscillatingTableau:
    """Rebuild the oscillating tableau from a matching and a tableau."""
    support = matching.support()
    entries = tab.entries()
    if support & entries or sorted(support | entries) != list(range(1, r + 1)):
        raise GrowthError("matching pairs and tableau entries must partition 1..r")
    chain = chain_from_syt(tab, r)
    corners: dict[tuple[int, int], Partition] = {}
    for i in range(1, r + 2):
        corners[(i, r + 1)] = chain[i - 1]
        corners[(1, i)] = EMPTY
    crosses = {tuple(p) for p in matching.pairs}
    for i in range(1, r + 1):
        for j in range(r, i, -1):
            corners[(i + 1, j)] = forward_cell(
                corners[(i, j + 1)],
                corners[(i, j)],
                corners[(i + 1, j + 1)],
                (i, j) in crosses,
            )
    shapes = tuple(corners[(i, i)] for i in range(1, r + 2))
    rank = n if n is not None else max((len(s) for s in shapes), default=0) or 1
    return OscillatingTableau(shapes, rank)


# ---------------------------------------------------------------------------
# The square-diagram correspondence for alternating tableaux.

def _path_parts(a: AlternatingTableau):
    """Positive and negative parts on the path corners of the square diagram."""
    r = a.r
    pos: list[list[Partition | None]] = [[None] * (r + 1) for _ in range(r + 1)]
    neg: list[list[Partition | None]] = [[None] * (r + 1) for _ in range(r + 1)]
    for i in range(r + 1):
        p, q = split_staircase(a.staircases[2 * i])
        pos[i][i], neg[i][i] = p, q
    for i in range(r):
        p, q = split_staircase(a.staircases[2 * i + 1])
        pos[i + 1][i], neg[i + 1][i] = p, q
    return pos, neg


def _backward_sweeps(a: AlternatingTableau):
    """Run the backward rules; return pos, neg corner grids and the crosses."""
    r = a.r
    pos, neg = _path_parts(a)
    crosses = []
    for d in range(r):
        for i in range(r - d):
            j = i + d
            lam, crossed = backward_cell(pos[i][j], pos[i + 1][j], pos[i + 1][j + 1])
            pos[i][j + 1] = lam
            if crossed:
                crosses.append((i, j))
    for e in range(1, r):
        for j in range(r - e):
            i = j + e
            lam, crossed = backward_cell(neg[i + 1][j + 1], neg[i][j + 1], neg[i][j])
            neg[i + 1][j] = lam
            if crossed:
                crosses.append((i, j))
    return pos, neg, crosses


def perm_growth(a: AlternatingTableau) -> tuple[PartialPermutation, PartialSYT, PartialSYT]:
    """Partial permutation and tableau pair of an alternating tableau.

    Crosses of the square growth diagram give the arcs column -> row.  The
    first tableau collects the negative parts along the right border (its
    entries are the rows without a cross), the second the positive parts
    along the bottom border (columns without a cross).
    """
    r = a.r
    pos, neg, crosses = _backward_sweeps(a)
    try:
        Filling(r, r, tuple((i + 1, j + 1) for i, j in crosses))
    except GrowthError as exc:
        raise GrowthError(f"input is not a valid alternating tableau: {exc}") from exc
    pi = PartialPermutation(r, tuple(sorted((i + 1, j + 1) for i, j in crosses)))
    tab_p = syt_from_chain([neg[r][y] for y in range(r + 1)])
    tab_q = syt_from_chain([pos[x][r] for x in range(r + 1)])
    return pi, tab_p, tab_q


def perm_growth_inverse(
    pi: PartialPermutation,
    tab_p: PartialSYT,
    tab_q: PartialSYT,
    r: int,
    n: int,
) -> AlternatingTableau:
    """Rebuild the alternating tableau from a partial permutation and its
    tableau pair; inverse of ``perm_growth``."""
    if pi.r != r:
        raise GrowthError(f"permutation ground size {pi.r} != {r}")
    if tab_p.entries() != frozenset(range(1, r + 1)) - pi.range():
        raise GrowthError("first tableau entries must complement the range")
    if tab_q.entries() != frozenset(range(1, r + 1)) - pi.domain():
        raise GrowthError("second tableau entries must complement the domain")
    p_chain = chain_from_syt(tab_p, r)
    q_chain = chain_from_syt(tab_q, r)
    crosses = {(i - 1, j - 1) for i, j in pi.arcs}
    pos: list[list[Partition | None]] = [[None] * (r + 1) for _ in range(r + 1)]
    neg: list[list[Partition | None]] = [[None] * (r + 1) for _ in range(r + 1)]
    for y in range(r + 1):
        pos[0][y] = EMPTY
        neg[r][y] = p_chain[y]
    for x in range(r + 1):
        pos[x][r] = q_chain[x]
        neg[x][0] = EMPTY
    for j in range(r - 1, -1, -1):
        for i in range(r):
            pos[i + 1][j] = forward_cell(
                pos[i][j + 1], pos[i][j], pos[i + 1][j + 1], (i, j) in crosses
            )
    for i in range(r - 1, -1, -1):
        for j in range(r):
            neg[i][j + 1] = forward_cell(
                neg[i + 1][j], neg[i + 1][j + 1], neg[i][j], (i, j) in crosses
            )
    try:
        sc = []
        for i in range(r + 1):
            sc.append(assemble_staircase(pos[i][i], neg[i][i], n))
            if i < r:
                sc.append(assemble_staircase(pos[i + 1][i], neg[i + 1][i], n))
        return AlternatingTableau(tuple(sc))
    except (ShapeError, TableauError) as exc:
        raise GrowthError(f"data does not assemble to a rank-{n} tableau: {exc}") from exc


def full_perm_from_alt(a: AlternatingTableau) -> PartialPermutation:
    """The (total) permutation of an empty-shape alternating tableau."""
    if not a.shape.is_zero:
        raise GrowthError("total permutation requires an empty-shape tableau")
    pi, tab_p, tab_q = perm_growth(a)
    if tab_p.rows or tab_q.rows or not pi.is_total:
        raise GrowthError("internal error: empty shape must give a total permutation")
    return pi


# ---------------------------------------------------------------------------
# Whole growth diagrams, for inspection and serialization.

@dataclass(frozen=True)
class GrowthDiagram:
    """Corner labels plus filling.

    ``kind`` is "triangular" (partition corners, telling Sundaram's story)
    or "square" (positive/negative partition pairs on every corner).
    Crosses carry a decoration: "x" on the diagonal, "+" below, "-" above.
    """

    kind: str
    size: int
    n: int
    pos: tuple[tuple[Partition | None, ...], ...]
    neg: tuple[tuple[Partition | None, ...], ...] | None
    filling: Filling

    def decoration(self, col: int, row: int) -> str:
        if self.kind == "triangular" or col == row:
            return "x"
        return "+" if row > col else "-"

    def corner_staircase(self, x: int, y: int, rank: int) -> Staircase:
        if self.neg is None:
            raise GrowthError("triangular diagrams have partition corners")
        return assemble_staircase(self.pos[x][y], self.neg[x][y], rank)

    @property
    def display_rank(self) -> int:
        """Smallest rank at which every corner assembles to a staircase."""
        if self.neg is None:
            return self.n
        worst = self.n
        for x in range(self.size + 1):
            for y in range(self.size + 1):
                worst = max(worst, len(self.pos[x][y]) + len(self.neg[x][y]))
        return worst


def growth_diagram_oscillating(o: OscillatingTableau) -> GrowthDiagram:
    r = o.r
    corners, crosses = _triangular_backward(o)
    grid = tuple(
        tuple(corners.get((x, y)) for y in range(r + 2))
        for x in range(r + 2)
    )
    return GrowthDiagram(
        "triangular", r, o.n, grid, None, Filling(r, r, tuple((i, j) for i, j in crosses))
    )


def growth_diagram_alternating(a: AlternatingTableau) -> GrowthDiagram:
    """The full square diagram: all corners labelled on both sides."""
    r = a.r
    pos, neg, crosses = _backward_sweeps(a)
    cross_set = set(crosses)
    for j in range(r - 1, -1, -1):
        for i in range(r):
            if pos[i + 1][j] is None:
                pos[i + 1][j] = forward_cell(
                    pos[i][j + 1], pos[i][j], pos[i + 1][j + 1], (i, j) in cross_set
                )
    for i in range(r - 1, -1, -1):
        for j in range(r):
            if neg[i][j + 1] is None:
                neg[i][j + 1] = forward_cell(
                    neg[i + 1][j], neg[i + 1][j + 1], neg[i][j], (i, j) in cross_set
                )
    return GrowthDiagram(
        "square",
        r,
        a.n,
        tuple(tuple(col) for col in pos),
        tuple(tuple(col) for col in neg),
        Filling(r, r, tuple((i + 1, j + 1) for i, j in crosses)),
    )


def growth_to_json(g: GrowthDiagram) -> str:
    crosses = [[c, r, g.decoration(c, r)] for c, r in g.filling.crosses]
    if g.kind == "triangular":
        corners = [
            [None if p is None else partition_to_text(p) for p in col] for col in g.pos
        ]
        return json.dumps(
            {"kind": g.kind, "size": g.size, "n": g.n, "corners": corners, "crosses": crosses}
        )
    rank = g.display_rank
    corners = [
        [staircase_to_text(g.corner_staircase(x, y, rank)) for y in range(g.size + 1)]
        for x in range(g.size + 1)
    ]
    return json.dumps(
        {"kind": g.kind, "size": g.size, "n": rank, "corners": corners, "crosses": crosses}
    )


def render_growth_text(g: GrowthDiagram) -> str:
    """Corner labels in a grid, with cell contents interleaved."""
    if g.kind == "triangular":
        ys = range(1, g.size + 2)
        xs = range(1, g.size + 2)
        label = lambda x, y: "" if g.pos[x][y] is None else (partition_to_text(g.pos[x][y]) or "0")
    else:
        ys = range(g.size + 1)
        xs = range(g.size + 1)
        rank = g.display_rank
        label = lambda x, y: staircase_to_text(g.corner_staircase(x, y, rank))
    cross_at = {(c, r): g.decoration(c, r) for c, r in g.filling.crosses}
    cells = [[label(x, y) for x in xs] for y in ys]
    width = max((len(s) for row in cells for s in row), default=1)
    step = width + 3
    lines = []
    for row_idx, row in enumerate(cells):
        lines.append("   ".join(s.rjust(width) for s in row).rstrip())
        if row_idx < len(cells) - 1:
            marks = [" "] * (step * len(row))
            for col_idx in range(len(row) - 1):
                mark = cross_at.get((col_idx + 1, row_idx + 1))
                if mark:
                    marks[step * col_idx + width + 1] = mark
            lines.append("".join(marks).rstrip())
    return "\n".join(lines) + "\n"
