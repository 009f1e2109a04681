"""Promotion, evacuation and the cactus-group action via minuscule local rules.

The single local rule is ``mu = dom_W(kappa + nu - lambda)``.  Iterating it
along a row of a tableau computes the crystal commutor, hence promotion;
stacking promotions (without the two appended entries) yields the
evacuation diagram, whose right column read bottom to top is the
evacuation.  The cactus generator ``s_{1,q}`` evacuates the length-``q``
prefix; all other generators are words in these.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .shapes import (
    EMPTY,
    Partition,
    ShapeError,
    Staircase,
    WeylKind,
    assemble_staircase,
    dom_vector,
    split_staircase,
    zero_staircase,
    HYPEROCTAHEDRAL,
    SYMMETRIC,
)
from .tableaux import (
    AlternatingTableau,
    OscillatingTableau,
    StaircaseTableau,
    TableauError,
)


def local_rule(kappa: Staircase, lam: Staircase, nu: Staircase, w: WeylKind) -> Staircase:
    """``dom_W(kappa + nu - lambda)`` for staircases of rank ``w.n``.

    The rule is symmetric: with ``mu`` the result, ``lambda`` is recovered
    as ``dom_W(kappa + nu - mu)``.
    """
    if not (kappa.n == lam.n == nu.n == w.n):
        raise ShapeError("local rule arguments must all have the Weyl group's rank")
    vec = tuple(k + n - l for k, n, l in zip(kappa.entries, nu.entries, lam.entries))
    return Staircase(dom_vector(vec, w.family))


def _rule_s(prev: Sequence[int], right: Sequence[int], left: Sequence[int]) -> tuple[int, ...]:
    return dom_vector(
        tuple(p + b - a for p, b, a in zip(prev, right, left)), SYMMETRIC
    )


def _rule_h(prev: Sequence[int], right: Sequence[int], left: Sequence[int]) -> tuple[int, ...]:
    return dom_vector(
        tuple(p + b - a for p, b, a in zip(prev, right, left)), HYPEROCTAHEDRAL
    )


# ---------------------------------------------------------------------------
# Promotion.

def promote_oscillating(o: OscillatingTableau) -> OscillatingTableau:
    """Promotion of an oscillating tableau.

    The new row satisfies ``p[i] = dom_H(p[i-1] + o[i+1] - o[i])`` and the
    final shape is copied over, so promotion preserves the shape.
    """
    n, r = o.n, o.r
    if r == 0:
        return o
    vecs = [p.as_vector(n) for p in o.shapes]
    row = [(0,) * n]
    for i in range(1, r):
        row.append(_rule_h(row[-1], vecs[i + 1], vecs[i]))
    try:
        shapes = tuple(Partition(v) for v in row) + (o.shapes[r],)
        return OscillatingTableau(shapes, n)
    except (ShapeError, TableauError) as exc:
        raise TableauError(f"promotion produced an invalid tableau: {exc}") from exc


def half_promote_alternating(a: AlternatingTableau) -> StaircaseTableau:
    """The middle row of the promotion diagram, as a staircase tableau.

    Entry 1 copies ``a[1] = e_1``; entry ``i`` is the local rule applied to
    ``a[i]``, ``a[i+1]`` and the previous entry; the final entry copies the
    shape of ``a``.
    """
    t = a.staircases
    r = a.r
    if r == 0:
        return StaircaseTableau(t)
    mid = [t[1].entries]
    for i in range(2, 2 * r):
        mid.append(_rule_s(mid[-1], t[i + 1].entries, t[i].entries))
    sc = (zero_staircase(a.n),) + tuple(Staircase(v) for v in mid) + (t[2 * r],)
    return StaircaseTableau(sc)


@dataclass(frozen=True)
class PromotionDiagram:
    """Three rows: input tableau, half promotion, promoted tableau."""

    top: AlternatingTableau
    middle: StaircaseTableau
    bottom: AlternatingTableau


def promotion_diagram(a: AlternatingTableau) -> PromotionDiagram:
    half = half_promote_alternating(a)
    return PromotionDiagram(a, half, _promotion_from_half(a, half))


def _promotion_from_half(a: AlternatingTableau, half: StaircaseTableau) -> AlternatingTableau:
    r = a.r
    if r == 0:
        return a
    h = [s.entries for s in half.staircases[1 : 2 * r]]  # h[j] is entry j+1
    bot = [(0,) * a.n]
    for i in range(1, 2 * r - 1):
        bot.append(_rule_s(bot[-1], h[i], h[i - 1]))
    sc = tuple(Staircase(v) for v in bot) + (half.staircases[2 * r - 1], a.staircases[2 * r])
    try:
        return AlternatingTableau(sc)
    except TableauError as exc:
        raise TableauError(f"promotion produced an invalid tableau: {exc}") from exc


def promote_alternating(a: AlternatingTableau) -> AlternatingTableau:
    """Promotion of an alternating tableau via its promotion diagram."""
    return _promotion_from_half(a, half_promote_alternating(a))


def promote(t: OscillatingTableau | AlternatingTableau):
    if isinstance(t, OscillatingTableau):
        return promote_oscillating(t)
    return promote_alternating(t)


def promote_empty_shape_variant(a: AlternatingTableau) -> AlternatingTableau:
    """Promotion of an empty-shape tableau by two single-letter rotations.

    Moves the leading vector letter past the rest of the word, then the
    leading dual letter; agrees with ``promote_alternating`` exactly on
    empty shape.
    """
    if not a.shape.is_zero:
        raise TableauError("variant promotion requires an empty-shape tableau")
    if a.r == 0:
        return a

    def rotate_letter(seq: tuple[Staircase, ...]) -> tuple[Staircase, ...]:
        out = [(0,) * a.n]
        for j in range(2, len(seq)):
            out.append(_rule_s(out[-1], seq[j].entries, seq[j - 1].entries))
        return tuple(Staircase(v) for v in out) + (seq[-1],)

    return AlternatingTableau(rotate_letter(rotate_letter(a.staircases)))


# ---------------------------------------------------------------------------
# Evacuation diagrams.

@dataclass(frozen=True)
class EvacuationDiagram:
    """Stacked un-appended promotions of a tableau.

    ``rows[k]`` starts at column ``offsets[k]`` and always ends at the
    common right edge.  For alternating tableaux every promotion step
    contributes two rows (half promotion, then promotion); for oscillating
    tableaux one.  ``decorations`` holds ``(row, col, mark)`` cell marks in
    1-based coordinates with ``mark`` one of ``"-"``, ``"+"``, ``"x"``.
    """

    rows: tuple[tuple, ...]
    offsets: tuple[int, ...]
    kind: str
    n: int
    decorations: tuple[tuple[int, int, str], ...] = ()

    @property
    def width(self) -> int:
        return self.offsets[0] + len(self.rows[0]) - 1

    def entry(self, row: int, col: int):
        """Entry in diagram row ``row`` at absolute column ``col``, or None."""
        if not (0 <= row < len(self.rows)):
            return None
        j = col - self.offsets[row]
        if not (0 <= j < len(self.rows[row])):
            return None
        return self.rows[row][j]

    def right_column(self) -> tuple:
        return tuple(row[-1] for row in self.rows)


def evacuation_diagram(t: OscillatingTableau | AlternatingTableau) -> EvacuationDiagram:
    if isinstance(t, OscillatingTableau):
        return _evacuation_diagram_oscillating(t)
    return _evacuation_diagram_alternating(t)


def _evacuation_diagram_oscillating(o: OscillatingTableau) -> EvacuationDiagram:
    n = o.n
    rows = [tuple(o.shapes)]
    offsets = [0]
    row = [p.as_vector(n) for p in o.shapes]
    while len(row) > 1:
        nxt = [(0,) * n]
        for i in range(1, len(row) - 1):
            nxt.append(_rule_h(nxt[-1], row[i + 1], row[i]))
        rows.append(tuple(Partition(v) for v in nxt))
        offsets.append(offsets[-1] + 1)
        row = nxt
    return EvacuationDiagram(tuple(rows), tuple(offsets), "oscillating", n)


def _evacuation_diagram_alternating(a: AlternatingTableau) -> EvacuationDiagram:
    n = a.n
    rows = [tuple(a.staircases)]
    offsets = [0]
    row = [s.entries for s in a.staircases]
    while len(row) > 1:
        mid = [row[1]]
        for i in range(2, len(row) - 1):
            mid.append(_rule_s(mid[-1], row[i + 1], row[i]))
        bot = [(0,) * n]
        for i in range(1, len(mid)):
            bot.append(_rule_s(bot[-1], mid[i], mid[i - 1]))
        rows.append(tuple(Staircase(v) for v in mid))
        rows.append(tuple(Staircase(v) for v in bot))
        offsets.extend([offsets[-1] + 2, offsets[-1] + 2])
        row = bot
    return EvacuationDiagram(tuple(rows), tuple(offsets), "alternating", n)


def evacuate(t: OscillatingTableau | AlternatingTableau):
    """Evacuation: right column of the evacuation diagram, bottom to top."""
    diagram = evacuation_diagram(t)
    column = tuple(reversed(diagram.right_column()))
    try:
        if isinstance(t, OscillatingTableau):
            return OscillatingTableau(column, t.n)
        return AlternatingTableau(column)
    except TableauError as exc:
        raise TableauError(f"evacuation produced an invalid tableau: {exc}") from exc


# ---------------------------------------------------------------------------
# Cactus-group action.

def _prefix_evacuate(t, k: int):
    """The generator ``s_{1,k}``: evacuate the length-``k`` prefix in place."""
    if k <= 1:
        return t
    if isinstance(t, OscillatingTableau):
        ev = evacuate(t.prefix(k))
        return OscillatingTableau(ev.shapes + t.shapes[k + 1 :], t.n)
    ev = evacuate(t.prefix(k))
    return AlternatingTableau(ev.staircases + t.staircases[2 * k + 1 :])


def cactus_apply(t, p: int, q: int):
    """Apply the cactus generator ``s_{p,q}``.

    ``s_{1,k}`` evacuates the length-``k`` prefix; for ``p > 1`` the
    identity ``s_{p,q} = s_{1,q} s_{1,q-p+1} s_{1,q}`` is used.
    ``s_{p,p}`` is the identity.
    """
    r = t.r
    if not (1 <= p <= q <= r):
        raise TableauError(f"cactus indices ({p},{q}) out of range for length {r}")
    if p == q:
        return t
    if p == 1:
        return _prefix_evacuate(t, q)
    return _prefix_evacuate(_prefix_evacuate(_prefix_evacuate(t, q), q - p + 1), q)


# ---------------------------------------------------------------------------
# Decoration of alternating evacuation diagrams.  Cells matching one of
# three staircase patterns are marked; the marks recover the growth-diagram
# filling of the input tableau.

def _add_column_cell(p: Partition) -> Partition:
    return Partition(p.parts + (1,))


def _match_mark(tl: Staircase, tr: Staircase, bl: Staircase | None, br: Staircase, n: int) -> str | None:
    if bl is None:
        e1 = assemble_staircase(Partition((1,)), EMPTY, n)
        if tl == e1 and br == e1 and tr.is_zero:
            return "x"
        return None
    if tr != bl:
        return None
    pos, neg = split_staircase(tr)
    pos_up, neg_up = _add_column_cell(pos), _add_column_cell(neg)
    minus = split_staircase(tl) == (pos, neg_up) and split_staircase(br) == (pos_up, neg)
    plus = split_staircase(tl) == (pos_up, neg) and split_staircase(br) == (pos, neg_up)
    if minus and plus:
        raise TableauError("evacuation diagram cell matches two decoration patterns")
    if minus:
        return "-"
    if plus:
        return "+"
    return None


def decorate_evacuation_diagram(d: EvacuationDiagram) -> EvacuationDiagram:
    """Mark all cells of an alternating evacuation diagram matching the
    minus, plus or times pattern."""
    if d.kind != "alternating":
        raise TableauError("only alternating evacuation diagrams carry decorations")
    marks = []
    for row in range(1, len(d.rows)):
        for col in range(d.offsets[row - 1] + 1, d.width + 1):
            tl = d.entry(row - 1, col - 1)
            tr = d.entry(row - 1, col)
            bl = d.entry(row, col - 1)
            br = d.entry(row, col)
            if tl is None or tr is None or br is None:
                continue
            mark = _match_mark(tl, tr, bl, br, d.n)
            if mark is not None:
                marks.append((row, col, mark))
    return replace(d, decorations=tuple(marks))


def permutation_from_decorations(d: EvacuationDiagram):
    """Partial permutation encoded by a decorated evacuation diagram.

    A minus in cell (2i-1, 2j-1) records the arc j -> i, a plus in cell
    (2j, 2i) records i -> j, and a times in cell (2i-1, 2i) records the
    fixed point i.
    """
    from .diagrams import PartialPermutation

    r = (len(d.rows) - 1) // 2
    arcs = []
    for row, col, mark in d.decorations:
        if mark == "-":
            if row % 2 == 0 or col % 2 == 0:
                raise TableauError(f"minus mark at even position ({row},{col})")
            arcs.append(((col + 1) // 2, (row + 1) // 2))
        elif mark == "+":
            if row % 2 == 1 or col % 2 == 1:
                raise TableauError(f"plus mark at odd position ({row},{col})")
            arcs.append((row // 2, col // 2))
        else:
            if row % 2 == 0 or col % 2 == 1:
                raise TableauError(f"times mark at position ({row},{col})")
            i, j = (row + 1) // 2, col // 2
            if i != j:
                raise TableauError(f"times mark off the diagonal at ({row},{col})")
            arcs.append((i, i))
    return PartialPermutation(r, tuple(sorted(arcs)))


# ---------------------------------------------------------------------------
# Text rendering, matching the three-row layout used for promotion
# diagrams and the staggered layout of evacuation diagrams.

def _compact(entry) -> str:
    from .shapes import partition_to_text, staircase_to_text

    if isinstance(entry, Partition):
        return partition_to_text(entry) or "-"
    return staircase_to_text(entry)


def _render_grid(grid: list[dict[int, str]], width: int) -> str:
    cols = [max((len(row.get(c, "")) for row in grid), default=0) for c in range(width + 1)]
    lines = []
    for row in grid:
        cells = [row.get(c, "").rjust(cols[c]) for c in range(width + 1)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def render_promotion_diagram(d: PromotionDiagram) -> str:
    r = d.top.r
    top = {i: _compact(s) for i, s in enumerate(d.top.staircases)}
    mid = {i + 2: _compact(s) for i, s in enumerate(d.middle.staircases[1 : 2 * r])}
    bot_entries = d.bottom.staircases
    bot = {i + 2: _compact(s) for i, s in enumerate(bot_entries[: 2 * r - 1])}
    bot[2 * r + 1] = _compact(bot_entries[2 * r - 1])
    bot[2 * r + 2] = _compact(bot_entries[2 * r])
    return _render_grid([top, mid, bot], 2 * r + 2)


def render_evacuation_diagram(d: EvacuationDiagram) -> str:
    grid = [
        {off + i: _compact(entry) for i, entry in enumerate(row)}
        for row, off in zip(d.rows, d.offsets)
    ]
    return _render_grid(grid, d.width)
