"""Exhaustive enumerators and executable theorem checkers.

Every intertwining statement relating promotion/evacuation of tableaux to
rotation/reversal of chord diagrams becomes a predicate checked over the
complete list of instances at desk scale.  Checkers never raise on a
mathematical failure; they collect counterexamples into a report.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from itertools import combinations, permutations as iter_permutations
from typing import Callable, Iterator, Sequence

from .diagrams import (
    NoncrossingSetPartition,
    PartialPermutation,
    PerfectMatching,
    catalan,
    corteel_crossings,
    invert,
    lis_length,
    max_crossing_matching,
    noncrossing_perfect_matchings,
    perm_to_ncpartition,
    rotate_matching,
    rotate_permutation,
    reverse_complement,
    reverse_matching,
)
from .growth import (
    PartialSYT,
    chain_from_syt,
    full_perm_from_alt,
    perm_growth,
    perm_growth_inverse,
    sundaram,
    sundaram_inverse,
    syt_from_chain,
)
from .local_rules import (
    cactus_apply,
    evacuate,
    half_promote_alternating,
    promote,
    promote_alternating,
    promote_oscillating,
)
from .shapes import EMPTY, Partition, Staircase, conjugate, extent, zero_staircase
from .tableaux import (
    AlternatingTableau,
    OscillatingTableau,
    alternating_from_word,
    reverse_alternating,
    strip_zeros,
    tableau_to_text,
)


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate: a kind, a length, and optional bounds."""

    kind: str  # oscillating | alternating | matching | permutation | ncpartition
    r: int
    n: int | None = None
    shape: str = "any"  # "any" | "empty"
    bound: int | None = None  # crossing bound (matchings) or LIS bound (permutations)

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("length must be nonnegative")
        if self.kind in ("oscillating", "alternating") and (self.n is None or self.n < 1):
            raise ValueError(f"{self.kind} enumeration needs a positive rank")


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one exhaustive check."""

    theorem: str
    instances: int
    failures: tuple[str, ...]
    seconds: float
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "pass" if self.passed else f"FAIL ({len(self.failures)} counterexamples)"
        lines = [f"{self.theorem}: {state}, {self.instances} instances, {self.seconds:.2f}s"]
        lines.extend(f"  note: {n}" for n in self.notes)
        lines.extend(f"  counterexample: {f}" for f in self.failures[:10])
        if len(self.failures) > 10:
            lines.append(f"  ... and {len(self.failures) - 10} more")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instances": self.instances,
            "failures": list(self.failures),
            "seconds": self.seconds,
            "notes": list(self.notes),
            "passed": self.passed,
        }


class _Check:
    """Failure collector with timing."""

    def __init__(self, theorem: str) -> None:
        self.theorem = theorem
        self.instances = 0
        self.failures: list[str] = []
        self.notes: list[str] = []
        self.start = time.perf_counter()

    def ensure(self, ok: bool, detail: str) -> None:
        if not ok:
            self.failures.append(detail)

    def report(self) -> TheoremReport:
        return TheoremReport(
            self.theorem,
            self.instances,
            tuple(self.failures),
            time.perf_counter() - self.start,
            tuple(self.notes),
        )


# ---------------------------------------------------------------------------
# Enumeration by depth-first extension of valid prefixes.

def enumerate_oscillating(
    r: int, n: int, shape: Partition | None = None
) -> Iterator[OscillatingTableau]:
    """All n-symplectic oscillating tableaux of length r (optionally of
    fixed final shape)."""

    def steps(p: Partition) -> Iterator[Partition]:
        parts = p.parts
        for i in range(len(parts)):
            if i == 0 or parts[i - 1] > parts[i]:
                yield Partition(parts[:i] + (parts[i] + 1,) + parts[i + 1 :])
        if len(parts) < n:
            yield Partition(parts + (1,))
        for i in range(len(parts)):
            if i == len(parts) - 1 or parts[i] > parts[i + 1]:
                yield Partition(parts[:i] + (parts[i] - 1,) + parts[i + 1 :])

    def rec(prefix: list[Partition]) -> Iterator[OscillatingTableau]:
        if len(prefix) == r + 1:
            if shape is None or prefix[-1] == shape:
                yield OscillatingTableau(tuple(prefix), n)
            return
        steps_left = r + 1 - len(prefix)
        if shape is not None and abs(prefix[-1].size - shape.size) > steps_left:
            return
        for nxt in steps(prefix[-1]):
            prefix.append(nxt)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([EMPTY])


def enumerate_alternating(
    r: int, n: int, shape: Staircase | None = None
) -> Iterator[AlternatingTableau]:
    """All GL(n)-alternating tableaux of length r (optionally of fixed shape)."""

    def ups(v: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for k in range(n):
            if k == 0 or v[k - 1] > v[k]:
                yield v[:k] + (v[k] + 1,) + v[k + 1 :]

    def downs(v: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for k in range(n):
            if k == n - 1 or v[k] - 1 >= v[k + 1]:
                yield v[:k] + (v[k] - 1,) + v[k + 1 :]

    target = shape.entries if shape is not None else None

    def rec(prefix: list[tuple[int, ...]]) -> Iterator[AlternatingTableau]:
        if len(prefix) == 2 * r + 1:
            if target is None or prefix[-1] == target:
                yield AlternatingTableau(tuple(Staircase(v) for v in prefix))
            return
        if target is not None:
            dist = sum(abs(a - b) for a, b in zip(prefix[-1], target))
            if dist > 2 * r + 1 - len(prefix):
                return
        gen = ups if len(prefix) % 2 == 1 else downs
        for nxt in gen(prefix[-1]):
            prefix.append(nxt)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([(0,) * n])


def enumerate_matchings(r: int, bound: int | None = None) -> Iterator[PerfectMatching]:
    """Perfect matchings of {1..r}, optionally with max crossing <= bound."""
    from .diagrams import perfect_matchings

    for m in perfect_matchings(r):
        if bound is None or max_crossing_matching(m) <= bound:
            yield m


def enumerate_permutations(r: int, bound: int | None = None) -> Iterator[PartialPermutation]:
    """Permutations of {1..r}, optionally with LIS length <= bound."""
    for values in iter_permutations(range(1, r + 1)):
        pi = PartialPermutation.from_one_line(values)
        if bound is None or lis_length(pi) <= bound:
            yield pi


def enumerate_ncpartitions(r: int) -> Iterator[NoncrossingSetPartition]:
    """All noncrossing set partitions of {1..r}."""
    from .diagrams import blocks_cross

    def rec(k: int, blocks: tuple[tuple[int, ...], ...]) -> Iterator[tuple]:
        if k == r + 1:
            yield blocks
            return
        for idx, b in enumerate(blocks):
            grown = b + (k,)
            if all(not blocks_cross(grown, o) for j, o in enumerate(blocks) if j != idx):
                yield from rec(k + 1, blocks[:idx] + (grown,) + blocks[idx + 1 :])
        yield from rec(k + 1, blocks + ((k,),))

    if r == 0:
        yield NoncrossingSetPartition(0, ())
        return
    for blocks in rec(2, ((1,),)):
        yield NoncrossingSetPartition(r, blocks)


def enumerate_spec(spec: EnumerationSpec) -> Iterator:
    kind = spec.kind
    if kind == "oscillating":
        shape = EMPTY if spec.shape == "empty" else None
        yield from enumerate_oscillating(spec.r, spec.n, shape)
    elif kind == "alternating":
        shape = zero_staircase(spec.n) if spec.shape == "empty" else None
        yield from enumerate_alternating(spec.r, spec.n, shape)
    elif kind == "matching":
        yield from enumerate_matchings(spec.r, spec.bound)
    elif kind == "permutation":
        yield from enumerate_permutations(spec.r, spec.bound)
    elif kind == "ncpartition":
        yield from enumerate_ncpartitions(spec.r)
    else:
        raise ValueError(f"unknown enumeration kind {kind!r}")


# ---------------------------------------------------------------------------
# Schuetzenberger evacuation of partial standard Young tableaux, computed by
# stacking jeu-de-taquin local rules on the chain (the same triangle as an
# evacuation diagram, with the type-A conjugate rule).

def _jdt_cell(prev: Partition, cur: Partition, nxt: Partition) -> Partition:
    width = max(prev.part(0), cur.part(0), nxt.part(0), 1)
    pc = conjugate(prev).as_vector(width)
    cc = conjugate(cur).as_vector(width)
    nc = conjugate(nxt).as_vector(width)
    vec = sorted((p + n - c for p, n, c in zip(pc, nc, cc)), reverse=True)
    return conjugate(Partition(tuple(vec)))


def schuetzenberger_evacuation_syt(t: PartialSYT, r: int) -> PartialSYT:
    """Evacuation of a partial standard Young tableau on ground set {1..r}.

    The entry set maps to its complement-reversal e -> r+1-e and the shape
    is preserved; the map is an involution.
    """
    chain = list(chain_from_syt(t, r))
    rights = [chain[-1]]
    while len(chain) > 1:
        nxt = [EMPTY]
        for i in range(1, len(chain) - 1):
            nxt.append(_jdt_cell(nxt[-1], chain[i], chain[i + 1]))
        rights.append(nxt[-1])
        chain = nxt
    return syt_from_chain(tuple(reversed(rights)))


# ---------------------------------------------------------------------------
# Theorem checkers.

def check_matching_theorems(
    r_max: int = 8, n_max: int = 3, all_shapes: bool = True
) -> TheoremReport:
    """Sundaram's correspondence intertwines promotion with rotation and
    evacuation with reversal (empty shape), and for arbitrary shape sends
    evacuation to reversal plus tableau evacuation.

    Promotion moves the first letter of the word to the end, so the
    matching of the promoted tableau is the original one with all indices
    shifted down; applying the one-step rotation to it recovers M(osc).
    """
    chk = _Check(f"matchings: rotation/reversal, r<={r_max}, n<={n_max}")
    for n in range(1, n_max + 1):
        for r in range(0, r_max + 1):
            for osc in enumerate_oscillating(r, n):
                empty = not osc.shape.parts
                if not empty and not all_shapes:
                    continue
                chk.instances += 1
                m, tab = sundaram(osc)
                ev = evacuate(osc)
                m_ev, tab_ev = sundaram(ev)
                label = f"n={n} osc={tableau_to_text(osc)}"
                chk.ensure(m_ev == reverse_matching(m), f"{label}: M(ev) != rev M")
                chk.ensure(
                    tab_ev == schuetzenberger_evacuation_syt(tab, r),
                    f"{label}: M_T(ev) != ev M_T",
                )
                if empty:
                    pr = promote_oscillating(osc)
                    chk.ensure(
                        rotate_matching(sundaram(pr)[0]) == m,
                        f"{label}: rot M(pr) != M",
                    )
    return chk.report()


def check_permutation_theorems(r_max: int = 5) -> TheoremReport:
    """Rotation/promotion and reverse-complement/evacuation for empty-shape
    alternating tableaux, on the branches where the bounds apply, plus the
    negative control showing the rank bound is needed."""
    chk = _Check(f"permutations: rotation/reverse-complement, r<={r_max}")
    for r in range(0, r_max + 1):
        ranks = {max(1, r - 1), max(1, r), r + 1, 1, 2}
        for n in sorted(ranks):
            rot_applies = n >= r - 1 or n <= 2
            ev_rc_applies = (n % 2 == 0 and n >= r) or (n % 2 == 1 and n >= r - 1)
            ev_irc_applies = n <= 2
            if not (rot_applies or ev_rc_applies or ev_irc_applies):
                continue
            count = 0
            for alt in enumerate_alternating(r, n, zero_staircase(n)):
                chk.instances += 1
                count += 1
                pi = full_perm_from_alt(alt)
                label = f"n={n} alt={tableau_to_text(alt)}"
                if rot_applies:
                    chk.ensure(
                        rotate_permutation(full_perm_from_alt(promote_alternating(alt)))
                        == pi,
                        f"{label}: rot Perm(pr) != Perm",
                    )
                ev = evacuate(alt) if (ev_rc_applies or ev_irc_applies) else None
                if ev_rc_applies:
                    chk.ensure(
                        full_perm_from_alt(ev) == reverse_complement(pi),
                        f"{label}: Perm(ev) != rc Perm",
                    )
                if ev_irc_applies:
                    chk.ensure(
                        full_perm_from_alt(ev) == invert(reverse_complement(pi)),
                        f"{label}: Perm(ev) != inverse rc Perm",
                    )
            if n >= r:
                chk.ensure(
                    count == math.factorial(r),
                    f"count of empty-shape rank-{n} length-{r} tableaux is {count}, "
                    f"expected {math.factorial(r)}",
                )
    # Negative control: for n=3, r=5 promotion does not match rotation in
    # either direction.
    alt = alternating_from_word([(1, 3), (1, 2), (2, 2), (2, 1), (3, 1)], 3)
    pi = full_perm_from_alt(alt)
    pr_pi = full_perm_from_alt(promote_alternating(alt))
    chk.ensure(pi.one_line() == (5, 4, 1, 2, 3), "control tableau is not 54123")
    chk.ensure(pr_pi.one_line() == (2, 3, 5, 1, 4), "control promotion is not 23514")
    chk.ensure(
        rotate_permutation(pi).one_line() == (4, 1, 5, 2, 3),
        "control rotation is not 41523",
    )
    chk.ensure(
        pr_pi != rotate_permutation(pi),
        "control: naive rotation identity unexpectedly holds at n=3, r=5",
    )
    chk.ensure(
        rotate_permutation(pr_pi) != pi,
        "control: inverse-direction identity unexpectedly holds at n=3, r=5",
    )
    chk.notes.append(
        "negative control: n=3, r=5 gives Perm(pr)=23514 != rot(54123)=41523"
    )
    return chk.report()


def check_partial_theorems(r_max: int = 3) -> TheoremReport:
    """For r at most floor((n+1)/2): evacuation acts on the permutation as
    reverse-complement and on both tableaux as evacuation."""
    chk = _Check(f"partial permutations: evacuation triple, r<={r_max}, n in {{2r-1,2r}}")
    for r in range(1, r_max + 1):
        for n in (2 * r - 1, 2 * r):
            for alt in enumerate_alternating(r, n):
                chk.instances += 1
                pi, tab_p, tab_q = perm_growth(alt)
                ev = evacuate(alt)
                pi_ev, tab_p_ev, tab_q_ev = perm_growth(ev)
                label = f"n={n} alt={tableau_to_text(alt)}"
                chk.ensure(
                    pi_ev == reverse_complement(pi), f"{label}: Perm(ev) != rc Perm"
                )
                chk.ensure(
                    tab_p_ev == schuetzenberger_evacuation_syt(tab_p, r),
                    f"{label}: P(ev) != ev P",
                )
                chk.ensure(
                    tab_q_ev == schuetzenberger_evacuation_syt(tab_q, r),
                    f"{label}: Q(ev) != ev Q",
                )
    # Negative control: the GL(2) tableau of length 2 is fixed by evacuation
    # although the reverse-complement of its permutation is different.
    g2 = alternating_from_word([(1, 2), (2, 2)], 2)
    pi = perm_growth(g2)[0]
    chk.ensure(evacuate(g2) == g2, "control: length-2 GL(2) tableau not fixed by ev")
    chk.ensure(
        reverse_complement(pi) != pi and pi.arcs == ((2, 1),),
        "control: GL(2) length-2 permutation must be {(2,1)} with rc {(1,2)}",
    )
    chk.notes.append("negative control: r=2 needs n >= 3, GL(2) instance excluded")
    return chk.report()


def check_stability(r_max: int = 4, n_max: int = 6) -> TheoremReport:
    """When every staircase of the tableau and of its promotion has at most
    m nonzero entries, removing n-m zeros commutes with promotion.  The
    report notes an instance whose middle row exceeds extent m, showing the
    hypothesis cannot be weakened to the visible rows only."""
    chk = _Check(f"stability: strip/promote commute, r<={r_max}, m<n<={n_max}")
    witness: str | None = None
    for n in range(2, n_max + 1):
        for r in range(1, r_max + 1):
            for alt in enumerate_alternating(r, n):
                pr = promote_alternating(alt)
                half_ext = max(extent(s) for s in half_promote_alternating(alt).staircases)
                ext = max(alt.max_extent(), pr.max_extent())
                for m in range(max(ext, 1), n):
                    chk.instances += 1
                    stripped = strip_zeros(alt, m)
                    chk.ensure(
                        promote_alternating(stripped) == strip_zeros(pr, m),
                        f"n={n} m={m} alt={tableau_to_text(alt)}: "
                        "strip and promote do not commute",
                    )
                    if witness is None and half_ext > m:
                        witness = (
                            f"n={n} m={m} alt={tableau_to_text(alt)} has a middle-row "
                            f"staircase of extent {half_ext}"
                        )
    if witness is not None:
        chk.notes.append(witness)
    else:
        chk.notes.append("no middle-row staircase exceeded the bound at these sizes")
    return chk.report()


def _cactus_relation_instances(r: int):
    gens = [(p, q) for p in range(1, r + 1) for q in range(p, r + 1)]
    pairs = list(combinations(gens, 2))
    return gens, pairs


def check_cactus_relations(r_max: int, n_max: int, kind: str) -> TheoremReport:
    """The three defining relations of the cactus group hold for the
    implemented action on every enumerated tableau."""
    chk = _Check(f"cactus relations: {kind}, r<={r_max}, n<={n_max}")
    for n in range(1, n_max + 1):
        for r in range(2, r_max + 1):
            gens, gen_pairs = _cactus_relation_instances(r)
            if kind == "oscillating":
                instances = enumerate_oscillating(r, n)
            else:
                instances = enumerate_alternating(r, n)
            for t in instances:
                chk.instances += 1
                label = f"n={n} t={tableau_to_text(t)}"
                for p, q in gens:
                    chk.ensure(
                        cactus_apply(cactus_apply(t, p, q), p, q) == t,
                        f"{label}: s({p},{q}) is not an involution",
                    )
                for (p, q), (k, l) in gen_pairs:
                    if q < k:
                        lhs = cactus_apply(cactus_apply(t, k, l), p, q)
                        rhs = cactus_apply(cactus_apply(t, p, q), k, l)
                        chk.ensure(
                            lhs == rhs, f"{label}: disjoint s({p},{q}), s({k},{l})"
                        )
                    elif p <= k and l <= q:
                        lhs = cactus_apply(cactus_apply(t, k, l), p, q)
                        rhs = cactus_apply(
                            cactus_apply(t, p, q), p + q - l, p + q - k
                        )
                        chk.ensure(
                            lhs == rhs, f"{label}: nested s({p},{q}), s({k},{l})"
                        )
                pr = promote(t)
                via_cactus = cactus_apply(cactus_apply(t, 2, r), 1, r)
                chk.ensure(pr == via_cactus, f"{label}: pr != s(1,r) s(2,r)")
    return chk.report()


def check_gl2_suite(r_max: int = 7) -> TheoremReport:
    """GL(2), empty shape: the correspondence lands bijectively on
    noncrossing set partitions, evacuation is reversal, and evacuation
    matches the inverse reverse-complement of the permutation."""
    chk = _Check(f"GL(2): noncrossing partitions, ev = reversal, r<={r_max}")
    for r in range(1, r_max + 1):
        seen_parts = set()
        count = 0
        for alt in enumerate_alternating(r, 2, zero_staircase(2)):
            chk.instances += 1
            count += 1
            pi = full_perm_from_alt(alt)
            label = f"alt={tableau_to_text(alt)}"
            chk.ensure(not corteel_crossings(pi), f"{label}: crossing arcs")
            part = perm_to_ncpartition(pi)
            seen_parts.add(part)
            ev = evacuate(alt)
            chk.ensure(ev == reverse_alternating(alt), f"{label}: ev != reversal")
            chk.ensure(
                full_perm_from_alt(ev) == invert(reverse_complement(pi)),
                f"{label}: Perm(ev) != inverse rc",
            )
            chk.ensure(
                perm_to_ncpartition(full_perm_from_alt(ev)) == part.mirror(),
                f"{label}: blocks of ev are not the mirror image",
            )
        expected = catalan(r)
        chk.ensure(
            count == expected and len(seen_parts) == expected,
            f"r={r}: {count} tableaux onto {len(seen_parts)} partitions, "
            f"expected Catalan({r}) = {expected}",
        )
    return chk.report()


def check_crossing_oracle(r_max: int = 10, n_max: int = 3) -> TheoremReport:
    """The brute-force maximal crossing of M(osc) equals the largest number
    of parts among the shapes of osc; the image is exactly the set of
    (n+1)-noncrossing perfect matchings."""
    chk = _Check(f"crossing statistic vs shapes, r<={r_max}, n<={n_max}")
    for n in range(1, n_max + 1):
        for r in range(0, r_max + 1, 2):
            images = set()
            for osc in enumerate_oscillating(r, n, EMPTY):
                chk.instances += 1
                m, _ = sundaram(osc)
                images.add(m)
                label = f"n={n} osc={tableau_to_text(osc)}"
                chk.ensure(m.is_perfect(), f"{label}: matching is not perfect")
                chk.ensure(
                    max_crossing_matching(m) == max(len(p) for p in osc.shapes),
                    f"{label}: max crossing != max part count",
                )
            expected = {
                m for m in enumerate_matchings(r, n)
            }
            chk.ensure(
                images == expected,
                f"n={n} r={r}: image has {len(images)} matchings, "
                f"expected the {len(expected)} {n + 1}-noncrossing ones",
            )
    return chk.report()


def check_inverse_pairs(r_max: int = 8, n_max: int = 6) -> TheoremReport:
    """Both growth-diagram correspondences round-trip on every instance
    of the domains used by the intertwining checks."""
    chk = _Check(f"inverse pairs, osc r<={r_max} n<=3, alt r<=4 n<={n_max}")
    for n in range(1, 4):
        for r in range(0, r_max + 1):
            for osc in enumerate_oscillating(r, n):
                chk.instances += 1
                m, tab = sundaram(osc)
                back = sundaram_inverse(m, tab, r, n)
                chk.ensure(
                    back == osc,
                    f"n={n} osc={tableau_to_text(osc)}: sundaram round-trip failed",
                )
    for n in range(1, n_max + 1):
        for r in range(0, min(4, r_max) + 1):
            for alt in enumerate_alternating(r, n):
                chk.instances += 1
                pi, tab_p, tab_q = perm_growth(alt)
                back = perm_growth_inverse(pi, tab_p, tab_q, r, n)
                chk.ensure(
                    back == alt,
                    f"n={n} alt={tableau_to_text(alt)}: square round-trip failed",
                )
    if r_max >= 5:
        for n in range(1, n_max + 1):
            for alt in enumerate_alternating(5, n, zero_staircase(n)):
                chk.instances += 1
                pi, tab_p, tab_q = perm_growth(alt)
                chk.ensure(
                    perm_growth_inverse(pi, tab_p, tab_q, 5, n) == alt,
                    f"n={n} alt={tableau_to_text(alt)}: square round-trip failed",
                )
    return chk.report()


# ---------------------------------------------------------------------------
# Cyclic sieving for noncrossing perfect matchings.

def _poly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [
        (a[t] if t < len(a) else 0) + (b[t] if t < len(b) else 0)
        for t in range(max(len(a), len(b)))
    ]


def qbinom_poly(n: int, k: int) -> list[int]:
    """Coefficients of the Gaussian binomial [n choose k]_q."""
    if not 0 <= k <= n:
        return [0]
    prev: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        cur = [[1]]
        for j in range(1, min(k, m) + 1):
            # [m,j] = [m-1,j-1] + q^j [m-1,j]
            left = prev[j - 1]
            right = [0] * j + prev[j] if j < len(prev) else []
            cur.append(_poly_add(left, right))
        prev = cur
    return prev[k]


def qcatalan_poly(r: int) -> list[int]:
    """Coefficients of the q-Catalan polynomial qbinom(2r,r)_q / [r+1]_q,
    via the polynomial identity qbinom(2r,r) - q*qbinom(2r,r+1)."""
    a = qbinom_poly(2 * r, r)
    b = qbinom_poly(2 * r, r + 1) if r >= 1 else [0]
    coeffs = _poly_add(a, [0] + [-c for c in b])
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def qcatalan_at_root(r: int, k: int) -> complex:
    """The q-Catalan number evaluated at q = exp(k pi i / r).

    Evaluated on the product of quantum integers [r+1..2r] / [1..r+1];
    factors vanishing at the root of unity are paired numerator against
    denominator so the quotient stays finite.
    """
    if r == 0:
        return complex(1)
    d = (2 * r) // math.gcd(k, 2 * r)  # order of the evaluation point
    if d == 1:
        return complex(catalan(r))
    q = cmath.exp(1j * math.pi * k / r)
    num = list(range(r + 1, 2 * r + 1))
    den = list(range(1, r + 2))
    num_zero = [m for m in num if m % d == 0]
    den_zero = [m for m in den if m % d == 0]
    if len(den_zero) > len(num_zero):
        raise ArithmeticError("q-Catalan evaluation has an uncancelled pole")
    value = complex(1)
    for a, b in zip(num_zero, den_zero):
        # lim (1-q^a)/(1-q^b) at a d-th root of unity with d | a, b
        value *= (a / b) * q ** (a - b)
    for m in num_zero[len(den_zero) :]:
        value *= 1 - q**m  # exactly zero
    for m in (m for m in num if m % d != 0):
        value *= 1 - q**m
    for m in (m for m in den if m % d != 0):
        value /= 1 - q**m
    # one surplus denominator factor [m]_q = (1-q^m)/(1-q) overall
    value *= 1 - q
    return value


def csp_qcatalan_check(r_max: int = 6, tol: float = 1e-6) -> TheoremReport:
    """Root-of-unity evaluations of the q-Catalan number count the
    noncrossing perfect matchings fixed by the corresponding rotation."""
    chk = _Check(f"cyclic sieving: q-Catalan vs rotation fixed points, r<={r_max}")
    for r in range(1, r_max + 1):
        matchings = list(noncrossing_perfect_matchings(2 * r))
        for k in range(0, 2 * r):
            chk.instances += 1
            fixed = 0
            for m in matchings:
                rotated = m
                for _ in range(k):
                    rotated = rotate_matching(rotated)
                if rotated == m:
                    fixed += 1
            value = qcatalan_at_root(r, k)
            label = f"r={r} k={k}"
            chk.ensure(
                abs(value.imag) < tol,
                f"{label}: imaginary part {value.imag} exceeds {tol}",
            )
            chk.ensure(
                abs(value.real - fixed) < tol,
                f"{label}: evaluation {value.real} != {fixed} fixed points",
            )
    return chk.report()


# ---------------------------------------------------------------------------
# Suite registry used by the command line.

SUITES: dict[str, Callable[..., TheoremReport]] = {
    "matchings": check_matching_theorems,
    "permutations": check_permutation_theorems,
    "partial": check_partial_theorems,
    "stability": check_stability,
    "cactus-oscillating": lambda r_max=5, n_max=2: check_cactus_relations(
        r_max, n_max, "oscillating"
    ),
    "cactus-alternating": lambda r_max=4, n_max=4: check_cactus_relations(
        r_max, n_max, "alternating"
    ),
    "gl2": check_gl2_suite,
    "crossings": check_crossing_oracle,
    "inverses": check_inverse_pairs,
    "csp": csp_qcatalan_check,
}


def run_suite(name: str, r_max: int | None = None, n_max: int | None = None) -> TheoremReport:
    import inspect

    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    func = SUITES[name]
    accepted = inspect.signature(func).parameters
    kwargs = {}
    if r_max is not None and "r_max" in accepted:
        kwargs["r_max"] = r_max
    if n_max is not None and "n_max" in accepted:
        kwargs["n_max"] = n_max
    return func(**kwargs)
