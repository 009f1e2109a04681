from itertools import product

import pytest

from minuscule.local_rules import (
    cactus_apply,
    decorate_evacuation_diagram,
    evacuate,
    evacuation_diagram,
    half_promote_alternating,
    local_rule,
    permutation_from_decorations,
    promote,
    promote_alternating,
    promote_empty_shape_variant,
    promote_oscillating,
    promotion_diagram,
    render_promotion_diagram,
)
from minuscule.shapes import (
    HYPEROCTAHEDRAL,
    SYMMETRIC,
    ShapeError,
    Staircase,
    dom_vector,
    hyperoctahedral_group,
    symmetric_group,
    zero_staircase,
)
from minuscule.tableaux import (
    TableauError,
    alternating_from_text,
    alternating_from_word,
    oscillating_from_text,
    tableau_to_text,
    word_from_alternating,
)
from minuscule.verify import enumerate_alternating, enumerate_oscillating

ALT5 = "0,0,0;1,0,0;1,0,-1;2,0,-1;2,-1,-1;2,0,-1;2,-1,-1;2,0,-1;1,0,-1;1,0,0;0,0,0"
ALT5_HALF = "1,0,0;2,0,0;2,0,-1;2,1,-1;2,0,-1;2,1,-1;1,1,-1;1,1,0;1,0,0"
ALT5_PR = "0,0,0;1,0,0;1,0,-1;1,1,-1;1,0,-1;1,1,-1;1,0,-1;1,0,0;1,0,-1;1,0,0;0,0,0"
ALT7 = (
    "0,0,0;1,0,0;1,0,-1;2,0,-1;2,0,-2;2,0,-1;2,-1,-1;3,-1,-1;2,-1,-1;"
    "2,0,-1;2,0,-2;3,0,-2;3,0,-3;3,1,-3;2,1,-3"
)
ALT7_EV = (
    "0,0,0;1,0,0;1,0,-1;1,0,0;1,0,-1;2,0,-1;2,0,-2;3,0,-2;2,0,-2;"
    "3,0,-2;3,0,-3;3,1,-3;2,1,-3;2,2,-3;2,1,-3"
)

# every row of the evacuation diagram of ALT7, with its starting column
ALT7_EVAC_ROWS = [
    (0, ALT7),
    (2, "1,0,0;2,0,0;2,0,-1;2,0,0;2,0,-1;3,0,-1;2,0,-1;2,1,-1;2,1,-2;3,1,-2;3,1,-3;3,2,-3;2,2,-3"),
    (2, "0,0,0;1,0,0;1,0,-1;1,0,0;1,0,-1;2,0,-1;1,0,-1;1,1,-1;1,1,-2;2,1,-2;2,1,-3;2,2,-3;2,1,-3"),
    (4, "1,0,0;1,1,0;1,1,-1;2,1,-1;1,1,-1;2,1,-1;2,1,-2;3,1,-2;3,1,-3;3,2,-3;3,1,-3"),
    (4, "0,0,0;1,0,0;1,0,-1;2,0,-1;1,0,-1;2,0,-1;2,0,-2;3,0,-2;3,0,-3;3,1,-3;3,0,-3"),
    (6, "1,0,0;2,0,0;1,0,0;2,0,0;2,0,-1;3,0,-1;3,0,-2;3,1,-2;3,0,-2"),
    (6, "0,0,0;1,0,0;0,0,0;1,0,0;1,0,-1;2,0,-1;2,0,-2;2,1,-2;2,0,-2"),
    (8, "1,0,0;2,0,0;2,0,-1;3,0,-1;3,0,-2;3,1,-2;3,0,-2"),
    (8, "0,0,0;1,0,0;1,0,-1;2,0,-1;2,0,-2;2,1,-2;2,0,-2"),
    (10, "1,0,0;2,0,0;2,0,-1;2,1,-1;2,0,-1"),
    (10, "0,0,0;1,0,0;1,0,-1;1,1,-1;1,0,-1"),
    (12, "1,0,0;1,1,0;1,0,0"),
    (12, "0,0,0;1,0,0;1,0,-1"),
    (14, "1,0,0"),
    (14, "0,0,0"),
]

OSC9 = ";1;11;21;2;21;11;21;211;21"
OSC9_EV = ";1;11;111;211;221;321;311;31;21"


def test_local_rule_examples():
    assert local_rule(
        Staircase((1, 1, 0)), Staircase((2, 1, 1)), Staircase((2, 2, 1)),
        symmetric_group(3),
    ).entries == (2, 1, 0)
    assert local_rule(
        Staircase((2, 0)), Staircase((2, 1)), Staircase((2, 0)),
        hyperoctahedral_group(2),
    ).entries == (2, 1)
    kappa = Staircase((3, 1, 0))
    lam = Staircase((3, 1, -1))
    assert local_rule(kappa, lam, lam, symmetric_group(3)) == kappa
    with pytest.raises(ShapeError):
        local_rule(kappa, lam, lam, symmetric_group(2))


def _unit_vectors(n):
    for i in range(n):
        for s in (1, -1):
            yield tuple(s if j == i else 0 for j in range(n))


def test_local_rule_symmetry_on_unit_steps():
    # kappa -> lambda -> nu by unit steps, entries in [-3, 3], n <= 4
    for n in range(1, 5):
        vals = range(-3, 4)
        doms = [
            v for v in product(vals, repeat=n) if all(v[i] >= v[i + 1] for i in range(n - 1))
        ]
        for family in (SYMMETRIC, HYPEROCTAHEDRAL):
            pool = doms if family == SYMMETRIC else [
                v for v in doms if all(x >= 0 for x in v)
            ]
            dset = set(pool)
            for kappa in pool:
                for u in _unit_vectors(n):
                    lam = tuple(a + b for a, b in zip(kappa, u))
                    if lam not in dset:
                        continue
                    for w in _unit_vectors(n):
                        nu = tuple(a + b for a, b in zip(lam, w))
                        if nu not in dset:
                            continue
                        mu = dom_vector(
                            tuple(k + v - l for k, l, v in zip(kappa, lam, nu)), family
                        )
                        back = dom_vector(
                            tuple(k + v - m for k, m, v in zip(kappa, mu, nu)), family
                        )
                        assert back == lam


def test_promote_oscillating_examples():
    assert tableau_to_text(
        promote_oscillating(oscillating_from_text(";1;2;1", 1))
    ) == ";1;;1"
    pr = promote_oscillating(oscillating_from_text(";1;;1", 1))
    assert tableau_to_text(pr) in (";1;;1", ";1;2;1", ";1;2;3")


def test_promote_power_is_identity_on_empty_shape():
    for n in range(1, 4):
        for r in range(0, 9):
            for osc in enumerate_oscillating(r, n):
                if osc.shape.parts:
                    continue
                t = osc
                for _ in range(r):
                    t = promote_oscillating(t)
                assert t == osc
    for n in range(1, 5):
        for r in range(0, 6):
            if n < r - 1:
                continue
            for alt in enumerate_alternating(r, n, zero_staircase(n)):
                t = alt
                for _ in range(r):
                    t = promote_alternating(t)
                assert t == alt


def test_half_promotion_matches_printed_row():
    alt = alternating_from_text(ALT5)
    half = half_promote_alternating(alt)
    inner = ";".join(
        ",".join(map(str, s.entries)) for s in half.staircases[1:-1]
    )
    assert inner == ALT5_HALF
    assert half.staircases[0].is_zero and half.staircases[-1] == alt.shape


def test_half_promotion_squares_satisfy_local_rule():
    w = symmetric_group(3)
    for alt in enumerate_alternating(3, 3):
        half = half_promote_alternating(alt)
        # interior squares: half[i] = rule(half[i-1], alt[i], alt[i+1])
        for i in range(2, 2 * alt.r):
            assert half.staircases[i] == local_rule(
                half.staircases[i - 1], alt.staircases[i], alt.staircases[i + 1], w
            )


def test_promotion_matches_printed_rows():
    alt = alternating_from_text(ALT5)
    assert tableau_to_text(promote_alternating(alt)) == ALT5_PR
    assert word_from_alternating(promote_alternating(alt)) == (
        (1, 3), (2, 2), (2, 2), (3, 3), (3, 1),
    )


def test_promotion_preserves_shape():
    for n in range(1, 4):
        for r in range(0, 4):
            for alt in enumerate_alternating(r, n):
                assert promote_alternating(alt).shape == alt.shape
    for n in range(1, 3):
        for r in range(0, 6):
            for osc in enumerate_oscillating(r, n):
                assert promote_oscillating(osc).shape == osc.shape


def test_promotion_diagram_render_columns():
    d = promotion_diagram(alternating_from_text(ALT5))
    text = render_promotion_diagram(d)
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[0].split() == ALT5.split(";")
    assert lines[1].split() == ALT5_HALF.split(";")
    assert lines[2].split() == ALT5_PR.split(";")


def test_evacuation_diagram_matches_figure():
    d = evacuation_diagram(alternating_from_text(ALT7))
    assert len(d.rows) == len(ALT7_EVAC_ROWS)
    for (offset, text), row, got_offset in zip(ALT7_EVAC_ROWS, d.rows, d.offsets):
        assert got_offset == offset
        assert ";".join(",".join(map(str, s.entries)) for s in row) == text


def test_evacuate_examples():
    assert tableau_to_text(evacuate(oscillating_from_text(OSC9, 3))) == OSC9_EV
    assert tableau_to_text(evacuate(alternating_from_text(ALT7))) == ALT7_EV


def test_evacuate_is_involution():
    for n in range(1, 3):
        for r in range(0, 6):
            for osc in enumerate_oscillating(r, n):
                assert evacuate(evacuate(osc)) == osc
    for n in range(1, 4):
        for r in range(0, 4):
            for alt in enumerate_alternating(r, n):
                assert evacuate(evacuate(alt)) == alt


def test_cactus_basics():
    osc = oscillating_from_text(OSC9, 3)
    assert cactus_apply(osc, 1, osc.r) == evacuate(osc)
    assert cactus_apply(osc, 4, 4) == osc
    with pytest.raises(TableauError):
        cactus_apply(osc, 0, 2)
    with pytest.raises(TableauError):
        cactus_apply(osc, 3, 99)
    alt = alternating_from_text(ALT5)
    assert cactus_apply(alt, 1, alt.r) == evacuate(alt)


def test_promotion_is_the_cactus_word():
    for alt in enumerate_alternating(3, 2):
        assert promote(alt) == cactus_apply(cactus_apply(alt, 2, 3), 1, 3)
    for osc in enumerate_oscillating(4, 2):
        assert promote(osc) == cactus_apply(cactus_apply(osc, 2, 4), 1, 4)


def test_variant_promotion_agrees_on_empty_shape():
    alt = alternating_from_text(ALT5)
    assert promote_empty_shape_variant(alt) == promote_alternating(alt)
    for n in range(1, 5):
        for r in range(0, 5):
            for alt in enumerate_alternating(r, n, zero_staircase(n)):
                assert promote_empty_shape_variant(alt) == promote_alternating(alt)
    single = alternating_from_word(((1, 1),), 1)
    assert promote_empty_shape_variant(single) == single


def test_variant_promotion_rejects_nonempty_shape():
    bad = alternating_from_word(((1, 2),), 2)
    with pytest.raises(TableauError):
        promote_empty_shape_variant(bad)


def test_decorations_match_figure():
    d = decorate_evacuation_diagram(evacuation_diagram(alternating_from_text(ALT7)))
    assert d.decorations == ((1, 9, "-"), (3, 5, "-"), (7, 8, "x"), (12, 14, "+"))
    assert permutation_from_decorations(d).arcs == ((3, 2), (4, 4), (5, 1), (6, 7))


def test_decoration_parity_and_permutation():
    from minuscule.growth import perm_growth

    for r in range(1, 5):
        for n in (r, r + 1):
            for alt in enumerate_alternating(r, n, zero_staircase(n)):
                d = decorate_evacuation_diagram(evacuation_diagram(alt))
                for row, col, mark in d.decorations:
                    if mark == "-":
                        assert row % 2 == 1 and col % 2 == 1
                    elif mark == "+":
                        assert row % 2 == 0 and col % 2 == 0
                    else:
                        assert row % 2 == 1 and col % 2 == 0
                assert permutation_from_decorations(d) == perm_growth(alt)[0]


def test_decorated_diagram_of_evacuation_is_transpose():
    for r in range(1, 4):
        n = r + 1
        for alt in enumerate_alternating(r, n, zero_staircase(n)):
            d = decorate_evacuation_diagram(evacuation_diagram(alt))
            d_ev = decorate_evacuation_diagram(evacuation_diagram(evacuate(alt)))
            swap = {"-": "+", "+": "-", "x": "x"}
            mirrored = {
                (2 * r + 1 - col, 2 * r + 1 - row, swap[mark])
                for row, col, mark in d.decorations
            }
            assert mirrored == set(d_ev.decorations)
