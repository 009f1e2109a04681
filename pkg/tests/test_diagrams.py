from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from minuscule.diagrams import (
    DiagramError,
    NoncrossingSetPartition,
    PartialPermutation,
    PerfectMatching,
    catalan,
    corteel_crossings,
    invert,
    lis_length,
    matching_from_json,
    matching_to_json,
    matching_to_text,
    max_crossing_matching,
    ncpartition_to_perm,
    perfect_matchings,
    perm_to_ncpartition,
    permutation_from_json,
    permutation_to_json,
    permutation_to_text,
    render_chord_svg,
    reverse_complement,
    reverse_matching,
    rotate_matching,
    rotate_permutation,
)

M9 = PerfectMatching(9, ((1, 4), (2, 9), (3, 6)))


def test_validation():
    with pytest.raises(DiagramError):
        PerfectMatching(4, ((1, 2), (2, 3)))
    with pytest.raises(DiagramError):
        PerfectMatching(4, ((1, 1),))
    with pytest.raises(DiagramError):
        PartialPermutation(3, ((1, 2), (2, 2)))
    with pytest.raises(DiagramError):
        NoncrossingSetPartition(4, ((1, 3), (2, 4)))


def test_rotation_and_reversal_examples():
    assert rotate_matching(M9).pairs == ((1, 3), (2, 5), (4, 7))
    assert reverse_matching(M9).pairs == ((1, 8), (4, 7), (6, 9))


def test_rotation_order_divides_r():
    for r in range(0, 11, 2):
        for m in perfect_matchings(r):
            t = m
            for _ in range(r):
                t = rotate_matching(t)
            assert t == m


def test_reversal_is_involution_and_dihedral():
    for r in (4, 6, 8):
        for m in perfect_matchings(r):
            assert reverse_matching(reverse_matching(m)) == m
            lhs = reverse_matching(rotate_matching(reverse_matching(m)))
            t = m
            for _ in range(r - 1):
                t = rotate_matching(t)
            assert lhs == t  # reverse-rotate-reverse is the inverse rotation


def test_rotation_and_reversal_preserve_max_crossing():
    for r in (4, 6, 8):
        for m in perfect_matchings(r):
            c = max_crossing_matching(m)
            assert max_crossing_matching(rotate_matching(m)) == c
            assert max_crossing_matching(reverse_matching(m)) == c


def test_permutation_ops_examples():
    pi = PartialPermutation.from_one_line((5, 4, 1, 2, 3))
    assert rotate_permutation(pi).one_line() == (4, 1, 5, 2, 3)
    assert reverse_complement(PartialPermutation(2, ((2, 1),))).arcs == ((1, 2),)
    assert invert(pi).one_line() == (3, 4, 5, 2, 1)


def test_reverse_complement_involution():
    for r in range(1, 7):
        from itertools import permutations

        for values in permutations(range(1, r + 1)):
            pi = PartialPermutation.from_one_line(values)
            assert reverse_complement(reverse_complement(pi)) == pi
            assert invert(invert(pi)) == pi


def _mutually_crossing(pairs):
    seq = sorted(pairs)
    opens = [p[0] for p in seq]
    closes = [p[1] for p in seq]
    return all(
        opens[t] < opens[t + 1] for t in range(len(seq) - 1)
    ) and all(
        closes[t] < closes[t + 1] for t in range(len(seq) - 1)
    ) and opens[-1] < closes[0]


def _max_crossing_oracle(m):
    best = 0
    for k in range(1, len(m.pairs) + 1):
        for sub in combinations(m.pairs, k):
            if _mutually_crossing(sub):
                best = k
    return best


def test_max_crossing_examples():
    fig = PerfectMatching(8, ((1, 6), (2, 4), (3, 8), (5, 7)))
    assert max_crossing_matching(fig) == 2  # 3-noncrossing
    assert max_crossing_matching(PerfectMatching(4, ((1, 4), (2, 3)))) == 1
    assert max_crossing_matching(PerfectMatching(0, ())) == 0


def test_max_crossing_against_subset_oracle():
    for r in (2, 4, 6, 8):
        for m in perfect_matchings(r):
            assert max_crossing_matching(m) == _max_crossing_oracle(m)


def _lis_oracle(values):
    best = 0
    for k in range(1, len(values) + 1):
        for sub in combinations(values, k):
            if all(sub[t] < sub[t + 1] for t in range(k - 1)):
                best = max(best, k)
    return best


def test_lis_examples():
    assert lis_length(PartialPermutation.from_one_line((1, 2, 3, 4, 5))) == 5
    assert lis_length(PartialPermutation.from_one_line((5, 4, 1, 2, 3))) == 3
    assert lis_length(PartialPermutation.from_one_line((5, 4, 3, 2, 1))) == 1


@given(st.permutations(list(range(1, 9))))
def test_lis_against_oracle(values):
    pi = PartialPermutation.from_one_line(tuple(values))
    assert lis_length(pi) == _lis_oracle(tuple(values))


def test_corteel_examples():
    nc = PartialPermutation(
        8, ((1, 8), (2, 1), (3, 7), (4, 5), (5, 4), (6, 3), (7, 6), (8, 2))
    )
    assert corteel_crossings(nc) == frozenset()
    assert corteel_crossings(PartialPermutation.from_one_line((5, 4, 1, 2, 3)))
    ident = PartialPermutation.from_one_line((1, 2, 3, 4))
    assert corteel_crossings(ident) == frozenset()


def test_ncpartition_examples():
    nc = PartialPermutation(
        8, ((1, 8), (2, 1), (3, 7), (4, 5), (5, 4), (6, 3), (7, 6), (8, 2))
    )
    part = perm_to_ncpartition(nc)
    assert part.blocks == ((1, 2, 8), (3, 6, 7), (4, 5))
    assert ncpartition_to_perm(part) == nc
    ident = PartialPermutation.from_one_line((1, 2, 3))
    assert perm_to_ncpartition(ident).blocks == ((1,), (2,), (3,))
    with pytest.raises(DiagramError):
        perm_to_ncpartition(PartialPermutation.from_one_line((2, 4, 1, 3)))


def test_ncpartition_round_trip_exhaustive():
    from minuscule.verify import enumerate_ncpartitions

    for r in range(0, 7):
        count = 0
        for part in enumerate_ncpartitions(r):
            count += 1
            assert perm_to_ncpartition(ncpartition_to_perm(part)) == part
        assert count == catalan(r)


def test_mirror():
    part = NoncrossingSetPartition(4, ((1, 2), (3,), (4,)))
    assert part.mirror().blocks == ((1,), (2,), (3, 4))


def test_serialization_round_trip():
    assert matching_to_text(M9) == "{{1,4},{2,9},{3,6}}"
    assert matching_from_json(matching_to_json(M9)) == M9
    pi = PartialPermutation(7, ((3, 2), (4, 4), (5, 1), (6, 7)))
    assert permutation_to_text(pi) == "{(3,2),(4,4),(5,1),(6,7)}"
    assert permutation_from_json(permutation_to_json(pi)) == pi


def test_svg_structure_and_determinism():
    fig_matching = PerfectMatching(8, ((1, 6), (2, 4), (3, 8), (5, 7)))
    svg = render_chord_svg(fig_matching)
    assert svg.count("<line") == 4 and "marker-end" not in svg
    fig_perm = PartialPermutation.from_one_line((5, 4, 1, 2, 3))
    svg2 = render_chord_svg(fig_perm)
    assert svg2.count("marker-end") == 5
    assert render_chord_svg(fig_matching) == svg
    loops = render_chord_svg(PartialPermutation.from_one_line((1, 2)))
    assert loops.count("<circle") == 2  # fixed points become loops
    with pytest.raises(DiagramError):
        render_chord_svg(PerfectMatching(0, ()))


def test_catalan():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
