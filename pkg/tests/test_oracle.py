import math

import pytest

from dyckclosure.approximation import approximate, verify_approximation
from dyckclosure.dyck import is_one_sided
from dyckclosure.errors import NotFound, NotTwoSided, ResourceBound
from dyckclosure.free_group import kernel_member
from dyckclosure.oracle import (
    ONE_SIDED,
    TWO_SIDED,
    bfs_minimal_witness,
    catalan,
    closed_walks,
    count_members,
    exhaustive_equivalence,
    one_sided_words,
)
from dyckclosure.quotients import cyclic3_quotient, evaluate, mod2_quotient, random_quotient, trivial_quotient
from dyckclosure.words import PairedAlphabet, enumerate_words, format_word

from oracles import W, empty, naive_one_sided


def test_catalan():
    assert [catalan(k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_closed_walks_small_values():
    assert [closed_walks(2, L) for L in (0, 2, 4, 6)] == [1, 4, 28, 232]
    assert [closed_walks(1, L) for L in (2, 4, 6)] == [math.comb(2 * k, k) for k in (1, 2, 3)]
    assert closed_walks(2, 5) == 0


def test_closed_walks_match_kernel_count():
    alpha = PairedAlphabet(2)
    for L in range(0, 9, 2):
        assert sum(1 for w in enumerate_words(alpha, L) if kernel_member(w)) == closed_walks(2, L)


def test_count_tables():
    t = count_members(ONE_SIDED, 2, 6)
    assert t.rows == ((2, 2), (4, 8), (6, 40)) and not t.mismatches()
    t = count_members(TWO_SIDED, 2, 6)
    assert t.rows == ((2, 4), (4, 28), (6, 232)) and not t.mismatches()
    t = count_members(TWO_SIDED, 1, 4)
    assert t.rows == ((2, 2), (4, 6))
    assert t.to_csv() == "two_sided,1,2,2\ntwo_sided,1,4,6\n"


def test_count_cap():
    with pytest.raises(ResourceBound):
        count_members(TWO_SIDED, 2, 10, cap=1000)


def test_one_sided_generation_matches_filter():
    for n, L in ((1, 10), (2, 8), (3, 6)):
        alpha = PairedAlphabet(n)
        generated = [w.letters for w in one_sided_words(alpha, L)]
        filtered = [
            w.letters for length in range(0, L + 1, 2) for w in enumerate_words(alpha, length) if naive_one_sided(format_word(w))
        ]
        assert generated == filtered


def test_bfs_examples():
    assert bfs_minimal_witness(trivial_quotient(), W("AbBa"), 10) == empty()
    assert bfs_minimal_witness(mod2_quotient(), W("Aa"), 10) == empty()
    u = bfs_minimal_witness(cyclic3_quotient(), W("Aa"), 8)
    assert len(u) <= 8 and is_one_sided(u)
    assert evaluate(cyclic3_quotient(), u) == evaluate(cyclic3_quotient(), W("Aa"))


def test_bfs_is_minimal_and_lexicographic():
    q = random_quotient(PairedAlphabet(2), 4, 3)
    w = W("BAab")
    u = bfs_minimal_witness(q, w, 40)
    target = evaluate(q, w)
    alpha = PairedAlphabet(2)
    # brute-force over all words of each length up to |u|
    first = None
    for L in range(0, len(u) + 1, 2):
        for cand in enumerate_words(alpha, L):
            if naive_one_sided(format_word(cand)) and evaluate(q, cand) == target:
                first = cand
                break
        if first is not None:
            break
    assert first == u


def test_bfs_errors():
    with pytest.raises(NotTwoSided):
        bfs_minimal_witness(trivial_quotient(), W("a"), 4)
    with pytest.raises(NotFound):
        bfs_minimal_witness(cyclic3_quotient(), W("Aa"), 0)


def test_bfs_never_longer_than_construction():
    alpha = PairedAlphabet(2)
    for seed in range(6):
        q = random_quotient(alpha, 3 + seed % 3, 100 + seed)
        for w in (W("Aa"), W("BAab"), W("AbBa")):
            ours = approximate(q, w)
            u = bfs_minimal_witness(q, w, len(ours))
            assert len(u) <= len(ours)
            assert verify_approximation(q, w, u)


def test_exhaustive_equivalence_small():
    assert exhaustive_equivalence(3, 2)
    rep = exhaustive_equivalence(4, 1)
    assert rep and rep.checked == sum(2**L for L in range(5))
    with pytest.raises(ResourceBound):
        exhaustive_equivalence(10, 2, cap=1000)


def test_count_one_sided_closed_form_n3():
    t = count_members(ONE_SIDED, 3, 6)
    assert not t.mismatches()
    assert [c for _, c in t.rows] == [3, 18, 135]
