import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oppm.core import Counter, cmp, is_order_isomorphic_bruteforce
from oppm.match1d import (
    NO_WITNESS,
    Pattern1D,
    duel,
    dueling_stage,
    kmp_match_1d,
    match_1d,
    naive_match_1d,
    order_border_table,
    sweeping_stage,
    witness_table,
)

SAMPLE = (18, 22, 12, 50, 10, 17)


def smallest_witness(p, a):
    """Scan every pair in the overlap for the violation with smallest j."""
    m = len(p)
    for j in range(2, m - a + 1):
        for i in range(1, j):
            if cmp(p[i - 1], p[j - 1]) != cmp(p[i + a - 1], p[j + a - 1]):
                return j
    return None


def window_matches(t, p, x):
    return is_order_isomorphic_bruteforce(p, t[x - 1 : x - 1 + len(p)])


def test_witness_table_example():
    wit = witness_table(SAMPLE)
    assert wit[1] == (1, 2)
    assert wit[4] is NO_WITNESS
    assert len(wit) == len(SAMPLE)


@pytest.mark.parametrize("m", [1, 2, 5, 12])
def test_witness_table_increasing(m):
    assert all(w is NO_WITNESS for w in witness_table(range(m)))


def test_witness_table_two_chars():
    assert witness_table((2, 1))[1] is NO_WITNESS


@given(st.lists(st.integers(1, 6), min_size=1, max_size=16))
def test_witness_table_valid_and_minimal(p):
    wit = witness_table(p)
    m = len(p)
    for a in range(1, m):
        j_min = smallest_witness(p, a)
        if wit[a] is NO_WITNESS:
            assert j_min is None
            assert is_order_isomorphic_bruteforce(p[: m - a], p[a:])
        else:
            i, j = wit[a]
            assert i < j == j_min
            assert cmp(p[i - 1], p[j - 1]) != cmp(p[i + a - 1], p[j + a - 1])


def test_duel_examples():
    pat = Pattern1D.build(SAMPLE)
    assert pat.wit[1] == (1, 2)
    t = (7, 9, 8, 1, 1, 1, 1)
    assert duel(t, 1, 1, pat) == 2
    assert not window_matches(t, SAMPLE, 2)
    t = (7, 8, 9, 1, 1, 1, 1)
    assert duel(t, 1, 1, pat) == 1
    assert not window_matches(t, SAMPLE, 1)


def test_duel_equality_witness():
    p = (1, 1, 2)  # offset 1 overlap (1, 2) vs (1, 1): witness (1, 2) with p[1] == p[2]
    pat = Pattern1D.build(p)
    i, j = pat.wit[1]
    assert p[i - 1] == p[j - 1]
    t = (4, 6, 6, 9)
    c = Counter()
    assert duel(t, 1, 1, pat, c) == 1
    assert c.comparisons == 1


def test_duel_eliminates_non_matches():
    rng = random.Random(7)
    for _ in range(3000):
        m = rng.randint(2, 8)
        sigma = rng.choice((2, 3, 1000))
        p = [rng.randint(1, sigma) for _ in range(m)]
        pat = Pattern1D.build(p)
        offsets = [a for a in range(1, m) if pat.wit[a] is not NO_WITNESS]
        if not offsets:
            continue
        a = rng.choice(offsets)
        t = [rng.randint(1, sigma) for _ in range(m + a)]
        loser = duel(t, 1, a, pat)
        assert loser in (1, 1 + a)
        assert not window_matches(t, p, loser)


def test_dueling_stage_increasing_keeps_all():
    pat = Pattern1D.build((1, 2, 3))
    t = [5, 1, 7, 3, 9, 2]
    assert dueling_stage(t, pat) == [1, 2, 3, 4]


def test_dueling_stage_keeps_true_matches():
    pat = Pattern1D.build((1, 3, 2))
    survivors = dueling_stage((10, 50, 30, 60, 40), pat)
    assert {1, 3} <= set(survivors)


def test_dueling_stage_random_consistent_and_sound():
    rng = random.Random(11)
    for _ in range(2000):
        n = rng.randint(1, 64)
        m = rng.randint(1, min(8, n))
        sigma = rng.choice((2, 4, 8, 1000))
        t = [rng.randint(1, sigma) for _ in range(n)]
        p = [rng.randint(1, sigma) for _ in range(m)]
        pat = Pattern1D.build(p)
        survivors = dueling_stage(t, pat)
        assert set(naive_match_1d(t, p)) <= set(survivors)
        for x, y in zip(survivors, survivors[1:]):
            assert x < y
        for k, x in enumerate(survivors):
            for y in survivors[k + 1 :]:
                if y - x < m:
                    assert smallest_witness(p, y - x) is None


@pytest.mark.parametrize(
    "t, p, candidates, expected",
    [
        ((10, 50, 30, 60, 40), (1, 3, 2), [1, 3], [1, 3]),
        ((10, 50, 30, 60, 40), (1, 3, 2), [], []),
        ((3, 1, 2), (1, 2), [1, 2], [2]),
    ],
)
def test_sweeping_stage_examples(t, p, candidates, expected):
    assert sweeping_stage(t, Pattern1D.build(p), candidates) == expected


def test_sweeping_after_dueling_all_windows():
    # windows 1..3 are not pairwise consistent for (1, 3, 2); duel first
    t, pat = (10, 50, 30, 60, 40), Pattern1D.build((1, 3, 2))
    assert pat.wit[1] is not NO_WITNESS
    assert sweeping_stage(t, pat, dueling_stage(t, pat)) == [1, 3]


def test_sweeping_stage_carry_over_after_mismatch():
    # p = (1, 2, 3, 4) is consistent at every offset; candidates overlap heavily
    pat = Pattern1D.build((1, 2, 3, 4))
    t = (1, 2, 3, 0, 5, 6, 7, 8, 9)
    c = Counter()
    assert sweeping_stage(t, pat, list(range(1, 7)), c) == [4, 5, 6]
    assert c.verify_calls <= 2 * len(t)


@pytest.mark.parametrize("matcher", [match_1d, kmp_match_1d, naive_match_1d])
@pytest.mark.parametrize(
    "t, p, expected",
    [
        ((10, 50, 30, 60, 40), (1, 3, 2), [1, 3]),
        ((4, 8, 1, 9), (4, 8, 1, 9), [1]),
        ((1, 2), (1, 2, 3), []),
        ((5, 5, 5), (7,), [1, 2, 3]),
    ],
)
def test_matchers_examples(matcher, t, p, expected):
    assert matcher(t, p) == expected


@given(
    st.lists(st.integers(1, 4), max_size=40),
    st.lists(st.integers(1, 4), min_size=1, max_size=6),
)
def test_matchers_agree(t, p):
    expected = naive_match_1d(t, p)
    assert match_1d(t, p) == expected
    assert kmp_match_1d(t, p) == expected


def test_order_border_table():
    p = (1, 2, 3, 4)
    pat = Pattern1D.build(p)
    assert order_border_table(p, pat.pn) == [0, 0, 1, 2, 3]
    p = (2, 1, 3)
    assert Pattern1D.build(p).fail == [0, 0, 1, 1]


def test_sweeping_linear_on_periodic_text():
    # every window is a candidate and every one matches
    t = list(range(500))
    pat = Pattern1D.build(range(7))
    c = Counter()
    survivors = dueling_stage(t, pat)
    assert sweeping_stage(t, pat, survivors, c) == list(range(1, 495))
    assert c.verify_calls <= 2 * len(t)


def test_empty_pattern_rejected():
    with pytest.raises(ValueError):
        match_1d((1, 2), ())
    with pytest.raises(ValueError):
        naive_match_1d((1, 2), ())
