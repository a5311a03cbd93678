"""Severi degree engine against the brute-force oracle and frozen values."""

import random

import pytest

from curvecount import seqs, severi
from curvecount.severi import MemoStore, SeveriIndex

from helpers import oracle_degree, oracle_second_sum


def idx(d, delta, alpha=(), beta=()):
    return SeveriIndex(d, delta, alpha, beta)


# ----------------------------------------------------------- validation
def test_weight_mismatch_rejected():
    with pytest.raises(severi.WeightMismatch):
        severi.validate(2, 1, (), ())
    with pytest.raises(severi.WeightMismatch):
        severi.validate(3, 0, (1,), (1,))


def test_nonpositive_degree_rejected():
    with pytest.raises(severi.NonPositiveDegree):
        severi.validate(0, 0, (), ())


def test_validate_canonicalizes():
    index = severi.validate(3, 1, (3, 0, 0), (0, 0))
    assert index.alpha == (3,)
    assert index.beta == ()


def test_delta_may_be_out_of_range():
    # the index is legal; its degree is 0
    index = severi.validate(2, 5, (), (2,))
    assert severi.severi_degree(index) == 0
    assert severi.severi_degree(severi.validate(2, -1, (), (2,))) == 0


# ------------------------------------------------------- genus, dimension
def test_genus_examples():
    assert severi.genus(idx(3, 1, (), (3,))) == 0
    assert severi.genus(idx(4, 3, (), (4,))) == 0
    assert severi.genus(idx(2, 1, (), (2,))) == -1  # excess node
    assert severi.genus(idx(5, 2, (), (5,))) == 4


def test_dimension_examples():
    assert severi.dimension(idx(3, 1, (), (3,))) == 8
    assert severi.dimension(idx(4, 3, (), (4,))) == 11
    assert severi.dimension(idx(3, 1, (3,), ())) == 5
    assert severi.dimension(idx(1, 0, (1,), ())) == 1
    assert severi.dimension(idx(1, 0, (), (1,))) == 2


def all_valid_indices(d_max):
    return [
        index for d in range(1, d_max + 1) for index in severi.all_indices(d)
    ]


@pytest.mark.parametrize("d", range(1, 6))
def test_dimension_two_forms_agree_everywhere(d):
    # dimension() evaluates both closed forms and raises on disagreement;
    # recompute the second form here independently as well
    for index in severi.all_indices(d):
        r = severi.dimension(index)
        g = severi.genus(index)
        assert r == 2 * index.d + g - 1 + seqs.size(index.beta)


# ------------------------------------------------------------ first sum
def test_first_sum_examples():
    assert severi.first_sum_terms(idx(3, 1, (), (3,))) == [
        (1, idx(3, 1, (1,), (2,)))
    ]
    assert severi.first_sum_terms(idx(3, 1, (3,), ())) == []
    assert severi.first_sum_terms(idx(2, 0, (), (0, 1))) == [
        (2, idx(2, 0, (0, 1), ()))
    ]


def test_first_sum_children_valid_and_smaller():
    rng = random.Random(23)
    for index in rng.sample(all_valid_indices(5), 60):
        for j, child in severi.first_sum_terms(index):
            assert child.d == index.d and child.delta == index.delta
            assert seqs.size(child.beta) == seqs.size(index.beta) - 1
            assert index.beta[j - 1] > 0


# ------------------------------------------------------------ second sum
def test_second_sum_requires_degeneration_room():
    with pytest.raises(ValueError):
        severi.second_sum_terms(idx(1, 0, (), (1,)))


def test_second_sum_frozen_examples():
    # oracle-derived: the (2,0,(1),(1)) list is empty (its only candidate
    # increments are filtered by the delta' bound)
    assert severi.second_sum_terms(idx(2, 0, (1,), (1,))) == []
    assert severi.second_sum_terms(idx(3, 1, (), (3,))) == []
    assert severi.second_sum_terms(idx(2, 0, (2,), ())) == [
        (1, idx(1, 0, (), (1,)))
    ]
    assert severi.second_sum_terms(idx(2, 1, (2,), ())) == [
        (1, idx(1, 1, (), (1,))),
        (2, idx(1, 0, (1,), ())),
    ]
    # the three degenerations of the fully-assigned nodal cubic; the
    # coefficient 3 is the entrywise binomial C((3), (1))
    assert sorted(severi.second_sum_terms(idx(3, 1, (3,), ()))) == sorted(
        [
            (1, idx(2, 1, (), (2,))),
            (2, idx(2, 0, (), (0, 1))),
            (3, idx(2, 0, (1,), (1,))),
        ]
    )


@pytest.mark.parametrize("d", range(2, 6))
def test_second_sum_matches_bruteforce_oracle(d):
    for index in severi.all_indices(d):
        got = sorted(
            (coeff, child.d, child.delta, child.alpha, child.beta)
            for coeff, child in severi.second_sum_terms(index)
        )
        expected = sorted(
            (coeff, *child)
            for coeff, child in oracle_second_sum(
                index.d, index.delta, index.alpha, index.beta
            )
        )
        assert got == expected


def test_second_sum_children_valid():
    for index in severi.all_indices(5):
        for coeff, child in severi.second_sum_terms(index):
            assert coeff > 0
            assert child.d == index.d - 1
            assert 0 <= child.delta <= index.delta
            assert seqs.leq(child.alpha, index.alpha)
            assert seqs.leq(index.beta, child.beta)


# --------------------------------------------------------------- degrees
FROZEN_DEGREES = [
    # (d, delta, alpha, beta, degree)
    (1, 0, (1,), (), 1),
    (1, 0, (), (1,), 1),
    (2, 0, (), (2,), 1),
    (2, 0, (1,), (1,), 1),
    (2, 0, (), (0, 1), 2),  # conics tangent to the line
    (2, 1, (), (2,), 3),  # nodal conics
    (2, 1, (1,), (1,), 3),
    (2, 1, (2,), (), 2),
    (2, 1, (), (0, 1), 0),
    (3, 1, (), (3,), 12),  # rational cubics through 8 points
    (3, 1, (3,), (), 10),
    (3, 2, (), (3,), 21),  # conic + line through 7 points: C(7,2)
    (3, 3, (), (3,), 15),  # triangles through 6 points
    (4, 1, (), (4,), 27),
    (4, 2, (), (4,), 225),
    (4, 3, (), (4,), 675),  # 620 irreducible + C(11,2) line + cubic
]


@pytest.mark.parametrize("d,delta,alpha,beta,expected", FROZEN_DEGREES)
def test_frozen_degrees(d, delta, alpha, beta, expected):
    assert severi.severi_degree(idx(d, delta, alpha, beta)) == expected


def test_decomposition_of_the_twelve():
    # walking one point to the line: 12 splits into tangent conics (twice),
    # the three point-conic pairs, nodal conics plus the line, and the
    # nodal-conic term with corrected profile (0),(2)
    memo = MemoStore()
    n = lambda *a: severi.severi_degree(idx(*a), memo)
    assert n(3, 1, (), (3,)) == (
        2 * n(2, 0, (), (2,))
        + 3 * n(2, 0, (1,), (1,))
        + 2 * n(2, 0, (), (0, 1))
        + n(2, 1, (), (2,))
    )
    assert n(3, 1, (3,), ()) == (
        n(2, 1, (), (2,)) + 2 * n(2, 0, (), (0, 1)) + 3 * n(2, 0, (1,), (1,))
    )


@pytest.mark.parametrize("d", range(2, 13))
def test_one_node_law(d):
    assert severi.severi_degree(idx(d, 1, (), (d,))) == 3 * (d - 1) ** 2


@pytest.mark.parametrize("d", range(1, 5))
def test_degrees_match_oracle_everywhere(d):
    memo = MemoStore()
    oracle_memo = {}
    for index in severi.all_indices(d):
        assert severi.severi_degree(index, memo) == oracle_degree(
            index.d, index.delta, index.alpha, index.beta, oracle_memo
        )


def test_degrees_nonnegative():
    memo = MemoStore()
    for index in all_valid_indices(5):
        assert severi.severi_degree(index, memo) >= 0


def test_memo_transparency():
    # a degree computed through a warm shared memo equals the same degree
    # recomputed from scratch, and equals the recursion's right-hand side
    rng = random.Random(29)
    shared = MemoStore()
    pool = all_valid_indices(5)
    sample = [rng.choice(pool) for _ in range(100)]
    for index in sample:
        warm = severi.severi_degree(index, shared)
        cold = severi.severi_degree(index, MemoStore())
        assert warm == cold
        if index.d >= 2:
            rhs_memo = MemoStore()
            rhs = sum(
                j * severi.severi_degree(child, rhs_memo)
                for j, child in severi.first_sum_terms(index)
            ) + sum(
                coeff * severi.severi_degree(child, rhs_memo)
                for coeff, child in severi.second_sum_terms(index)
            )
            assert warm == rhs


def test_memo_write_once():
    memo = MemoStore()
    index = idx(3, 1, (), (3,))
    severi.severi_degree(index, memo)
    memo.put(index, 12)  # benign identical rewrite
    with pytest.raises(RuntimeError):
        memo.put(index, 13)


def test_memo_counters_move():
    memo = MemoStore()
    index = idx(3, 1, (), (3,))
    severi.severi_degree(index, memo)
    misses = memo.misses
    assert misses > 0
    severi.severi_degree(index, memo)
    assert memo.hits > 0
    assert memo.misses == misses


# ----------------------------------------------------------------- table
def test_all_indices_count_and_order():
    rows = severi.all_indices(2)
    assert [r.sort_key() for r in rows] == sorted(r.sort_key() for r in rows)
    # d = 2: 5 profile pairs, delta in {0, 1}
    assert len(rows) == 10
    assert len(severi.all_indices(1)) == 2


def test_severi_table_contents():
    table = severi.severi_table(3, 1)
    keys = [rec.index.sort_key() for rec in table]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))
    # d = 1: delta = 0 only; d = 2: 5 pairs x 2; d = 3: 10 pairs x 2
    assert len(table) == 2 + 10 + 20
    by_index = {rec.index: rec for rec in table}
    hero = by_index[idx(3, 1, (), (3,))]
    assert hero.degree == 12 and hero.dim == 8 and hero.genus == 0
    for rec in table:
        assert rec.degree >= 0
        assert rec.dim == severi.dimension(rec.index)
        assert rec.genus == severi.genus(rec.index)


def test_severi_table_delta_cap():
    # delta_max exceeding d(d-1)/2 is capped per degree
    table = severi.severi_table(2, 99)
    assert {rec.index.delta for rec in table if rec.index.d == 1} == {0}
    assert {rec.index.delta for rec in table if rec.index.d == 2} == {0, 1}


def test_severi_table_rejects_bad_bounds():
    with pytest.raises(severi.NonPositiveDegree):
        severi.severi_table(0, 1)
    with pytest.raises(ValueError):
        severi.severi_table(2, -1)
