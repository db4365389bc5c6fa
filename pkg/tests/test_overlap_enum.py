import numpy as np
import pytest

from oracles import schoolbook_rank
from ringel_ladders.distributions import recurrence_poly
from ringel_ladders.families import Family
from ringel_ladders.overlap_enum import (
    InfeasibleError,
    LadderAssignment,
    RankDistribution,
    RingelAssignment,
    brute_rank_distribution,
    build_ladder_matrix,
    build_ringel_matrix,
    family_rows,
)


def rows_text(m):
    return [m.render().split("\n")[i].replace(" ", "") for i in range(m.dim)]


def test_ladder_examples():
    m = build_ladder_matrix(LadderAssignment((1, 0), (1,)))
    assert rows_text(m) == ["11", "10"]
    assert build_ladder_matrix(LadderAssignment((0, 0, 0), (1, 1))).rank() == 2
    m = build_ladder_matrix(LadderAssignment((1,), ()))
    assert rows_text(m) == ["1"] and m.rank() == 1


def test_ringel_examples():
    m = build_ringel_matrix(RingelAssignment((0, 0, 0), (1,), (0, 0)))
    assert rows_text(m) == ["000", "001", "010"] and m.rank() == 2
    m = build_ringel_matrix(RingelAssignment((1, 1, 1), (0,), (0, 0)))
    assert rows_text(m) == ["100", "010", "001"] and m.rank() == 3
    m = build_ringel_matrix(RingelAssignment((0, 0, 0), (1,), (1, 0)))
    assert rows_text(m) == ["010", "101", "010"] and m.rank() == 2
    m = build_ringel_matrix(RingelAssignment((0, 0, 0), (1,), (1, 1)))
    assert rows_text(m) == ["011", "101", "110"] and m.rank() == 2


def test_assignment_lengths():
    with pytest.raises(ValueError):
        LadderAssignment((0, 0), ())
    with pytest.raises(ValueError):
        RingelAssignment((0, 0), (1,), (0, 0))
    with pytest.raises(ValueError):
        RingelAssignment((0, 0, 0), (), (0, 0))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_encode_decode_and_batch_builder(n):
    codes = np.arange(1 << (3 * n), dtype=np.uint64)
    batch = family_rows(Family.R, n, codes)
    for code in range(0, 1 << (3 * n), 7 if n == 4 else 1):
        a = RingelAssignment.decode(n, code)
        assert a.encode() == code
        m = build_ringel_matrix(a)
        assert tuple(int(r) for r in batch[code]) == m.rows
    for code in range(1 << (2 * n - 1)):
        a = LadderAssignment.decode(n, code)
        assert a.encode() == code
        assert tuple(int(r) for r in family_rows(Family.L, n, np.array([code], dtype=np.uint64))[0]) == build_ladder_matrix(a).rows


def test_ringel_all_n2_by_schoolbook():
    counts = [0] * 4
    for code in range(64):
        counts[schoolbook_rank(build_ringel_matrix(RingelAssignment.decode(2, code)).to_dense())] += 1
    assert counts == [1, 7, 28, 28]
    assert brute_rank_distribution(Family.R, 2).counts == (1, 7, 28, 28)


@pytest.mark.parametrize(
    "fam,n,counts",
    [
        (Family.P, 2, (1, 0, 7, 0)),
        (Family.L, 2, (1, 3, 4)),
        (Family.O, 3, (1, 0, 3, 0)),
        (Family.R, 3, (1, 11, 80, 212, 208)),
    ],
)
def test_brute_examples(fam, n, counts):
    d = brute_rank_distribution(fam, n)
    assert d.counts == counts
    assert d.method == "bruteforce"


@pytest.mark.parametrize("fam", list(Family))
def test_brute_matches_recurrence(fam):
    top = {Family.O: 12, Family.L: 8, Family.P: 7, Family.R: 5}[fam]
    for n in range(1, top + 1):
        d = brute_rank_distribution(fam, n)
        d.check()
        assert d.poly == recurrence_poly(fam, fam.index_for(n))
        if fam.zero_diagonal:
            assert all(c == 0 for c in d.counts[1::2])


def test_index_conventions():
    d = brute_rank_distribution(Family.P, 3)
    assert (d.index, d.dim, d.domain_size) == (4, 4, 32)
    assert d.poly == recurrence_poly(Family.P, 4)


def test_infeasible():
    with pytest.raises(InfeasibleError, match="2\\^36"):
        brute_rank_distribution(Family.R, 12)
    with pytest.raises(InfeasibleError):
        brute_rank_distribution(Family.L, 5, max_domain_bits=8)
    with pytest.raises(ValueError):
        brute_rank_distribution(Family.O, 0)
    with pytest.raises(ValueError):
        brute_rank_distribution("Q", 2)


def test_rank_distribution_check():
    with pytest.raises(ValueError):
        RankDistribution(Family.L, 2, (1, 3, 3), "x").check()
    with pytest.raises(ValueError):
        RankDistribution(Family.L, 2, (1, 3), "x").check()
