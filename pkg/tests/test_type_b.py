from itertools import combinations
from math import comb

import pytest

from qtcatalan.errors import CapacityError, ValidationError
from qtcatalan.poly import BivariatePolynomial
from qtcatalan.type_b import (
    NCB_CAP,
    BPartition,
    LRPair,
    central_binomial_identity,
    circle_order,
    enumerate_ncb,
    eta,
    leq_b,
    lr_pairs,
    rank_gf_b,
    rank_gf_b_formula,
    sbd_b,
)


def pair(L, R):
    return LRPair(frozenset(L), frozenset(R))


def set_partitions(elems):
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def brute_force_ncb(n):
    """Valid B_n-partitions found by filtering all set partitions of +-1..+-n."""
    pos = {x: k for k, x in enumerate(circle_order(n))}
    out = set()
    for part in set_partitions(circle_order(n)):
        sets = {frozenset(b) for b in part}
        if any(frozenset(-x for x in b) not in sets for b in sets):
            continue
        if sum(1 for b in sets if b == frozenset(-x for x in b)) > 1:
            continue
        crossing = False
        for b1, b2 in combinations(part, 2):
            tags = sorted([(pos[x], 0) for x in b1] + [(pos[x], 1) for x in b2])
            seq = [t for _, t in tags]
            # a crossing shows up as an alternation 0,1,0,1 in circular order
            runs = sum(1 for i in range(len(seq)) if seq[i] != seq[i - 1])
            crossing |= runs >= 4
        if not crossing:
            out.add(BPartition(tuple(tuple(b) for b in part), n))
    return out


def test_eta_examples():
    a = eta(pair({2, 3, 4}, {1, 4, 5}), 5)
    assert str(a) == "{1,-2}{2,-1}{3,5}{4}{-3,-5}{-4}"
    assert a.rank == 2
    b = eta(pair({3, 4}, {1, 5}), 5)
    assert str(b) == "{1,-3}{2,-2}{3,-1}{4,5}{-4,-5}"
    assert b.rank == 3
    top = eta(pair(set(), set()), 4)
    assert top.blocks == (tuple(circle_order(4)),) and top.rank == 4


def test_eta_rejects_unequal_sizes():
    with pytest.raises(ValidationError):
        pair({1}, set())


def test_leq_b_examples():
    a = eta(pair({2, 3, 4}, {1, 4, 5}), 5)
    b = eta(pair({3, 4}, {1, 5}), 5)
    assert not leq_b(a, b)
    bottom = eta(pair(range(1, 6), range(1, 6)), 5)
    assert bottom.rank == 0
    assert all(leq_b(bottom, x) for x in enumerate_ncb(5))
    with pytest.raises(ValidationError):
        leq_b(a, eta(pair(set(), set()), 4))


def test_invalid_b_partitions_rejected():
    with pytest.raises(ValidationError):
        BPartition(((1, 2), (-1, -2)), 3)  # gap
    with pytest.raises(ValidationError):
        BPartition(((1, -1), (2, -2)), 2)  # two zero blocks
    with pytest.raises(ValidationError):
        BPartition(((1,), (2, -1), (-2,)), 2)  # not mirror closed
    with pytest.raises(ValidationError):
        BPartition(((1, 3), (2, 4), (-1, -3), (-2, -4)), 4)  # crossing


@pytest.mark.parametrize("n, count", [(1, 2), (3, 20), (4, 70)])
def test_enumerate_ncb_counts(n, count):
    assert len(enumerate_ncb(n)) == count


def test_enumerate_ncb_cap():
    with pytest.raises(CapacityError):
        enumerate_ncb(NCB_CAP + 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_eta_injective_and_valid(n):
    images = enumerate_ncb(n)
    assert len(images) == len(set(images)) == comb(2 * n, n)
    for a in images:
        BPartition(a.blocks, n)  # re-validates
    for p in lr_pairs(n):
        assert eta(p, n).rank == n - len(p.L)


@pytest.mark.parametrize("n", range(1, 5))
def test_eta_surjective(n):
    assert set(enumerate_ncb(n)) == brute_force_ncb(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_eta_monotone_when_dropping_shared_element(n):
    for p in lr_pairs(n):
        for i in p.L & p.R:
            smaller = pair(p.L - {i}, p.R - {i})
            assert leq_b(eta(p, n), eta(smaller, n))


def test_sbd_b_small():
    fibers = sbd_b(1)
    assert len(fibers) == 1 and len(fibers[0].members) == 2
    sizes = sorted(len(f.members) for f in sbd_b(3))
    assert sizes == [2] * 6 + [8]


@pytest.mark.parametrize("n", range(1, 6))
def test_sbd_b_is_symmetric_boolean(n):
    fibers = sbd_b(n)
    seen = [x for f in fibers for x in f.members]
    assert len(seen) == len(set(seen)) == comb(2 * n, n)
    for f in fibers:
        assert not f.base.L & f.base.R
        assert len(f.members) == 2 ** (n - 2 * len(f.base.L))
        ranks = [x.rank for x in f.members]
        assert min(ranks) == len(f.base.L) and min(ranks) + max(ranks) == n
        for i, a in enumerate(f.members):
            for j, b in enumerate(f.members):
                assert leq_b(a, b) == (f.subsets[j] <= f.subsets[i])


@pytest.mark.parametrize("n", range(0, 11))
def test_central_binomial_identity(n):
    assert central_binomial_identity(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_rank_gf(n):
    gf = rank_gf_b(n)
    assert gf == rank_gf_b_formula(n)
    assert gf.t_coefficients() == [comb(n, j) ** 2 for j in range(n + 1)]


def test_rank_gf_examples():
    assert rank_gf_b(1) == BivariatePolynomial.univariate_t([1, 1])
    assert rank_gf_b(3).t_coefficients() == [1, 9, 9, 1]
    assert rank_gf_b(4).t_coefficients() == [1, 16, 36, 16, 1]
