"""Type-B noncrossing partitions through (L, R) pairs.

Elements of ``{+-1..+-n}`` sit on a circle in the order
``1, 2, ..., n, -1, -2, ..., -n``.  ``eta`` turns an (L, R) pair with
``|L| = |R|`` into a partition by cyclic parenthesis matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import CapacityError, ValidationError
from .poly import BivariatePolynomial

NCB_CAP = 7


def circle_order(n: int) -> list[int]:
    return list(range(1, n + 1)) + [-i for i in range(1, n + 1)]


def _position(n: int) -> dict[int, int]:
    return {x: k for k, x in enumerate(circle_order(n))}


def _canonical(blocks: Iterable[Iterable[int]], n: int) -> tuple[tuple[int, ...], ...]:
    pos = _position(n)
    ordered = [tuple(sorted(b, key=pos.__getitem__)) for b in blocks]
    return tuple(sorted(ordered, key=lambda b: pos[b[0]]))


@dataclass(frozen=True)
class BPartition:
    """Blocks ordered by circle position of their first element."""

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", _canonical(self.blocks, self.n))
        problem = b_partition_problem(self.blocks, self.n)
        if problem:
            raise ValidationError(problem)

    @classmethod
    def _trusted(cls, blocks, n: int) -> BPartition:
        obj = object.__new__(cls)
        object.__setattr__(obj, "blocks", _canonical(blocks, n))
        object.__setattr__(obj, "n", n)
        return obj

    @property
    def zero_block(self) -> tuple[int, ...] | None:
        for b in self.blocks:
            if set(b) == {-x for x in b}:
                return b
        return None

    @property
    def nzb(self) -> int:
        """Half the number of nonzero blocks."""
        return (len(self.blocks) - (self.zero_block is not None)) // 2

    @property
    def rank(self) -> int:
        return self.n - self.nzb

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


@dataclass(frozen=True)
class LRPair:
    L: frozenset[int]
    R: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "L", frozenset(self.L))
        object.__setattr__(self, "R", frozenset(self.R))
        if len(self.L) != len(self.R):
            raise ValidationError(f"|L| = {len(self.L)} differs from |R| = {len(self.R)}")


def _chords_cross(b1: tuple[int, ...], b2: tuple[int, ...], pos: dict[int, int]) -> bool:
    # interleaving of two point sets on a circle does not depend on where it is cut
    p1 = sorted(pos[x] for x in b1)
    p2 = sorted(pos[x] for x in b2)
    for a, b in combinations(p1, 2):
        inside = [a < c < b for c in p2]
        if any(inside) and not all(inside):
            return True
    return False


def b_partition_problem(blocks: tuple[tuple[int, ...], ...], n: int) -> str | None:
    """Reason the blocks fail to be a noncrossing B_n-partition, else ``None``."""
    elems = [x for b in blocks for x in b]
    if sorted(elems) != sorted(circle_order(n)):
        return f"blocks do not partition +-1..+-{n}"
    as_sets = {frozenset(b) for b in blocks}
    if any(frozenset(-x for x in b) not in as_sets for b in as_sets):
        return "block set is not closed under negation"
    if sum(1 for b in as_sets if b == frozenset(-x for x in b)) > 1:
        return "more than one zero block"
    pos = _position(n)
    for b1, b2 in combinations(blocks, 2):
        if _chords_cross(b1, b2, pos):
            return f"blocks {b1} and {b2} cross"
    return None


def eta(pair: LRPair, n: int) -> BPartition:
    """Parenthesize ``1..n, -1..-n``: ``(`` before each ``+-i`` with ``i`` in L,
    ``)`` after each ``+-j`` with ``j`` in R, then match cyclically.

    Elements directly inside a matched pair form a block; elements outside
    every pair form one block (the zero block, when nonempty).
    """
    if any(not 1 <= x <= n for x in pair.L | pair.R):
        raise ValidationError(f"L, R must be subsets of 1..{n}")
    tokens: list[str | int] = []
    for x in circle_order(n):
        if abs(x) in pair.L:
            tokens.append("(")
        tokens.append(x)
        if abs(x) in pair.R:
            tokens.append(")")
    # rotate to just after the lowest running depth so matching never underflows
    depth, low, cut = 0, 0, 0
    for k, tok in enumerate(tokens):
        if tok == "(":
            depth += 1
        elif tok == ")":
            depth -= 1
            if depth < low:
                low, cut = depth, k + 1
    tokens = tokens[cut:] + tokens[:cut]
    outer: list[int] = []
    stack: list[list[int]] = []
    blocks: list[list[int]] = []
    for tok in tokens:
        if tok == "(":
            stack.append([])
        elif tok == ")":
            blocks.append(stack.pop())
        elif stack:
            stack[-1].append(tok)
        else:
            outer.append(tok)
    if outer:
        blocks.append(outer)
    return BPartition._trusted([b for b in blocks if b], n)


def lr_pairs(n: int) -> Iterator[LRPair]:
    """All pairs with ``|L| = |R|``, by size then lexicographically."""
    for k in range(n + 1):
        for L in combinations(range(1, n + 1), k):
            for R in combinations(range(1, n + 1), k):
                yield LRPair(frozenset(L), frozenset(R))


def enumerate_ncb(n: int) -> list[BPartition]:
    if n > NCB_CAP:
        raise CapacityError(f"NC_B enumeration is capped at n={NCB_CAP}, got {n}")
    return [eta(pair, n) for pair in lr_pairs(n)]


def leq_b(p1: BPartition, p2: BPartition) -> bool:
    if p1.n != p2.n:
        raise ValidationError(f"cannot compare B_{p1.n} and B_{p2.n} partitions")
    where = {x: k for k, b in enumerate(p2.blocks) for x in b}
    return all(len({where[x] for x in b}) == 1 for b in p1.blocks)


@dataclass(frozen=True)
class BFiber:
    base: LRPair  # L and R disjoint
    free: tuple[int, ...]  # complement of L | R
    subsets: tuple[frozenset[int], ...]
    members: tuple[BPartition, ...]


def sbd_b(n: int) -> list[BFiber]:
    """Fibers ``{eta(L | A, R | A) : A within the complement of L | R}``."""
    if n > NCB_CAP:
        raise CapacityError(f"NC_B enumeration is capped at n={NCB_CAP}, got {n}")
    out = []
    for base in lr_pairs(n):
        if base.L & base.R:
            continue
        free = tuple(sorted(set(range(1, n + 1)) - base.L - base.R))
        subsets = tuple(
            frozenset(a) for k in range(len(free) + 1) for a in combinations(free, k)
        )
        members = tuple(eta(LRPair(base.L | a, base.R | a), n) for a in subsets)
        out.append(BFiber(base, free, subsets, members))
    return out


def rank_gf_b(n: int) -> BivariatePolynomial:
    """Rank generating function of ``NC_B(n)`` by enumeration."""
    return BivariatePolynomial.from_counts((0, p.rank) for p in enumerate_ncb(n))


def rank_gf_b_formula(n: int) -> BivariatePolynomial:
    """``sum_i binom(n, i) binom(n - i, i) t^i (1 + t)^(n - 2i)``."""
    one_t = BivariatePolynomial({(0, 0): 1, (0, 1): 1})
    total = BivariatePolynomial.zero()
    for i in range(n // 2 + 1):
        total = total + comb(n, i) * comb(n - i, i) * BivariatePolynomial.monomial(0, i) * one_t ** (n - 2 * i)
    return total


def central_binomial_identity(n: int) -> bool:
    lhs = comb(2 * n, n)
    rhs = sum(comb(n, i) * comb(n - i, i) * 2 ** (n - 2 * i) for i in range(n // 2 + 1))
    return lhs == rhs
