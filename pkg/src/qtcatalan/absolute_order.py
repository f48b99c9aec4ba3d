"""Permutation statistics and the interval below an n-cycle in absolute order.

Permutations are tuples in one-line notation on ``1..n``.  Products compose
right to left: ``(s * u)(i) = s(u(i))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator

from .errors import CapacityError, ConsistencyError, ValidationError
from .lattice_paths import DyckPath, area, enumerate_dyck
from .noncrossing import NoncrossingPartition
from .poly import BivariatePolynomial
from .polynomials import GammaExpansion, dy_poly_enum, gamma_expand_refined
from .su_words import rank_su

Perm = tuple[int, ...]

SN_CAP = 9
INTERVAL_CAP = 8


def parse_perm(text: str) -> Perm:
    """One-line notation: ``"35421"`` or comma-separated for ``n > 9``."""
    text = text.strip()
    vals = [int(x) for x in text.split(",")] if "," in text else [int(c) for c in text]
    return validate_perm(tuple(vals))


def validate_perm(s: Iterable[int]) -> Perm:
    s = tuple(s)
    if sorted(s) != list(range(1, len(s) + 1)):
        raise ValidationError(f"{s} is not a permutation of 1..{len(s)}")
    return s


def format_perm(s: Perm) -> str:
    return "".join(map(str, s)) if len(s) <= 9 else ",".join(map(str, s))


def compose(s: Perm, u: Perm) -> Perm:
    return tuple(s[u[i] - 1] for i in range(len(u)))


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, v in enumerate(s, 1):
        out[v - 1] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def cycles(s: Perm) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for start in range(1, len(s) + 1):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = s[x - 1]
        out.append(tuple(cyc))
    return out


def from_cycles(cycs: Iterable[Iterable[int]], n: int) -> Perm:
    out = list(range(1, n + 1))
    for c in cycs:
        c = tuple(c)
        for a, b in zip(c, c[1:] + c[:1]):
            out[a - 1] = b
    return tuple(out)


def long_cycle(n: int) -> Perm:
    """The cycle ``(1 2 ... n)``."""
    return from_cycles([range(1, n + 1)], n)


def inversions(s: Perm) -> int:
    return sum(1 for i, j in combinations(range(len(s)), 2) if s[i] > s[j])


def reflection_length(s: Perm) -> int:
    return len(s) - len(cycles(s))


def excedances(s: Perm) -> int:
    return sum(1 for i, v in enumerate(s, 1) if v > i)


def descents(s: Perm) -> int:
    return sum(1 for i in range(len(s) - 1) if s[i] > s[i + 1])


@dataclass(frozen=True)
class PermStats:
    inv: int
    refl_len: int
    exc: int
    des: int


def stats(s: Perm) -> PermStats:
    return PermStats(inversions(s), reflection_length(s), excedances(s), descents(s))


@dataclass(frozen=True)
class IntervalMembershipCertificate:
    sigma: Perm
    c: Perm
    lengths: tuple[int, int, int]  # l'(sigma), l'(sigma^-1 c), l'(c)

    @property
    def member(self) -> bool:
        a, b, total = self.lengths
        return a + b == total


def below(s: Perm, u: Perm) -> bool:
    """``s <= u`` in absolute order."""
    return reflection_length(s) + reflection_length(compose(inverse(s), u)) == reflection_length(u)


def in_interval(s: Perm, c: Perm) -> IntervalMembershipCertificate:
    if len(s) != len(c):
        raise ValidationError("permutation sizes differ")
    if len(cycles(c)) != 1:
        raise ValidationError(f"{format_perm(c)} is not an n-cycle")
    return IntervalMembershipCertificate(
        s, c, (reflection_length(s), reflection_length(compose(inverse(s), c)), reflection_length(c))
    )


def interval(c: Perm) -> Iterator[Perm]:
    """Permutations below the n-cycle ``c``, by filtering ``S_n``."""
    n = len(c)
    if n > INTERVAL_CAP:
        raise CapacityError(f"interval enumeration is capped at n={INTERVAL_CAP}, got {n}")
    for s in permutations(range(1, n + 1)):
        if below(s, c):
            yield s


def biane(pi: NoncrossingPartition) -> Perm:
    """Each block ``b1 < ... < bk`` becomes the cycle ``(b1 ... bk)``."""
    return from_cycles(pi.blocks, pi.n)


def biane_inverse(s: Perm) -> NoncrossingPartition:
    if not in_interval(s, long_cycle(len(s))).member:
        raise ValidationError(f"{format_perm(s)} is not below (1 2 ... n)")
    return NoncrossingPartition(tuple(cycles(s)), len(s))


def interval_joint_poly(n: int, c: Perm | None = None) -> BivariatePolynomial:
    """Sum of ``q^inv t^refl_len`` over the interval below ``c`` (default ``(1..n)``)."""
    c = long_cycle(n) if c is None else c
    return BivariatePolynomial.from_counts((inversions(s), reflection_length(s)) for s in interval(c))


# -- box fillings -------------------------------------------------------

def boxes(p: DyckPath) -> list[tuple[int, int]]:
    """Centres ``(x, y)`` of the diamonds under ``p``, one per unit of area.

    The diamond centred at ``(x, y)`` rests on the unused lattice point
    ``(x, y - 1)``.
    """
    h = [0] + p.heights()
    return [(x, j + 1) for x in range(1, 2 * p.order) for j in range(x % 2, h[x] - 1, 2)]


def word_to_perm(word: Iterable[int], n: int) -> Perm:
    """Product of simple transpositions ``s_i = (i, i+1)``.

    Letters are applied left to right, each swapping the values ``i`` and
    ``i + 1`` in the one-line notation built so far.
    """
    s = list(range(1, n + 1))
    for i in word:
        s = [i + 1 if v == i else i if v == i + 1 else v for v in s]
    return tuple(s)


def bk_word(p: DyckPath) -> list[int]:
    """Box at ``(x, y)`` carries ``s_((x-y+1)/2)``; read each ``x+y`` anti-diagonal
    top-down, diagonals from right to left."""
    bx = boxes(p)
    out = []
    for diag in sorted({x + y for x, y in bx}, reverse=True):
        for x, y in sorted((b for b in bx if b[0] + b[1] == diag), key=lambda b: -b[1]):
            out.append((x - y + 1) // 2)
    return out


def stump_word(p: DyckPath) -> list[int]:
    """Box at ``(x, y)`` carries ``s_(n-(x-y+1)/2)``; read rows top-down, each right to left."""
    bx = boxes(p)
    n = p.order
    out = []
    for row in sorted({y for _, y in bx}, reverse=True):
        for x, _ in sorted((b for b in bx if b[1] == row), key=lambda b: -b[0]):
            out.append(n - (x - row + 1) // 2)
    return out


def bk_fill(p: DyckPath) -> Perm:
    return word_to_perm(bk_word(p), max(p.order, 1))


def stump_fill(p: DyckPath) -> Perm:
    return word_to_perm(stump_word(p), max(p.order, 1))


def avoids(s: Perm, pattern: Perm) -> bool:
    k = len(pattern)
    for idx in combinations(range(len(s)), k):
        vals = [s[i] for i in idx]
        ranks = tuple(sorted(vals).index(v) + 1 for v in vals)
        if ranks == tuple(pattern):
            return False
    return True


def avoiders(n: int, pattern: Perm) -> list[Perm]:
    if n > SN_CAP:
        raise CapacityError(f"S_n scans are capped at n={SN_CAP}, got {n}")
    return [s for s in permutations(range(1, n + 1)) if avoids(s, pattern)]


def sn_joint_poly(n: int) -> BivariatePolynomial:
    """Sum of ``q^inv t^exc`` over all of ``S_n``."""
    if n > SN_CAP:
        raise CapacityError(f"S_n scans are capped at n={SN_CAP}, got {n}")
    return BivariatePolynomial.from_counts((inversions(s), excedances(s)) for s in permutations(range(1, n + 1)))


def conjecture_check(n: int) -> GammaExpansion:
    """Gamma expansion of ``S_n(q, t)``; ``nonnegative`` is the verdict."""
    if n > SN_CAP:
        raise CapacityError(f"S_n scans are capped at n={SN_CAP}, got {n}")
    for s in permutations(range(1, n + 1)):
        if inversions(s) < excedances(s):
            raise ConsistencyError(f"inv < exc for {format_perm(s)}")
    return gamma_expand_refined(n, sn_joint_poly(n), strict=False)


def statistic_search(n: int, candidate: Callable[[Perm], int]) -> bool:
    """Does ``sum over S_n(312) of q^inv t^candidate`` equal ``Dy(n; q, t)``?"""
    poly = BivariatePolynomial.from_counts((inversions(s), candidate(s)) for s in avoiders(n, (3, 1, 2)))
    return poly == dy_poly_enum(n)


def rank_via_bk(n: int) -> Callable[[Perm], int]:
    """Transport of path rank along ``bk_fill``: ``s -> rank(bk_fill^-1(s))``."""
    table = {bk_fill(p): rank_su(p) for p in enumerate_dyck(n)}
    return table.__getitem__
