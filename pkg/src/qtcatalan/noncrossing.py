"""Noncrossing set partitions of ``{1..n}`` and the path bijection ``phi``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import ValidationError
from .lattice_paths import DyckPath, enumerate_dyck


def _canonical(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def _check_set_partition(blocks: tuple[tuple[int, ...], ...], n: int) -> None:
    seen = [x for b in blocks for x in b]
    if any(not b for b in blocks):
        raise ValidationError("empty block")
    if len(seen) != len(set(seen)):
        raise ValidationError("blocks overlap")
    if sorted(seen) != list(range(1, n + 1)):
        raise ValidationError(f"blocks do not cover 1..{n} exactly")


def blocks_cross(b1: Iterable[int], b2: Iterable[int]) -> bool:
    """True if some a < b in ``b1`` and a' < b' in ``b2`` interleave."""
    for a, b in combinations(sorted(b1), 2):
        for c, d in combinations(sorted(b2), 2):
            if a < c < b < d or c < a < d < b:
                return True
    return False


def is_noncrossing(blocks: Iterable[Iterable[int]], n: int | None = None) -> bool:
    canon = _canonical(blocks)
    if n is None:
        n = sum(len(b) for b in canon)
    _check_set_partition(canon, n)
    return not any(blocks_cross(b1, b2) for b1, b2 in combinations(canon, 2))


@dataclass(frozen=True)
class NoncrossingPartition:
    """Blocks stored sorted by minimum, elements ascending."""

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        canon = _canonical(self.blocks)
        object.__setattr__(self, "blocks", canon)
        if not is_noncrossing(canon, self.n):
            raise ValidationError(f"{self} is crossing")

    @classmethod
    def _trusted(cls, blocks, n: int) -> NoncrossingPartition:
        obj = object.__new__(cls)
        object.__setattr__(obj, "blocks", _canonical(blocks))
        object.__setattr__(obj, "n", n)
        return obj

    @classmethod
    def parse(cls, text: str) -> NoncrossingPartition:
        """Parse ``"{1,8}{2,4,7}{3}{5}{6}"``."""
        body = text.replace(" ", "")
        if not (body.startswith("{") and body.endswith("}")):
            raise ValidationError(f"cannot parse partition {text!r}")
        try:
            blocks = [tuple(int(x) for x in chunk.split(",")) for chunk in body[1:-1].split("}{")]
        except ValueError as exc:
            raise ValidationError(f"cannot parse partition {text!r}") from exc
        return cls(tuple(blocks), sum(len(b) for b in blocks))

    @classmethod
    def singletons(cls, n: int) -> NoncrossingPartition:
        return cls._trusted([(i,) for i in range(1, n + 1)], n)

    @classmethod
    def full(cls, n: int) -> NoncrossingPartition:
        return cls._trusted([tuple(range(1, n + 1))], n)

    def block_of(self) -> dict[int, int]:
        return {x: k for k, b in enumerate(self.blocks) for x in b}

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def rank(pi: NoncrossingPartition) -> int:
    return pi.n - len(pi.blocks)


def leq(p1: NoncrossingPartition, p2: NoncrossingPartition) -> bool:
    """Reverse refinement: every block of ``p1`` sits inside a block of ``p2``."""
    if p1.n != p2.n:
        raise ValidationError(f"cannot compare partitions of {p1.n} and {p2.n}")
    where = p2.block_of()
    return all(len({where[x] for x in b}) == 1 for b in p1.blocks)


def phi(p: DyckPath) -> NoncrossingPartition:
    """Group odd vertices at a common height not separated by a dip below it."""
    h = p.heights()
    n = p.order
    blocks: list[list[int]] = []
    stack: list[tuple[int, int]] = []  # (height, block index), heights increasing
    prev = None
    for i in range(1, n + 1):
        hi = h[2 * i - 2]
        if prev is not None:
            low = min(prev, h[2 * i - 3], hi)
            while stack and stack[-1][0] > low:
                stack.pop()
        if stack and stack[-1][0] == hi:
            blocks[stack[-1][1]].append(i)
        else:
            blocks.append([i])
            stack.append((hi, len(blocks) - 1))
        prev = hi
    return NoncrossingPartition._trusted(blocks, n)


def phi_inverse(pi: NoncrossingPartition) -> DyckPath:
    """Rebuild the path from arc nesting depths.

    Odd vertex ``i`` sits at height ``2d + 1`` where ``d`` counts arcs (pairs of
    consecutive block elements) strictly enclosing ``i``.
    """
    if not isinstance(pi, NoncrossingPartition):
        raise ValidationError("phi_inverse expects a NoncrossingPartition")
    n = pi.n
    if n == 0:
        return DyckPath("")
    depth = [0] * (n + 2)
    for b in pi.blocks:
        for a, c in zip(b, b[1:]):
            for x in range(a + 1, c):
                depth[x] += 1
    where = pi.block_of()
    steps = ["U"]
    for i in range(1, n):
        d0, d1 = depth[i], depth[i + 1]
        if d1 == d0 + 1:
            steps.append("UU")
        elif d1 == d0 - 1:
            steps.append("DD")
        elif where[i] == where[i + 1]:
            steps.append("UD")
        else:
            steps.append("DU")
    steps.append("D")
    return DyckPath("".join(steps))


def enumerate_nc(n: int) -> Iterator[NoncrossingPartition]:
    """``NC(n)`` in the order induced by lexicographic path enumeration."""
    for p in enumerate_dyck(n):
        yield phi(p)


def covers_up(pi: NoncrossingPartition) -> list[NoncrossingPartition]:
    """Elements covering ``pi``: merges of two blocks that stay noncrossing."""
    out = []
    for i, j in combinations(range(len(pi.blocks)), 2):
        merged = [b for k, b in enumerate(pi.blocks) if k not in (i, j)]
        merged.append(pi.blocks[i] + pi.blocks[j])
        if not any(blocks_cross(merged[-1], b) for b in merged[:-1]):
            out.append(NoncrossingPartition._trusted(merged, pi.n))
    return out
