"""Dyck and Motzkin paths, the area statistic, first-return splitting.

Paths are immutable strings: Dyck paths over ``U``/``D`` and Motzkin paths
over ``U``/``D``/``L``.  Enumeration is lexicographic with ``U < D`` (and
``U < L < D`` for Motzkin paths, i.e. up, then level, then down).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator

from .errors import CapacityError, ValidationError

#: Largest order accepted by :func:`enumerate_dyck`.
DYCK_CAP = 16


def _heights(steps: str) -> list[int]:
    return list(accumulate(1 if s == "U" else -1 for s in steps))


@dataclass(frozen=True, order=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        if set(self.steps) - {"U", "D"}:
            raise ValidationError(f"Dyck path {self.steps!r} uses symbols other than U/D")
        h = 0
        for s in self.steps:
            h += 1 if s == "U" else -1
            if h < 0:
                raise ValidationError(f"{self.steps!r} dips below the axis")
        if h != 0:
            raise ValidationError(f"{self.steps!r} does not return to the axis")

    @classmethod
    def _trusted(cls, steps: str) -> DyckPath:
        obj = object.__new__(cls)
        object.__setattr__(obj, "steps", steps)
        return obj

    @property
    def order(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Height after each step; entry ``i-1`` is the height at ``x = i``."""
        return _heights(self.steps)

    def odd_heights(self) -> list[int]:
        """Heights of the vertices at ``x = 1, 3, ..., 2n-1``."""
        return self.heights()[0::2][: self.order]

    def __str__(self) -> str:
        return self.steps


@dataclass(frozen=True, order=True)
class MotzkinPath:
    """Motzkin path of order ``n``: ``n - 1`` steps over U (up), L (level), D (down)."""

    steps: str

    def __post_init__(self):
        if set(self.steps) - {"U", "D", "L"}:
            raise ValidationError(f"Motzkin path {self.steps!r} uses symbols other than U/L/D")
        h = 0
        for s in self.steps:
            h += {"U": 1, "D": -1, "L": 0}[s]
            if h < 0:
                raise ValidationError(f"{self.steps!r} dips below its baseline")
        if h != 0:
            raise ValidationError(f"{self.steps!r} does not end on its baseline")

    @property
    def order(self) -> int:
        return len(self.steps) + 1

    @property
    def ups(self) -> int:
        return self.steps.count("U")

    @property
    def levels(self) -> tuple[int, ...]:
        """1-based positions of the level steps."""
        return tuple(i + 1 for i, s in enumerate(self.steps) if s == "L")

    def __str__(self) -> str:
        return self.steps


@dataclass(frozen=True)
class FirstReturnSplit:
    k: int
    left: DyckPath
    right: DyckPath

    def recompose(self) -> DyckPath:
        return DyckPath._trusted("U" + self.left.steps + "D" + self.right.steps)


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of order ``n`` in lexicographic order (U before D)."""
    if n < 0:
        raise ValidationError("order must be nonnegative")
    if n > DYCK_CAP:
        raise CapacityError(f"Dyck enumeration is capped at n={DYCK_CAP}, got {n}")
    for steps in _dyck_words(n):
        yield DyckPath._trusted(steps)


def _dyck_words(n: int) -> Iterator[str]:
    buf = [""] * (2 * n)

    def rec(pos: int, ups: int, h: int):
        if pos == 2 * n:
            yield "".join(buf)
            return
        if ups < n:
            buf[pos] = "U"
            yield from rec(pos + 1, ups + 1, h + 1)
        if h > 0:
            buf[pos] = "D"
            yield from rec(pos + 1, ups, h - 1)

    yield from rec(0, 0, 0)


def area(p: DyckPath) -> int:
    """Number of lattice points strictly under the path, on or above ``y = 0``.

    The column at ``x = i`` holds ``floor(h_i / 2)`` of them.
    """
    return sum(h >> 1 for h in p.heights())


def area_from_height_sum(p: DyckPath) -> int:
    """Diamond count via ``(sum of vertex heights - n) / 2``."""
    return (sum(p.heights()) - p.order) // 2


def area_prime(p: DyckPath) -> int:
    return area(p) + p.order


def first_return_split(p: DyckPath) -> FirstReturnSplit:
    if p.order == 0:
        raise ValidationError("the empty path has no first return")
    h = 0
    for i, s in enumerate(p.steps):
        h += 1 if s == "U" else -1
        if h == 0:
            break
    return FirstReturnSplit(
        k=i // 2,
        left=DyckPath._trusted(p.steps[1:i]),
        right=DyckPath._trusted(p.steps[i + 1:]),
    )


def raise_path(p: DyckPath) -> DyckPath:
    """Prepend an up step and append a down step."""
    return DyckPath._trusted("U" + p.steps + "D")


def enumerate_motzkin(n: int) -> Iterator[MotzkinPath]:
    """All Motzkin paths of order ``n`` (length ``n - 1``)."""
    if n < 1:
        raise ValidationError("Motzkin order must be at least 1")
    length = n - 1
    buf = [""] * length

    def rec(pos: int, h: int):
        remaining = length - pos
        if pos == length:
            yield MotzkinPath("".join(buf))
            return
        if h + 1 <= remaining - 1:
            buf[pos] = "U"
            yield from rec(pos + 1, h + 1)
        if h <= remaining - 1:
            buf[pos] = "L"
            yield from rec(pos + 1, h)
        if h > 0:
            buf[pos] = "D"
            yield from rec(pos + 1, h - 1)

    yield from rec(0, 0)


def area_rank_counts(n: int) -> dict[tuple[int, int], int]:
    """Tally ``(area, rank)`` over every path of order ``n`` by direct walk.

    Rank here is the number of up steps at even positions, which equals the
    number of ``b``/``r`` letters of the path's word.
    """
    if n > DYCK_CAP:
        raise CapacityError(f"Dyck enumeration is capped at n={DYCK_CAP}, got {n}")
    counts: dict[tuple[int, int], int] = {}
    total = 2 * n

    def rec(pos: int, ups: int, h: int, a: int, r: int):
        # pos steps taken, current height h; a counts floor(h/2) over x=1..pos
        if pos == total:
            key = (a, r)
            counts[key] = counts.get(key, 0) + 1
            return
        even = (pos + 1) % 2 == 0
        if ups < n:
            nh = h + 1
            rec(pos + 1, ups + 1, nh, a + (nh >> 1), r + even)
        if h > 0:
            nh = h - 1
            rec(pos + 1, ups, nh, a + (nh >> 1), r)

    rec(0, 0, 0, 0, 0)
    return counts
