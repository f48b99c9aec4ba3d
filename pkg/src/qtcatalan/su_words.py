"""Words over ``{b, e, l, r}`` encoding noncrossing partitions.

Besides encoding/decoding this module holds the Motzkin projection
``theta``, its section ``rho``, the boolean fibers over each Motzkin path,
and the letter table describing how raising a path rewrites its word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import ValidationError
from .lattice_paths import (
    DyckPath,
    MotzkinPath,
    area,
    enumerate_motzkin,
    raise_path,
)
from .noncrossing import NoncrossingPartition, leq, phi
from .poly import BivariatePolynomial

ALPHABET = "belr"

SEGMENT = {"b": "UU", "e": "DD", "l": "DU", "r": "UD"}
_SEGMENT_LETTER = {v: k for k, v in SEGMENT.items()}
MOTZKIN_STEP = {"b": "U", "e": "D", "l": "L", "r": "L"}

# Letter pair (c, d) of w(p) -> letter of w(p+) in the gap between them.
# "." marks the left/right end of the word.  Missing pairs cannot occur.
RAISE_TABLE: dict[tuple[str, str], str] = {
    ("b", "b"): "b", ("b", "e"): "r", ("b", "l"): "r", ("b", "r"): "b",
    ("e", "b"): "l", ("e", "e"): "e", ("e", "l"): "e", ("e", "r"): "l", ("e", "."): "e",
    ("l", "b"): "b", ("l", "e"): "r", ("l", "l"): "r", ("l", "r"): "b", ("l", "."): "r",
    ("r", "b"): "l", ("r", "e"): "e", ("r", "l"): "e", ("r", "r"): "l", ("r", "."): "e",
    (".", "b"): "b", (".", "l"): "r", (".", "r"): "b", (".", "."): "r",
}


@dataclass(frozen=True, order=True)
class SUWord:
    letters: str

    def __post_init__(self):
        if set(self.letters) - set(ALPHABET):
            raise ValidationError(f"word {self.letters!r} uses letters outside b,e,l,r")

    @property
    def n(self) -> int:
        return len(self.letters) + 1

    def __str__(self) -> str:
        return self.letters


@dataclass(frozen=True)
class LetterSets:
    B: frozenset[int]
    E: frozenset[int]
    L: frozenset[int]
    R: frozenset[int]


@dataclass(frozen=True)
class BooleanFiber:
    base: MotzkinPath
    members: tuple[DyckPath, ...]
    # members[k] has letter r exactly at the level positions in subsets[k]
    subsets: tuple[frozenset[int], ...]

    def weight(self) -> BivariatePolynomial:
        return BivariatePolynomial.from_counts((area(p), rank_su(p)) for p in self.members)

    @property
    def dimension(self) -> int:
        return len(self.base.levels)


def encode(pi: NoncrossingPartition) -> SUWord:
    where = pi.block_of()
    lo = {k: min(b) for k, b in enumerate(pi.blocks)}
    hi = {k: max(b) for k, b in enumerate(pi.blocks)}
    out = []
    for i in range(1, pi.n):
        bi, bj = where[i], where[i + 1]
        if bi == bj:
            out.append("r")
        elif hi[bi] != i:
            out.append("b")
        elif lo[bj] != i + 1:
            out.append("e")
        else:
            out.append("l")
    return SUWord("".join(out))


def decode(w: SUWord | str) -> DyckPath:
    """Path ``U + segments + D``; raises if the result is not a Dyck path."""
    letters = w.letters if isinstance(w, SUWord) else w
    if set(letters) - set(ALPHABET):
        raise ValidationError(f"word {letters!r} uses letters outside b,e,l,r")
    return DyckPath("U" + "".join(SEGMENT[c] for c in letters) + "D")


def word_of_path(p: DyckPath) -> SUWord:
    """Read the word off the two steps between consecutive odd vertices."""
    s = p.steps
    return SUWord("".join(_SEGMENT_LETTER[s[2 * i - 1: 2 * i + 1]] for i in range(1, p.order)))


def is_su_word(w: SUWord | str) -> bool:
    try:
        decode(w)
    except ValidationError:
        return False
    return True


def enumerate_su(n: int) -> Iterator[SUWord]:
    """``SU(n)`` by brute force over all ``4**(n-1)`` words."""
    for letters in product(ALPHABET, repeat=n - 1):
        w = "".join(letters)
        if is_su_word(w):
            yield SUWord(w)


def letter_sets(w: SUWord) -> LetterSets:
    pos = {c: frozenset(i + 1 for i, x in enumerate(w.letters) if x == c) for c in ALPHABET}
    return LetterSets(pos["b"], pos["e"], pos["l"], pos["r"])


def rank_su(p: DyckPath) -> int:
    """``|B| + |R|`` of the path's word."""
    letters = word_of_path(p).letters
    return letters.count("b") + letters.count("r")


def raise_word(w: SUWord) -> SUWord:
    padded = "." + w.letters + "."
    try:
        return SUWord("".join(RAISE_TABLE[(padded[i], padded[i + 1])] for i in range(len(padded) - 1)))
    except KeyError as exc:
        raise ValidationError(f"{w} is not a valid word (pair {exc.args[0]})") from exc


def theta(p: DyckPath) -> MotzkinPath:
    return MotzkinPath("".join(MOTZKIN_STEP[c] for c in word_of_path(p).letters))


def rho(m: MotzkinPath) -> DyckPath:
    """Minimum of the fiber: every level step becomes a down-up (letter l)."""
    seg = {"U": "UU", "D": "DD", "L": "DU"}
    return DyckPath._trusted("U" + "".join(seg[s] for s in m.steps) + "D")


def motzkin_area(m: MotzkinPath) -> int:
    return area(rho(m))


def motzkin_rank(m: MotzkinPath) -> int:
    return m.ups


def fiber(m: MotzkinPath) -> BooleanFiber:
    """All paths over ``m``; subsets are listed in binary-counter order."""
    levels = m.levels
    base = list(word_of_path(rho(m)).letters)
    members, subsets = [], []
    for mask in range(1 << len(levels)):
        chosen = frozenset(pos for k, pos in enumerate(levels) if mask >> k & 1)
        letters = base[:]
        for pos in chosen:
            letters[pos - 1] = "r"
        members.append(decode("".join(letters)))
        subsets.append(chosen)
    return BooleanFiber(m, tuple(members), tuple(subsets))


def fiber_weight_formula(m: MotzkinPath) -> BivariatePolynomial:
    """``q^area(m) t^rank(m) (1 + q t)^(n - 1 - 2 rank(m))``."""
    one_qt = BivariatePolynomial({(0, 0): 1, (1, 1): 1})
    return BivariatePolynomial.monomial(motzkin_area(m), motzkin_rank(m)) * one_qt ** (
        m.order - 1 - 2 * motzkin_rank(m)
    )


def sbd(n: int) -> list[BooleanFiber]:
    return [fiber(m) for m in enumerate_motzkin(n)]


def fiber_is_boolean(f: BooleanFiber) -> bool:
    """Induced order on the fiber matches inclusion of the chosen level sets."""
    parts = [phi(p) for p in f.members]
    for i, a in enumerate(parts):
        for j, b in enumerate(parts):
            if leq(a, b) != (f.subsets[i] <= f.subsets[j]):
                return False
    return True


def regenerate_raise_table(max_n: int = 7) -> dict[tuple[str, str], str]:
    """Derive the raise table from geometry on all paths up to ``max_n``."""
    from .lattice_paths import enumerate_dyck

    table: dict[tuple[str, str], str] = {}
    for n in range(1, max_n + 1):
        for p in enumerate_dyck(n):
            w = "." + word_of_path(p).letters + "."
            w2 = word_of_path(raise_path(p)).letters
            for i in range(len(w) - 1):
                key = (w[i], w[i + 1])
                if table.setdefault(key, w2[i]) != w2[i]:
                    raise AssertionError(f"pair {key} is not context free")
    return table
