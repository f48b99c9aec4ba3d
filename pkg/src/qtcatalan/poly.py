"""Exact sparse polynomials in two variables ``q`` and ``t``.

A :class:`BivariatePolynomial` maps ``(q_exp, t_exp)`` to a Python ``int``;
zero coefficients are never stored.  :class:`TruncatedSeries` is a power
series in a third variable ``z`` with bivariate coefficients, exact
modulo ``z**(cap + 1)``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Iterable, Iterator, Mapping

from .errors import ValidationError

Monomial = tuple[int, int]


class BivariatePolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[Monomial, int] = defaultdict(int)
        for (a, r), v in items:
            if a < 0 or r < 0:
                raise ValidationError(f"negative exponent in monomial q^{a} t^{r}")
            c[(a, r)] += v
        self._c = {k: v for k, v in c.items() if v}

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, a: int = 0, r: int = 0, coeff: int = 1) -> BivariatePolynomial:
        return cls({(a, r): coeff})

    @classmethod
    def one(cls) -> BivariatePolynomial:
        return cls({(0, 0): 1})

    @classmethod
    def zero(cls) -> BivariatePolynomial:
        return cls()

    @classmethod
    def from_counts(cls, pairs: Iterable[Monomial]) -> BivariatePolynomial:
        """Sum of ``q**a * t**r`` over an iterable of exponent pairs."""
        c: dict[Monomial, int] = defaultdict(int)
        for key in pairs:
            c[key] += 1
        return cls(c)

    @classmethod
    def univariate_t(cls, coeffs: Iterable[int]) -> BivariatePolynomial:
        return cls({(0, j): v for j, v in enumerate(coeffs)})

    @classmethod
    def univariate_q(cls, coeffs: Iterable[int]) -> BivariatePolynomial:
        return cls({(a, 0): v for a, v in enumerate(coeffs)})

    # -- access -------------------------------------------------------
    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(sorted(self._c.items(), key=lambda kv: (kv[0][1], kv[0][0])))

    def coeff(self, a: int, r: int) -> int:
        return self._c.get((a, r), 0)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def q_degree(self) -> int:
        return max((a for a, _ in self._c), default=0)

    @property
    def t_degree(self) -> int:
        return max((r for _, r in self._c), default=0)

    def t_coefficient(self, r: int) -> BivariatePolynomial:
        """Coefficient of ``t**r`` as a polynomial in ``q`` alone."""
        return BivariatePolynomial({(a, 0): v for (a, rr), v in self._c.items() if rr == r})

    def t_coefficients(self) -> list[int]:
        """Coefficients after setting ``q = 1``, indexed by t-degree."""
        out = [0] * (self.t_degree + 1)
        for (_, r), v in self._c.items():
            out[r] += v
        return out

    def q_coefficients(self) -> list[int]:
        out = [0] * (self.q_degree + 1)
        for (a, _), v in self._c.items():
            out[a] += v
        return out

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._c.values())

    # -- arithmetic ---------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.monomial(coeff=other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def _coerce(self, other) -> BivariatePolynomial:
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.monomial(coeff=other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BivariatePolynomial(c)

    __radd__ = __add__

    def __neg__(self) -> BivariatePolynomial:
        return BivariatePolynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict[Monomial, int] = defaultdict(int)
        for (a1, r1), v1 in self._c.items():
            for (a2, r2), v2 in other._c.items():
                c[(a1 + a2, r1 + r2)] += v1 * v2
        return BivariatePolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BivariatePolynomial:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = BivariatePolynomial.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, da: int = 0, dr: int = 0) -> BivariatePolynomial:
        """Multiply by ``q**da * t**dr`` (negative shifts must stay exact)."""
        return BivariatePolynomial({(a + da, r + dr): v for (a, r), v in self._c.items()})

    # -- substitutions ------------------------------------------------
    def reflect_t(self, k: int) -> BivariatePolynomial:
        """``t**k * P(q, 1/t)``; requires t-degree <= k."""
        if self.t_degree > k and self._c:
            raise ValidationError(f"t-degree {self.t_degree} exceeds reflection bound {k}")
        return BivariatePolynomial({(a, k - r): v for (a, r), v in self._c.items()})

    def t_over_q(self) -> BivariatePolynomial:
        """``P(q, t/q)``; exact only when every monomial has q-exp >= t-exp."""
        bad = [(a, r) for (a, r) in self._c if a < r]
        if bad:
            raise ValidationError(f"t -> t/q leaves a negative q-exponent at q^{bad[0][0]} t^{bad[0][1]}")
        return BivariatePolynomial({(a - r, r): v for (a, r), v in self._c.items()})

    def times_q_to_t(self) -> BivariatePolynomial:
        """``P(q, q*t)``; inverse of :meth:`t_over_q`."""
        return BivariatePolynomial({(a + r, r): v for (a, r), v in self._c.items()})

    def at_q1(self) -> BivariatePolynomial:
        return BivariatePolynomial.univariate_t(self.t_coefficients())

    def at_t1(self) -> BivariatePolynomial:
        return BivariatePolynomial.univariate_q(self.q_coefficients())

    def evaluate(self, q: int, t: int) -> int:
        return sum(v * q**a * t**r for (a, r), v in self._c.items())

    # -- rendering / serialization -----------------------------------
    def matrix(self) -> list[list[int]]:
        """Dense array, rows indexed by t-degree and columns by q-degree."""
        rows = [[0] * (self.q_degree + 1) for _ in range(self.t_degree + 1)]
        for (a, r), v in self._c.items():
            rows[r][a] = v
        return rows

    @classmethod
    def from_matrix(cls, rows: list[list[int]]) -> BivariatePolynomial:
        return cls({(a, r): v for r, row in enumerate(rows) for a, v in enumerate(row)})

    def to_json_obj(self, n: int) -> dict:
        return {"n": n, "rows": "t", "cols": "q", "matrix": self.matrix()}

    def to_json(self, n: int) -> str:
        return json.dumps(self.to_json_obj(n))

    @classmethod
    def from_json(cls, text: str | dict) -> BivariatePolynomial:
        obj = json.loads(text) if isinstance(text, str) else text
        if obj.get("rows") != "t" or obj.get("cols") != "q":
            raise ValidationError("expected rows='t', cols='q' layout")
        return cls.from_matrix(obj["matrix"])

    def to_csv(self) -> str:
        m = self.matrix()
        header = "t\\q," + ",".join(str(a) for a in range(len(m[0])))
        lines = [header] + [f"{r}," + ",".join(map(str, row)) for r, row in enumerate(m)]
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for (a, r), v in self.items():
            mono = "*".join(
                s for s in (
                    "" if a == 0 else ("q" if a == 1 else f"q^{a}"),
                    "" if r == 0 else ("t" if r == 1 else f"t^{r}"),
                )
                if s
            )
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self})"


Q = BivariatePolynomial.monomial(1, 0)
T = BivariatePolynomial.monomial(0, 1)
ONE = BivariatePolynomial.one()


class TruncatedSeries:
    """Power series ``sum_k coeffs[k] z**k`` kept modulo ``z**(cap+1)``."""

    __slots__ = ("cap", "coeffs")

    def __init__(self, coeffs: Iterable[BivariatePolynomial], cap: int):
        cs = list(coeffs)[: cap + 1]
        cs += [BivariatePolynomial.zero()] * (cap + 1 - len(cs))
        self.cap = cap
        self.coeffs = cs

    @classmethod
    def constant(cls, p: BivariatePolynomial | int, cap: int) -> TruncatedSeries:
        if isinstance(p, int):
            p = BivariatePolynomial.monomial(coeff=p)
        return cls([p], cap)

    @classmethod
    def z_term(cls, p: BivariatePolynomial, cap: int) -> TruncatedSeries:
        """The series ``p * z``."""
        return cls([BivariatePolynomial.zero(), p], cap)

    def __getitem__(self, k: int) -> BivariatePolynomial:
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        cap = min(self.cap, other.cap)
        return TruncatedSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), cap)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries((-a for a in self.coeffs), self.cap)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries | BivariatePolynomial) -> TruncatedSeries:
        if isinstance(other, BivariatePolynomial):
            return TruncatedSeries((a * other for a in self.coeffs), self.cap)
        cap = min(self.cap, other.cap)
        out = []
        for k in range(cap + 1):
            acc = BivariatePolynomial.zero()
            for i in range(k + 1):
                if self.coeffs[i] and other.coeffs[k - i]:
                    acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return TruncatedSeries(out, cap)

    def reciprocal(self) -> TruncatedSeries:
        """``1/self``; the constant term must be 1 so the result stays integral."""
        if self.coeffs[0] != BivariatePolynomial.one():
            raise ValidationError("reciprocal needs constant term 1")
        inv = [BivariatePolynomial.one()]
        for k in range(1, self.cap + 1):
            acc = BivariatePolynomial.zero()
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * inv[k - i]
            inv.append(-acc)
        return TruncatedSeries(inv, self.cap)

    def map(self, fn) -> TruncatedSeries:
        return TruncatedSeries((fn(c) for c in self.coeffs), self.cap)

    def __repr__(self) -> str:
        return f"TruncatedSeries(cap={self.cap}, {[str(c) for c in self.coeffs]})"
