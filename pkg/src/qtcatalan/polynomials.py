"""Generating-function identities for the joint (area, rank) distribution.

Dy(n; q, t) is computed four ways: direct enumeration, the refined Catalan
recurrence, the Motzkin fiber decomposition and a truncated continued
fraction.  Gamma-basis peeling lives here as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .errors import CapacityError, ConsistencyError, ValidationError
from .lattice_paths import (
    DYCK_CAP,
    area,
    area_prime,
    area_rank_counts,
    catalan,
    enumerate_dyck,
    enumerate_motzkin,
)
from .poly import ONE, BivariatePolynomial, TruncatedSeries
from .su_words import fiber_weight_formula, motzkin_area, motzkin_rank, rank_su

P = BivariatePolynomial


def dy_poly_enum(n: int) -> P:
    """Sum of ``q^area t^rank`` by walking every path of order ``n``."""
    if n > DYCK_CAP:
        raise CapacityError(f"enumeration is capped at n={DYCK_CAP}, got {n}")
    return P(area_rank_counts(n))


def dy_poly_enum_objects(n: int) -> P:
    """Same sum, through path objects and word-based rank (slower)."""
    return P.from_counts((area(p), rank_su(p)) for p in enumerate_dyck(n))


@lru_cache(maxsize=None)
def dy_poly_recurrence(n: int) -> P:
    """``sum_k (qt)^k Dy(k; q, 1/t) Dy(n-1-k; q, t)`` with ``Dy(0) = 1``.

    ``(qt)^k Dy(k; q, 1/t)`` is ``q^k`` times the t-reflection of ``Dy(k)``
    about ``k``; ranks in ``Dy(k)`` are at most ``k - 1`` so this stays a
    polynomial.
    """
    if n < 0:
        raise ValidationError("order must be nonnegative")
    if n == 0:
        return ONE
    total = P.zero()
    for k in range(n):
        raised = dy_poly_recurrence(k).reflect_t(k).shift(da=k)
        total = total + raised * dy_poly_recurrence(n - 1 - k)
    return total


def motzkin_poly(n: int) -> P:
    return P.from_counts((motzkin_area(m), motzkin_rank(m)) for m in enumerate_motzkin(n))


def motzkin_poly_by_rank(n: int) -> dict[int, P]:
    """Area polynomial in ``q`` of the rank-``j`` Motzkin paths, keyed by ``j``."""
    out: dict[int, P] = {}
    for m in enumerate_motzkin(n):
        j = motzkin_rank(m)
        out[j] = out.get(j, P.zero()) + P.monomial(motzkin_area(m))
    return out


def dy_poly_motzkin(n: int) -> P:
    """Reconstruction from fibers: sum of ``q^area(m) t^rk(m) (1+qt)^(n-1-2rk(m))``."""
    total = P.zero()
    for m in enumerate_motzkin(n):
        total = total + fiber_weight_formula(m)
    return total


@dataclass
class GammaExpansion:
    """Coefficients ``gammas[j]`` (polynomials in ``q``) in the basis
    ``t^j (1 + s t)^(d - 2j)``; ``s`` is ``q`` for refined expansions and 1
    for plain ones.

    For refined expansions ``gammas[j]`` is the q-area polynomial of rank-j
    Motzkin paths; :meth:`reduced` divides out ``q^j``, giving the
    coefficients of ``P(q, t/q)`` in the plain basis.
    """

    d: int
    gammas: list[P]
    refined: bool = True
    negative: list[tuple[int, int, int]] = field(default_factory=list)  # (j, q-exp, coeff)

    @property
    def nonnegative(self) -> bool:
        return not self.negative

    def basis(self, j: int) -> P:
        s = P({(1, 1): 1}) if self.refined else P({(0, 1): 1})
        return P.monomial(0, j) * (ONE + s) ** (self.d - 2 * j)

    def reconstruct(self) -> P:
        total = P.zero()
        for j, g in enumerate(self.gammas):
            total = total + g * self.basis(j)
        return total

    def reduced(self) -> list[P]:
        return [g.shift(da=-j) for j, g in enumerate(self.gammas)]

    def gamma_at_q1(self) -> list[int]:
        return [g.evaluate(1, 1) for g in self.gammas]


def _peel(poly: P, d: int, refined: bool) -> GammaExpansion:
    """Extract gammas for ascending ``j`` from the ``t^j`` coefficient.

    ``t^j (1 + s t)^(d-2j)`` is the only basis element with ``j`` as its
    lowest t-power among those not yet removed, and its ``t^j`` coefficient
    is 1, so each step is exact.
    """
    exp = GammaExpansion(d=d, gammas=[], refined=refined)
    rest = poly
    for j in range(d // 2 + 1):
        g = rest.t_coefficient(j)
        exp.gammas.append(g)
        rest = rest - g * exp.basis(j)
    if rest:
        raise ValidationError(f"polynomial is not in the span of the degree-{d} gamma basis; remainder {rest}")
    exp.negative = [(j, a, v) for j, g in enumerate(exp.gammas) for (a, _), v in g.items() if v < 0]
    return exp


def gamma_expand_refined(n: int, poly: P | None = None, *, strict: bool = True) -> GammaExpansion:
    """Refined gamma expansion of ``Dy(n; q, t)`` (or of ``poly``) in degree ``n - 1``.

    ``poly(q, t/q)`` is formed first (this is where ``area >= rank`` is
    needed), peeled in the plain basis, and the result is reported in the
    ``t^j (1 + qt)^(n-1-2j)`` normalization.
    """
    if poly is None:
        poly = dy_poly_recurrence(n)
    d = n - 1
    plain = _peel(poly.t_over_q(), d, refined=False)
    exp = GammaExpansion(
        d=d,
        gammas=[g.shift(da=j) for j, g in enumerate(plain.gammas)],
        refined=True,
        negative=[(j, a + j, v) for j, a, v in plain.negative],
    )
    if strict and not exp.nonnegative:
        raise ConsistencyError(f"negative gamma coefficient in degree {d}: {exp.negative[0]}")
    return exp


def gamma_expand_plain(coeffs: list[int] | P, d: int) -> GammaExpansion:
    """Plain gamma expansion of a univariate polynomial in ``t``."""
    poly = coeffs if isinstance(coeffs, P) else P.univariate_t(coeffs)
    if poly.q_degree:
        raise ValidationError("plain gamma expansion takes a polynomial in t only")
    c = poly.t_coefficients() + [0] * (d + 1)
    if poly.t_degree > d or any(c[i] != c[d - i] for i in range(d + 1)):
        raise ValidationError(f"coefficients {c[:d + 1]} are not symmetric about {d}/2")
    return _peel(poly, d, refined=False)


def nc_gamma_formula(n: int) -> list[int]:
    """``C_j * binom(n - 1, 2j)`` for ``0 <= j <= (n - 1)/2``."""
    return [catalan(j) * comb(n - 1, 2 * j) for j in range((n - 1) // 2 + 1)]


def narayana(n: int, k: int) -> int:
    """Noncrossing partitions of ``n`` with ``k`` blocks."""
    if not 1 <= k <= n:
        return 0
    return comb(n - 1, k - 1) * comb(n, k - 1) // k


def carlitz_riordan_check(n: int) -> bool:
    """``Dy(n; q) = sum_k q^k Dy(k; q) Dy(n-1-k; q)`` on the t = 1 specialization."""
    area_poly = [dy_poly_enum(k).at_t1() for k in range(n)]
    lhs = dy_poly_enum(n).at_t1()
    rhs = P.zero()
    for k in range(n):
        rhs = rhs + area_poly[k].shift(da=k) * area_poly[n - 1 - k]
    return lhs == rhs


def cf_numerator(level: int) -> P:
    """Coefficient of ``z`` at a level: ``q^(level-1)``, times ``t`` on even levels."""
    return P.monomial(level - 1, 1 if level % 2 == 0 else 0)


def evaluate_cf(numerators: list[P], cap: int) -> TruncatedSeries:
    """``1/(1 - a_1 z/(1 - a_2 z/(...)))`` as a series mod ``z^(cap+1)``."""
    tail = TruncatedSeries.constant(1, cap)
    for a in reversed(numerators):
        tail = (TruncatedSeries.constant(1, cap) - TruncatedSeries.z_term(a, cap) * tail).reciprocal()
    return tail


def cf_truncate(depth: int, order_cap: int) -> TruncatedSeries:
    if depth < 1:
        raise ValidationError("depth must be at least 1")
    return evaluate_cf([cf_numerator(k) for k in range(1, depth + 1)], order_cap)


def carlitz_cf_series(order_cap: int, depth: int | None = None) -> TruncatedSeries:
    depth = order_cap + 1 if depth is None else depth
    return evaluate_cf([P.monomial(k) for k in range(1, depth + 1)], order_cap)


def area_prime_series(order_cap: int) -> TruncatedSeries:
    return TruncatedSeries(
        [P.from_counts((area_prime(p), 0) for p in enumerate_dyck(n)) for n in range(order_cap + 1)],
        order_cap,
    )


def carlitz_cf_check(order_cap: int) -> bool:
    return carlitz_cf_series(order_cap) == area_prime_series(order_cap)


def narayana_quadratic_residual(order_cap: int) -> TruncatedSeries:
    """``t z F^2 - (1 + z(t - 1)) F + 1`` with ``F`` the q = 1 continued fraction."""
    f = cf_truncate(order_cap + 1, order_cap).map(lambda c: c.at_q1())
    t = P.monomial(0, 1)
    lin = TruncatedSeries([ONE, t - 1], order_cap)
    return TruncatedSeries.z_term(t, order_cap) * f * f - lin * f + TruncatedSeries.constant(1, order_cap)


def narayana_check(n: int) -> bool:
    """Rank coefficients are Narayana numbers and the gamma Catalan identity holds."""
    coeffs = dy_poly_enum(n).t_coefficients()
    ok = coeffs == [narayana(n, n - r) for r in range(n)]
    rhs = sum(catalan(j) * comb(n - 1, 2 * j) * 2 ** (n - 1 - 2 * j) for j in range((n - 1) // 2 + 1))
    return ok and rhs == catalan(n)
