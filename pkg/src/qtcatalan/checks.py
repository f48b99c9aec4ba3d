"""Named verification routines used by the command line and the test suite.

Each check returns a :class:`CheckResult`; on failure ``witness`` holds the
smallest offending object in canonical text form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import comb

from . import absolute_order as ao
from .errors import ValidationError
from .lattice_paths import enumerate_dyck
from .poly import BivariatePolynomial
from .polynomials import (
    area_prime_series,
    carlitz_cf_series,
    carlitz_riordan_check,
    cf_truncate,
    dy_poly_enum,
    dy_poly_recurrence,
)
from .su_words import fiber_is_boolean, fiber_weight_formula, motzkin_rank, rank_su, sbd
from .type_b import central_binomial_identity, enumerate_ncb, leq_b, sbd_b


@dataclass
class CheckResult:
    name: str
    n: int
    passed: bool
    witness: str | None = None
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"check": self.name, "n": self.n, "passed": self.passed, "details": self.details}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _poly_diff(lhs: BivariatePolynomial, rhs: BivariatePolynomial) -> str | None:
    diff = lhs - rhs
    for (a, r), _ in diff.items():
        return f"q^{a} t^{r}: {lhs.coeff(a, r)} vs {rhs.coeff(a, r)}"
    return None


def check_recurrence(n: int) -> CheckResult:
    w = None
    for k in range(n + 1):
        w = _poly_diff(dy_poly_recurrence(k), dy_poly_enum(k))
        if w:
            w = f"n={k} {w}"
            break
    return CheckResult("recurrence", n, w is None, w)


def check_carlitz(n: int) -> CheckResult:
    for k in range(1, n + 1):
        if not carlitz_riordan_check(k):
            return CheckResult("carlitz", n, False, f"n={k} area recurrence")
    lhs, rhs = carlitz_cf_series(n), area_prime_series(n)
    for k in range(n + 1):
        w = _poly_diff(lhs[k], rhs[k])
        if w:
            return CheckResult("carlitz", n, False, f"z^{k} {w}")
    return CheckResult("carlitz", n, True)


def check_cf(n: int) -> CheckResult:
    series = cf_truncate(n + 1, n)
    for k in range(n + 1):
        w = _poly_diff(series[k], dy_poly_recurrence(k))
        if w:
            return CheckResult("cf", n, False, f"z^{k} {w}")
    return CheckResult("cf", n, True, details={"depth": n + 1})


def check_corollary(n: int) -> CheckResult:
    c = ao.long_cycle(n)
    members = list(ao.interval(c))
    for s in members:
        if ao.reflection_length(s) != ao.excedances(s):
            return CheckResult("corollary", n, False, ao.format_perm(s), {"reason": "refl_len != exc"})
    lhs = BivariatePolynomial.from_counts((ao.inversions(s), ao.reflection_length(s)) for s in members)
    w = _poly_diff(lhs, dy_poly_enum(n))
    return CheckResult("corollary", n, w is None, w, {"interval_size": len(members)})


def check_sbd(n: int) -> CheckResult:
    fibers = sbd(n)
    seen: dict[str, str] = {}
    for f in fibers:
        for p in f.members:
            if p.steps in seen:
                return CheckResult("sbd", n, False, p.steps, {"reason": "path in two fibers"})
            seen[p.steps] = f.base.steps
        if f.weight() != fiber_weight_formula(f.base):
            return CheckResult("sbd", n, False, f.base.steps or "-", {"reason": "fiber weight"})
        if n <= 7 and not fiber_is_boolean(f):
            return CheckResult("sbd", n, False, f.base.steps or "-", {"reason": "fiber order not boolean"})
        if rank_su(f.members[0]) != motzkin_rank(f.base):
            return CheckResult("sbd", n, False, f.base.steps or "-", {"reason": "minimum rank"})
    for p in enumerate_dyck(n):
        if p.steps not in seen:
            return CheckResult("sbd", n, False, p.steps, {"reason": "path in no fiber"})
    return CheckResult("sbd", n, True, details={"fibers": len(fibers), "sizes": [len(f.members) for f in fibers]})


def check_sbd_b(n: int) -> CheckResult:
    fibers = sbd_b(n)
    seen = set()
    for f in fibers:
        label = f"L={sorted(f.base.L)} R={sorted(f.base.R)}"
        for i, a in enumerate(f.members):
            if a in seen:
                return CheckResult("sbd-b", n, False, str(a), {"reason": "element in two fibers"})
            seen.add(a)
            if a.rank != n - len(f.base.L) - len(f.subsets[i]):
                return CheckResult("sbd-b", n, False, label, {"reason": "rank"})
            for j, b in enumerate(f.members):
                if leq_b(a, b) != (f.subsets[j] <= f.subsets[i]):
                    return CheckResult("sbd-b", n, False, label, {"reason": "fiber order not boolean"})
        bottom, top = min(p.rank for p in f.members), max(p.rank for p in f.members)
        if bottom != len(f.base.L) or bottom + top != n:
            return CheckResult("sbd-b", n, False, label, {"reason": "not centred on n/2"})
    total = len(enumerate_ncb(n))
    if len(seen) != total or total != comb(2 * n, n):
        return CheckResult("sbd-b", n, False, f"covered {len(seen)} of {total}")
    return CheckResult("sbd-b", n, True, details={"fibers": len(fibers)})


def check_conjecture(n: int) -> CheckResult:
    exp = ao.conjecture_check(n)
    details = {"gammas": [str(g) for g in exp.gammas]}
    if not exp.nonnegative:
        j, a, v = exp.negative[0]
        return CheckResult("conjecture", n, False, f"gamma_{j} q^{a} coefficient {v}", details)
    return CheckResult("conjecture", n, True, details=details)


def check_catalan_b(n: int) -> CheckResult:
    for k in range(n + 1):
        if not central_binomial_identity(k):
            return CheckResult("catalan-b", n, False, f"n={k}")
    return CheckResult("catalan-b", n, True, details={"binom(2n,n)": comb(2 * n, n)})


CHECKS = {
    "recurrence": check_recurrence,
    "carlitz": check_carlitz,
    "cf": check_cf,
    "corollary": check_corollary,
    "sbd": check_sbd,
    "sbd-b": check_sbd_b,
    "conjecture": check_conjecture,
}

# Largest n each check accepts.
CHECK_CAPS = {
    "recurrence": 14,
    "carlitz": 12,
    "cf": 12,
    "corollary": ao.INTERVAL_CAP,
    "sbd": 12,
    "sbd-b": 6,
    "conjecture": ao.SN_CAP,
}


def run_check(name: str, n: int) -> CheckResult:
    if name not in CHECKS:
        raise ValidationError(f"unknown check {name!r}")
    if n < 1:
        raise ValidationError("n must be at least 1")
    return CHECKS[name](n)
