"""Command line front end.

Exit codes: 0 success, 1 check failed, 2 usage error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import absolute_order as ao
from .checks import CHECK_CAPS, CHECKS, run_check
from .errors import CapacityError, ValidationError
from .lattice_paths import DyckPath, area, enumerate_dyck
from .noncrossing import NoncrossingPartition, phi, phi_inverse, rank
from .poly import BivariatePolynomial
from .polynomials import dy_poly_enum, gamma_expand_plain, gamma_expand_refined, motzkin_poly
from .su_words import SUWord, decode, motzkin_area, motzkin_rank, rank_su, theta, word_of_path
from .type_b import NCB_CAP, central_binomial_identity, enumerate_ncb, rank_gf_b

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3

POLY_CAPS = {"dyck": 14, "motzkin": 14, "sn": ao.SN_CAP, "ncb-rank": NCB_CAP}
GAMMA_CAP = 14
IDENTITY_CAP = 1000


def _caps_text(caps: dict) -> str:
    return ", ".join(f"{k} n<={v}" for k, v in caps.items())


def _poly(kind: str, n: int) -> BivariatePolynomial:
    if kind == "dyck":
        return dy_poly_enum(n)
    if kind == "motzkin":
        return motzkin_poly(n)
    if kind == "sn":
        return ao.sn_joint_poly(n)
    return rank_gf_b(n)


def _emit(obj: dict, fmt: str, csv_text: str | None = None, text: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    elif fmt == "csv" and csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        print(text if text is not None else "\n".join(f"{k}: {v}" for k, v in sorted(obj.items())))


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise ValidationError("n must be nonnegative")
    if n > cap:
        raise CapacityError(f"{what} is capped at n={cap}, got {n}")


def cmd_poly(args) -> int:
    _check_cap(args.n, POLY_CAPS[args.kind], f"poly {args.kind}")
    p = _poly(args.kind, args.n)
    matrix = "\n".join(" ".join(f"{v:>3}" for v in row) for row in p.matrix())
    _emit(p.to_json_obj(args.n), args.format, p.to_csv(), f"{p}\n{matrix}")
    return EXIT_OK


def cmd_gamma(args) -> int:
    _check_cap(args.n, GAMMA_CAP, "gamma")
    if args.n < 1:
        raise ValidationError("gamma needs n >= 1")
    d = args.n - 1
    if args.plain:
        exp = gamma_expand_plain(dy_poly_enum(args.n).at_q1(), d)
    else:
        exp = gamma_expand_refined(args.n)
    rows = [[g.coeff(a, 0) for a in range(g.q_degree + 1)] for g in exp.gammas]
    obj = {"n": args.n, "d": d, "refined": not args.plain, "basis": "t^j(1+qt)^(d-2j)" if not args.plain else "t^j(1+t)^(d-2j)", "gammas": rows}
    csv_text = "".join(f"{j}," + ",".join(map(str, r)) + "\n" for j, r in enumerate(rows))
    text = "\n".join(f"gamma_{j} = {g}" for j, g in enumerate(exp.gammas))
    _emit(obj, args.format, csv_text, text)
    return EXIT_OK


def cmd_check(args) -> int:
    _check_cap(args.n, CHECK_CAPS[args.name], f"check {args.name}")
    result = run_check(args.name, args.n)
    obj = result.as_dict()
    lines = [f"{'PASS' if result.passed else 'FAIL'} {result.name} n={result.n}"]
    if result.witness is not None:
        lines.append(f"witness: {result.witness}")
    lines += [f"{k}: {v}" for k, v in sorted(result.details.items())]
    _emit(obj, args.format, None, "\n".join(lines))
    return EXIT_OK if result.passed else EXIT_FAIL


def _path_view(p: DyckPath) -> dict:
    out = {
        "path": p.steps,
        "order": p.order,
        "area": area(p),
        "rank": rank_su(p),
        "partition": str(phi(p)),
    }
    if p.order >= 1:
        out["suword"] = str(word_of_path(p))
        m = theta(p)
        out["motzkin"] = m.steps
        out["motzkin_area"] = motzkin_area(m)
        out["motzkin_rank"] = motzkin_rank(m)
        out["bk_perm"] = ao.format_perm(ao.bk_fill(p))
        out["stump_perm"] = ao.format_perm(ao.stump_fill(p))
        out["biane_perm"] = ao.format_perm(ao.biane(phi(p)))
    return out


def _perm_view(s: tuple[int, ...]) -> dict:
    n = len(s)
    st = ao.stats(s)
    out = {
        "perm": ao.format_perm(s),
        "cycles": "".join("(" + " ".join(map(str, c)) + ")" for c in ao.cycles(s)),
        "inv": st.inv,
        "refl_len": st.refl_len,
        "exc": st.exc,
        "des": st.des,
    }
    cert = ao.in_interval(s, ao.long_cycle(n))
    out["in_interval"] = cert.member
    if cert.member:
        pi = ao.biane_inverse(s)
        out["partition"] = str(pi)
        out["path"] = phi_inverse(pi).steps
    if n <= ao.SN_CAP:
        for label, fill, pattern in (("bk_path", ao.bk_fill, (3, 1, 2)), ("stump_path", ao.stump_fill, (2, 3, 1))):
            if ao.avoids(s, pattern):
                out[label] = next(p.steps for p in enumerate_dyck(n) if fill(p) == s)
    return out


def cmd_convert(args) -> int:
    v = args.value
    if args.kind == "path":
        obj = _path_view(DyckPath(v))
    elif args.kind == "partition":
        pi = NoncrossingPartition.parse(v)
        obj = _path_view(phi_inverse(pi))
        obj["partition_rank"] = rank(pi)
    elif args.kind == "suword":
        obj = _path_view(decode(SUWord(v)))
    else:
        s = ao.parse_perm(v)
        _check_cap(len(s), ao.SN_CAP, "convert perm")
        obj = _perm_view(s)
    _emit(obj, args.format)
    return EXIT_OK


def cmd_identity(args) -> int:
    _check_cap(args.n, IDENTITY_CAP, "identity catalan-b")
    ok = all(central_binomial_identity(k) for k in range(args.n + 1))
    obj = {"identity": "catalan-b", "n": args.n, "passed": ok, "binom(2n,n)": comb(2 * args.n, args.n)}
    if args.n <= NCB_CAP:
        count = len(enumerate_ncb(args.n))
        obj["enumerated"] = count
        ok = ok and count == comb(2 * args.n, args.n)
        obj["passed"] = ok
    _emit(obj, args.format)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json", "csv"], default="text")

    parser = argparse.ArgumentParser(
        prog="qtcatalan",
        description="Area/rank statistics on Dyck paths and related objects.",
        epilog="Exit codes: 0 success, 1 check failed, 2 usage error, 3 capacity exceeded.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[fmt], help="coefficient matrix (rows t, cols q)",
                       description=f"Caps: {_caps_text(POLY_CAPS)}.")
    p.add_argument("kind", choices=list(POLY_CAPS))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_poly)

    g = sub.add_parser("gamma", parents=[fmt], help="gamma expansion of Dy(n)",
                       description=f"Cap: n<={GAMMA_CAP}.")
    g.add_argument("n", type=int)
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--plain", action="store_true", help="expand Dy(n;1,t) in t^j(1+t)^(d-2j)")
    mode.add_argument("--refined", action="store_true", help="expand Dy(n;q,t) in t^j(1+qt)^(d-2j) (default)")
    g.set_defaults(func=cmd_gamma)

    c = sub.add_parser("check", parents=[fmt], help="run a verification",
                       description=f"Caps: {_caps_text(CHECK_CAPS)}.")
    c.add_argument("name", choices=list(CHECKS))
    c.add_argument("n", type=int)
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("convert", parents=[fmt], help="show all representations of one object",
                       description=f"Permutations: n<={ao.SN_CAP}.")
    v.add_argument("kind", choices=["path", "partition", "suword", "perm"])
    v.add_argument("value")
    v.set_defaults(func=cmd_convert)

    i = sub.add_parser("identity", parents=[fmt], help="binom(2n,n) counting identity",
                       description=f"Cap: n<={IDENTITY_CAP}; enumeration also for n<={NCB_CAP}.")
    i.add_argument("which", choices=["catalan-b"])
    i.add_argument("n", type=int)
    i.set_defaults(func=cmd_identity)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except CapacityError as e:
        print(json.dumps({"error": "capacity", "message": str(e)}), file=sys.stderr)
        return EXIT_CAPACITY
    except ValidationError as e:
        print(json.dumps({"error": "usage", "message": str(e)}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
