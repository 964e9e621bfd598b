"""Command line front end with stable JSON output.

One executable, subcommand style; all output is deterministic for a fixed
command line and seed (keys sorted, rows in the descending tableau order),
so runs can be diffed against golden files.

Exit codes: 0 success, 2 invalid input, 3 violated internal invariant.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from .bases import (
    InvariantViolationError,
    dual_block,
    gram_matrix,
    lt_block,
)
from .howe import TableauVector, act_divided
from .ring import NonDivisibleError
from .tableaux import NotSemistandardError, Shape, enumerate_tableaux, tableau_type
from .tensor import ShapeMismatchError, TensorVector
from .verify import (
    check_cartan,
    check_commutator,
    check_dual_blocks,
    check_evaluators,
    check_form_consistency,
    check_howe,
    check_relations,
    check_serre,
    check_shapovalov,
)
from .webalg import cartan_matrix, frobenius_check, gorenstein_parameter
from .webs import (
    AnnihilatedError,
    IllFormedWebError,
    Web,
    evaluate_dense,
    ladder_from_word,
    validate,
    web_form,
    ev_closed,
)

INPUT_ERRORS = (
    ValueError,
    ShapeMismatchError,
    IllFormedWebError,
    NotSemistandardError,
    AnnihilatedError,
    json.JSONDecodeError,
    OSError,
)


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _emit(payload, fmt: str, as_table) -> None:
    if fmt == "table" and as_table is not None:
        print(as_table(payload))
    else:
        print(json.dumps(payload, sort_keys=True))


def _parse_vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}")


_WORD_RE = re.compile(r"^([+-])(\d+)\^(\d+)$")


def _parse_word(text: str) -> list[tuple[int, int, int]]:
    """Rung words like '-1^1,+2^1': sign, upright index, rung width."""
    word = []
    if not text:
        return word
    for token in text.split(","):
        m = _WORD_RE.match(token.strip())
        if not m:
            raise ValueError(f"bad rung token {token!r}, expected e.g. -1^2")
        sign = 1 if m.group(1) == "+" else -1
        word.append((sign, int(m.group(2)), int(m.group(3))))
    return word


def _tableaux_table(payload) -> str:
    return "\n".join("/".join("".join(map(str, row)) for row in t["rows"]) for t in payload)


def _poly_str(data) -> str:
    from .ring import LaurentPoly

    return str(LaurentPoly.from_json(data))


def _matrix_table(payload) -> str:
    lines = []
    for t in payload["labels"]:
        lines.append("label " + "/".join("".join(map(str, row)) for row in t["rows"]))
    width = max((len(_poly_str(p)) for row in payload["entries"] for p in row), default=1)
    for row in payload["entries"]:
        lines.append("  ".join(_poly_str(p).rjust(width) for p in row))
    return "\n".join(lines)


# -- subcommand implementations ----------------------------------------


def cmd_tableaux(args) -> int:
    shape = Shape(args.N, args.l)
    ktype = _parse_vec(args.type) if args.type else None
    ts = enumerate_tableaux(shape, ktype, semistandard_only=args.semistandard)
    _emit([t.to_json() for t in ts], args.format, _tableaux_table)
    return 0


def cmd_ladder(args) -> int:
    k = _parse_vec(args.k)
    web = ladder_from_word(args.N, k, _parse_word(args.word))
    validate(web)
    _emit(web.to_json(), args.format, None)
    return 0


def cmd_eval(args) -> int:
    web = Web.from_json(_load_json(args.web))
    vec = TensorVector.from_json(_load_json(args.vector))
    _emit(evaluate_dense(web, vec).to_json(), args.format, None)
    return 0


def cmd_ev(args) -> int:
    web = Web.from_json(_load_json(args.web))
    _emit(ev_closed(web).to_json(), args.format, _poly_str)
    return 0


def cmd_form(args) -> int:
    u = Web.from_json(_load_json(args.u))
    w = Web.from_json(_load_json(args.w))
    _emit(web_form(u, w).to_json(), args.format, _poly_str)
    return 0


def cmd_act(args) -> int:
    vec = TableauVector.from_json(_load_json(args.vector))
    sign = 1 if args.sign == "+" else -1
    out = act_divided(sign, args.i, args.r, vec)
    _emit(out.to_json(), args.format, None)
    return 0


def cmd_lt_basis(args) -> int:
    payload = _basis_payload(args, dual=False)
    _emit(payload, args.format, None)
    return 0


def cmd_dual_canonical(args) -> int:
    payload = _basis_payload(args, dual=True)
    _emit(payload, args.format, None)
    return 0


def _basis_payload(args, dual: bool):
    shape = Shape(args.N, args.l)
    if args.type:
        ktypes = [_parse_vec(args.type)]
    else:
        ktypes = sorted(
            {tableau_type(t) for t in enumerate_tableaux(shape, semistandard_only=True)}
        )
    payload = []
    for k in ktypes:
        block = dual_block(args.N, args.l, k) if dual else lt_block(args.N, args.l, k)
        for t, elem in block.items():
            entry = {"tableau": t.to_json(), "expansion": elem.expansion.to_json()}
            if dual:
                entry["beta"] = [
                    {"tableau": s.to_json(), "coeff": g.to_json()} for s, g in elem.beta
                ]
            else:
                entry["word"] = [list(p) for p in elem.word]
            payload.append(entry)
    return payload


def cmd_gram(args) -> int:
    k = _parse_vec(args.type)
    matrix = gram_matrix(args.N, args.l, k, basis=args.basis)
    _emit(matrix.to_json(), args.format, _matrix_table)
    return 0


def cmd_cartan(args) -> int:
    k = _parse_vec(args.k)
    matrix = cartan_matrix(args.N, k)
    frob = frobenius_check(args.N, k)
    payload = {
        "cartan": matrix.to_json(),
        "gorenstein_parameter": gorenstein_parameter(args.N, k),
        "frobenius": {
            "passed": frob.passed,
            "total_dimension": frob.total_dimension.to_json(),
        },
    }
    _emit(payload, args.format, lambda p: _matrix_table(p["cartan"])
          + f"\ngorenstein {p['gorenstein_parameter']}"
          + f"\nfrobenius {'pass' if p['frobenius']['passed'] else 'FAIL'}")
    return 0


def cmd_verify(args) -> int:
    jobs = []
    if args.relations or args.all:
        jobs.append(lambda: check_relations(args.max_N))
    if args.evaluators or args.all:
        jobs.append(lambda: check_evaluators(args.cases, args.seed, min(args.max_N, 3), args.max_m))
    if args.howe or args.all:
        jobs.append(lambda: check_howe())
    if args.dual or args.all:
        jobs.append(lambda: check_dual_blocks())
    if args.form or args.all:
        jobs.append(lambda: check_form_consistency())
    if args.shapovalov or args.all:
        jobs.append(lambda: check_shapovalov(args.cases, args.seed))
    if args.commutator or args.all:
        jobs.append(lambda: check_commutator(args.cases, args.seed))
    if args.serre or args.all:
        jobs.append(lambda: check_serre())
    if args.cartan or args.all:
        jobs.append(lambda: check_cartan(min(args.max_N, 3), args.max_m))
    if not jobs:
        raise ValueError("nothing to verify; pass --all or a specific sweep")
    workers = max(1, int(os.environ.get("QWEBS_WORKERS", "1")))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda j: j(), jobs))
    else:
        reports = [j() for j in jobs]
    if args.format == "json":
        print(json.dumps(
            [{"name": r.name, "passed": r.passed, "cases": r.cases, "failures": r.failures}
             for r in reports], sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.passed for r in reports) else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwebs",
        description="Exact computation in SL(N) web spaces over Z[v, v^-1].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_shape=True):
        p.add_argument("--format", choices=("json", "table"), default="json")
        if with_shape:
            p.add_argument("--N", type=int, required=True, help="strand color bound (>= 2)")
            p.add_argument("--l", type=int, required=True, help="row count of the shape")

    p = sub.add_parser("tableaux", help="enumerate tableaux of a shape, descending")
    common(p)
    p.add_argument("--type", help="entry multiplicities, e.g. 1,1,0,2")
    p.add_argument("--semistandard", action="store_true")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("ladder", help="build a ladder web from a rung word")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", required=True, help="start weight, e.g. 2,0")
    p.add_argument("--word", default="",
                   help="rung word, bottom rung first; use the = form for "
                        "leading signs, e.g. --word=-1^1,+2^1")
    p.set_defaults(func=cmd_ladder)

    p = sub.add_parser("eval", help="apply a web to a tensor vector")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--web", required=True, help="web JSON path, or - for stdin")
    p.add_argument("--vector", required=True, help="tensor vector JSON path")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("ev", help="closed evaluation of an endomorphism web")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--web", required=True)
    p.set_defaults(func=cmd_ev)

    p = sub.add_parser("form", help="the web form of two webs with equal boundaries")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--u", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("act", help="apply a divided power to a tableau vector")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--sign", choices=("+", "-"), required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--vector", required=True, help="tableau vector JSON path")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("lt-basis", help="intermediate basis vectors with peel words")
    common(p)
    p.add_argument("--type", help="restrict to one type block")
    p.set_defaults(func=cmd_lt_basis)

    p = sub.add_parser("dual-canonical", help="dual canonical basis vectors with corrections")
    common(p)
    p.add_argument("--type", help="restrict to one type block")
    p.set_defaults(func=cmd_dual_canonical)

    p = sub.add_parser("gram", help="Gram matrix of a basis on one type block")
    common(p)
    p.add_argument("--type", required=True)
    p.add_argument("--basis", choices=("lt", "dual"), default="lt")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("cartan", help="graded Cartan matrix and Frobenius report")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", required=True, help="block weight, e.g. 1,1,1,1")
    p.set_defaults(func=cmd_cartan)

    p = sub.add_parser("verify", help="relation and property sweeps")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--all", action="store_true")
    p.add_argument("--relations", action="store_true")
    p.add_argument("--evaluators", action="store_true")
    p.add_argument("--howe", action="store_true")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--form", action="store_true")
    p.add_argument("--shapovalov", action="store_true")
    p.add_argument("--commutator", action="store_true")
    p.add_argument("--serre", action="store_true")
    p.add_argument("--cartan", action="store_true")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-N", type=int, default=4)
    p.add_argument("--max-m", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvariantViolationError, NonDivisibleError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
