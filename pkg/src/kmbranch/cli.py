"""``kmbranch`` command line: algebra, paths, mult, branch, verify.

Exit codes: 0 success, 1 verification mismatch or domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .algebra import AffineAlgebra, Weight, build_affine, preset, winding_construct
from .branching import (METHODS, branch, character_by_kostant, character_by_paths,
                        verify_kac_character, weight_multiplicity)
from .errors import IoFailure, KMBranchError
from .paths import enumerate_ls_paths, path_depth
from .serialize import (algebra_to_json, dumps, emit_table, format_rational, format_rational_vec,
                        parse_rational, path_to_json, series_to_json, weight_to_json)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def thread_cap(env=None) -> int:
    """Value of KMBRANCH_THREADS (default 1).  The engine itself runs serially."""
    env = os.environ if env is None else env
    raw = env.get("KMBRANCH_THREADS")
    if raw is None or raw == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"KMBRANCH_THREADS must be a positive integer, got {raw!r}")
    if n <= 0:
        raise UsageError(f"KMBRANCH_THREADS must be a positive integer, got {raw!r}")
    return n


def _nonneg_int(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s!r}")
    return v


def _add_algebra(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--preset", help="A1_1 .. A4_1")
    g.add_argument("--matrix", help='inline Cartan matrix as JSON, e.g. "[[2,-2],[-2,2]]"')
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.add_argument("--output", help="write here instead of standard output")


def _add_weight(p, depth=True):
    p.add_argument("--hw", required=True, help="highest-weight labels, comma separated")
    if depth:
        p.add_argument("--depth", type=_nonneg_int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kmbranch", description="Branching to winding subalgebras of affine algebras")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("algebra", help="null vectors, Coxeter numbers and winding data")
    _add_algebra(p)
    p.add_argument("--u", type=int)

    p = sub.add_parser("paths", help="LS paths of a given shape")
    _add_algebra(p)
    _add_weight(p)

    p = sub.add_parser("mult", help="weight multiplicities")
    _add_algebra(p)
    _add_weight(p)
    p.add_argument("--mu", help="labels of a single weight; omit for the whole truncated character")
    p.add_argument("--mu-d", default="0", help="d-value of --mu (rational)")
    p.add_argument("--cutoff-check", action="store_true")

    p = sub.add_parser("branch", help="branching table for g[u]")
    _add_algebra(p)
    _add_weight(p)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--margin", type=_nonneg_int)
    p.add_argument("--method", choices=METHODS + ("all",), default="steinberg")

    p = sub.add_parser("verify", help="Kac character identity and path/Kostant equivalence")
    _add_algebra(p)
    _add_weight(p)
    p.add_argument("--margin", type=_nonneg_int, default=1)
    return parser


def _algebra(args) -> AffineAlgebra:
    if args.matrix:
        try:
            m = json.loads(args.matrix)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--matrix is not valid JSON: {exc}")
        return build_affine(m)
    try:
        return preset(args.preset or "A1_1")
    except KeyError as exc:
        raise UsageError(exc.args[0])


def _labels(text, n, what="--hw", integral=True):
    try:
        vals = [parse_rational(x) for x in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{what} must be comma separated numbers, got {text!r}")
    if len(vals) != n:
        raise UsageError(f"{what} needs {n} labels, got {len(vals)}")
    if integral and any(v < 0 or v.denominator != 1 for v in vals):
        raise UsageError(f"{what} labels must be nonnegative integers")
    return vals


def _write(args, text: str):
    if not args.output:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(str(exc)) from exc


def _pretty_kv(obj) -> str:
    lines = []
    for k, v in obj.items():
        lines.append(f"{k}: {v if not isinstance(v, (list, dict)) else json.dumps(v)}")
    return "\n".join(lines) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_algebra(args) -> int:
    alg = _algebra(args)
    info = dict(algebra_to_json(alg), a=list(alg.a), c=list(alg.c),
                coxeter=alg.coxeter, dual_coxeter=alg.dual_coxeter)
    if args.u is not None:
        w = winding_construct(alg, args.u)
        info["u"] = w.u
        info["dotted_rho_labels"] = [format_rational(x) for x in w.labels(w.rho)]
        info["dotted_alpha0"] = weight_to_json(w.roots[0])
    if args.format == "json":
        text = dumps(info)
    elif args.format == "csv":
        text = _csv(["key", "value"], [[k, json.dumps(v)] for k, v in info.items()])
    else:
        text = _pretty_kv(info)
    _write(args, text)
    return 0


def cmd_paths(args) -> int:
    alg = _algebra(args)
    lam = alg.weight(_labels(args.hw, alg.n))
    paths = enumerate_ls_paths(alg, lam, args.depth)
    if args.format == "json":
        text = dumps([{"depth": format_rational(path_depth(lam, p)),
                       "endpoint": weight_to_json(p.endpoint),
                       "segments": path_to_json(p)} for p in paths])
    elif args.format == "csv":
        text = _csv(["depth", "endpoint", "segments"],
                    [[format_rational(path_depth(lam, p)), _wtxt(p.endpoint),
                      " ".join(_wtxt(s) for s in p.segments)] for p in paths])
    else:
        text = "".join(f"{format_rational(path_depth(lam, p))}  {_wtxt(p.endpoint)}  "
                       f"{' '.join(_wtxt(s) for s in p.segments)}\n" for p in paths)
    _write(args, text)
    return 0


def _wtxt(w: Weight) -> str:
    return f"{format_rational_vec(w.labels)}d{format_rational(w.d)}"


def cmd_mult(args) -> int:
    alg = _algebra(args)
    lam = alg.weight(_labels(args.hw, alg.n))
    if args.mu is not None:
        try:
            d = parse_rational(args.mu_d)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--mu-d must be a rational, got {args.mu_d!r}")
        mu = Weight(_labels(args.mu, alg.n, "--mu", integral=False), d)
        m = weight_multiplicity(alg, lam, mu, cutoff_check=args.cutoff_check)
        obj = dict(weight_to_json(mu), mult=m)
        text = dumps(obj) if args.format == "json" else (
            _csv(["labels", "d", "mult"], [[" ".join(obj["labels"]), obj["d"], m]])
            if args.format == "csv" else f"{_wtxt(mu)}  {m}\n")
        _write(args, text)
        return 0
    ch = character_by_kostant(alg, lam, args.depth)
    obj = series_to_json(ch)
    if args.format == "json":
        text = dumps(obj)
    else:
        rows = [[" ".join(t["labels"]), t["d"], t["depth"], t["coeff"]] for t in obj["terms"]]
        text = (_csv(["labels", "d", "depth", "mult"], rows) if args.format == "csv"
                else "".join(f"{r[2]:>3}  ({r[0]}) d{r[1]}  {r[3]}\n" for r in rows))
    _write(args, text)
    return 0


def cmd_branch(args) -> int:
    alg = _algebra(args)
    lam = alg.weight(_labels(args.hw, alg.n))
    w = winding_construct(alg, args.u)
    methods = METHODS if args.method == "all" else (args.method,)
    table = branch(alg, lam, w, args.depth, methods=methods, margin=args.margin)
    _write(args, emit_table(table, args.format).decode("utf-8"))
    if args.method == "all" and not table.verified:
        print("verification mismatch: methods disagree within the margin", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    alg = _algebra(args)
    lam = alg.weight(_labels(args.hw, alg.n))
    kac = verify_kac_character(alg, lam, args.depth, args.margin)
    by_paths = character_by_paths(alg, lam, args.depth)
    by_kostant = character_by_kostant(alg, lam, args.depth)
    equal = dict(by_paths.items()) == dict(by_kostant.items())
    obj = {"kac_character": kac, "paths_equal_kostant": equal,
           "depth": args.depth, "margin": args.margin, "lambda": weight_to_json(lam)}
    if args.format == "json":
        text = dumps(obj)
    elif args.format == "csv":
        text = _csv(["check", "ok"], [["kac_character", str(kac).lower()],
                                      ["paths_equal_kostant", str(equal).lower()]])
    else:
        text = f"kac_character: {kac}\npaths_equal_kostant: {equal}\n"
    _write(args, text)
    return 0 if kac and equal else 1


COMMANDS = {"algebra": cmd_algebra, "paths": cmd_paths, "mult": cmd_mult,
            "branch": cmd_branch, "verify": cmd_verify}


def parse_and_run(argv=None) -> int:
    parser = build_parser()
    try:
        thread_cap()
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except KMBranchError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(parse_and_run())


if __name__ == "__main__":
    main()
