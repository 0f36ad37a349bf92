"""Command-line front end.

Exit codes: 0 success or pass, 1 a verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import render
from .bbw import HomogeneousBundleWeight, bbw, pushforward_hom
from .decomposition import blocks, diagonal_resolution_summary, k_rank_audit, verify_semiorthogonality
from .flags import flag_blocks, flag_rank_audit, verify_flag
from .koszul import cauchy_dimension_check
from .lr import lr_coefficient
from .partitions import parse_partition
from .weights import parse_weight

_WEIGHT_OPTIONS = ("--delta", "--gamma")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ks(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed k list {text!r}") from None


def _partition(text: str):
    try:
        return parse_partition(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight(text: str):
    try:
        return parse_weight(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")

    p = _Parser(prog="sodverify", description="Semiorthogonal decompositions of twisted grassmannians and flags.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("blocks", parents=[common], help="lex-ordered blocks of Gr(k, n)")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--order", choices=("desc", "asc"), default="desc")
    s.add_argument("--period", type=_positive)

    s = sub.add_parser("verify", parents=[common], help="semiorthogonality matrix and verdict for Gr(k, n)")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--order", choices=("desc", "asc"), default="desc")
    s.add_argument("--reverse-hom", action="store_true", help="require Hom(earlier, later) to vanish instead")
    s.add_argument("--period", type=_positive)

    s = sub.add_parser("flag-blocks", parents=[common], help="block tuples of Fl(k1,...,km; n)")
    s.add_argument("ks", type=_ks)
    s.add_argument("n", type=int)
    s.add_argument("--period", type=_positive)

    s = sub.add_parser("flag-verify", parents=[common], help="level-wise semiorthogonality for a flag variety")
    s.add_argument("ks", type=_ks)
    s.add_argument("n", type=int)
    s.add_argument("--order", choices=("desc", "asc"), default="desc")
    s.add_argument("--period", type=_positive)

    s = sub.add_parser("bbw", parents=[common], help="cohomology of S^delta T (x) S^gamma R on Gr(k, n)")
    s.add_argument("--delta", type=_weight, required=True, help="quotient-slot weight, e.g. 0,0")
    s.add_argument("--gamma", type=_weight, required=True, help="subbundle-slot weight, e.g. 0,-1")
    s.add_argument("--n", type=int)

    s = sub.add_parser("hom", parents=[common], help="Rq_* Hom(S^alpha R, S^alpha' R) on Gr(k, n)")
    s.add_argument("alpha", type=_partition)
    s.add_argument("alpha_prime", type=_partition)
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)

    s = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient c^c_{a,b}")
    s.add_argument("a", type=_partition)
    s.add_argument("b", type=_partition)
    s.add_argument("c", type=_partition)

    s = sub.add_parser("cauchy", parents=[common], help="dimension check of the Cauchy formula for Lambda^m(V (x) W)")
    s.add_argument("dim_v", type=_positive)
    s.add_argument("dim_w", type=_positive)
    s.add_argument("m", type=int)

    s = sub.add_parser("koszul", parents=[common], help="graded Koszul terms of the diagonal of Gr(k, n)")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)

    s = sub.add_parser("rank-audit", parents=[common], help="block count versus C(n, k)")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    return p


def _normalize_argv(argv: list[str]) -> list[str]:
    # "--gamma -1,0" would otherwise be read as an unknown option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _WEIGHT_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _dispatch(args) -> tuple[object, str, int]:
    """Return (json payload, table text, exit code)."""
    cmd = args.command
    if cmd == "blocks":
        bl = blocks(args.k, args.n, args.period, args.order)
        return [b.to_json() for b in bl], render.blocks(bl), 0
    if cmd == "verify":
        rep = verify_semiorthogonality(args.k, args.n, args.order, args.reverse_hom, args.period)
        return rep.to_json(), render.semiorth(rep), 0 if rep.passed else 1
    if cmd == "flag-blocks":
        bl = flag_blocks(args.ks, args.n, args.period)
        audit = flag_rank_audit(args.ks, args.n)
        payload = {"ks": args.ks, "n": args.n, "blocks": [b.to_json() for b in bl], "rank": audit.to_json()}
        return payload, render.flag_blocks(bl) + "\n" + render.rank(audit), 0 if audit.equal else 1
    if cmd == "flag-verify":
        rep = verify_flag(args.ks, args.n, args.order, args.period)
        return rep.to_json(), render.flag_report(rep), 0 if rep.passed else 1
    if cmd == "bbw":
        w = HomogeneousBundleWeight(args.delta, args.gamma, args.n)
        res = bbw(w)
        payload = {
            "delta": w.delta.to_json(),
            "gamma": w.gamma.to_json(),
            "n": w.n,
            "acyclic": res.is_acyclic,
            "degree": res.degree,
            "weight": None if res.weight is None else res.weight.to_json(),
            "dim": res.dimension,
        }
        return payload, render.cohomology(res), 0
    if cmd == "hom":
        rep = pushforward_hom(args.alpha, args.alpha_prime, args.k, args.n)
        return rep.to_json(), render.pushforward(rep), 0
    if cmd == "lr":
        c = lr_coefficient(args.a, args.b, args.c)
        payload = {"a": args.a.to_json(), "b": args.b.to_json(), "c": args.c.to_json(), "coefficient": c}
        return payload, str(c), 0
    if cmd == "cauchy":
        chk = cauchy_dimension_check(args.dim_v, args.dim_w, args.m)
        return chk.to_json(), render.cauchy(chk), 0 if chk.equal else 1
    if cmd == "koszul":
        summary = diagonal_resolution_summary(args.k, args.n)
        return summary.to_json(), render.diagonal(summary), 0 if summary.bijection else 1
    if cmd == "rank-audit":
        audit = k_rank_audit(args.k, args.n)
        return audit.to_json(), render.rank(audit), 0 if audit.equal else 1
    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        build_parser().print_help(stdout)
        return 0 if argv else 2
    try:
        args = build_parser().parse_args(_normalize_argv(argv))
        payload, text, code = _dispatch(args)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"sodverify: error: {exc}", file=stderr)
        return 2
    print(render.dumps(payload) if args.format == "json" else text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())
