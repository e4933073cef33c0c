"""Command-line interface.

Reports are ``key value`` lines; ``--json`` prints the same fields as one JSON
object per tree. Tree files may hold several trees separated by ``--`` lines,
and ``-`` reads standard input. Exit status: 0 success, 1 domain error,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import oracle
from .core import Tree, format_tree, iter_trees, parse_tree
from .enumeration import (
    CLAIM_GROUPS,
    CLAIMS,
    MAX_ORDER,
    exhaustive_check,
    free_trees,
    resolve_claims,
)
from .errors import FormatError, GttError
from .family import (
    check_certificate,
    format_certificate,
    parse_certificate,
    random_member,
    random_s_member,
    recognize,
)
from .operations import OpKind, apply_op, corona, gap_tree_tk, gap_tree_tpk
from .tree_dp import gamma_t_tree, tau_tree


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _trees(path: str) -> list[Tree]:
    trees = list(iter_trees(_read(path)))
    if not trees:
        raise FormatError(f"{path}: no tree found")
    return trees


def _emit(out: TextIO, fields: list[tuple[str, object]], as_json: bool) -> None:
    if as_json:
        out.write(json.dumps(dict(fields)) + "\n")
        return
    for key, value in fields:
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, (list, tuple)):
            if value and isinstance(value[0], (list, tuple)):
                for item in value:
                    out.write(f"{key} {' '.join(map(str, item))}\n")
                continue
            value = " ".join(map(str, value))
        out.write(f"{key} {value}\n")


def _separated(out: TextIO, items, render) -> None:
    for i, item in enumerate(items):
        if i:
            out.write("--\n")
        render(item)


# -- verbs ----------------------------------------------------------------------

def cmd_analyze(args, out: TextIO) -> int:
    def render(T: Tree) -> None:
        if args.fast:
            tau, gt = tau_tree(T), gamma_t_tree(T)
            fields = [("n", T.n), ("tau", tau), ("gamma_t", gt), ("gtt_graph", tau == gt)]
        else:
            r = oracle.analyze(T)
            fields = [
                ("n", T.n), ("tau", r.tau), ("gamma_t", r.gamma_t),
                ("gtt_graph", r.is_gtt_graph), ("min_vc", r.num_min_vc),
                ("min_tds", r.num_min_tds), ("gtt_sets", r.num_gtt_sets),
            ]
            if r.gtt_witness is not None:
                fields.append(("witness", sorted(r.gtt_witness)))
            if args.sets:
                fields.append(("vc_set", [sorted(S) for S in oracle.min_vertex_covers(T)]))
                fields.append(("tds_set", [sorted(S) for S in oracle.min_total_dominating_sets(T)]))
                fields.append(("gtt_set", [sorted(S) for S in oracle.gtt_sets(T)]))
        _emit(out, fields, args.json)

    _separated(out, _trees(args.file), render)
    return 0


def cmd_recognize(args, out: TextIO) -> int:
    def render(T: Tree) -> None:
        res = recognize(T, trust_proof=args.trust_proof)
        fields: list[tuple[str, object]] = [("n", T.n), ("member", res.member)]
        if res.member:
            cert = res.certificate
            fields.append(("steps", len(cert.steps)))
            if args.json:
                fields.append(("certificate", [f"{s.op.value} {s.attach_vertex}" for s in cert.steps]))
            _emit(out, fields, args.json)
            if not args.json:
                out.write(format_certificate(cert))
            if args.cert_out:
                with open(args.cert_out, "w") as fh:
                    fh.write(format_certificate(cert))
        else:
            fields.append(("reason", res.reason))
            _emit(out, fields, args.json)

    _separated(out, _trees(args.file), render)
    return 0


def cmd_verify_cert(args, out: TextIO) -> int:
    T = parse_tree(_read(args.tree))
    cert = parse_certificate(_read(args.cert))
    ok, detail = check_certificate(cert, T)
    _emit(out, [("valid", ok), ("steps", len(cert.steps)), ("detail", detail)], args.json)
    return 0 if ok else 1


def cmd_grow(args, out: TextIO) -> int:
    op = OpKind(args.op.upper())
    T = parse_tree(_read(args.file))
    res = apply_op(op, T, args.at, checked=not args.unchecked)
    out.write(f"# {op.value} at {args.at}; new vertices {' '.join(map(str, res.new_vertices))}\n")
    out.write(format_tree(res.tree))
    return 0


def cmd_gap_family(args, out: TextIO) -> int:
    build = gap_tree_tk if args.family == "tk" else gap_tree_tpk
    out.write(format_tree(build(args.k)))
    return 0


def cmd_corona(args, out: TextIO) -> int:
    _separated(out, _trees(args.file), lambda T: out.write(format_tree(corona(T))))
    return 0


def cmd_enumerate(args, out: TextIO) -> int:
    if args.emit:
        _separated(out, free_trees(args.n), lambda T: out.write(format_tree(T)))
    else:
        out.write(f"order {args.n} count {sum(1 for _ in free_trees(args.n))}\n")
    return 0


def cmd_verify(args, out: TextIO) -> int:
    report = exhaustive_check(args.max, args.claims, n_min=args.min, threads=args.threads)
    if args.json:
        out.write(json.dumps(report.as_dict()) + "\n")
    else:
        out.write(report.format())
    return 0


def cmd_random_member(args, out: TextIO) -> int:
    T, cert = random_member(args.n, args.seed)
    if args.json:
        _emit(out, [("n", T.n), ("edges", [list(e) for e in T.edges]),
                    ("certificate", [f"{s.op.value} {s.attach_vertex}" for s in cert.steps])], True)
    else:
        out.write("".join(f"# {line}\n" for line in format_certificate(cert).splitlines()))
        out.write(format_tree(T))
    if args.cert_out:
        with open(args.cert_out, "w") as fh:
            fh.write(format_certificate(cert))
    return 0


def cmd_random_s_member(args, out: TextIO) -> int:
    m = random_s_member(args.n, args.seed)
    steps = " ".join(f"{op.value}@{u}" for op, u in m.steps)
    out.write(f"# tau {m.tau} gamma_t {m.gamma_t} steps {steps or '-'}\n")
    out.write(format_tree(m.tree))
    return 0


# -- parser ---------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse's exit status 2, but no usage dump
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gttrees", description="Vertex cover / total domination tools for trees.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="parameters and (gamma_t-tau)-sets of trees")
    a.add_argument("file")
    a.add_argument("--fast", action="store_true", help="tau and gamma_t only, by dynamic programming")
    a.add_argument("--sets", action="store_true", help="list every minimum set")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("recognize", help="decide membership and print a certificate")
    r.add_argument("file")
    r.add_argument("--trust-proof", action="store_true", help="skip oracle precondition re-checks")
    r.add_argument("--cert-out", metavar="PATH")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_recognize)

    v = sub.add_parser("verify-cert", help="replay a certificate against a tree")
    v.add_argument("tree")
    v.add_argument("cert")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify_cert)

    g = sub.add_parser("grow", help="apply one operation")
    g.add_argument("file")
    g.add_argument("--op", required=True, choices=[k.value.lower() for k in OpKind])
    g.add_argument("--at", required=True, type=int)
    g.add_argument("--unchecked", action="store_true")
    g.set_defaults(func=cmd_grow)

    f = sub.add_parser("gap-family", help="emit a tree with a prescribed parameter gap")
    f.add_argument("family", choices=["tk", "tpk"])
    f.add_argument("--k", required=True, type=int)
    f.set_defaults(func=cmd_gap_family)

    c = sub.add_parser("corona", help="attach a pendant to every vertex")
    c.add_argument("file")
    c.set_defaults(func=cmd_corona)

    e = sub.add_parser("enumerate", help="count or stream free trees")
    e.add_argument("--n", required=True, type=int)
    e.add_argument("--emit", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    w = sub.add_parser("verify", help="exhaustive claim checks over all small trees")
    w.add_argument("--max", required=True, type=int)
    w.add_argument("--min", type=int, default=1)
    w.add_argument("--claims", default="all",
                   help=f"comma list of {', '.join(list(CLAIM_GROUPS) + list(CLAIMS))}")
    w.add_argument("--threads", type=int, default=1)
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_verify)

    m = sub.add_parser("random-member", help="random tree of the family with its certificate")
    m.add_argument("--n", required=True, type=int)
    m.add_argument("--seed", required=True, type=int)
    m.add_argument("--cert-out", metavar="PATH")
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_random_member)

    s = sub.add_parser("random-s-member", help="random walk with the relaxed operations")
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--seed", required=True, type=int)
    s.set_defaults(func=cmd_random_s_member)
    return p


def _validate(p: argparse.ArgumentParser, args) -> None:
    if args.verb == "enumerate" and not 1 <= args.n <= MAX_ORDER:
        p.error(f"--n must be in 1..{MAX_ORDER}")
    if args.verb == "gap-family" and args.k < 1:
        p.error("--k must be positive")
    if args.verb == "verify":
        if args.threads < 1:
            p.error("--threads must be positive")
        try:
            resolve_claims(args.claims)
        except ValueError as exc:
            p.error(str(exc))


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (GttError, ValueError, OSError) as exc:
        err.write(f"gttrees {args.verb}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
