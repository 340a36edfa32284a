"""
Command-line interface.

Maps are given inline with ``--p "<cycles>"`` (repeatable) and optional
``--pi``, or as JSON files ``{"n": 4, "p": "(1 3)", "pi": "(1 2)(3 4)"}`` via
``--map``. The normal matching is used when no ``--pi`` is given.

Exit codes: 0 success, 1 negative verdict (``iso``: not isomorphic,
``verify``: a check failed), 2 malformed input.
"""

import argparse
import json
import sys

from . import classes, graph, iso, knot, maps, verify
from .perm import format_cycles, parse_cycles

FORCE_BOUND = 5


class InputError(Exception):
    pass


def _infer_order(args):
    if args.m is not None:
        if args.m < 1:
            raise InputError(f"--m must be >= 1, got {args.m}")
        return 2 * args.m
    texts = (args.pi or []) + (args.p or [])
    top = 0
    for t in texts:
        for tok in t.replace("(", " ").replace(")", " ").replace(",", " ").split():
            try:
                top = max(top, int(tok))
            except ValueError:
                raise InputError(f"malformed cycle notation {t!r}") from None
    if top == 0:
        raise InputError("cannot infer the number of corners; pass --m")
    return top + top % 2


def _load_maps(args):
    out = []
    try:
        for path in args.map or []:
            with open(path) as fh:
                out.append(maps.map_from_dict(json.load(fh)))
        if args.p:
            n = _infer_order(args)
            pis = [parse_cycles(t, n) for t in args.pi] if args.pi else [maps.normal_matching(n // 2)]
            for i, t in enumerate(args.p):
                pi = pis[i] if i < len(pis) else pis[0]
                out.append(maps.make_map(parse_cycles(t, n), pi))
    except (OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from None
    return out


def _need(args, k):
    ms = _load_maps(args)
    if len(ms) < k:
        raise InputError(f"{args.command} needs {k} map(s), got {len(ms)}")
    return ms


def _show_map(M, fmt):
    if fmt == "lines":
        return maps.dumps(M)
    return f"p={format_cycles(M.p)} pi={format_cycles(M.pi)}"


def _coloring_table(K):
    n = len(K.mu)
    w = max(2, len(str(n)))
    head = "corner " + " ".join(f"{c:>{w}}" for c in range(1, n + 1))
    row = "color  " + " ".join(f"{'C' + str(k):>{w}}" for k in K.coloring.colors)
    return head + "\n" + row


def _enum_m(args):
    if args.m is None:
        raise InputError(f"{args.command} needs --m")
    if args.m > classes.DEFAULT_BOUND:
        if not args.force:
            raise InputError(f"m = {args.m} above {classes.DEFAULT_BOUND}; use --force (m <= {FORCE_BOUND})")
        if args.m > FORCE_BOUND:
            raise InputError(f"m = {args.m} above the hard limit {FORCE_BOUND}")
        print(f"warning: m = {args.m} enumerates {2 * args.m}! maps, this takes a while", file=sys.stderr)
    return args.m


def cmd_mul(args):
    ms = _need(args, 2)
    out = ms[0]
    for M in ms[1:]:
        out = maps.multiply(out, M)
    print(_show_map(out, args.format))


def cmd_dual(args):
    print(_show_map(maps.dual(_need(args, 1)[0]), args.format))


def cmd_reverse(args):
    print(_show_map(maps.reverse(_need(args, 1)[0]), args.format))


def cmd_ematching(args):
    print(format_cycles(maps.e_matching(_need(args, 1)[0])))


def cmd_edges(args):
    M = _need(args, 1)[0]
    if args.format == "lines":
        for a, b in maps.edges(M):
            print(f"{a}\t{b}")
        return
    print("edges: " + " ".join(f"{{{a},{b}}}" for a, b in maps.edges(M)))
    print("next-edges: " + " ".join(f"{{{a},{b}}}" for a, b in maps.next_edges(M)))


def cmd_knot(args):
    K = knot.knot_of(_need(args, 1)[0])
    print(f"mu={format_cycles(K.mu)}")
    print(_coloring_table(K))


def cmd_decompose(args):
    M = _need(args, 1)[0]
    K, A = knot.decompose(M)
    print(f"mu={format_cycles(K.mu)}")
    print(f"A={format_cycles(A.p)}")
    print(f"selfconjugate={str(classes.is_selfconjugate(A)).lower()}")


def cmd_selfconj(args):
    M = _need(args, 1)[0]
    ok = classes.is_selfconjugate(M)
    print(f"selfconjugate={str(ok).lower()}")
    if ok:
        sp = classes.encode_signed(M)
        print(f"pair_perm={list(sp.pair_perm.images)} flips={[int(f) for f in sp.flips]}")


def cmd_census(args):
    m = _enum_m(args)
    pi = parse_cycles(args.pi[0], 2 * m) if args.pi else None
    print(classes.format_census(classes.census(m, pi, bound=None), args.format))


def cmd_counts(args):
    if args.m is None or args.m < 1:
        raise InputError("counts needs --m >= 1")
    k, s = classes.class_count(args.m), classes.class_size(args.m)
    print(f"classes={k} size={s} total={k * s}")


def cmd_iso(args):
    M1, M2 = _need(args, 2)[:2]
    A = iso.are_isomorphic(M1, M2)
    if A is None:
        print("not isomorphic")
        return 1
    print(f"A={format_cycles(A)}")
    print(f"same_class={str(iso.same_class_criterion(M1, M2, A)).lower()}")


def cmd_view(args):
    M = _need(args, 1)[0]
    if args.export:
        print(graph.export_graph(M, args.export))
        return
    v = graph.view(M)

    def show(cs):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)

    print(f"vertices={len(v.vertices)} {show(v.vertices)}")
    print(f"faces={len(v.faces)} {show(v.faces)}")
    print(f"edges={len(v.edge_pairs)} {show(v.edge_pairs)}")
    print(f"components={len(v.components)}")
    print(f"chi={graph.euler_characteristic(M)} genus={graph.genus(M)}")


def cmd_verify(args):
    m = _enum_m(args)
    results = verify.run_suite(m, seed=args.seed, bound=None)
    print(verify.format_results(results))
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "mul": (cmd_mul, "multiply maps left to right"),
    "dual": (cmd_dual, "dual map (Q, P)"),
    "reverse": (cmd_reverse, "reversed map (P^-1, P^-1 pi)"),
    "ematching": (cmd_ematching, "edge matching P pi P^-1"),
    "edges": (cmd_edges, "edges and next edges"),
    "knot": (cmd_knot, "combinatorial knot and well coloring"),
    "decompose": (cmd_decompose, "knot times selfconjugate map"),
    "selfconj": (cmd_selfconj, "selfconjugacy test and signed encoding"),
    "census": (cmd_census, "count all maps by edge matching"),
    "counts": (cmd_counts, "class count and size formulas"),
    "iso": (cmd_iso, "isomorphism witness search"),
    "view": (cmd_view, "vertices, faces, edges, components, genus"),
    "verify": (cmd_verify, "run the theorem checks"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", action="append", help="vertex permutation in cycle notation (repeatable)")
    common.add_argument("--pi", action="append", help="next-edge matching (default: normal)")
    common.add_argument("--map", action="append", metavar="FILE", help="JSON map file (repeatable)")
    common.add_argument("--m", type=int, help="number of edges; corners are 1..2m")
    common.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    common.add_argument("--format", choices=("text", "lines"), default="text")
    common.add_argument("--force", action="store_true", help=f"allow enumeration up to m = {FORCE_BOUND}")
    parser = argparse.ArgumentParser(prog="combmaps", description="Combinatorial maps as permutations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=helptext)
        if name == "view":
            sp.add_argument("--export", choices=("edge-list", "dot"))
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return COMMANDS[args.command][0](args) or 0
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
