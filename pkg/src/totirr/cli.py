"""Command-line front end.

Line-oriented key=value output on stdout; structured reports go to files via
--format csv/json. No color, no TTY detection, byte-stable across runs.

Exit codes: 0 success, 1 audit engine invariant violation, 2 usage or input
error (bad flags, malformed files, invalid vertex ids).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .audit import (
    joint_predictions,
    lemma34_suite,
    run_arc_transform_suite,
    run_closed_form_suite,
    run_edge_joint_suite,
    run_edge_transform_suite,
)
from .fileio import read_graph_file, write_graph_file
from .generators import (
    complete,
    complete_bipartite,
    cycle,
    empty_graph,
    matching,
    orient_by_labeling,
    orient_left_right,
    path,
    random_connected,
    random_digraph,
    random_graph,
    random_tree,
    star,
)
from .graphs import Digraph, EditOp, Graph, apply_edit, degree_multiset
from .irregularity import exact_delta_for_edit, irr_digraph, irr_graph, irr_naive
from .partitions import arc_partition, transform_partition
from .predictors import (
    FORMULA_IS_DELTA,
    prop47_formula_id,
    prop47_predict,
    thm33_formula_id,
    thm33_predict,
)
from .transforms import disjoint_union, edge_joint

_RANDOM_SUITE_DEFAULT = 1000
_CLOSED_FORM_DEFAULT = 64


def _parse_seed(text: str) -> int:
    # base 0 accepts 0x... hex spellings
    return int(text, 0)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _cmd_compute(args: argparse.Namespace) -> int:
    g = read_graph_file(args.input)
    if isinstance(g, Digraph):
        pair = irr_digraph(g)
        print(f"irr_in={pair.irr_in} irr_out={pair.irr_out}")
    else:
        print(f"irr_t={irr_graph(g)}")
    return 0


def _cmd_joint(args: argparse.Namespace) -> int:
    g1 = read_graph_file(args.left)
    g2 = read_graph_file(args.right)
    if isinstance(g1, Digraph) or isinstance(g2, Digraph):
        raise ValueError("joint expects undirected inputs")
    joined = edge_joint(g1, g2, args.u, args.v)
    if args.out is not None:
        write_graph_file(args.out, joined)
    if args.report:
        union_irr = irr_naive(degree_multiset(g1).merge(degree_multiset(g2)))
        oracle = irr_naive(degree_multiset(joined))
        union = disjoint_union(g1, g2)
        op = EditOp.add_edge(args.u, g1.vertex_count + args.v)
        engine = exact_delta_for_edit(union, op)
        print(f"union_irr={union_irr}")
        print(f"oracle_irr={oracle}")
        print(f"engine_delta={engine}")
        for fid, predicted in joint_predictions(g1, g2, args.u, args.v):
            if FORMULA_IS_DELTA[fid]:
                agrees = predicted == oracle - union_irr
            else:
                agrees = predicted == oracle
            print(f"formula={fid.value} predicted={predicted} agrees={_flag(agrees)}")
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    g = read_graph_file(args.input)
    a, b = args.cut
    if isinstance(g, Digraph):
        end = args.end or "head"
        if end == "head":
            op = EditOp.retarget_head(a, b, args.target)
            mode, marked = "in", b
        else:
            op = EditOp.retarget_tail(a, b, args.target)
            mode, marked = "out", a
        irr_before = irr_naive(degree_multiset(g, mode))
        edited = apply_edit(g, op)
        oracle = irr_naive(degree_multiset(edited, mode))
        deltas = exact_delta_for_edit(g, op)
        engine = deltas[0] if mode == "in" else deltas[1]
        counts = arc_partition(g, marked, args.target, mode)
        predicted = prop47_predict(irr_before, counts)
        fid = prop47_formula_id(mode, counts.relation)
    else:
        if args.end is not None:
            raise ValueError("--end only applies to directed inputs")
        op = EditOp.retarget_edge(a, b, args.target)
        irr_before = irr_naive(degree_multiset(g))
        edited = apply_edit(g, op)
        oracle = irr_naive(degree_multiset(edited))
        engine = exact_delta_for_edit(g, op)
        counts = transform_partition(g, a, b, args.target)
        predicted = thm33_predict(irr_before, counts)
        fid = thm33_formula_id(counts.relation)
    if args.out is not None:
        write_graph_file(args.out, edited)
    if args.report:
        agrees = predicted == oracle
        print(f"irr_before={irr_before}")
        print(f"oracle_irr={oracle}")
        print(f"engine_delta={engine}")
        print(f"formula={fid.value} predicted={predicted} agrees={_flag(agrees)}")
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    suite = args.suite
    if suite == "closed-forms":
        max_n = args.instances if args.instances is not None else _CLOSED_FORM_DEFAULT
        report = run_closed_form_suite(max_n)
    else:
        count = args.instances if args.instances is not None else _RANDOM_SUITE_DEFAULT
        runner = {
            "edge-joint": run_edge_joint_suite,
            "edge-transform": run_edge_transform_suite,
            "arc-transform": run_arc_transform_suite,
            "lemma34": lemma34_suite,
        }[suite]
        report = runner(count, args.seed)
    text = report.to_csv() if args.format == "csv" else report.to_json()
    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    for stat in report.formula_stats:
        print(f"formula={stat.formula_id} agree={stat.agree} total={stat.total} pct={stat.pct}")
    print(f"engine_ok={_flag(report.engine_ok)}")
    return 0 if report.engine_ok else 1


def _need_params(family: str, params: Sequence[int], want: int) -> None:
    if len(params) != want:
        raise ValueError(f"family {family} takes {want} parameter(s), got {len(params)}")


def _build_family(args: argparse.Namespace) -> Graph:
    family = args.family
    params = args.params
    if family == "path":
        _need_params(family, params, 1)
        return path(params[0])
    if family == "cycle":
        _need_params(family, params, 1)
        return cycle(params[0])
    if family == "complete":
        _need_params(family, params, 1)
        return complete(params[0])
    if family == "star":
        _need_params(family, params, 1)
        return star(params[0])
    if family == "complete-bipartite":
        _need_params(family, params, 2)
        return complete_bipartite(params[0], params[1])
    if family == "empty":
        _need_params(family, params, 1)
        return empty_graph(params[0])
    if family == "matching":
        _need_params(family, params, 1)
        return matching(params[0])
    if family == "random":
        _need_params(family, params, 1)
        return random_graph(params[0], args.p_index, args.seed)
    if family == "tree":
        _need_params(family, params, 1)
        return random_tree(params[0], args.seed)
    if family == "connected":
        _need_params(family, params, 1)
        return random_connected(params[0], args.p_index, args.seed)
    raise ValueError(f"unknown family: {family}")


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "random-digraph":
        _need_params(args.family, args.params, 1)
        if args.orient != "none":
            raise ValueError("random-digraph is already directed")
        out: Graph | Digraph = random_digraph(args.params[0], args.p_index, args.seed)
    else:
        g = _build_family(args)
        if args.orient == "none":
            out = g
        elif args.orient == "labeling":
            out = orient_by_labeling(g, tuple(range(g.vertex_count)))
        else:
            if args.family != "complete-bipartite":
                raise ValueError("left-right orientation only applies to complete-bipartite")
            out = orient_left_right(args.params[0], args.params[1])
    write_graph_file(args.out, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totirr",
        description="Total irregularity toolkit: compute, transform, generate, audit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print total irregularity of a graph file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("joint", help="join two graphs by a fresh edge")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--report", action="store_true")
    p.set_defaults(func=_cmd_joint)

    p = sub.add_parser("transform", help="retarget a cut edge or an arc end")
    p.add_argument("--input", required=True)
    p.add_argument("--cut", type=int, nargs=2, required=True, metavar=("A", "B"))
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--end", choices=("head", "tail"))
    p.add_argument("--out")
    p.add_argument("--report", action="store_true")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("audit", help="run a differential audit suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=("edge-joint", "edge-transform", "arc-transform", "closed-forms", "lemma34"),
    )
    p.add_argument("--instances", type=int, help="instance count; vertex cap for closed-forms")
    p.add_argument("--seed", type=_parse_seed, default=0xC0FFEE, help="decimal or 0x-prefixed")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("generate", help="write a generated graph in edge-list format")
    p.add_argument(
        "--family",
        required=True,
        choices=(
            "path",
            "cycle",
            "complete",
            "star",
            "complete-bipartite",
            "empty",
            "matching",
            "random",
            "tree",
            "connected",
            "random-digraph",
        ),
    )
    p.add_argument("--params", type=int, nargs="+", required=True)
    p.add_argument("--orient", choices=("none", "labeling", "left-right"), default="none")
    p.add_argument("--seed", type=_parse_seed, default=0)
    p.add_argument("--p-index", type=int, default=1, choices=(0, 1, 2))
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
