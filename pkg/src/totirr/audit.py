"""Differential audit: exact engine versus brute force versus the formulas.

Every suite generates instances deterministically from (seed, instance id) =
one splitmix child stream per instance, so a report is a pure function of its
arguments and regenerating it reproduces identical bytes. Each suite also
pins a fixed block of hand-checked witness instances at the front of the id
space before the random ones.

Three quantities meet in every row:

  oracle   irr recomputed from scratch on the edited value. Random suites use
           the O(n^2) definition (irr_naive); the closed-form suite uses the
           fast path, whose equivalence is covered elsewhere.
  engine   the incremental delta from exact_delta_for_edit. Engine versus
           oracle is the hard invariant: any mismatch marks the report as
           failed (engine_ok False), which the CLI maps to exit code 1.
  formula  predictions under their ids. A disagreeing formula is a finding,
           not a failure; the row lands in the disagreements list and the
           per-formula agreement stats.

Lemma34 rows carry no formula value; their predicted column holds the
pre-edit irregularity as a strict upper bound and agrees means the edit
strictly decreased it.

Report formats: CSV with one line per prediction per instance, and a JSON
object with the suite metadata, per-formula stats, and the disagreement rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .generators import (
    P_TABLE,
    complete,
    complete_bipartite,
    cycle,
    empty_graph,
    matching,
    orient_by_labeling,
    orient_left_right,
    path,
    random_connected,
    random_connected_with_cut_edge,
    random_digraph,
    random_graph,
    random_tree,
    star,
)
from .graphs import Digraph, EditOp, Graph, apply_edit, degree_multiset
from .irregularity import IrrPair, exact_delta_for_edit, irr_digraph, irr_naive
from .partitions import arc_partition, joint_partition, transform_counts, transform_partition
from .predictors import (
    FORMULA_IS_DELTA,
    FormulaId,
    bipartite_closed_form,
    complete_closed_form,
    cycle_closed_form,
    path_closed_form,
    prop27,
    prop27_formula_id,
    prop47_formula_id,
    prop47_predict,
    thm21_final,
    thm21_interim,
    thm33_formula_id,
    thm33_predict,
)
from .rng import SplitMix64
from .transforms import disjoint_union

CSV_HEADER = "instance_id,seed,operation,irr_before,irr_after_oracle,engine_delta,formula_id,predicted,agrees"


@dataclass(frozen=True)
class PredictionOutcome:
    formula_id: str
    predicted: int
    agrees: bool
    is_delta: bool


@dataclass(frozen=True)
class AuditRow:
    instance_id: int
    seed: int
    operation: str
    irr_before: int
    irr_after_oracle: int
    engine_delta: int
    predictions: tuple[PredictionOutcome, ...]

    @property
    def engine_ok(self) -> bool:
        return self.engine_delta == self.irr_after_oracle - self.irr_before

    @property
    def has_disagreement(self) -> bool:
        return any(not p.agrees for p in self.predictions)


@dataclass(frozen=True)
class FormulaStat:
    formula_id: str
    agree: int
    total: int

    @property
    def pct(self) -> float:
        return round(100.0 * self.agree / self.total, 4)


@dataclass(frozen=True)
class AuditReport:
    suite: str
    seed: int
    instance_count: int
    config: tuple[tuple[str, str], ...]
    rows: tuple[AuditRow, ...]

    @cached_property
    def engine_ok(self) -> bool:
        return all(row.engine_ok for row in self.rows)

    @cached_property
    def formula_stats(self) -> tuple[FormulaStat, ...]:
        agree: dict[str, int] = {}
        total: dict[str, int] = {}
        for row in self.rows:
            for p in row.predictions:
                total[p.formula_id] = total.get(p.formula_id, 0) + 1
                agree[p.formula_id] = agree.get(p.formula_id, 0) + (1 if p.agrees else 0)
        return tuple(
            FormulaStat(fid, agree[fid], total[fid]) for fid in sorted(total)
        )

    @property
    def disagreements(self) -> tuple[AuditRow, ...]:
        return tuple(row for row in self.rows if row.has_disagreement or not row.engine_ok)

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for row in self.rows:
            if "," in row.operation:
                raise ValueError(f"operation descriptor contains a comma: {row.operation!r}")
            prefix = (
                f"{row.instance_id},{row.seed},{row.operation},"
                f"{row.irr_before},{row.irr_after_oracle},{row.engine_delta}"
            )
            for p in row.predictions:
                flag = "true" if p.agrees else "false"
                lines.append(f"{prefix},{p.formula_id},{p.predicted},{flag}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        obj = {
            "suite": self.suite,
            "seed": self.seed,
            "instance_count": self.instance_count,
            "config": dict(self.config),
            "engine_ok": self.engine_ok,
            "formula_stats": [
                {"formula_id": s.formula_id, "agree": s.agree, "total": s.total, "pct": s.pct}
                for s in self.formula_stats
            ],
            "disagreements": [_row_as_obj(row) for row in self.disagreements],
        }
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _row_as_obj(row: AuditRow) -> dict:
    return {
        "instance_id": row.instance_id,
        "seed": row.seed,
        "operation": row.operation,
        "irr_before": row.irr_before,
        "irr_after_oracle": row.irr_after_oracle,
        "engine_delta": row.engine_delta,
        "engine_ok": row.engine_ok,
        "predictions": [
            {
                "formula_id": p.formula_id,
                "predicted": p.predicted,
                "agrees": p.agrees,
                "is_delta": p.is_delta,
            }
            for p in row.predictions
        ],
    }


def _outcome(fid: FormulaId, predicted: int, irr_before: int, irr_after: int) -> PredictionOutcome:
    if fid is FormulaId.LEMMA34:
        agrees = irr_after < irr_before
    elif FORMULA_IS_DELTA[fid]:
        agrees = predicted == irr_after - irr_before
    else:
        agrees = predicted == irr_after
    return PredictionOutcome(fid.value, predicted, agrees, FORMULA_IS_DELTA[fid])


def _mk_row(
    instance_id: int,
    seed: int,
    operation: str,
    irr_before: int,
    irr_after: int,
    engine_delta: int,
    preds: Sequence[tuple[FormulaId, int]],
) -> AuditRow:
    outcomes = tuple(_outcome(fid, val, irr_before, irr_after) for fid, val in preds)
    return AuditRow(instance_id, seed, operation, irr_before, irr_after, engine_delta, outcomes)


# --- edge-joint suite -------------------------------------------------------


def _joint_witnesses() -> list[tuple[Graph, str, Graph, str, int, int]]:
    return [
        (cycle(3), "cycle(3)", cycle(3), "cycle(3)", 0, 0),
        (empty_graph(1), "empty(1)", empty_graph(1), "empty(1)", 0, 0),
        (complete(4), "complete(4)", cycle(3), "cycle(3)", 0, 0),
    ]


def _regular_component(rng: SplitMix64) -> tuple[Graph, str]:
    fam = rng.below(5)
    if fam == 0:
        k = 1 + rng.below(12)
        return empty_graph(k), f"empty({k})"
    if fam == 1:
        k = 1 + rng.below(10)
        return matching(k), f"matching({k})"
    if fam == 2:
        k = 3 + rng.below(20)
        return cycle(k), f"cycle({k})"
    if fam == 3:
        k = 1 + rng.below(8)
        return complete(k), f"complete({k})"
    k = 1 + rng.below(6)
    return complete_bipartite(k, k), f"biclique({k} {k})"


def _random_joint_instance(rng: SplitMix64) -> tuple[Graph, str, Graph, str, int, int]:
    if rng.below(4) < 3:
        n1 = 1 + rng.below(40)
        p1 = rng.below(3)
        g1, d1 = random_graph(n1, p1, rng), f"er(n={n1} p={P_TABLE[p1]})"
        n2 = 1 + rng.below(40)
        p2 = rng.below(3)
        g2, d2 = random_graph(n2, p2, rng), f"er(n={n2} p={P_TABLE[p2]})"
    else:
        g1, d1 = _regular_component(rng)
        g2, d2 = _regular_component(rng)
    u = rng.below(g1.vertex_count)
    v = rng.below(g2.vertex_count)
    return g1, d1, g2, d2, u, v


def joint_predictions(g1: Graph, g2: Graph, u: int, v: int) -> list[tuple[FormulaId, int]]:
    """All formula predictions that apply to the edge joint of g1 and g2."""
    dm1 = degree_multiset(g1)
    dm2 = degree_multiset(g2)
    deg_u = g1.degree(u)
    deg_v = g2.degree(v)
    counts = joint_partition(dm1, dm2, deg_u, deg_v)
    form_a, form_b = thm21_final(counts)
    preds = [
        (FormulaId.THM21_INTERIM, thm21_interim(counts)),
        (FormulaId.THM21_FINAL_A, form_a),
        (FormulaId.THM21_FINAL_B, form_b),
    ]
    if dm1.is_regular() and dm2.is_regular():
        if deg_u >= deg_v:
            value = prop27(g1.vertex_count, g2.vertex_count, deg_u, deg_v)
        else:
            value = prop27(g2.vertex_count, g1.vertex_count, deg_v, deg_u)
        preds.append((prop27_formula_id(deg_u, deg_v), value))
    return preds


def _joint_row(iid: int, seed: int, g1: Graph, d1: str, g2: Graph, d2: str, u: int, v: int) -> AuditRow:
    dm1 = degree_multiset(g1)
    dm2 = degree_multiset(g2)
    union = disjoint_union(g1, g2)
    op = EditOp.add_edge(u, g1.vertex_count + v)
    irr_before = irr_naive(dm1.merge(dm2))
    joined = apply_edit(union, op)
    irr_after = irr_naive(degree_multiset(joined))
    engine = exact_delta_for_edit(union, op)
    preds = joint_predictions(g1, g2, u, v)
    operation = f"join left={d1} right={d2} u={u} v={v}"
    return _mk_row(iid, seed, operation, irr_before, irr_after, engine, preds)


def run_edge_joint_suite(count: int, seed: int) -> AuditReport:
    """Audit edge joints: random and regular pairs, witnesses pinned first."""
    root = SplitMix64(seed)
    witnesses = _joint_witnesses()
    rows = []
    for iid in range(count):
        rng = root.child(iid)
        if iid < len(witnesses):
            g1, d1, g2, d2, u, v = witnesses[iid]
        else:
            g1, d1, g2, d2, u, v = _random_joint_instance(rng)
        rows.append(_joint_row(iid, rng.seed, g1, d1, g2, d2, u, v))
    config = (("count", str(count)), ("seed", str(seed)))
    return AuditReport("edge-joint", seed, count, config, tuple(rows))


# --- edge-transform suite ---------------------------------------------------


def _edge_transform_witnesses() -> list[tuple[Graph, str, int, int, int]]:
    triangle_bridge = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)))
    return [
        (path(4), "path(4)", 1, 0, 2),
        (star(3), "star(3)", 0, 1, 2),
        (triangle_bridge, "triangle-bridge", 0, 3, 1),
    ]


def _simple_edge_transform_row(iid: int, rng: SplitMix64, g: Graph, desc: str, u1: int, v1: int, u_i: int) -> AuditRow:
    dm = degree_multiset(g)
    irr_before = irr_naive(dm)
    op = EditOp.retarget_edge(u1, v1, u_i)
    edited = apply_edit(g, op)
    irr_after = irr_naive(degree_multiset(edited))
    engine = exact_delta_for_edit(g, op)
    counts = transform_partition(g, u1, v1, u_i)
    pred = thm33_predict(irr_before, counts)
    fid = thm33_formula_id(counts.relation)
    operation = f"edge-transform graph={desc} cut=({u1} {v1}) target={u_i}"
    return _mk_row(iid, rng.seed, operation, irr_before, irr_after, engine, [(fid, pred)])


def _multigraph_transform_row(iid: int, rng: SplitMix64) -> AuditRow:
    n = 3 + rng.below(15)
    edge_count = n + rng.below(2 * n)
    raw = [(rng.below(n), rng.below(n)) for _ in range(edge_count)]
    g = Graph(n, tuple(raw), allow_parallel=True, allow_loops=True)
    a, b = g.edges[rng.below(g.edge_count)]
    moved, kept = (a, b) if rng.below(2) == 0 else (b, a)
    others = [t for t in range(n) if t != moved]
    target = others[rng.below(len(others))]
    op = EditOp.retarget_edge(moved, kept, target)

    dm = degree_multiset(g)
    irr_before = irr_naive(dm)
    edited = apply_edit(g, op)
    irr_after = irr_naive(degree_multiset(edited))
    engine = exact_delta_for_edit(g, op)
    counts = transform_counts(dm, g.degrees[moved], g.degrees[target])
    pred = thm33_predict(irr_before, counts)
    fid = thm33_formula_id(counts.relation)
    operation = (
        f"edge-transform graph=multi(n={n} m={g.edge_count}) "
        f"edge=({a} {b}) moved={moved} target={target}"
    )
    return _mk_row(iid, rng.seed, operation, irr_before, irr_after, engine, [(fid, pred)])


def run_edge_transform_suite(count: int, seed: int) -> AuditReport:
    """Audit cut-edge retargets; every fifth random instance is a multigraph."""
    root = SplitMix64(seed)
    witnesses = _edge_transform_witnesses()
    rows = []
    for iid in range(count):
        rng = root.child(iid)
        if iid < len(witnesses):
            g, desc, u1, v1, u_i = witnesses[iid]
            rows.append(_simple_edge_transform_row(iid, rng, g, desc, u1, v1, u_i))
        elif iid % 5 == 4:
            rows.append(_multigraph_transform_row(iid, rng))
        else:
            n = 4 + rng.below(37)
            g, (u1, v1) = random_connected_with_cut_edge(n, rng, min_master=2)
            master = next(c for c in g.remove_edge(u1, v1).connected_components() if u1 in c)
            others = [w for w in master if w != u1]
            u_i = others[rng.below(len(others))]
            desc = f"planted(n={n})"
            rows.append(_simple_edge_transform_row(iid, rng, g, desc, u1, v1, u_i))
    config = (("count", str(count)), ("seed", str(seed)))
    return AuditReport("edge-transform", seed, count, config, tuple(rows))


# --- arc-transform suite ----------------------------------------------------


def _arc_transform_witnesses() -> list[tuple[Digraph, str, tuple[int, int], str, int]]:
    c4 = Digraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))
    tournament5 = Digraph(5, tuple((i, (i + 1) % 5) for i in range(5)) + tuple((i, (i + 2) % 5) for i in range(5)))
    p3 = Digraph(3, ((0, 1), (1, 2)))
    return [
        (c4, "cycle-orient(4)", (0, 1), "head", 2),
        (tournament5, "tournament(5)", (0, 1), "tail", 2),
        (p3, "path-orient(3)", (1, 2), "head", 0),
    ]


def _arc_transform_row(
    iid: int,
    rng_seed: int,
    d: Digraph,
    desc: str,
    arc: tuple[int, int],
    end: str,
    target: int,
) -> AuditRow:
    tail, head = arc
    if end == "head":
        op = EditOp.retarget_head(tail, head, target)
        mode, marked = "in", head
    else:
        op = EditOp.retarget_tail(tail, head, target)
        mode, marked = "out", tail
    dm = degree_multiset(d, mode)
    irr_before = irr_naive(dm)
    edited = apply_edit(d, op)
    irr_after = irr_naive(degree_multiset(edited, mode))
    deltas = exact_delta_for_edit(d, op)
    engine = deltas[0] if mode == "in" else deltas[1]
    counts = arc_partition(d, marked, target, mode)
    pred = prop47_predict(irr_before, counts)
    fid = prop47_formula_id(mode, counts.relation)
    operation = f"arc-transform graph={desc} arc=({tail} {head}) end={end} target={target}"
    return _mk_row(iid, rng_seed, operation, irr_before, irr_after, engine, [(fid, pred)])


def _random_arc_instance(iid: int, rng: SplitMix64) -> tuple[Digraph, str, tuple[int, int], str, int]:
    n = 3 + rng.below(38)
    p = rng.below(3)
    d = random_digraph(n, p, rng)
    if d.arc_count == 0:
        d = Digraph(n, ((0, 1),))
    desc = f"er(n={n} p={P_TABLE[p]})"
    end = "head" if iid % 2 == 0 else "tail"
    for _ in range(20):
        tail, head = d.arcs[rng.below(d.arc_count)]
        if end == "head":
            candidates = [t for t in range(n) if t not in (tail, head) and not d.has_arc(tail, t)]
        else:
            candidates = [t for t in range(n) if t not in (tail, head) and not d.has_arc(t, head)]
        if candidates:
            return d, desc, (tail, head), end, candidates[rng.below(len(candidates))]
    # dense draws can exhaust retries; fall back to a path orientation
    d = orient_by_labeling(path(n), tuple(range(n)))
    return d, f"path-orient({n})", (0, 1), end, 2


def run_arc_transform_suite(count: int, seed: int) -> AuditReport:
    """Audit arc retargets: head moves audit in-degrees, tail moves out."""
    root = SplitMix64(seed)
    witnesses = _arc_transform_witnesses()
    rows = []
    for iid in range(count):
        rng = root.child(iid)
        if iid < len(witnesses):
            d, desc, arc, end, target = witnesses[iid]
        else:
            d, desc, arc, end, target = _random_arc_instance(iid, rng)
        rows.append(_arc_transform_row(iid, rng.seed, d, desc, arc, end, target))
    config = (("count", str(count)), ("seed", str(seed)))
    return AuditReport("arc-transform", seed, count, config, tuple(rows))


# --- closed-form suite ------------------------------------------------------


def run_closed_form_suite(max_n: int = 64) -> AuditReport:
    """Compare generated families against their closed forms, per mode.

    Family caps: complete, path, and cycle orientations go up to max_n
    vertices; bipartite sides go up to max_n // 2. Deterministic, no seed.
    """
    rows: list[AuditRow] = []

    def emit(operation, irr_before, irr_after, engine, fid, predicted):
        rows.append(_mk_row(len(rows), 0, operation, irr_before, irr_after, engine, [(fid, predicted)]))

    for k in range(1, max_n + 1):
        got = irr_digraph(orient_by_labeling(complete(k), tuple(range(k))))
        want = complete_closed_form(k)
        for mode, value in (("in", got.irr_in), ("out", got.irr_out)):
            emit(f"complete-orient n={k} mode={mode}", value, value, 0, FormulaId.LEMMA48, want)

    side_cap = max(1, max_n // 2)
    for m in range(1, side_cap + 1):
        for k in range(1, side_cap + 1):
            got = irr_digraph(orient_left_right(m, k))
            want = bipartite_closed_form(m, k)
            emit(f"bipartite-orient m={m} n={k} mode=in", got.irr_in, got.irr_in, 0, FormulaId.PROP49, want.irr_in)
            emit(f"bipartite-orient m={m} n={k} mode=out", got.irr_out, got.irr_out, 0, FormulaId.PROP49, want.irr_out)

    for k in range(2, max_n + 1):
        base = orient_by_labeling(path(k), tuple(range(k)))
        base_pair = irr_digraph(base)
        want = path_closed_form(k)
        emit(f"path-orient n={k} reverse=none mode=in", base_pair.irr_in, base_pair.irr_in, 0, FormulaId.PROP43, want.irr_in)
        emit(f"path-orient n={k} reverse=none mode=out", base_pair.irr_out, base_pair.irr_out, 0, FormulaId.PROP43, want.irr_out)
        for pos in range(1, k):
            op = EditOp.reverse_arc(pos - 1, pos)
            after_pair = irr_digraph(apply_edit(base, op))
            deltas = exact_delta_for_edit(base, op)
            want = path_closed_form(k, pos)
            emit(
                f"path-orient n={k} reverse={pos} mode=in",
                base_pair.irr_in, after_pair.irr_in, deltas[0], FormulaId.PROP43, want.irr_in,
            )
            emit(
                f"path-orient n={k} reverse={pos} mode=out",
                base_pair.irr_out, after_pair.irr_out, deltas[1], FormulaId.PROP43, want.irr_out,
            )

    for k in range(3, max_n + 1):
        # a consistent ring orientation, not the lower-to-higher labeling one
        base = Digraph(k, tuple((i, (i + 1) % k) for i in range(k)))
        base_pair = irr_digraph(base)
        want = cycle_closed_form(k)
        emit(f"cycle-orient n={k} reverse=none mode=in", base_pair.irr_in, base_pair.irr_in, 0, FormulaId.PROP44, want.irr_in)
        emit(f"cycle-orient n={k} reverse=none mode=out", base_pair.irr_out, base_pair.irr_out, 0, FormulaId.PROP44, want.irr_out)
        for pos in range(1, k + 1):
            tail, head = pos - 1, pos % k
            op = EditOp.reverse_arc(tail, head)
            after_pair = irr_digraph(apply_edit(base, op))
            deltas = exact_delta_for_edit(base, op)
            want = cycle_closed_form(k, reverse=True)
            emit(
                f"cycle-orient n={k} reverse={pos} mode=in",
                base_pair.irr_in, after_pair.irr_in, deltas[0], FormulaId.PROP44, want.irr_in,
            )
            emit(
                f"cycle-orient n={k} reverse={pos} mode=out",
                base_pair.irr_out, after_pair.irr_out, deltas[1], FormulaId.PROP44, want.irr_out,
            )

    config = (("max_n", str(max_n)),)
    return AuditReport("closed-forms", 0, len(rows), config, tuple(rows))


# --- branch-move decrease suite ---------------------------------------------


def _lemma34_witnesses() -> list[tuple[Graph, str, int, int, int]]:
    spider = Graph(4, ((0, 1), (0, 2), (0, 3)))
    double_star = Graph(6, ((0, 1), (0, 2), (0, 3), (0, 4), (4, 5)))
    return [
        (spider, "spider(3)", 0, 3, 2),
        (double_star, "double-star", 0, 1, 5),
    ]


def _branch_candidates(g: Graph) -> list[tuple[int, int, int]]:
    """All valid (attachment, branch root, pendant destination) triples."""
    from .graphs import EditError, _branch_component

    out = []
    pendants = [v for v in range(g.vertex_count) if g.degrees[v] == 1]
    for u in range(g.vertex_count):
        if g.degrees[u] < 3:
            continue
        for root in g.neighbors(u):
            try:
                members = set(_branch_component(g, u, root))
            except EditError:
                continue
            for v in pendants:
                if v not in members and v != u:
                    out.append((u, root, v))
    return out


def _random_branch_instance(rng: SplitMix64) -> tuple[Graph, str, int, int, int]:
    if rng.below(2) == 0:
        n0 = 2 + rng.below(25)
        g0 = random_tree(n0, rng)
        desc = f"tree(n={n0})"
    else:
        n0 = 3 + rng.below(20)
        p = rng.below(3)
        g0 = random_connected(n0, p, rng)
        desc = f"er-conn(n={n0} p={P_TABLE[p]})"
    anchor = rng.below(n0)
    # three planted pendants guarantee at least one valid move
    g = Graph(n0 + 3, tuple(g0.edges) + ((anchor, n0), (anchor, n0 + 1), (anchor, n0 + 2)))
    candidates = _branch_candidates(g)
    u, root, v = candidates[rng.below(len(candidates))]
    return g, f"{desc}+3p", u, root, v


def lemma34_suite(count: int, seed: int) -> AuditReport:
    """Check that every valid branch move strictly decreases irr."""
    root_stream = SplitMix64(seed)
    witnesses = _lemma34_witnesses()
    rows = []
    for iid in range(count):
        rng = root_stream.child(iid)
        if iid < len(witnesses):
            g, desc, u, broot, v = witnesses[iid]
        else:
            g, desc, u, broot, v = _random_branch_instance(rng)
        op = EditOp.move_branch(u, broot, v)
        dm = degree_multiset(g)
        irr_before = irr_naive(dm)
        edited = apply_edit(g, op)
        irr_after = irr_naive(degree_multiset(edited))
        engine = exact_delta_for_edit(g, op)
        operation = f"move-branch graph={desc} u={u} root={broot} v={v}"
        rows.append(
            _mk_row(iid, rng.seed, operation, irr_before, irr_after, engine, [(FormulaId.LEMMA34, irr_before)])
        )
    config = (("count", str(count)), ("seed", str(seed)))
    return AuditReport("lemma34", seed, count, config, tuple(rows))


# --- derivative walk --------------------------------------------------------


def root_derivative_walk(
    root: Graph,
    labeling: Sequence[int],
    edits: Iterable[EditOp],
) -> list[IrrPair]:
    """Orient a root graph, then track (in, out) irr across arc edits.

    Returns the trajectory starting at the freshly oriented digraph, one
    entry per edit, maintained incrementally through the delta engine.
    """
    current = orient_by_labeling(root, labeling)
    pair = irr_digraph(current)
    trajectory = [pair]
    for op in edits:
        d_in, d_out = exact_delta_for_edit(current, op)
        current = apply_edit(current, op)
        pair = IrrPair(pair.irr_in + d_in, pair.irr_out + d_out)
        trajectory.append(pair)
    return trajectory
