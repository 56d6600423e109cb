"""Whole-graph operations that the prediction formulas talk about.

These wrap the low-level edit machinery with the structural preconditions of
each named operation, and return new values. Ids are stable: a disjoint union
keeps graph 1's ids and offsets graph 2's by graph 1's order; every other
operation preserves ids outright.
"""

from __future__ import annotations

from .graphs import Digraph, EditOp, Graph, GraphError, apply_edit, is_cut_edge


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 unchanged, g2 relabeled upward by g1.vertex_count."""
    offset = g1.vertex_count
    edges = tuple(g1.edges) + tuple((a + offset, b + offset) for a, b in g2.edges)
    return Graph(
        g1.vertex_count + g2.vertex_count,
        edges,
        g1.allow_parallel or g2.allow_parallel,
        g1.allow_loops or g2.allow_loops,
    )


def edge_joint(g1: Graph, g2: Graph, u: int, v: int) -> Graph:
    """Disjoint union of g1 and g2 plus the bridging edge u--v.

    u is a g1 id and v a g2 id; in the result v becomes v + g1.vertex_count.
    """
    g1._check_vertex(u)
    g2._check_vertex(v)
    union = disjoint_union(g1, g2)
    return apply_edit(union, EditOp.add_edge(u, g1.vertex_count + v))


def edge_transformation(g: Graph, u1: int, v1: int, u_i: int) -> Graph:
    """Replace cut edge {u1, v1} by {u_i, v1}.

    u_i must lie on u1's side of the cut and differ from u1. The replacement
    edge cannot previously exist, because the cut edge was the only bridge
    between the two sides.
    """
    if not g.has_edge(u1, v1):
        raise GraphError(f"edge ({u1}, {v1}) not present")
    if not is_cut_edge(g, (u1, v1)):
        raise GraphError(f"edge ({u1}, {v1}) is not a cut edge")
    master = next(c for c in g.remove_edge(u1, v1).connected_components() if u1 in c)
    if u_i not in master:
        raise GraphError(f"target {u_i} is not on the side of {u1}")
    return apply_edit(g, EditOp.retarget_edge(u1, v1, u_i))


def branch_transformation(g: Graph, u: int, v: int, branch_root: int) -> Graph:
    """Detach the hanging tree rooted at branch_root from u; reattach at v.

    Preconditions: deg(u) >= 3, v is a pendant vertex outside the moved tree.
    The structural requirements (the edge {u, branch_root} is a bridge whose
    branch side is a tree not containing v) are checked by the edit itself.
    """
    if g.degree(u) < 3:
        raise GraphError(f"attachment vertex {u} has degree {g.degree(u)}, needs >= 3")
    if g.degree(v) != 1:
        raise GraphError(f"destination {v} has degree {g.degree(v)}, needs a pendant")
    return apply_edit(g, EditOp.move_branch(u, branch_root, v))


def reverse_arc(d: Digraph, arc: tuple[int, int]) -> Digraph:
    """Flip one arc; rejected if the flipped arc already exists."""
    tail, head = arc
    return apply_edit(d, EditOp.reverse_arc(tail, head))


def arc_transformation(d: Digraph, arc: tuple[int, int], target: int, end: str) -> Digraph:
    """Move one end of an arc to a new vertex.

    end "head": (tail, head) becomes (tail, target), so only in-degrees move.
    end "tail": (tail, head) becomes (target, head), so only out-degrees move.
    The target must differ from both current endpoints and the resulting arc
    must be fresh.
    """
    tail, head = arc
    if end == "head":
        return apply_edit(d, EditOp.retarget_head(tail, head, target))
    if end == "tail":
        return apply_edit(d, EditOp.retarget_tail(tail, head, target))
    raise GraphError(f"end {end!r} must be 'head' or 'tail'")
