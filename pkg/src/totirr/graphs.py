"""Graph and digraph values, degree multisets, and edit operations.

Vertices are dense 0-based integers. Graph and Digraph are immutable: every
edit produces a new value, which keeps oracle recomputation and incremental
bookkeeping from ever sharing mutable state. A loop contributes 2 to the
degree of its vertex. Degree multisets are the sole input to every
irregularity computation, so they get a dedicated value type with counting
helpers instead of being passed around as raw lists.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Literal, Mapping, Optional, Sequence, Union


class GraphError(ValueError):
    """Invalid graph construction or query."""


class EditError(GraphError):
    """An edit operation that cannot be applied to the given value."""


DegreeMode = Literal["undirected", "in", "out"]


def _normalize(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Graph:
    """Undirected labeled graph; multigraph features are opt-in via flags.

    Edges are stored as a canonically sorted tuple of (low, high) pairs, so
    equality is plain structural equality of the edge multiset.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()
    allow_parallel: bool = False
    allow_loops: bool = False

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        norm = sorted(_normalize(a, b) for a, b in self.edges)
        object.__setattr__(self, "edges", tuple(norm))
        prev = None
        for a, b in self.edges:
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise GraphError(f"edge ({a}, {b}) outside vertex range 0..{self.vertex_count - 1}")
            if a == b and not self.allow_loops:
                raise GraphError(f"loop at vertex {a} requires allow_loops")
            if (a, b) == prev and not self.allow_parallel:
                raise GraphError(f"parallel edge ({a}, {b}) requires allow_parallel")
            prev = (a, b)

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        *,
        allow_parallel: bool = False,
        allow_loops: bool = False,
    ) -> "Graph":
        return cls(vertex_count, tuple(edges), allow_parallel, allow_loops)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1  # a == b adds 2: loops count twice
        return tuple(deg)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    @cached_property
    def _edge_counts(self) -> Counter:
        return Counter(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return _normalize(a, b) in self._edge_counts

    def edge_multiplicity(self, a: int, b: int) -> int:
        return self._edge_counts.get(_normalize(a, b), 0)

    @cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        nb: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(tuple(sorted(s)) for s in nb)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adjacency[v]

    def connected_components(self) -> list[list[int]]:
        """Vertex lists of the components, each sorted, ordered by minimum id."""
        seen = [False] * self.vertex_count
        comps = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.connected_components()) == 1

    def add_edge(self, a: int, b: int) -> "Graph":
        return apply_edit(self, EditOp.add_edge(a, b))

    def remove_edge(self, a: int, b: int) -> "Graph":
        return apply_edit(self, EditOp.remove_edge(a, b))

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise GraphError(f"vertex {v} outside range 0..{self.vertex_count - 1}")


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph: no duplicate arcs, no self-arcs.

    Antiparallel pairs (a,b) and (b,a) are legal; edits that would collapse
    them into a duplicate are rejected at apply time.
    """

    vertex_count: int
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        norm = sorted(tuple(arc) for arc in self.arcs)
        object.__setattr__(self, "arcs", tuple(norm))
        prev = None
        for t, h in self.arcs:
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise GraphError(f"arc ({t}, {h}) outside vertex range 0..{self.vertex_count - 1}")
            if t == h:
                raise GraphError(f"self-arc at vertex {t} not allowed")
            if (t, h) == prev:
                raise GraphError(f"duplicate arc ({t}, {h}) not allowed")
            prev = (t, h)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def in_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for _, h in self.arcs:
            deg[h] += 1
        return tuple(deg)

    @cached_property
    def out_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for t, _ in self.arcs:
            deg[t] += 1
        return tuple(deg)

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.in_degrees[v]

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.out_degrees[v]

    @cached_property
    def _arc_set(self) -> frozenset:
        return frozenset(self.arcs)

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self._arc_set

    def reverse_all(self) -> "Digraph":
        return Digraph(self.vertex_count, tuple((h, t) for t, h in self.arcs))

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise GraphError(f"vertex {v} outside range 0..{self.vertex_count - 1}")


AnyGraph = Union[Graph, Digraph]


@dataclass(frozen=True)
class DegreeMultiset:
    """Sorted (degree, multiplicity) entries; the input of every irr function."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = None
        for value, mult in self.entries:
            if mult <= 0:
                raise GraphError(f"multiplicity for degree {value} must be positive")
            if value < 0:
                raise GraphError(f"degree {value} must be nonnegative")
            if prev is not None and value <= prev:
                raise GraphError("entries must be strictly increasing by degree")
            prev = value

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "DegreeMultiset":
        counts = Counter(degrees)
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_entries(cls, entries: Iterable[tuple[int, int]]) -> "DegreeMultiset":
        return cls(tuple(sorted(entries)))

    @cached_property
    def vertex_count(self) -> int:
        return sum(m for _, m in self.entries)

    @cached_property
    def _values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.entries)

    @cached_property
    def _prefix(self) -> tuple[int, ...]:
        # _prefix[i] = number of vertices with degree among the first i values
        acc = [0]
        for _, m in self.entries:
            acc.append(acc[-1] + m)
        return tuple(acc)

    def count_le(self, x: int) -> int:
        return self._prefix[bisect_right(self._values, x)]

    def count_lt(self, x: int) -> int:
        return self._prefix[bisect_left(self._values, x)]

    def count_eq(self, x: int) -> int:
        return self.count_le(x) - self.count_lt(x)

    def count_ge(self, x: int) -> int:
        return self.vertex_count - self.count_lt(x)

    def count_gt(self, x: int) -> int:
        return self.vertex_count - self.count_le(x)

    def expand(self) -> list[int]:
        out: list[int] = []
        for value, mult in self.entries:
            out.extend([value] * mult)
        return out

    def is_regular(self) -> bool:
        return len(self.entries) <= 1

    def merge(self, other: "DegreeMultiset") -> "DegreeMultiset":
        counts = Counter(dict(self.entries))
        for value, mult in other.entries:
            counts[value] += mult
        return DegreeMultiset(tuple(sorted(counts.items())))

    def replace_one(self, old: int, new: int) -> "DegreeMultiset":
        """Move one vertex from degree old to degree new."""
        if self.count_eq(old) == 0:
            raise GraphError(f"no vertex of degree {old} to move")
        counts = Counter(dict(self.entries))
        counts[old] -= 1
        if counts[old] == 0:
            del counts[old]
        counts[new] += 1
        return DegreeMultiset(tuple(sorted(counts.items())))


def degree_multiset(g: AnyGraph, mode: DegreeMode = "undirected") -> DegreeMultiset:
    """Degree multiset of a graph (mode "undirected") or digraph ("in"/"out")."""
    if isinstance(g, Graph):
        if mode != "undirected":
            raise GraphError(f"mode {mode!r} is invalid for an undirected graph")
        return DegreeMultiset.from_degrees(g.degrees)
    if isinstance(g, Digraph):
        if mode == "in":
            return DegreeMultiset.from_degrees(g.in_degrees)
        if mode == "out":
            return DegreeMultiset.from_degrees(g.out_degrees)
        raise GraphError(f"mode {mode!r} is invalid for a digraph; use 'in' or 'out'")
    raise GraphError(f"unsupported value {type(g).__name__}")


class EditKind(Enum):
    ADD_EDGE = "add-edge"
    REMOVE_EDGE = "remove-edge"
    RETARGET_EDGE_END = "retarget-edge-end"
    REVERSE_ARC = "reverse-arc"
    RETARGET_ARC_TAIL = "retarget-arc-tail"
    RETARGET_ARC_HEAD = "retarget-arc-head"
    MOVE_BRANCH = "move-branch"


_GRAPH_KINDS = {EditKind.ADD_EDGE, EditKind.REMOVE_EDGE, EditKind.RETARGET_EDGE_END, EditKind.MOVE_BRANCH}


@dataclass(frozen=True)
class EditOp:
    """One edit against a Graph or Digraph.

    Operand layout by kind:
      ADD_EDGE / REMOVE_EDGE    endpoints = the edge {a, b}
      RETARGET_EDGE_END         endpoints = (moved end, kept end), target = new end
      REVERSE_ARC               endpoints = (tail, head)
      RETARGET_ARC_TAIL         endpoints = (tail, head), target = new tail
      RETARGET_ARC_HEAD         endpoints = (tail, head), target = new head
      MOVE_BRANCH               endpoints = (attachment, branch root), target = destination
    """

    kind: EditKind
    endpoints: tuple[int, int]
    target: Optional[int] = None

    @classmethod
    def add_edge(cls, a: int, b: int) -> "EditOp":
        return cls(EditKind.ADD_EDGE, (a, b))

    @classmethod
    def remove_edge(cls, a: int, b: int) -> "EditOp":
        return cls(EditKind.REMOVE_EDGE, (a, b))

    @classmethod
    def retarget_edge(cls, moved: int, kept: int, target: int) -> "EditOp":
        return cls(EditKind.RETARGET_EDGE_END, (moved, kept), target)

    @classmethod
    def reverse_arc(cls, tail: int, head: int) -> "EditOp":
        return cls(EditKind.REVERSE_ARC, (tail, head))

    @classmethod
    def retarget_tail(cls, tail: int, head: int, new_tail: int) -> "EditOp":
        return cls(EditKind.RETARGET_ARC_TAIL, (tail, head), new_tail)

    @classmethod
    def retarget_head(cls, tail: int, head: int, new_head: int) -> "EditOp":
        return cls(EditKind.RETARGET_ARC_HEAD, (tail, head), new_head)

    @classmethod
    def move_branch(cls, attachment: int, branch_root: int, destination: int) -> "EditOp":
        return cls(EditKind.MOVE_BRANCH, (attachment, branch_root), destination)

    def inverse(self) -> "EditOp":
        """The edit that undoes this one on the edited value."""
        a, b = self.endpoints
        if self.kind is EditKind.ADD_EDGE:
            return EditOp.remove_edge(a, b)
        if self.kind is EditKind.REMOVE_EDGE:
            return EditOp.add_edge(a, b)
        if self.kind is EditKind.RETARGET_EDGE_END:
            return EditOp.retarget_edge(self.target, b, a)
        if self.kind is EditKind.REVERSE_ARC:
            return EditOp.reverse_arc(b, a)
        if self.kind is EditKind.RETARGET_ARC_TAIL:
            return EditOp.retarget_tail(self.target, b, a)
        if self.kind is EditKind.RETARGET_ARC_HEAD:
            return EditOp.retarget_head(a, self.target, b)
        if self.kind is EditKind.MOVE_BRANCH:
            return EditOp.move_branch(self.target, b, a)
        raise EditError(f"unknown edit kind {self.kind}")

    def describe(self) -> str:
        """Compact single-line descriptor; never contains a comma."""
        a, b = self.endpoints
        if self.target is None:
            return f"{self.kind.value}({a} {b})"
        return f"{self.kind.value}({a} {b} -> {self.target})"


def _branch_component(g: Graph, attachment: int, root: int) -> list[int]:
    """Vertices of the branch at `root` after cutting one copy of {attachment, root}.

    Raises EditError unless the cut edge is a bridge and the branch side is a
    tree. Loops and parallel edges on the branch side both fail the tree test.
    """
    cut = g.remove_edge(attachment, root)
    for comp in cut.connected_components():
        if root in comp:
            if attachment in comp:
                raise EditError(f"edge ({attachment}, {root}) is not a bridge; branch is not hanging")
            members = set(comp)
            internal = sum(1 for x, y in cut.edges if x in members and y in members)
            if internal != len(comp) - 1:
                raise EditError(f"branch at {root} is not a tree")
            return comp
    raise EditError(f"vertex {root} not found after cut")  # pragma: no cover


def _graph_edit_plan(g: Graph, op: EditOp) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Validate op against g; return (edges removed, edges added), normalized."""
    if op.kind not in _GRAPH_KINDS:
        raise EditError(f"{op.kind.value} does not apply to an undirected graph")
    a, b = op.endpoints
    g._check_vertex(a)
    g._check_vertex(b)

    if op.kind is EditKind.ADD_EDGE:
        if a == b and not g.allow_loops:
            raise EditError(f"adding loop at {a} requires allow_loops")
        if not g.allow_parallel and g.has_edge(a, b):
            raise EditError(f"edge ({a}, {b}) already present")
        return [], [_normalize(a, b)]

    if op.kind is EditKind.REMOVE_EDGE:
        if not g.has_edge(a, b):
            raise EditError(f"edge ({a}, {b}) not present")
        return [_normalize(a, b)], []

    if op.kind is EditKind.RETARGET_EDGE_END:
        moved, kept, target = a, b, op.target
        g._check_vertex(target)
        if not g.has_edge(moved, kept):
            raise EditError(f"edge ({moved}, {kept}) not present")
        if target == moved:
            raise EditError("new endpoint equals the end being moved")
        if target == kept and not g.allow_loops:
            raise EditError(f"retarget would create loop at {kept}")
        if not g.allow_parallel and g.has_edge(target, kept):
            raise EditError(f"edge ({target}, {kept}) already present")
        return [_normalize(moved, kept)], [_normalize(target, kept)]

    # MOVE_BRANCH
    attachment, root, destination = a, b, op.target
    g._check_vertex(destination)
    if not g.has_edge(attachment, root):
        raise EditError(f"edge ({attachment}, {root}) not present")
    if destination == attachment:
        raise EditError("destination equals the current attachment")
    branch = _branch_component(g, attachment, root)
    if destination in branch:
        raise EditError(f"destination {destination} lies inside the moved branch")
    if not g.allow_parallel and g.has_edge(destination, root):
        raise EditError(f"edge ({destination}, {root}) already present")
    return [_normalize(attachment, root)], [_normalize(destination, root)]


def _digraph_edit_plan(d: Digraph, op: EditOp) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Validate op against d; return (arcs removed, arcs added)."""
    if op.kind in _GRAPH_KINDS:
        raise EditError(f"{op.kind.value} does not apply to a digraph")
    tail, head = op.endpoints
    d._check_vertex(tail)
    d._check_vertex(head)
    if not d.has_arc(tail, head):
        raise EditError(f"arc ({tail}, {head}) not present")

    if op.kind is EditKind.REVERSE_ARC:
        if d.has_arc(head, tail):
            raise EditError(f"antiparallel arc ({head}, {tail}) already present")
        return [(tail, head)], [(head, tail)]

    target = op.target
    d._check_vertex(target)
    if op.kind is EditKind.RETARGET_ARC_TAIL:
        if target == tail:
            raise EditError("new tail equals the current tail")
        if target == head:
            raise EditError(f"retarget would create self-arc at {head}")
        if d.has_arc(target, head):
            raise EditError(f"arc ({target}, {head}) already present")
        return [(tail, head)], [(target, head)]

    if op.kind is EditKind.RETARGET_ARC_HEAD:
        if target == head:
            raise EditError("new head equals the current head")
        if target == tail:
            raise EditError(f"retarget would create self-arc at {tail}")
        if d.has_arc(tail, target):
            raise EditError(f"arc ({tail}, {target}) already present")
        return [(tail, head)], [(tail, target)]

    raise EditError(f"unknown edit kind {op.kind}")  # pragma: no cover


def apply_edit(g: AnyGraph, op: EditOp) -> AnyGraph:
    """Return a new value with op applied; the input is never mutated."""
    if isinstance(g, Graph):
        removed, added = _graph_edit_plan(g, op)
        counts = Counter(g.edges)
        for e in removed:
            counts[e] -= 1
            if counts[e] == 0:
                del counts[e]
        edges = list(counts.elements()) + added
        return Graph(g.vertex_count, tuple(edges), g.allow_parallel, g.allow_loops)
    if isinstance(g, Digraph):
        removed, added = _digraph_edit_plan(g, op)
        arcs = [arc for arc in g.arcs if arc not in set(removed)] + added
        return Digraph(g.vertex_count, tuple(arcs))
    raise EditError(f"unsupported value {type(g).__name__}")


def edit_degree_changes(g: AnyGraph, op: EditOp):
    """Net per-vertex degree changes of op, without applying it.

    For a Graph returns one mapping {vertex: delta}; for a Digraph returns a
    pair (in changes, out changes). Vertices with zero net change are omitted.
    Validation matches apply_edit exactly.
    """
    if isinstance(g, Graph):
        removed, added = _graph_edit_plan(g, op)
        delta: Counter = Counter()
        for a, b in removed:
            delta[a] -= 1
            delta[b] -= 1
        for a, b in added:
            delta[a] += 1
            delta[b] += 1
        return {v: c for v, c in sorted(delta.items()) if c != 0}
    if isinstance(g, Digraph):
        removed, added = _digraph_edit_plan(g, op)
        din: Counter = Counter()
        dout: Counter = Counter()
        for t, h in removed:
            dout[t] -= 1
            din[h] -= 1
        for t, h in added:
            dout[t] += 1
            din[h] += 1
        return (
            {v: c for v, c in sorted(din.items()) if c != 0},
            {v: c for v, c in sorted(dout.items()) if c != 0},
        )
    raise EditError(f"unsupported value {type(g).__name__}")


def is_cut_edge(g: Graph, edge: tuple[int, int]) -> bool:
    """True iff removing one copy of edge increases the component count."""
    a, b = edge
    if not g.has_edge(a, b):
        raise GraphError(f"edge ({a}, {b}) not present")
    if a == b:
        return False
    before = len(g.connected_components())
    after = len(g.remove_edge(a, b).connected_components())
    return after > before


@dataclass(frozen=True)
class ComponentPart:
    """One side of a cut edge, relabeled to dense ids.

    original_ids[i] is the id that vertex i of `graph` had in the source
    graph; marked is the local id of the cut-edge endpoint on this side.
    """

    graph: Graph
    original_ids: tuple[int, ...]
    marked: int


def split_at_cut_edge(g: Graph, edge: tuple[int, int]) -> tuple[ComponentPart, ComponentPart]:
    """Split g at a cut edge into (side of edge[0], side of edge[1])."""
    u1, v1 = edge
    if not is_cut_edge(g, edge):
        raise GraphError(f"edge ({u1}, {v1}) is not a cut edge")
    cut = g.remove_edge(u1, v1)
    parts = []
    for anchor in (u1, v1):
        comp = next(c for c in cut.connected_components() if anchor in c)
        local = {orig: i for i, orig in enumerate(comp)}
        edges = tuple(
            (local[x], local[y]) for x, y in cut.edges if x in local and y in local
        )
        sub = Graph(len(comp), edges, g.allow_parallel, g.allow_loops)
        parts.append(ComponentPart(sub, tuple(comp), local[anchor]))
    return parts[0], parts[1]
