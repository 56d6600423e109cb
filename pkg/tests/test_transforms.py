import pytest
from hypothesis import given
from hypothesis import strategies as st

from totirr import (
    DegreeMultiset,
    Digraph,
    EditError,
    Graph,
    GraphError,
    IrrPair,
    arc_transformation,
    branch_transformation,
    degree_multiset,
    disjoint_union,
    edge_joint,
    edge_transformation,
    irr_digraph,
    irr_graph,
    irr_naive,
    reverse_arc,
)

from strategies import graphs


def test_disjoint_union_shifts_ids():
    g1 = Graph(2, ((0, 1),))
    g2 = Graph(3, ((0, 2),))
    u = disjoint_union(g1, g2)
    assert u.vertex_count == 5
    assert u.edges == ((0, 1), (2, 4))


def test_edge_joint_k1_k1_gives_k2():
    k1 = Graph(1, ())
    assert edge_joint(k1, k1, 0, 0) == Graph(2, ((0, 1),))


def test_edge_joint_triangles():
    c3 = Graph(3, ((0, 1), (1, 2), (0, 2)))
    j = edge_joint(c3, c3, 0, 0)
    assert j.vertex_count == 6
    assert j.edge_count == 7
    assert degree_multiset(j).entries == ((2, 4), (3, 2))
    assert irr_graph(j) == 8


def test_edge_joint_complete_with_triangle():
    k4 = Graph(4, tuple((i, j) for i in range(4) for j in range(i + 1, 4)))
    c3 = Graph(3, ((0, 1), (1, 2), (0, 2)))
    j = edge_joint(k4, c3, 0, 0)
    assert degree_multiset(j).entries == ((2, 2), (3, 4), (4, 1))
    assert irr_graph(j) == 16


def test_edge_joint_validation():
    k1 = Graph(1, ())
    with pytest.raises(GraphError):
        edge_joint(k1, k1, 0, 1)
    with pytest.raises(GraphError):
        edge_joint(k1, k1, 1, 0)


@given(graphs(max_n=7), graphs(max_n=7), st.data())
def test_edge_joint_symmetry(g1, g2, data):
    u = data.draw(st.integers(0, g1.vertex_count - 1))
    v = data.draw(st.integers(0, g2.vertex_count - 1))
    left = edge_joint(g1, g2, u, v)
    right = edge_joint(g2, g1, v, u)
    assert degree_multiset(left) == degree_multiset(right)
    assert irr_graph(left) == irr_graph(right)


def test_matched_degree_joints_have_equal_irr():
    # joining at degree-matched cross pairs leaves the multiset unchanged
    g1 = Graph(4, ((0, 1), (1, 2), (2, 3)))
    g2 = Graph(3, ((0, 1), (1, 2)))
    # deg_g1(0)=1 = deg_g2(2); deg_g1(1)=2 = deg_g2(1)
    a = edge_joint(g1, g2, 0, 1)
    b = edge_joint(g1, g2, 1, 2)
    assert degree_multiset(a) == degree_multiset(b)
    assert irr_graph(a) == irr_graph(b)


def test_edge_transformation_path_to_star():
    g = Graph(4, ((0, 1), (1, 2), (2, 3)))
    out = edge_transformation(g, 1, 0, 2)
    assert degree_multiset(out).entries == ((1, 3), (3, 1))
    assert irr_graph(g) == 4
    assert irr_graph(out) == 6


def test_edge_transformation_star_to_path():
    g = Graph(4, ((0, 1), (0, 2), (0, 3)))
    out = edge_transformation(g, 0, 1, 2)
    assert degree_multiset(out).entries == ((1, 2), (2, 2))
    assert irr_graph(out) == 4


def test_edge_transformation_bridged_triangles():
    g = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)))
    out = edge_transformation(g, 0, 3, 1)
    assert degree_multiset(out) == degree_multiset(g)
    assert irr_graph(out) == irr_graph(g) == 8


def test_edge_transformation_preserves_edges_and_connectivity():
    g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4)))
    out = edge_transformation(g, 2, 1, 3)
    assert out.edge_count == g.edge_count
    assert out.is_connected()


def test_edge_transformation_validation():
    tri = Graph(3, ((0, 1), (1, 2), (0, 2)))
    with pytest.raises(GraphError):
        edge_transformation(tri, 0, 1, 2)  # not a cut edge
    chain = Graph(4, ((0, 1), (1, 2), (2, 3)))
    with pytest.raises(GraphError):
        edge_transformation(chain, 1, 2, 3)  # target on the slave side
    with pytest.raises(GraphError):
        edge_transformation(chain, 1, 0, 1)  # target equals moved end


def test_branch_transformation_spider():
    g = Graph(4, ((0, 1), (0, 2), (0, 3)))
    out = branch_transformation(g, 0, 2, 3)
    assert out.edges == ((0, 1), (0, 2), (2, 3))
    assert irr_graph(g) == 6
    assert irr_graph(out) == 4


def test_branch_transformation_double_star():
    g = Graph(6, ((0, 1), (0, 2), (0, 3), (0, 4), (4, 5)))
    out = branch_transformation(g, 0, 5, 1)
    assert out.vertex_count == g.vertex_count
    assert out.edge_count == g.edge_count
    assert irr_graph(out) < irr_graph(g)


def test_branch_transformation_moves_whole_subtree():
    # branch {3, 4, 5} rooted at 3 hangs off vertex 0
    g = Graph(7, ((0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (1, 6)))
    out = branch_transformation(g, 0, 6, 3)
    assert out.edges == ((0, 1), (0, 2), (1, 6), (3, 4), (3, 5), (3, 6))
    assert irr_graph(out) < irr_graph(g)


def test_branch_transformation_validation():
    chain = Graph(4, ((0, 1), (1, 2), (2, 3)))
    with pytest.raises(GraphError):
        branch_transformation(chain, 1, 3, 2)  # attachment degree below 3
    star = Graph(4, ((0, 1), (0, 2), (0, 3)))
    with pytest.raises(GraphError):
        branch_transformation(star, 0, 0, 3)  # destination not pendant
    g = Graph(5, ((0, 1), (0, 2), (0, 3), (3, 4)))
    with pytest.raises(GraphError):
        branch_transformation(g, 0, 4, 3)  # destination inside the branch


def test_reverse_arc_round_trip():
    ring = Digraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))
    once = reverse_arc(ring, (0, 1))
    assert once.arc_count == 4
    assert irr_digraph(once) == IrrPair(6, 6)
    assert reverse_arc(once, (1, 0)) == ring
    with pytest.raises(GraphError):
        reverse_arc(ring, (1, 0))


def test_reverse_arc_on_chain():
    chain = Digraph(5, ((0, 1), (1, 2), (2, 3), (3, 4)))
    assert irr_digraph(reverse_arc(chain, (0, 1))).irr_in == 4
    assert irr_digraph(reverse_arc(chain, (1, 2))).irr_in == 10


def test_arc_transformation_head():
    chain = Digraph(3, ((0, 1), (1, 2)))
    out = arc_transformation(chain, (1, 2), 0, "head")
    assert out.arcs == ((0, 1), (1, 0))
    assert degree_multiset(out, "in").expand() == [0, 1, 1]
    # head moves leave out-degrees alone
    assert degree_multiset(out, "out") == degree_multiset(chain, "out")


def test_arc_transformation_tail():
    chain = Digraph(3, ((0, 1), (1, 2)))
    out = arc_transformation(chain, (0, 1), 2, "tail")
    assert out.arcs == ((1, 2), (2, 1))
    assert degree_multiset(out, "in") == degree_multiset(chain, "in")


def test_arc_transformation_validation():
    d = Digraph(3, ((0, 1), (0, 2)))
    with pytest.raises(GraphError):
        arc_transformation(d, (0, 1), 2, "head")  # (0, 2) already present
    with pytest.raises(GraphError):
        arc_transformation(d, (0, 1), 0, "head")  # self-arc
    with pytest.raises(GraphError):
        arc_transformation(d, (0, 1), 2, "sideways")
    with pytest.raises(GraphError):
        arc_transformation(d, (1, 2), 0, "head")  # arc absent
