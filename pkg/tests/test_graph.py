import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totdom.graph import (
    CAPACITY, CapacityError, FamilySpec, Graph, Graph6Error, bits, complete_graph, corona, cycle_graph,
    from_edge_list, make_family, p3_attach, parse_edge_list, parse_graph6, path_graph, star_graph,
    sunlike, support_vertices, write_edge_list, write_graph6,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


# -- graph6 -----------------------------------------------------------------


def test_parse_k4():
    g = parse_graph6("C~")
    assert g.n == 4 and g.num_edges() == 6


def test_parse_two_isolated():
    g = parse_graph6("A?")
    assert g.n == 2 and g.num_edges() == 0


def test_roundtrip_dqc():
    assert parse_graph6("DQc").n == 5
    assert write_graph6(parse_graph6("DQc")) == "DQc"


@pytest.mark.parametrize("g, s", [(complete_graph(4), "C~"), (Graph.empty(0), "?"), (path_graph(2), "A_")])
def test_write_graph6(g, s):
    assert write_graph6(g) == s


def test_header_tolerated():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_large_order_uses_multibyte_size():
    g = path_graph(63)
    s = write_graph6(g)
    assert s.startswith("~??~")
    assert parse_graph6(s) == g
    assert parse_graph6(write_graph6(path_graph(64))) == path_graph(64)


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("C}\x7f", 2),          # character above 126
    ("C~~", 2),             # too many data bytes
    ("D", 1),               # missing data bytes
    ("A@", 1),              # padding bits set: n=2 uses 1 bit, '@' = 000001
])
def test_graph6_errors(text, offset):
    with pytest.raises(Graph6Error) as exc:
        parse_graph6(text)
    assert exc.value.offset == offset


def test_graph6_capacity():
    # n = 65 in the 3-byte form: 65 = 0b000001_000001 -> '?', '@', '@'
    with pytest.raises(Graph6Error, match="capacity"):
        parse_graph6("~?@@" + "?" * 347)


def test_graph6_small_order_in_long_form_rejected():
    with pytest.raises(Graph6Error):
        parse_graph6("~??C")


@settings(max_examples=200)
@given(graphs(max_n=20))
def test_graph6_roundtrip_graphs(g):
    assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=200)
@given(graphs(max_n=20))
def test_graph6_roundtrip_strings(g):
    s = write_graph6(g)
    assert write_graph6(parse_graph6(s)) == s


# -- construction -----------------------------------------------------------


def test_from_edge_list():
    assert from_edge_list(4, [(0, 1), (1, 2), (2, 3)]) == path_graph(4)
    assert from_edge_list(3, []).num_edges() == 0
    g = from_edge_list(3, [(0, 1), (0, 1)])
    assert g.n == 3 and g.edges() == [(0, 1)]


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(-1, 0)]])
def test_from_edge_list_errors(edges):
    with pytest.raises(ValueError):
        from_edge_list(3, edges)


def test_capacity():
    with pytest.raises(CapacityError):
        Graph.empty(CAPACITY + 1)


def test_graph_invariants_enforced():
    with pytest.raises(ValueError, match="asymmetric"):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError, match="self-loop"):
        Graph(1, (0b1,))


def test_edge_list_text_roundtrip():
    text = "# a path\n4 3\n0 1\n1 2  # middle\n2 3\n"
    g = parse_edge_list(text)
    assert g == path_graph(4)
    assert parse_edge_list(write_edge_list(g)) == g


@pytest.mark.parametrize("text, msg", [
    ("", "empty"),
    ("3 2\n0 1\n", "declares 2"),
    ("3 1\n0 5\n", "line 2"),
    ("3 1\n0 1 2\n", "line 2"),
])
def test_edge_list_errors(text, msg):
    with pytest.raises(ValueError, match=msg):
        parse_edge_list(text)


def test_remove_vertex_relabels():
    g = path_graph(4).remove_vertex(1)
    assert g == from_edge_list(3, [(1, 2)])


# -- families ---------------------------------------------------------------


def fam(text):
    return make_family(FamilySpec.parse(text))


def test_lollipop_6_1():
    g = fam("lollipop:m=6,n=1")
    assert g.n == 7 and g.num_edges() == 16
    assert g.degree(6) == 1 and g.neighbors(6) == [0]


def test_book_1_is_c4():
    assert fam("book:n=1") == from_edge_list(4, [(0, 1), (0, 2), (2, 3), (3, 1)])
    assert sorted(fam("book:n=1").degree(v) for v in range(4)) == [2, 2, 2, 2]


def test_friendship_2_is_bowtie():
    g = fam("friendship:n=2")
    assert g == fam("generalized_friendship:n=2,q=3")
    assert g.n == 5 and g.num_edges() == 6 and g.degree(0) == 4


@pytest.mark.parametrize("text, order", [
    ("lollipop:m=5,n=3", 8),
    ("firecracker:n=3,k=4", 12),
    ("firecracker:ks=5,9,7,4,3", 28),
    ("generalized_firecracker:ks=3,4", 7),
    ("book:n=4", 10),
    ("helm:n=8", 17),
    ("helm:n=8,m=5", 49),
    ("generalized_helm:n=4,m=2", 13),
    ("generalized_friendship:n=3,q=5", 13),
    ("friendship:n=3", 7),
    ("wheel:n=5", 6),
    ("star:n=4", 5),
    ("complete:n=5", 5),
    ("path:n=3", 3),
    ("cycle:n=6", 6),
])
def test_family_orders(text, order):
    assert fam(text).n == order


@pytest.mark.parametrize("text", [
    "lollipop:m=2,n=1", "lollipop:m=3,n=0", "firecracker:n=2,k=2", "firecracker:ks=3,2",
    "book:n=0", "helm:n=2", "cycle:n=2", "star:n=0", "generalized_friendship:n=1,q=2",
    "lollipop:m=3", "lollipop:m=3,n=1,q=2", "nosuch:n=1", "path:n=x", "star:5",
])
def test_family_errors(text):
    with pytest.raises(ValueError):
        fam(text)


def test_familyspec_string_roundtrip():
    spec = FamilySpec.parse("firecracker:ks=5,9,7,4,3")
    assert spec.params == {"ks": (5, 9, 7, 4, 3)}
    assert str(spec) == "firecracker:ks=5,9,7,4,3"
    assert FamilySpec.parse(str(spec)) == spec


def test_firecracker_structure():
    g = fam("firecracker:n=2,k=4")
    # centres 0, 1; linking leaves 2, 3; remaining leaves grouped by star
    assert g.edges() == [(0, 2), (0, 4), (0, 5), (1, 3), (1, 6), (1, 7), (2, 3)]


def test_helm_structure():
    g = fam("helm:n=3")
    assert g.degree(0) == 3
    assert [g.degree(v) for v in (1, 2, 3)] == [4, 4, 4]
    assert [g.neighbors(v) for v in (4, 5, 6)] == [[1], [2], [3]]


def test_lollipop_m1_is_clique_plus_pendant():
    for m in range(3, 9):
        g = fam(f"lollipop:m={m},n=1")
        assert g.n == m + 1
        assert g.remove_vertex(m) == complete_graph(m)
        assert g.neighbors(m) == [0]


# -- operations -------------------------------------------------------------


def test_corona_examples():
    g = corona(path_graph(3), Graph.empty(1))
    assert g.n == 6 and all(g.degree(v) == 1 for v in range(3, 6))
    assert corona(complete_graph(1), Graph.empty(4)) == star_graph(4)
    assert corona(cycle_graph(3), Graph.empty(2)).n == 9


def test_corona_joins_whole_copy():
    g = corona(path_graph(2), complete_graph(2))
    assert g.n == 6
    assert g.neighbors(0) == [1, 2, 3] and g.neighbors(1) == [0, 4, 5]
    assert g.has_edge(2, 3) and g.has_edge(4, 5)


def test_sunlike_examples():
    assert sunlike(path_graph(3), [1, 1, 1]) == corona(path_graph(3), complete_graph(1))
    assert sunlike(complete_graph(2), [2, 1]).n == 5
    assert sunlike(cycle_graph(3), [3, 2, 1]).n == 9
    with pytest.raises(ValueError):
        sunlike(path_graph(3), [1, 1])
    with pytest.raises(ValueError):
        sunlike(path_graph(3), [1, 0, 1])


def test_p3_attach_examples():
    assert p3_attach(complete_graph(1)) == path_graph(3)
    g = p3_attach(complete_graph(2))
    assert g.n == 6 and g.edges() == [(0, 1), (0, 2), (1, 4), (2, 3), (4, 5)]
    assert p3_attach(cycle_graph(3)).n == 9


def test_support_vertices_examples():
    assert list(bits(support_vertices(path_graph(4)))) == [1, 2]
    assert support_vertices(cycle_graph(4)) == 0
    assert list(bits(support_vertices(star_graph(3)))) == [0]


@settings(max_examples=60)
@given(graphs(max_n=6), st.integers(1, 3))
def test_corona_kbar_equals_uniform_sunlike(g, m):
    if g.n == 0:
        return
    assert corona(g, Graph.empty(m)) == sunlike(g, [m] * g.n)


@settings(max_examples=60)
@given(graphs(max_n=6), st.data())
def test_sunlike_supports_every_original_vertex(g, data):
    if g.n == 0:
        return
    ms = data.draw(st.lists(st.integers(1, 3), min_size=g.n, max_size=g.n))
    s = support_vertices(sunlike(g, ms))
    assert s & g.full_mask == g.full_mask
