from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgepoly.errors import InputError
from edgepoly.generators import complete, cycle, enumerate_connected_graphs, path
from edgepoly.graph import (
    Graph,
    bipartition,
    connected_components,
    cycle_compatible,
    disjoint_union,
    format_edge_list,
    from_edge_list,
    induced_subgraph,
    is_connected,
    parse_edge_list,
    relabel,
)

from oracles import compatible_literal, components_literal


def test_from_edge_list_triangle():
    G = from_edge_list(3, [(1, 2), (2, 3), (1, 3)])
    assert G.edges == ((1, 2), (1, 3), (2, 3))
    assert G == complete(3)


def test_from_edge_list_fig1(fig1):
    assert fig1.d == 6 and fig1.m == 7


def test_from_edge_list_dedups_and_canonicalizes():
    G = from_edge_list(3, [(2, 1), (1, 2), (3, 2)])
    assert G.edges == ((1, 2), (2, 3))


@pytest.mark.parametrize("d, pairs", [(2, [(1, 1)]), (2, [(1, 3)]), (3, [(0, 1)]), (0, [])])
def test_from_edge_list_rejects(d, pairs):
    with pytest.raises(InputError):
        from_edge_list(d, pairs)


def test_adjacency_symmetric(fig1):
    for u in fig1.vertices():
        for v in fig1.neighbors(u):
            assert u in fig1.neighbors(v)
    assert sum(fig1.degree(v) for v in fig1.vertices()) == 2 * fig1.m


def test_components():
    assert is_connected(complete(4))
    two = disjoint_union(complete(3), complete(3))
    assert connected_components(two) == [frozenset({1, 2, 3}), frozenset({4, 5, 6})]
    assert connected_components(from_edge_list(1, [])) == [frozenset({1})]


def test_components_drop_isolated():
    G = from_edge_list(4, [(2, 3)])
    assert connected_components(G, drop_isolated=True) == [frozenset({2, 3})]


def test_bipartition():
    assert bipartition(cycle(4)) == (frozenset({1, 3}), frozenset({2, 4}))
    assert bipartition(complete(3)) is None


def test_bipartition_fig1(fig1):
    assert bipartition(fig1) == (frozenset({1, 3, 5}), frozenset({2, 4, 6}))


def test_bipartition_disconnected_merges_components():
    G = disjoint_union(path(2), cycle(4))
    a, b = bipartition(G)
    assert a | b == frozenset(range(1, 7))
    assert all((u in a) != (v in a) for u, v in G.edges)


def test_cycle_compatible_examples(fig1):
    assert cycle_compatible(fig1, (3, 4), (1, 2))
    assert not cycle_compatible(fig1, (1, 2), (2, 3))
    assert not cycle_compatible(cycle(6), (1, 2), (4, 5))


def test_cycle_compatible_rejects_non_edges(fig1):
    with pytest.raises(InputError):
        cycle_compatible(fig1, (1, 3), (2, 4))


def test_cycle_compatible_matches_literal_search_up_to_six_vertices():
    # cross-edge shortcut against literal 4-cycle search on the induced subgraph
    checked = 0
    for n in range(4, 7):
        for G in enumerate_connected_graphs(n):
            for e, f in combinations(G.edges, 2):
                got = cycle_compatible(G, e, f)
                assert got == cycle_compatible(G, f, e)
                assert got == compatible_literal(G.d, G.edges, e, f), (G, e, f)
                checked += 1
    assert checked > 100_000


def test_multipartite_disjoint_edges_compatible():
    from edgepoly.generators import complete_multipartite

    for sizes in [(1, 3), (2, 2), (1, 1, 2), (2, 3), (1, 2, 3), (2, 2, 2)]:
        G = complete_multipartite(*sizes)
        for e, f in combinations(G.edges, 2):
            if not set(e) & set(f):
                assert cycle_compatible(G, e, f)


def test_relabel():
    G = path(3)
    assert relabel(G, [1, 2, 3]) == G
    assert relabel(G, [3, 2, 1]) == G
    K4 = complete(4)
    for perm in permutations(range(1, 5)):
        assert relabel(K4, perm) == K4
    with pytest.raises(InputError):
        relabel(G, [1, 1, 2])


def test_induced_subgraph_relabels():
    H, labels = induced_subgraph(cycle(6), [2, 3, 4, 6])
    assert labels == [2, 3, 4, 6]
    assert H.edges == ((1, 2), (2, 3))


def test_edge_list_round_trip(fig1):
    text = format_edge_list(fig1)
    assert text.splitlines()[0] == "6 7"
    assert format_edge_list(parse_edge_list(text)) == text


def test_parse_comments_and_blank_lines():
    G = parse_edge_list("# a triangle\n3 3\n\n1 2\n# middle\n2 3\n3 1\n")
    assert G == complete(3)


@pytest.mark.parametrize(
    "text",
    ["", "1 2\n", "3\n1 2\n", "3 2\n1 2\n", "3 1\n1 4\n", "3 1\n2 2\n", "a b\n", "3 1\n1 x\n", "3 1\n1 2 3\n"],
)
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


graphs = st.integers(1, 8).flatmap(
    lambda d: st.builds(
        lambda es: Graph(d, es),
        st.sets(st.tuples(st.integers(1, d), st.integers(1, d)).filter(lambda p: p[0] != p[1]), max_size=20),
    )
)


@settings(max_examples=200, deadline=None)
@given(graphs)
def test_components_match_union_find(G):
    assert [set(c) for c in connected_components(G)] == components_literal(G.d, G.edges)


@settings(max_examples=200, deadline=None)
@given(graphs, st.randoms(use_true_random=False))
def test_relabel_preserves_structure(G, rnd):
    perm = list(G.vertices())
    rnd.shuffle(perm)
    H = relabel(G, perm)
    assert H.m == G.m
    assert sorted(G.degree(v) for v in G.vertices()) == sorted(H.degree(v) for v in H.vertices())
    assert (bipartition(G) is None) == (bipartition(H) is None)
