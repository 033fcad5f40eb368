import pytest

from edgepoly.errors import InputError
from edgepoly.generators import (
    attach_four_cycle,
    complete,
    complete_multipartite,
    connected_masks,
    cycle,
    enumerate_connected_graphs,
    generate_family,
    path,
    tri_pan,
    tri_pan_labels,
)
from edgepoly.graph import from_edge_list, is_connected

from oracles import count_connected_labeled, four_cycles


def test_tri_pan_one_is_triangle_with_pendant():
    G = tri_pan(1)
    assert (G.d, G.m) == (4, 4)
    lab = tri_pan_labels(1)
    assert G.has_edge(lab["x"], lab["1"])
    assert all(G.has_edge(a, b) for a, b in [(lab["1"], lab["y0"]), (lab["1"], lab["y1"]), (lab["y0"], lab["y1"])])
    assert G.degree(lab["x"]) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_tri_pan_counts(n):
    G = tri_pan(n)
    assert (G.d, G.m) == (2 * n + 2, 4 * n)
    assert is_connected(G)


def test_tri_pan_five():
    G = tri_pan(5)
    assert (G.d, G.m) == (12, 20)


@pytest.mark.parametrize("n", range(1, 7))
def test_tri_pan_four_cycles(n):
    G = tri_pan(n)
    cycles = four_cycles(G.d, G.edges)
    assert len(cycles) == n - 1
    lab = tri_pan_labels(n)
    for i in range(1, n):
        # x, i, y_i, i+1
        expected = {
            frozenset((lab["x"], lab[str(i)])),
            frozenset((lab[str(i)], lab[f"y{i}"])),
            frozenset((lab[f"y{i}"], lab[str(i + 1)])),
            frozenset((lab[str(i + 1)], lab["x"])),
        }
        assert frozenset(expected) in cycles


def test_attach_figure_two():
    base = from_edge_list(6, [(1, 4), (4, 3), (1, 2), (2, 3), (4, 5), (1, 6), (5, 6)])
    G = attach_four_cycle(base, (2, 3))
    assert (G.d, G.m) == (8, 10)
    assert G.has_edge(2, 7) and G.has_edge(7, 8) and G.has_edge(8, 3)


def test_attach_requires_edge():
    with pytest.raises(InputError):
        attach_four_cycle(cycle(4), (1, 3))


def test_basic_families():
    assert complete(4).m == 6
    assert complete_multipartite(2, 3).m == 6
    assert complete_multipartite(1, 1, 1, 1) == complete(4)
    assert cycle(5).m == 5
    assert path(3).edges == ((1, 2), (2, 3))
    assert path(1).m == 0


@pytest.mark.parametrize(
    "family, params", [("complete", (0,)), ("cycle", (2,)), ("tripan", (0,)), ("nope", (3,)), ("multipartite", (2, 0))]
)
def test_generate_family_errors(family, params):
    with pytest.raises(InputError):
        generate_family(family, *params)


def test_generate_family_dispatch():
    assert generate_family("tripan", 5) == tri_pan(5)
    assert generate_family("multipartite", 1, 2) == complete_multipartite(1, 2)
    assert generate_family("attach", base=cycle(4), edge=(1, 2)).d == 6


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 4), (4, 38)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_connected_graphs(n)) == count


def test_enumeration_counts_match_independent_recount():
    for n in range(1, 6):
        graphs = list(enumerate_connected_graphs(n))
        assert len(graphs) == count_connected_labeled(n)
        assert len(set(graphs)) == len(graphs)
        assert all(is_connected(G) for G in graphs)


def test_enumeration_cap():
    with pytest.raises(InputError):
        list(connected_masks(8))
    with pytest.raises(InputError):
        list(connected_masks(0))
