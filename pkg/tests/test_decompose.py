from itertools import product

import pytest

from edgepoly.decompose import (
    TYPE_I,
    TYPE_II,
    brute_force_certificates,
    canonical_key,
    edge_signs,
    is_general_valid,
    is_separating,
    make_certificate,
    search_type_I,
    search_type_II,
)
from edgepoly.errors import InputError, ResourceError
from edgepoly.generators import attach_four_cycle, complete, cycle, enumerate_connected_graphs, path, tri_pan
from edgepoly.graph import disjoint_union, from_edge_list

from conftest import FIG1_TYPE_I, FIG1_TYPE_II
from oracles import brute_force_literal


def _signs(G, a):
    return {s.edge: s.sign for s in edge_signs(G, a)}


def test_edge_signs_type_i(fig1):
    signs = _signs(fig1, FIG1_TYPE_I)
    assert signs.pop((3, 4)) == 1
    assert signs.pop((1, 2)) == -1
    assert set(signs.values()) == {0}


def test_edge_signs_type_ii(fig1):
    signs = _signs(fig1, FIG1_TYPE_II)
    assert signs.pop((3, 4)) == 1
    assert signs.pop((1, 2)) == -1
    assert set(signs.values()) == {0}


def test_edge_signs_zero_weighting(fig1):
    assert set(_signs(fig1, [0] * 6).values()) == {0}


def test_edge_signs_signature(fig1):
    sig = {s.edge: s.signature for s in edge_signs(fig1, FIG1_TYPE_II)}
    assert sig[(3, 4)] == (0, 1)
    assert sig[(1, 2)] == (-1, 0)


@pytest.mark.parametrize("a", [[1, 0], [1, 0, 0, 0, 0, 2], [0] * 7])
def test_edge_signs_bad_weighting(fig1, a):
    with pytest.raises(InputError):
        edge_signs(fig1, a)


def test_is_separating_paper_examples(fig1):
    assert is_separating(fig1, FIG1_TYPE_I) == TYPE_I
    assert is_separating(fig1, FIG1_TYPE_II) == TYPE_II


def test_is_separating_triangle_never():
    K3 = complete(3)
    assert all(is_separating(K3, a) is None for a in product((-1, 0, 1), repeat=3))


def test_is_separating_rejects_disconnected():
    with pytest.raises(InputError):
        is_separating(disjoint_union(cycle(4), path(2)), [1, 1, -1, -1, 0, 0])


def test_general_valid_without_pattern_is_not_a_verdict():
    # C4 with one {1,1} edge next to a zero vertex: separating but unpatterned
    C4 = cycle(4)
    a = (1, 1, 0, -1)
    assert is_general_valid(C4, a) == any(w == a for w, _ in brute_force_literal(4, C4.edges))
    found = dict(brute_force_literal(4, C4.edges))
    unpatterned = [w for w, p in found.items() if p is None]
    for w in unpatterned:
        assert is_general_valid(C4, w)
        assert is_separating(C4, w) is None


def test_search_type_i_examples():
    assert search_type_I(complete(4)).weights == (1, 1, -1, -1)
    assert search_type_I(tri_pan(2)) is None
    cert = search_type_I(cycle(4))
    assert cert.weights == (1, 1, -1, -1)
    assert cert.positive == ((1, 2),) and cert.negative == ((3, 4),)


def test_search_type_ii_examples(fig1):
    cert = search_type_II(attach_four_cycle(complete(3), (1, 2)))
    assert cert.weights == (0, 0, 0, 1, -1)
    assert search_type_II(complete(4)) is None
    assert search_type_II(fig1).weights == tuple(-x for x in FIG1_TYPE_II)


def test_search_type_i_fig1_matches_paper_up_to_sign(fig1):
    assert search_type_I(fig1).weights == tuple(-x for x in FIG1_TYPE_I)


def test_search_preconditions():
    with pytest.raises(InputError):
        search_type_I(disjoint_union(cycle(4), cycle(4)))
    with pytest.raises(InputError):
        search_type_II(from_edge_list(3, [(1, 2)]))
    with pytest.raises(ResourceError):
        search_type_I(cycle(65))


def test_single_edge_is_indecomposable():
    G = path(2)
    assert search_type_I(G) is None and search_type_II(G) is None


def test_brute_force_examples():
    assert brute_force_certificates(complete(3)) == []
    assert brute_force_certificates(tri_pan(1)) == []
    found = dict(brute_force_certificates(cycle(4)))
    assert found[(1, 1, -1, -1)] == TYPE_I
    assert found[(0, 1, -1, 0)] == TYPE_II


def test_brute_force_cap():
    with pytest.raises(ResourceError):
        brute_force_certificates(cycle(15))
    assert brute_force_certificates(cycle(5), cap=5) == []


def test_brute_force_matches_literal_oracle():
    names = {"I": TYPE_I, "II": TYPE_II, None: "general"}
    for n in range(2, 6):
        for G in enumerate_connected_graphs(n):
            expected = [(w, names[p]) for w, p in brute_force_literal(G.d, G.edges)]
            assert brute_force_certificates(G) == expected, G


def test_searches_agree_with_oracle_up_to_five_vertices():
    for n in range(2, 6):
        for G in enumerate_connected_graphs(n):
            found = brute_force_literal(G.d, G.edges)
            for pattern, search in (("I", search_type_I), ("II", search_type_II)):
                cands = [w for w, p in found if p == pattern and next(x for x in w if x) == 1]
                cert = search(G)
                if not cands:
                    assert cert is None, G
                else:
                    assert cert.weights == min(cands, key=canonical_key), G


def test_sign_flip_symmetry():
    for G in enumerate_connected_graphs(5):
        found = dict(brute_force_certificates(G))
        for w, p in found.items():
            assert found[tuple(-x for x in w)] == p


def test_make_certificate(fig1):
    cert = make_certificate(fig1, FIG1_TYPE_I)
    assert cert.pattern == TYPE_I
    assert cert.to_json() == {
        "weights": list(FIG1_TYPE_I),
        "pattern": "I",
        "positive": [[3, 4]],
        "negative": [[1, 2]],
        "zero": [[1, 4], [1, 6], [2, 3], [4, 5], [5, 6]],
    }
    assert cert.negated().positive == ((1, 2),)
    with pytest.raises(InputError):
        make_certificate(fig1, [1] * 6)


def test_make_certificate_component_extension():
    G = disjoint_union(complete(3), complete(4))
    cert = make_certificate(G, (0, 0, 0, 1, 1, -1, -1), component=[4, 5, 6, 7])
    assert cert.pattern == TYPE_I and cert.component == (4, 5, 6, 7)
    with pytest.raises(InputError):
        make_certificate(G, (1, 0, 0, 1, 1, -1, -1), component=[4, 5, 6, 7])
