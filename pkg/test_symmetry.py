import random
from itertools import combinations

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from src import families
from src.errors import CapabilityError, ContractError, SearchCancelled
from src.graph_core import Graph
from src.symmetry import (
    as_colouring,
    automorphisms,
    canonical_form,
    find_isomorphism,
    fixed_vertices,
    has_nontrivial_automorphism,
    is_distinguishing,
    is_isomorphic,
    is_proper,
    normalise,
    orbits,
)
from src.types import CancelToken


def nx_graph(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def shuffled(g: Graph, seed: int) -> Graph:
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


def nx_aut_count(g: Graph) -> int:
    G = nx_graph(g)
    return sum(1 for _ in GraphMatcher(G, G).isomorphisms_iter())


def prism() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


@pytest.mark.parametrize(
    "g, order",
    [
        (families.cycle(6), 12),
        (families.complete(4), 24),
        (families.path(4), 2),
        (families.complete_bipartite(3, 3), 72),
        (families.petersen(), 120),
        (families.star(3), 6),
        (families.complete(1), 1),
    ],
)
def test_automorphism_group_orders(g, order):
    report = automorphisms(g)
    assert report.order == order == len(report.elements)
    assert report.elements[0] == tuple(range(g.n))


def test_automorphism_counts_match_networkx():
    rng = random.Random(21)
    for _ in range(15):
        n = rng.randint(2, 7)
        g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        assert automorphisms(g).order == nx_aut_count(g), g


def test_every_element_is_an_automorphism():
    g = families.petersen()
    edges = set(g.edges())
    for p in automorphisms(g).elements:
        assert {tuple(sorted((p[u], p[v]))) for u, v in edges} == edges


def test_colour_preserving_automorphisms_of_alternating_c6():
    report = automorphisms(families.cycle(6), (1, 2, 1, 2, 1, 2))
    assert report.order == 6
    assert report.fixed == frozenset()


def test_fixed_vertices_and_orbits():
    g = families.path(5)
    assert fixed_vertices(g, (1, 1, 1, 1, 1)) == frozenset({2})
    assert orbits(g) == [frozenset({0, 4}), frozenset({1, 3}), frozenset({2})]
    assert fixed_vertices(g, (1, 2, 3, 4, 5)) == frozenset(range(5))


def test_automorphism_listing_is_capped():
    with pytest.raises(CapabilityError):
        automorphisms(families.cycle(17))


def test_colour_renaming_keeps_the_automorphism_group():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(2, 7)
        g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        c = [rng.randint(1, 3) for _ in range(n)]
        palette = [4, 9, 7]
        rng.shuffle(palette)
        renamed = [palette[col - 1] for col in c]
        assert set(automorphisms(g, c).elements) == set(automorphisms(g, renamed).elements)
        assert is_distinguishing(g, c) == is_distinguishing(g, renamed)


def test_fixed_vertices_grow_under_refinement():
    rng = random.Random(29)
    for _ in range(60):
        n = rng.randint(2, 7)
        g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        c = [rng.randint(1, 2) for _ in range(n)]
        split = rng.choice(c)
        refined = [3 if col == split and rng.random() < 0.5 else col for col in c]
        assert fixed_vertices(g, c) <= fixed_vertices(g, refined)


def test_distinguishing_examples():
    assert is_distinguishing(families.cycle(5), (1, 2, 3, 1, 2))
    assert not is_distinguishing(families.path(3), (1, 2, 1))
    assert is_distinguishing(families.path(3), (1, 2, 3))
    assert is_distinguishing(families.complete(3), {0: 1, 1: 2, 2: 3})
    # proper but swapped by the reflection
    assert not is_distinguishing(families.cycle(6), (1, 2, 1, 2, 1, 2))


def test_improper_colourings_are_never_distinguishing():
    g = families.complete(2)
    assert not is_proper(g, (1, 1))
    assert has_nontrivial_automorphism(g, (1, 1))
    assert not is_distinguishing(g, (1, 1))
    # a path coloured improperly can still be rigid
    assert not has_nontrivial_automorphism(families.path(3), (1, 1, 2))
    assert not is_distinguishing(families.path(3), (1, 1, 2))


def test_nontrivial_automorphism_beyond_listing_cap():
    g = families.cycle(30)
    assert has_nontrivial_automorphism(g, [1] * 30)
    rigid = [1] * 30
    rigid[0] = 2
    rigid[1] = 3
    assert not has_nontrivial_automorphism(g, rigid)


@pytest.mark.parametrize(
    "c, message",
    [
        ((1, 2), "partial colouring"),
        ((1, 2, 0), "positive integer"),
        ((1, 2, True), "positive integer"),
        ({0: 1, 1: 2}, "partial colouring"),
        ({0: 1, 1: 2, 2: 3, 5: 1}, "outside"),
    ],
)
def test_as_colouring_rejects_bad_input(c, message):
    with pytest.raises(ContractError, match=message):
        as_colouring(families.path(3), c)


def test_normalise_renames_by_first_appearance():
    assert normalise((7, 3, 7, 9)) == (1, 2, 1, 3)


def test_find_isomorphism_on_relabelled_graphs():
    for seed, g in enumerate([families.petersen(), families.fig_lk13(), families.symmetric_b(3, 2)]):
        h = shuffled(g, seed)
        p = find_isomorphism(g, h)
        assert p is not None
        assert {tuple(sorted((p[u], p[v]))) for u, v in g.edges()} == set(h.edges())


def test_find_isomorphism_rejects_non_isomorphic():
    assert find_isomorphism(families.complete_bipartite(3, 3), prism()) is None
    assert not is_isomorphic(families.cycle(6), families.disjoint_union(families.cycle(3), families.cycle(3)))
    assert find_isomorphism(families.path(3), families.path(4)) is None


def test_find_isomorphism_respects_colours():
    g = families.path(3)
    assert find_isomorphism(g, g, (1, 2, 2), (2, 2, 1)) == (2, 1, 0)
    assert find_isomorphism(g, g, (1, 2, 2), (2, 1, 2)) is None


def test_canonical_form_is_label_invariant():
    for g in [families.petersen(), families.fig_lk13(), families.cycle(7), families.symmetric_a(3, 2)]:
        code = canonical_form(g)
        for seed in range(100):
            assert canonical_form(shuffled(g, seed)) == code


def test_canonical_form_separates_non_isomorphic_graphs():
    rng = random.Random(5)
    graphs = []
    for _ in range(40):
        n = rng.randint(4, 6)
        graphs.append(Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5]))
    for a, b in combinations(graphs, 2):
        same = nx.is_isomorphic(nx_graph(a), nx_graph(b))
        assert (canonical_form(a) == canonical_form(b)) == same


def test_canonical_form_is_capped():
    with pytest.raises(CapabilityError):
        canonical_form(families.cycle(13))


def test_cancelled_search_raises():
    token = CancelToken()
    token.cancel()
    with pytest.raises(SearchCancelled):
        has_nontrivial_automorphism(families.cycle(8), [1] * 8, cancel=token)
    with pytest.raises(SearchCancelled):
        automorphisms(families.cycle(8), cancel=token)


def test_expired_deadline_cancels():
    token = CancelToken(timeout_s=-1.0)
    with pytest.raises(SearchCancelled):
        canonical_form(families.petersen(), cancel=token)
