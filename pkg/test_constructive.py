from itertools import chain, islice

import networkx as nx
import pytest

from src import families
from src.constructive import (
    colour_2k2_free,
    colour_c4_free,
    colour_chordal,
    colour_claw_diamond_free,
    colour_claw_free,
    colour_symmetric,
    extend_over_simplicial,
    module_partition,
    unique_vertex_check,
)
from src.corpus import enumerate_connected
from src.errors import CapabilityError, ContractError, DomainError
from src.exact import (
    chromatic_number,
    distinguishing_chromatic_index,
    distinguishing_chromatic_number,
    independent_partitions,
)
from src.extremal import classify_extremal, is_cycle
from src.graph_core import (
    Graph,
    connected_components,
    graph6_str,
    has_induced,
    is_clique,
    is_complete,
    is_dominating,
    is_module,
    max_degree,
    remove_vertices,
    simplicial_vertices,
)
from src.line_graphs import line_graph, line_root, line_root_map
from src.symmetry import colour_count, fixed_vertices, is_distinguishing, is_isomorphic
from src.types import ExtremalTag


def nx_graph(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
PAW = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
BULL = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


# ---------- chordal and symmetric ----------

@pytest.mark.parametrize(
    "g",
    [
        families.path(5),
        families.star(4),
        families.complete(4),
        families.join_alpha_clique(2, 3),
        families.symmetric_a(3, 2),
        families.symmetric_tree(3, 2),
        DIAMOND,
        PAW,
        BULL,
    ],
)
def test_colour_chordal(g):
    c = colour_chordal(g)
    assert is_distinguishing(g, c)
    assert colour_count(c) <= max_degree(g) + 1


def test_colour_chordal_rejects_cycles():
    with pytest.raises(ContractError):
        colour_chordal(families.cycle(4))


def test_extend_over_simplicial_on_a_star():
    g = families.star(3)
    s = simplicial_vertices(g)
    rest, labels = remove_vertices(g, s)
    assert labels == (0,)
    c = extend_over_simplicial(g, s, (1,))
    assert c == (1, 2, 3, 4)


def test_extend_over_simplicial_checks_its_input():
    g = families.path(4)
    with pytest.raises(ContractError):
        extend_over_simplicial(g, frozenset({0}), (1, 2, 3))
    with pytest.raises(ContractError):
        # P2 coloured (1, 1) is not proper
        extend_over_simplicial(g, frozenset({0, 3}), (1, 1))


@pytest.mark.parametrize(
    "g",
    [
        families.symmetric_tree(3, 2),
        families.symmetric_a(3, 2),
        families.symmetric_b(3, 2),
        families.symmetric_tree(4, 2),
        families.complete(4),
    ],
)
def test_colour_symmetric_uses_delta_plus_one(g):
    c = colour_symmetric(g)
    assert is_distinguishing(g, c)
    assert colour_count(c) == max_degree(g) + 1


def test_colour_symmetric_rejects_other_graphs():
    with pytest.raises(DomainError):
        colour_symmetric(families.path(4))


# ---------- extremal shapes ----------

@pytest.mark.parametrize(
    "g, tag, parameters",
    [
        (families.star(3), ExtremalTag.SYMMETRIC_TREE, {"delta_s": 3, "height": 1}),
        (families.complete(5), ExtremalTag.SYMMETRIC_A, {}),
        (families.cocktail_party(3), ExtremalTag.COCKTAIL_PARTY, {"m": 3}),
        (families.join_alpha_clique(3, 4), ExtremalTag.JOIN_ALPHA_K1_CLIQUE, {"alpha": 3, "omega": 5}),
        (families.symmetric_a(3, 2), ExtremalTag.SYMMETRIC_A, {"delta_s": 3, "height": 2}),
        (families.symmetric_b(3, 2), ExtremalTag.SYMMETRIC_B, {"delta_s": 3, "height": 2}),
        (families.symmetric_tree(4, 2), ExtremalTag.SYMMETRIC_TREE, {"delta_s": 4, "height": 2}),
    ],
)
def test_classify_extremal(g, tag, parameters):
    found = classify_extremal(g)
    assert found.tag is tag
    for key, value in parameters.items():
        assert found.parameters[key] == value


def test_classify_extremal_needs_a_connected_graph():
    with pytest.raises(ContractError):
        classify_extremal(Graph.empty(2))


def _small_symmetric_graphs(n_max=10):
    builders = [
        (families.symmetric_tree, ExtremalTag.SYMMETRIC_TREE),
        (families.symmetric_a, ExtremalTag.SYMMETRIC_A),
        (families.symmetric_b, ExtremalTag.SYMMETRIC_B),
    ]
    for build, tag in builders:
        for delta in range(2, n_max):
            height = 1
            while True:
                try:
                    g = build(delta, height)
                except CapabilityError:  # beyond the vertex cap, hence beyond n_max
                    break
                if g.n > n_max:
                    break
                yield pytest.param(g, tag, id=f"{tag.value}-{delta}-{height}")
                height += 1


@pytest.mark.parametrize("g, tag", list(_small_symmetric_graphs()))
def test_symmetric_graphs_need_delta_plus_one_colours(g, tag):
    assert tag in classify_extremal(g).tags
    assert distinguishing_chromatic_number(g).chi_D == max_degree(g) + 1


# ---------- C4-free ----------

@pytest.mark.parametrize(
    "g, colours",
    [
        (families.cycle(5), 3),
        (families.cycle(6), 4),
        (families.complete(4), 4),
        (families.complete(2), 2),
    ],
)
def test_colour_c4_free_examples(g, colours):
    c = colour_c4_free(g)
    assert is_distinguishing(g, c)
    assert colour_count(c) == colours


def test_colour_c4_free_on_small_graphs():
    for n in range(2, 7):
        for g in enumerate_connected(n):
            if has_induced(g, "C4"):
                continue
            c = colour_c4_free(g)
            assert is_distinguishing(g, c)
            extra = 2 if g.n == 6 and g.edge_count == 6 and max_degree(g) == 2 else 1
            assert colour_count(c) <= max_degree(g) + extra, g


@pytest.mark.slow
def test_colour_c4_free_on_petersen():
    g = families.petersen()
    c = colour_c4_free(g)
    assert is_distinguishing(g, c)
    assert colour_count(c) <= 4


def test_colour_c4_free_preconditions():
    with pytest.raises(ContractError):
        colour_c4_free(families.complete(1))
    with pytest.raises(ContractError):
        colour_c4_free(families.cycle(4))
    with pytest.raises(ContractError):
        colour_c4_free(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_unique_vertex_check():
    g = families.path(3)
    assert unique_vertex_check(g, (1, 3, 1), 1)
    assert not unique_vertex_check(g, (2, 3, 1), 1)
    assert not unique_vertex_check(g, (1, 2, 1), 1)


# ---------- 2K2-free ----------

@pytest.mark.parametrize(
    "g",
    [families.join_alpha_clique(3, 4), DIAMOND, PAW, BULL, families.complete_multipartite(1, 1, 2, 2)],
)
def test_colour_2k2_free(g):
    c = colour_2k2_free(g)
    assert is_distinguishing(g, c)
    omega = max(len(q) for q in nx.find_cliques(nx_graph(g)))
    assert colour_count(c) <= 2 * max_degree(g) - omega + 2


def test_colour_2k2_free_on_small_graphs():
    for n in range(4, 7):
        for g in enumerate_connected(n):
            if has_induced(g, "2K2") or is_complete(g) or not has_induced(g, "C3"):
                continue
            c = colour_2k2_free(g)
            assert is_distinguishing(g, c), g


def test_colour_2k2_free_preconditions():
    with pytest.raises(ContractError):
        colour_2k2_free(families.cycle(4))         # omega = 2
    with pytest.raises(ContractError):
        colour_2k2_free(families.complete(4))
    with pytest.raises(ContractError):
        colour_2k2_free(families.path(6))          # contains 2K2


# ---------- claw-free ----------

@pytest.mark.parametrize(
    "g, p",
    [
        (families.cycle(4), 2),
        (families.cocktail_party(3), 3),
        (families.complete(4), 0),
        (families.cycle(5), 1),
        (families.path(3), 1),
    ],
)
def test_module_partition(g, p):
    partition = module_partition(g)
    assert partition.p == p
    covered = set()
    for part in partition.parts:
        assert is_module(g, part) and is_dominating(g, part) and not is_clique(g, part)
        assert not covered & part
        covered |= part
    if p:
        assert covered == set(range(g.n))


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller


def _brute_p(g: Graph) -> int:
    if is_complete(g):
        return 0
    best = 0
    for parts in _set_partitions(list(range(g.n))):
        if all(not is_clique(g, q) and is_module(g, q) and is_dominating(g, q) for q in parts):
            best = max(best, len(parts))
    return best


def test_module_partition_is_maximum_on_small_claw_free_graphs():
    for n in range(2, 7):
        for g in enumerate_connected(n):
            if has_induced(g, "claw"):
                continue
            assert module_partition(g).p == _brute_p(g), g


def test_module_partition_is_capped():
    with pytest.raises(CapabilityError):
        module_partition(families.cycle(11))


@pytest.mark.parametrize("g", [families.cocktail_party(3), families.cycle(5), families.complete(4), families.cycle(4)])
def test_colour_claw_free(g):
    c = colour_claw_free(g)
    assert is_distinguishing(g, c)
    assert colour_count(c) <= chromatic_number(g) + module_partition(g).p


def test_colour_claw_free_on_small_graphs():
    for n in range(1, 7):
        for g in enumerate_connected(n):
            if has_induced(g, "claw") or (n == 6 and g.edge_count == 6 and max_degree(g) == 2):
                continue
            c = colour_claw_free(g)
            assert is_distinguishing(g, c), graph6_str(g)
            assert colour_count(c) <= chromatic_number(g) + module_partition(g).p, graph6_str(g)


def _proper_colourings(h: Graph):
    return chain.from_iterable(independent_partitions(h, k) for k in range(1, h.n + 1))


def _has_connected_non_complete_piece(h: Graph) -> bool:
    return any(not is_clique(h, comp) for comp in connected_components(h))


@pytest.mark.parametrize("n", [3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_fixing_a_connected_piece_fixes_the_whole_module(n):
    # every vertex outside the part keeps a colour of its own
    for g in enumerate_connected(n):
        if is_complete(g) or has_induced(g, "claw"):
            continue
        for part in module_partition(g).parts:
            inside = sorted(part)
            outside = [v for v in range(g.n) if v not in part]
            h = g.induced(inside)
            for c_part in islice(_proper_colourings(h), 300):
                c = [0] * g.n
                for i, v in enumerate(inside):
                    c[v] = c_part[i]
                for j, v in enumerate(outside):
                    c[v] = max(c_part) + 1 + j
                fixed = fixed_vertices(g, c)
                piece = h.induced(i for i, v in enumerate(inside) if v in fixed)
                if _has_connected_non_complete_piece(piece):
                    assert part <= fixed, (graph6_str(g), c)


def test_colour_claw_free_exceptions():
    with pytest.raises(DomainError):
        colour_claw_free(families.cycle(6))
    with pytest.raises(ContractError):
        colour_claw_free(families.star(3))


# ---------- (claw, diamond)-free ----------

@pytest.mark.parametrize(
    "g",
    [families.cycle(5), families.path(4), families.complete(3), families.complete(1), families.cycle(7)],
)
def test_colour_claw_diamond_free(g):
    c = colour_claw_diamond_free(g)
    assert is_distinguishing(g, c)
    assert colour_count(c) <= max_degree(g) + 1


def test_colour_claw_diamond_free_exceptions():
    with pytest.raises(DomainError):
        colour_claw_diamond_free(families.cycle(4))
    with pytest.raises(ContractError):
        colour_claw_diamond_free(DIAMOND)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
def test_vertex_colouring_uses_the_index_of_the_line_root(n):
    for g in enumerate_connected(n):
        if has_induced(g, "claw") or has_induced(g, "diamond") or is_cycle(g, 4) or is_cycle(g, 6):
            continue
        c = colour_claw_diamond_free(g)
        assert is_distinguishing(g, c)
        assert colour_count(c) == distinguishing_chromatic_index(line_root(g)), graph6_str(g)


@pytest.mark.slow
def test_colour_claw_diamond_free_on_figure_graph():
    g = families.fig_lk13()
    c = colour_claw_diamond_free(g)
    assert is_distinguishing(g, c)
    assert colour_count(c) == 5


# ---------- line graphs ----------

def test_line_graph_matches_networkx():
    for n in range(2, 6):
        for h in enumerate_connected(n):
            ours = nx_graph(line_graph(h))
            assert nx.is_isomorphic(ours, nx.line_graph(nx_graph(h)))


def test_line_root_recovers_the_root():
    for n in range(2, 6):
        for h in enumerate_connected(n):
            root = line_root(line_graph(h))
            assert root is not None
            if h.n == 4 and h.edge_count == 3 and max_degree(h) == 3:
                # K_{1,3} and K_3 share a line graph; the triangle is returned
                assert is_isomorphic(root, families.complete(3))
            else:
                assert is_isomorphic(root, h), h


def test_line_root_map_labels_edges():
    g = line_graph(families.complete_bipartite(3, 3))
    root, mapping = line_root_map(g)
    assert len(mapping) == g.n
    assert is_isomorphic(line_graph(root), g)
    for v in range(g.n):
        for u in range(v + 1, g.n):
            shares = bool(set(mapping[u]) & set(mapping[v]))
            assert shares == g.has_edge(u, v)


@pytest.mark.parametrize("g", [families.star(3), Graph.from_edges(5, [(a, b) for a in range(5) for b in range(a + 1, 5) if (a, b) != (3, 4)])])
def test_non_line_graphs(g):
    assert line_root(g) is None


def test_line_root_errors():
    with pytest.raises(ContractError):
        line_root(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(DomainError):
        line_root(Graph.empty(0))
    with pytest.raises(CapabilityError):
        line_root(families.cycle(13))
    with pytest.raises(DomainError):
        line_graph(Graph.empty(3))
