"""
Named graph constructors and the shipped fixture file.

Vertex labels are deterministic so fixtures and tests can refer to them:
cycles run 0-1-...-(n-1)-0, multipartite parts are consecutive blocks, and the
symmetric trees are labelled in BFS order from the root.
"""

from __future__ import annotations
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .errors import ContractError
from .graph_core import Graph, parse_graph6

FIXTURES_PATH = Path(__file__).parent / "resources" / "fixtures.g6"


def empty(n: int) -> Graph:
    return Graph.empty(n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ContractError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    if any(p < 1 for p in parts):
        raise ContractError(f"part sizes must be positive, got {parts}")
    blocks: List[range] = []
    start = 0
    for p in parts:
        blocks.append(range(start, start + p))
        start += p
    edges = [
        (u, v)
        for a, b in combinations(blocks, 2)
        for u in a
        for v in b
    ]
    return Graph.from_edges(start, edges)


def complete_bipartite(p: int, q: int) -> Graph:
    return complete_multipartite(p, q)


def star(m: int) -> Graph:
    """K_{1,m} with centre 0."""
    return complete_multipartite(1, m)


def cocktail_party(m: int) -> Graph:
    """K_m[2K_1]: m parts of size two."""
    return complete_multipartite(*([2] * m))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    edges = g.edges() + [(u + shift, v + shift) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    union = disjoint_union(g, h)
    extra = [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(union.n, union.edges() + extra)


def join_alpha_clique(alpha: int, q: int) -> Graph:
    """alpha K_1 + K_q; vertices 0..alpha-1 are the independent ones."""
    return join(empty(alpha), complete(q))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def fig_lk13() -> Graph:
    """
    The claw-free exception drawn next to the claw-free bound: a 6-cycle 0..5
    and three apexes 6, 7, 8, each adjacent to the ends of two opposite cycle
    edges.
    """
    cyc = [(i, (i + 1) % 6) for i in range(6)]
    apexes = [
        (6, 0), (6, 1), (6, 3), (6, 4),
        (7, 0), (7, 5), (7, 2), (7, 3),
        (8, 1), (8, 2), (8, 4), (8, 5),
    ]
    return Graph.from_edges(9, cyc + apexes)


# ---------- symmetric trees and their clique variants ----------

def _symmetric_tree_layout(delta: int, height: int) -> Tuple[List[Tuple[int, int]], List[List[int]], int]:
    """
    Edges, the leaf children of every support vertex, and the vertex count of
    the symmetric tree with maximum degree delta and all leaves at depth height.
    """
    if height < 1 or delta < 1:
        raise ContractError(f"symmetric tree needs delta >= 1 and height >= 1, got ({delta}, {height})")
    if delta == 1 and height > 1:
        raise ContractError("delta = 1 only admits height 1 (K_2)")
    edges: List[Tuple[int, int]] = []
    level = [0]
    nxt_label = 1
    supports: List[List[int]] = []
    for depth in range(height):
        children_per = delta if depth == 0 else delta - 1
        new_level = []
        for parent in level:
            kids = list(range(nxt_label, nxt_label + children_per))
            nxt_label += children_per
            edges.extend((parent, k) for k in kids)
            new_level.extend(kids)
            if depth == height - 1:
                supports.append(kids)
        level = new_level
    return edges, supports, nxt_label


def symmetric_tree(delta: int, height: int) -> Graph:
    edges, _, n = _symmetric_tree_layout(delta, height)
    return Graph.from_edges(n, edges)


def symmetric_a(delta: int, height: int) -> Graph:
    """T_A: the leaf children of every support become a clique."""
    edges, supports, n = _symmetric_tree_layout(delta, height)
    for leaves in supports:
        edges.extend(combinations(leaves, 2))
    return Graph.from_edges(n, edges)


def symmetric_b(delta: int, height: int) -> Graph:
    """T_B: as T_A plus one new vertex per support, adjacent to that support's leaves."""
    edges, supports, n = _symmetric_tree_layout(delta, height)
    for leaves in supports:
        edges.extend(combinations(leaves, 2))
        edges.extend((n, leaf) for leaf in leaves)
        n += 1
    return Graph.from_edges(n, edges)


def symmetric_tree_order(delta: int, height: int) -> int:
    total, width = 1, delta
    for _ in range(height):
        total += width
        width *= max(delta - 1, 0)
    return total


# ---------- fixtures ----------

def load_fixtures(path: Optional[Path] = None) -> Tuple[int, Dict[str, Graph]]:
    """
    Read `name graph6` pairs. Blank lines and `#` comments are skipped; the first
    remaining line must be `version <int>`.
    """
    path = Path(path) if path is not None else FIXTURES_PATH
    if not path.exists():
        raise FileNotFoundError(f"fixtures file not found: {path}")
    version: Optional[int] = None
    graphs: Dict[str, Graph] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if version is None:
            if len(parts) != 2 or parts[0] != "version":
                raise ContractError(f"{path}:{lineno}: expected 'version <int>', got {line!r}")
            version = int(parts[1])
            continue
        if len(parts) != 2:
            raise ContractError(f"{path}:{lineno}: expected 'name graph6', got {line!r}")
        name, g6 = parts
        graphs[name] = parse_graph6(g6)
    if version is None:
        raise ContractError(f"{path}: missing version line")
    return version, graphs
