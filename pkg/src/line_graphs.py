from __future__ import annotations
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from .config import DEFAULT_CONFIG
from .errors import CapabilityError, ContractError, DomainError
from .graph_core import Graph, is_complete, is_connected, members

Edge = Tuple[int, int]


def line_graph(h: Graph) -> Graph:
    """L(h); vertex i is the i-th edge of h in lexicographic order."""
    edges = h.edges()
    if not edges:
        raise DomainError("line_graph needs at least one edge")
    at: Dict[int, List[int]] = {}
    for i, (u, v) in enumerate(edges):
        at.setdefault(u, []).append(i)
        at.setdefault(v, []).append(i)
    adj = set()
    for incident in at.values():
        adj.update(combinations(incident, 2))
    return Graph.from_edges(len(edges), adj)


def _krausz_cover(g: Graph) -> Optional[List[List[int]]]:
    """
    Partition E(g) into cliques so that every vertex lies in at most two of
    them. Returns the cliques (ascending vertex lists) or None.
    """
    uncovered: Set[Edge] = set(g.edges())
    count = [0] * g.n
    cliques: List[List[int]] = []

    def open_nbrs(x: int) -> List[int]:
        return [y for y in members(g.rows[x]) if (min(x, y), max(x, y)) in uncovered]

    def valid(q: List[int]) -> bool:
        return all((a, b) in uncovered for a, b in combinations(sorted(q), 2)) and all(count[x] < 2 for x in q)

    def place(q: List[int]) -> bool:
        for a, b in combinations(sorted(q), 2):
            uncovered.discard((a, b))
        for x in q:
            count[x] += 1
        cliques.append(sorted(q))
        # a vertex in two cliques must have no edge left over
        return all(count[x] < 2 or not open_nbrs(x) for x in q)

    def undo(q: List[int]) -> None:
        cliques.pop()
        for x in q:
            count[x] -= 1
        for a, b in combinations(sorted(q), 2):
            uncovered.add((a, b))

    def candidates(u: int, v: int) -> List[List[int]]:
        for x in (u, v):
            if count[x] == 1:
                q = sorted({x, *open_nbrs(x)})
                return [q] if u in q and v in q and valid(q) else []
        common = sorted(set(open_nbrs(u)) & set(open_nbrs(v)))
        out = []
        for r in range(len(common), -1, -1):
            for extra in combinations(common, r):
                q = sorted({u, v, *extra})
                if valid(q):
                    out.append(q)
        return out

    def rec() -> bool:
        if not uncovered:
            return True
        u, v = min(uncovered)
        for q in candidates(u, v):
            ok = place(q)
            if ok and rec():
                return True
            undo(q)
        return False

    return cliques if rec() else None


def line_root_map(g: Graph) -> Optional[Tuple[Graph, Tuple[Edge, ...]]]:
    """
    A root H of g together with the edge of H each vertex of g stands for, or
    None when g is not a line graph. K_3 is rooted at the triangle.
    """
    if g.n > DEFAULT_CONFIG.line_root_cap:
        raise CapabilityError(f"line_root is limited to n <= {DEFAULT_CONFIG.line_root_cap}, got n={g.n}")
    if g.n == 0:
        raise DomainError("the empty graph has no line root")
    if not is_connected(g):
        raise ContractError("line_root needs a connected graph")
    if g.n == 1:
        return Graph.from_edges(2, [(0, 1)]), ((0, 1),)
    if g.n == 3 and is_complete(g):
        return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]), ((0, 1), (0, 2), (1, 2))

    cliques = _krausz_cover(g)
    if cliques is None:
        return None
    homes: List[List[int]] = [[] for _ in range(g.n)]
    for i, q in enumerate(cliques):
        for x in q:
            homes[x].append(i)
    n_h = len(cliques)
    for x in range(g.n):
        if len(homes[x]) == 1:
            homes[x].append(n_h)
            n_h += 1
    mapping = tuple((min(a, b), max(a, b)) for a, b in homes)
    h = Graph.from_edges(n_h, mapping)
    return h, mapping


def line_root(g: Graph) -> Optional[Graph]:
    found = line_root_map(g)
    return None if found is None else found[0]
