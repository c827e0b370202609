"""
Exhaustive oracles: chromatic number, distinguishing chromatic number, the
capped feasibility search and the distinguishing chromatic index.

Colourings are searched as set partitions into independent sets written as
restricted growth strings (class of vertex v is at most 1 + the largest class
used before v), so every partition is met once and classes are ordered by
their smallest vertex.
"""

from __future__ import annotations
from typing import Iterator, List, Optional, Tuple

from .config import DEFAULT_CONFIG
from .errors import CapabilityError, ContractError, DomainError
from .extremal import classify_extremal
from .graph_core import (
    Graph,
    clique_number,
    independence_number,
    is_connected,
    max_degree,
    members,
)
from .line_graphs import line_graph
from .symmetry import has_nontrivial_automorphism
from .types import CancelToken, Colouring, SolveResult, checkpoint


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapabilityError(f"{what} is limited to {cap}, got {n}")


def _require_connected(g: Graph, op: str) -> None:
    if not is_connected(g):
        raise ContractError(f"{op} needs a connected graph")


# ---------- chromatic number ----------

def _greedy_upper(g: Graph, order: List[int]) -> int:
    col = [0] * g.n
    for v in order:
        used = {col[u] for u in members(g.rows[v]) if col[u]}
        c = 1
        while c in used:
            c += 1
        col[v] = c
    return max(col, default=0)


def _colour_with(g: Graph, k: int, order: List[int], cancel: Optional[CancelToken]) -> Optional[List[int]]:
    col = [0] * g.n

    def rec(i: int, top: int) -> bool:
        checkpoint(cancel)
        if i == len(order):
            return True
        v = order[i]
        used = {col[u] for u in members(g.rows[v]) if col[u]}
        for c in range(1, min(top + 1, k) + 1):
            if c not in used:
                col[v] = c
                if rec(i + 1, max(top, c)):
                    return True
        col[v] = 0
        return False

    return col if rec(0, 0) else None


def optimal_colouring(g: Graph, cancel: Optional[CancelToken] = None) -> Colouring:
    """A proper colouring with chi(g) colours 1..chi."""
    _check_cap(g.n, DEFAULT_CONFIG.chromatic_cap, "chromatic search (n)")
    if g.n == 0:
        return ()
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    upper = _greedy_upper(g, order)
    for k in range(max(1, clique_number(g)), upper + 1):
        col = _colour_with(g, k, order, cancel)
        if col is not None:
            return tuple(col)
    raise AssertionError("greedy bound not reached")  # unreachable


def chromatic_number(g: Graph, cancel: Optional[CancelToken] = None) -> int:
    return len(set(optimal_colouring(g, cancel)))


# ---------- partitions into independent sets ----------

def independent_partitions(g: Graph, k: int, cancel: Optional[CancelToken] = None) -> Iterator[Colouring]:
    """Every partition of V(g) into exactly k independent sets, as colourings 1..k."""
    n = g.n
    assign = [0] * n
    classes = [0] * k

    def rec(v: int, used: int) -> Iterator[Colouring]:
        checkpoint(cancel)
        if v == n:
            if used == k:
                yield tuple(a + 1 for a in assign)
            return
        if k - used > n - v:
            return
        for j in range(used):
            if not g.rows[v] & classes[j]:
                assign[v] = j
                classes[j] |= 1 << v
                yield from rec(v + 1, used)
                classes[j] &= ~(1 << v)
        if used < k:
            assign[v] = used
            classes[used] = 1 << v
            yield from rec(v + 1, used + 1)
            classes[used] = 0

    if k >= 0:
        yield from rec(0, 0)


def _first_distinguishing(g: Graph, k: int, cancel: Optional[CancelToken]) -> Optional[Colouring]:
    for c in independent_partitions(g, k, cancel):
        if not has_nontrivial_automorphism(g, c, cancel=cancel):
            return c
    return None


def _capped_search(g: Graph, cap: int, cancel: Optional[CancelToken] = None) -> Optional[Colouring]:
    """Capped search without the connectivity precondition; used on module parts."""
    _check_cap(g.n, DEFAULT_CONFIG.oracle_cap, "distinguishing search (n)")
    if g.n == 0:
        return ()
    chi = chromatic_number(g, cancel)
    for k in range(chi, min(cap, g.n) + 1):
        c = _first_distinguishing(g, k, cancel)
        if c is not None:
            return c
    return None


# ---------- distinguishing chromatic number ----------

def distinguishing_chromatic_number(g: Graph, cancel: Optional[CancelToken] = None) -> SolveResult:
    _require_connected(g, "distinguishing_chromatic_number")
    _check_cap(g.n, DEFAULT_CONFIG.oracle_cap, "distinguishing_chromatic_number (n)")
    chi = chromatic_number(g, cancel)
    witness: Colouring = ()
    chi_d = 0
    for k in range(chi, g.n + 1):
        c = _first_distinguishing(g, k, cancel)
        if c is not None:
            witness, chi_d = c, k
            break
    return SolveResult(
        n=g.n,
        chi=chi,
        chi_D=chi_d,
        omega=clique_number(g),
        alpha=independence_number(g),
        delta=max_degree(g),
        witness=witness,
        extremal=classify_extremal(g),
    )


def distinguishing_chromatic_capped(
    g: Graph, cap: int, cancel: Optional[CancelToken] = None
) -> Optional[Colouring]:
    """A proper distinguishing colouring with at most `cap` colours, or None."""
    _require_connected(g, "distinguishing_chromatic_capped")
    return _capped_search(g, cap, cancel)


# ---------- distinguishing chromatic index ----------

def _subdivision_colours(h: Graph, edge_colours: Colouring) -> Tuple[Graph, List[int]]:
    """
    Subdivide every edge; original vertices get colour 1 and the vertex on edge
    e gets c(e)+1, so colour-preserving automorphisms of the result are exactly
    the automorphisms of h that preserve the edge colouring.
    """
    edges = h.edges()
    sub_edges = []
    for i, (u, v) in enumerate(edges):
        sub_edges.append((u, h.n + i))
        sub_edges.append((v, h.n + i))
    sub = Graph.from_edges(h.n + len(edges), sub_edges)
    colours = [1] * h.n + [c + 1 for c in edge_colours]
    return sub, colours


def distinguishing_edge_colouring(h: Graph, cancel: Optional[CancelToken] = None) -> Colouring:
    """
    An optimal distinguishing proper edge colouring of h, indexed like h.edges().
    """
    _require_connected(h, "distinguishing_edge_colouring")
    if h.n == 2 and h.edge_count == 1:
        raise DomainError("the distinguishing chromatic index is undefined for K_2")
    m = h.edge_count
    _check_cap(m, DEFAULT_CONFIG.edge_index_cap, "distinguishing chromatic index (|E|)")
    if m == 0:
        return ()
    conflict = line_graph(h)
    for k in range(max(max_degree(h), 1), m + 1):
        for c in independent_partitions(conflict, k, cancel):
            sub, colours = _subdivision_colours(h, c)
            if not has_nontrivial_automorphism(sub, colours, cancel=cancel):
                return c
    raise AssertionError("rainbow edge colouring is always distinguishing")  # unreachable


def distinguishing_chromatic_index(h: Graph, cancel: Optional[CancelToken] = None) -> int:
    return len(set(distinguishing_edge_colouring(h, cancel)))
