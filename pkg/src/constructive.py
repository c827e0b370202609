"""
Constructive colourings for the hereditary classes. Every public colouring
routine certifies its result (proper and distinguishing) before returning and
checks the colour count against the bound it realises.
"""

from __future__ import annotations
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import families
from .config import DEFAULT_CONFIG
from .errors import CapabilityError, CertificationError, ContractError, DomainError, TheoremViolation
from .exact import _capped_search, chromatic_number, distinguishing_edge_colouring
from .extremal import is_cycle, symmetric_instance
from .graph_core import (
    Graph,
    VertexSet,
    bfs_layers,
    clique_number,
    dominating_clique,
    graph6_str,
    has_induced,
    is_chordal,
    is_clique,
    is_complete,
    is_connected,
    is_dominating,
    is_module,
    mask_of,
    max_degree,
    members,
    remove_vertices,
    simplicial_vertices,
    vertex_set,
)
from .line_graphs import line_root_map
from .logging_store import log
from .symmetry import as_colouring, colour_count, find_isomorphism, is_distinguishing, is_proper
from .types import Colouring, ExtremalTag, ModulePartition


def certify(g: Graph, c: Sequence[int], what: str) -> Colouring:
    col = as_colouring(g, c)
    if not is_proper(g, col):
        raise CertificationError(f"{what}: colouring is not proper [graph6={graph6_str(g)}]")
    if not is_distinguishing(g, col):
        raise CertificationError(f"{what}: colouring is not distinguishing [graph6={graph6_str(g)}]")
    return col


def _within(g: Graph, c: Colouring, bound: int, what: str) -> Colouring:
    if colour_count(c) > bound:
        raise TheoremViolation(f"{what} used {colour_count(c)} colours, bound is {bound}", graph6_str(g))
    return c


def _require(g: Graph, ok: bool, message: str) -> None:
    if not ok:
        raise ContractError(f"{message} [graph6={graph6_str(g)}]")


def _fallback(g: Graph, cap: int, what: str) -> Colouring:
    """Certified capped search used when a construction does not certify."""
    if g.n > DEFAULT_CONFIG.oracle_cap:
        raise CapabilityError(f"capped fallback is limited to n <= {DEFAULT_CONFIG.oracle_cap}, got n={g.n}")
    log("Fallback", f"{what}: capped search with {cap} colours on {graph6_str(g)}")
    found = _capped_search(g, cap)
    if found is None:
        raise TheoremViolation(f"{what}: no distinguishing colouring with {cap} colours", graph6_str(g))
    return _within(g, certify(g, found, what), cap, what)


def rainbow(g: Graph) -> Colouring:
    return tuple(range(1, g.n + 1))


def _smallest_absent(forbidden: set, count: int) -> List[int]:
    out = []
    c = 1
    while len(out) < count:
        if c not in forbidden:
            out.append(c)
        c += 1
    return out


# ---------- simplicial extension and chordal graphs ----------

def extend_over_simplicial(g: Graph, s: VertexSet, base: Sequence[int]) -> Colouring:
    """
    Extend `base`, a proper distinguishing colouring of g - s in the labelling
    returned by remove_vertices, over the simplicial set s. Vertices of s with
    equal neighbourhoods outside s form one class; a class gets the smallest
    colours missing from its neighbourhood, one per vertex.
    """
    _require(g, is_connected(g), "extend_over_simplicial needs a connected graph")
    s = frozenset(s)
    _require(g, bool(s) and s == simplicial_vertices(g), "s must be the nonempty simplicial set")
    _require(g, len(s) < g.n, "s covers every vertex; colour complete graphs directly")
    rest, labels = remove_vertices(g, s)
    base = as_colouring(rest, base)
    _require(g, is_distinguishing(rest, base), "base must be a proper distinguishing colouring of g - s")

    col = [0] * g.n
    for i, v in enumerate(labels):
        col[v] = base[i]
    s_mask = mask_of(s)
    classes: Dict[int, List[int]] = {}
    for x in sorted(s):
        classes.setdefault(g.rows[x] & ~s_mask, []).append(x)
    for nbrs, members_ in classes.items():
        forbidden = {col[y] for y in members(nbrs)}
        for x, c in zip(members_, _smallest_absent(forbidden, len(members_))):
            col[x] = c
    return tuple(col)


def colour_chordal(g: Graph) -> Colouring:
    """Repeated simplicial peeling down to a clique; at most Delta+1 colours."""
    _require(g, is_connected(g), "colour_chordal needs a connected graph")
    _require(g, is_chordal(g), "colour_chordal needs a chordal graph")

    def peel(h: Graph) -> Colouring:
        if is_complete(h):
            return rainbow(h)
        s = simplicial_vertices(h)
        rest, _ = remove_vertices(h, s)
        return extend_over_simplicial(h, s, peel(rest))

    c = certify(g, peel(g), "colour_chordal")
    return _within(g, c, max_degree(g) + 1, "colour_chordal")


def colour_symmetric(g: Graph) -> Colouring:
    """
    The explicit Delta+1 colouring of a symmetric graph: the root gets Delta+1,
    its children distinct colours from 1..Delta and every other vertex's
    children distinct colours from 1..Delta minus the parent's colour. In T_B
    the added vertex of a support takes the support's colour.
    """
    if is_complete(g):
        return rainbow(g)
    for kind in (ExtremalTag.SYMMETRIC_TREE, ExtremalTag.SYMMETRIC_A, ExtremalTag.SYMMETRIC_B):
        found = symmetric_instance(g, kind)
        if found is None:
            continue
        delta, height, perm = found
        tree = families.symmetric_tree(delta, height)
        col = [0] * g.n
        col[0] = delta + 1
        parent = {0: None}
        order = [0]
        for v in order:
            kids = [u for u in members(tree.rows[v]) if u not in parent]
            palette = [c for c in range(1, delta + 1) if c != col[v]]
            for u, c in zip(kids, palette):
                parent[u] = v
                col[u] = c
                order.append(u)
        inst = families.symmetric_b(delta, height) if g.n > tree.n else tree
        for extra in range(tree.n, g.n):
            # T_B apex: its neighbours are the leaves of one support
            leaf = members(inst.rows[extra])[0]
            support = parent[leaf]
            col[extra] = col[support] if height > 1 else delta + 2
        out = [0] * g.n
        for v, c in enumerate(col):
            out[perm[v]] = c
        return certify(g, out, "colour_symmetric")
    raise DomainError(f"not a symmetric graph [graph6={graph6_str(g)}]")


# ---------- C4-free graphs ----------

def unique_vertex_check(g: Graph, c: Sequence[int], u: int) -> bool:
    col = as_colouring(g, c)
    d = max_degree(g)
    if col[u] != d + 1:
        return False
    if any(col[w] == d for w in members(g.rows[u])):
        return False
    for v in range(g.n):
        if v != u and col[v] == d + 1:
            if not any(col[w] == d for w in members(g.rows[v])):
                return False
    return True


def _local_start(g: Graph, d: int) -> Optional[Tuple[int, Dict[int, int]]]:
    """
    A vertex u and a distinguishing colouring of G[N[u]] in at most d colours,
    or None when g is regular and every neighbourhood is complete multipartite.
    """
    for u in range(g.n):
        if g.degree(u) < d:
            closed = [u] + members(g.rows[u])
            return u, {v: i + 1 for i, v in enumerate(closed)}
    for u in range(g.n):
        nbrs = members(g.rows[u])
        for v1, v3 in combinations(nbrs, 2):
            if not g.has_edge(v1, v3):
                continue
            for v2 in nbrs:
                if v2 in (v1, v3) or g.has_edge(v1, v2) or g.has_edge(v2, v3):
                    continue
                local = {u: 1}
                nxt = 2
                for v in nbrs:
                    if v == v2:
                        continue
                    local[v] = nxt
                    nxt += 1
                local[v2] = local[v1]
                return u, local
    return None


def _extend_layer(g: Graph, col: List[int], prev: VertexSet, layer: VertexSet) -> None:
    """Colour `layer` given a coloured graph on everything closer to the start."""
    prev_mask = mask_of(prev)
    groups: Dict[int, List[int]] = {}
    for m in sorted(layer):
        groups.setdefault(g.rows[m] & prev_mask, []).append(m)
    classes = sorted(groups.items(), key=lambda kv: (bin(kv[0]).count("1"), kv[1][0]))

    earlier = 0
    second: List[int] = []
    for nbrs, group in classes:
        first = [m for m in group if not g.rows[m] & earlier]
        second.extend(m for m in group if g.rows[m] & earlier)
        forbidden = {col[y] for y in members(nbrs)}
        for m, c in zip(first, _smallest_absent(forbidden, len(first))):
            col[m] = c
        earlier |= mask_of(group)
    for m in sorted(second):
        used = {col[y] for y in members(g.rows[m]) if col[y]}
        col[m] = _smallest_absent(used, 1)[0]


def colour_c4_free(g: Graph) -> Colouring:
    """
    Distinguishing colouring of a connected C4-free graph with at most Delta+1
    colours (Delta+2 for C_6). Starts from a vertex whose closed neighbourhood
    can be distinguished with Delta colours and grows outwards one BFS layer at
    a time, keeping the start vertex the only Delta+1 vertex without a
    Delta-coloured neighbour.
    """
    _require(g, g.n >= 2, "colour_c4_free needs at least two vertices")
    _require(g, is_connected(g), "colour_c4_free needs a connected graph")
    _require(g, not has_induced(g, "C4"), "colour_c4_free needs a C4-free graph")
    d = max_degree(g)
    if is_complete(g):
        return certify(g, rainbow(g), "colour_c4_free")

    start = _local_start(g, d)
    if start is None:
        # regular, triangle-free, girth >= 5
        return _fallback(g, d + 2 if is_cycle(g, 6) else d + 1, "colour_c4_free")

    u, local = start
    col = [0] * g.n
    rename: Dict[int, int] = {}
    for v in [u] + members(g.rows[u]):
        c = local[v]
        if v == u:
            col[v] = d + 1
        else:
            col[v] = rename.setdefault(c, len(rename) + 1)
    layers = bfs_layers(g, u)
    for i in range(2, len(layers)):
        _extend_layer(g, col, layers[i - 1], layers[i])
    if colour_count(col) > d + 1 or not is_distinguishing(g, col):
        return _fallback(g, d + 1, "colour_c4_free")
    return certify(g, col, "colour_c4_free")


# ---------- 2K2-free graphs ----------

def _n_minus_one_scheme(g: Graph, w: int, clique: VertexSet) -> Optional[Colouring]:
    """Two non-adjacent vertices share a colour, all others distinct."""
    prefer = [
        (v, x)
        for v in members(g.rows[w] & ~mask_of(clique))
        for x in sorted(clique)
        if x != w and not g.has_edge(v, x)
    ]
    rest = [(a, b) for a in range(g.n) for b in range(a + 1, g.n) if not g.has_edge(a, b)]
    for a, b in prefer + rest:
        lo, hi = min(a, b), max(a, b)
        col = [0] * g.n
        nxt = 1
        for v in range(g.n):
            if v == hi:
                col[v] = col[lo]
            else:
                col[v] = nxt
                nxt += 1
        if is_distinguishing(g, col):
            return tuple(col)
    return None


def colour_2k2_free(g: Graph) -> Colouring:
    _require(g, is_connected(g), "colour_2k2_free needs a connected graph")
    _require(g, not has_induced(g, "2K2"), "colour_2k2_free needs a 2K2-free graph")
    omega = clique_number(g)
    _require(g, omega >= 3, "colour_2k2_free needs omega >= 3")
    _require(g, not is_complete(g), "colour_2k2_free excludes complete graphs")
    d = max_degree(g)
    bound = 2 * d - omega + 2
    top = bound - 1

    clique = dominating_clique(g)
    if clique is None:
        raise TheoremViolation("no dominating omega-clique", graph6_str(g))
    w = max(sorted(clique), key=lambda v: (g.degree(v), -v))
    col = [0] * g.n
    col[w] = top
    for i, v in enumerate(members(g.rows[w])):
        col[v] = i + 1
    closed_w = g.rows[w] | (1 << w)
    outside = [v for v in range(g.n) if not (closed_w >> v) & 1]
    done: List[int] = []
    for v in outside:
        forbidden = {col[y] for y in members(g.rows[v]) if col[y]}
        trace = g.rows[v] & closed_w
        forbidden |= {
            col[x] for x in done if not g.has_edge(v, x) and g.rows[x] & closed_w == trace
        }
        col[v] = _smallest_absent(forbidden, 1)[0]
        done.append(v)

    dw = g.degree(w)
    needed = set(range(1, dw + 1))
    exceptional = any(
        col[v] == top and g.degree(v) == dw and needed <= {col[y] for y in members(g.rows[v])}
        for v in outside
    )
    if not exceptional and colour_count(col) <= bound and is_distinguishing(g, col):
        return certify(g, col, "colour_2k2_free")
    repaired = _n_minus_one_scheme(g, w, clique)
    if repaired is not None and colour_count(repaired) <= bound:
        return certify(g, repaired, "colour_2k2_free")
    return _fallback(g, bound, "colour_2k2_free")


# ---------- claw-free graphs ----------

def module_partition(g: Graph) -> ModulePartition:
    """
    A partition of V(g) into the largest number of non-complete dominating
    modules; the empty partition for complete graphs.
    """
    _require(g, is_connected(g), "module_partition needs a connected graph")
    cap = DEFAULT_CONFIG.oracle_cap
    if g.n > cap:
        raise CapabilityError(f"module_partition is limited to n <= {cap}, got n={g.n}")
    if is_complete(g):
        return ModulePartition(parts=())

    candidates = [
        m for m in range(1, 1 << g.n)
        if not is_clique(g, members(m)) and is_module(g, members(m)) and is_dominating(g, members(m))
    ]
    memo: Dict[int, Optional[Tuple[int, ...]]] = {0: ()}

    def best(left: int) -> Optional[Tuple[int, ...]]:
        if left in memo:
            return memo[left]
        low = left & -left
        result: Optional[Tuple[int, ...]] = None
        for m in candidates:
            if m & low and m & ~left == 0:
                tail = best(left & ~m)
                if tail is not None and (result is None or len(tail) + 1 > len(result)):
                    result = (m,) + tail
        memo[left] = result
        return result

    parts = best(g.full_mask)
    assert parts is not None  # V(g) itself is always a candidate
    ordered = sorted((vertex_set(m) for m in parts), key=min)
    return ModulePartition(parts=tuple(ordered))


def is_claw_free_exception(g: Graph) -> bool:
    if is_cycle(g, 6):
        return True
    if g.n == 9 and g.edge_count == 18:
        return find_isomorphism(g, families.fig_lk13()) is not None
    return False


def colour_claw_free(g: Graph) -> Colouring:
    """
    Colour every part of a maximum module partition with at most chi(part)+1
    colours by capped search, each part on its own colour range.
    """
    _require(g, is_connected(g), "colour_claw_free needs a connected graph")
    _require(g, not has_induced(g, "claw"), "colour_claw_free needs a claw-free graph")
    if is_claw_free_exception(g):
        raise DomainError(
            f"C_6 and the 9-vertex exception exceed chi+p; use the exact oracle [graph6={graph6_str(g)}]"
        )
    if is_complete(g):
        return certify(g, rainbow(g), "colour_claw_free")

    partition = module_partition(g)
    col = [0] * g.n
    offset = 0
    for part in partition.parts:
        sub, labels = remove_vertices(g, set(range(g.n)) - part)
        chi_i = chromatic_number(sub)
        local = _capped_search(sub, chi_i + 1)
        if local is None:
            raise TheoremViolation(
                f"part {sorted(part)} has no distinguishing colouring with chi+1={chi_i + 1} colours",
                graph6_str(g),
            )
        for i, v in enumerate(labels):
            col[v] = local[i] + offset
        offset += colour_count(local)
    bound = chromatic_number(g) + partition.p
    if colour_count(col) > bound or not is_distinguishing(g, col):
        return _fallback(g, bound, "colour_claw_free")
    return certify(g, col, "colour_claw_free")


# ---------- (claw, diamond)-free graphs ----------

def colour_claw_diamond_free(g: Graph) -> Colouring:
    """
    Transport an optimal distinguishing edge colouring of the line root back to
    the vertices of g.
    """
    _require(g, is_connected(g), "colour_claw_diamond_free needs a connected graph")
    _require(g, not has_induced(g, "claw"), "colour_claw_diamond_free needs a claw-free graph")
    _require(g, not has_induced(g, "diamond"), "colour_claw_diamond_free needs a diamond-free graph")
    if is_cycle(g, 4) or is_cycle(g, 6):
        raise DomainError(f"C_4 and C_6 exceed Delta+1; use the exact oracle [graph6={graph6_str(g)}]")
    if g.n == 1:
        return (1,)
    found = line_root_map(g)
    if found is None:
        raise CertificationError(f"no line root for a (claw, diamond)-free graph [graph6={graph6_str(g)}]")
    root, mapping = found
    edge_colours = distinguishing_edge_colouring(root)
    index = {e: i for i, e in enumerate(root.edges())}
    col = [edge_colours[index[e]] for e in mapping]
    c = certify(g, col, "colour_claw_diamond_free")
    return _within(g, c, max_degree(g) + 1, "colour_claw_diamond_free")
