"""
Colour-preserving automorphisms, fixed vertices and canonical forms.

Everything runs on one search: equitable colour refinement seeded by the
vertex colouring, then individualisation of a vertex in the smallest
non-singleton cell, branching over every vertex of the matching cell.
"""

from __future__ import annotations
from collections import Counter
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .config import DEFAULT_CONFIG
from .errors import CapabilityError, ContractError
from .graph_core import Graph, VertexSet, members, write_graph6
from .types import AutomorphismReport, CancelToken, Colouring, Permutation, checkpoint

ColouringLike = Union[Sequence[int], Mapping[int, int]]


# ---------- colourings ----------

def as_colouring(g: Graph, c: ColouringLike) -> Colouring:
    """Validate a total colouring with positive integer colours."""
    if isinstance(c, Mapping):
        missing = [v for v in range(g.n) if v not in c]
        if missing:
            raise ContractError(f"partial colouring: no colour for vertices {missing}")
        extra = [v for v in c if not (isinstance(v, int) and 0 <= v < g.n)]
        if extra:
            raise ContractError(f"colouring names vertices outside 0..{g.n - 1}: {extra}")
        seq = [c[v] for v in range(g.n)]
    else:
        seq = list(c)
        if len(seq) != g.n:
            raise ContractError(f"partial colouring: {len(seq)} colours for {g.n} vertices")
    for v, col in enumerate(seq):
        if not isinstance(col, int) or isinstance(col, bool) or col < 1:
            raise ContractError(f"colour of vertex {v} must be a positive integer, got {col!r}")
    return tuple(seq)


def is_proper(g: Graph, c: ColouringLike) -> bool:
    col = as_colouring(g, c)
    return all(col[u] != col[v] for u, v in g.edges())


def colour_count(c: Sequence[int]) -> int:
    return len(set(c))


def normalise(c: Sequence[int]) -> Colouring:
    """Rename colours to 1..k in order of first appearance."""
    names: Dict[int, int] = {}
    return tuple(names.setdefault(x, len(names) + 1) for x in c)


# ---------- refinement ----------

def _joint_refine(graphs: Sequence[Graph], colours: Sequence[Sequence[int]]) -> Optional[List[List[int]]]:
    """
    Refine colourings of several graphs with one shared palette. Returns None
    as soon as the colour histograms disagree (no isomorphism can exist).
    """
    cols = [list(c) for c in colours]
    prev = -1
    while True:
        sigs = []
        for g, col in zip(graphs, cols):
            sigs.append([
                (col[v], tuple(sorted(col[u] for u in members(g.rows[v]))))
                for v in range(g.n)
            ])
        palette = {s: i for i, s in enumerate(sorted({s for sg in sigs for s in sg}))}
        new = [[palette[s] for s in sg] for sg in sigs]
        if len(new) > 1:
            hist = Counter(new[0])
            if any(Counter(x) != hist for x in new[1:]):
                return None
        if len(palette) == prev:
            return new
        prev = len(palette)
        cols = new


def _refine(g: Graph, colours: Sequence[int]) -> List[int]:
    return _joint_refine([g], [colours])[0]


def _target_cell(cols: Sequence[int]) -> Optional[int]:
    """Colour of the smallest non-singleton cell (ties: smallest colour), or None if discrete."""
    counts = Counter(cols)
    options = [(cnt, col) for col, cnt in counts.items() if cnt > 1]
    if not options:
        return None
    return min(options)[1]


def _is_isomorphism(g: Graph, h: Graph, perm: Sequence[int]) -> bool:
    for v in range(g.n):
        image = 0
        for u in members(g.rows[v]):
            image |= 1 << perm[u]
        if image != h.rows[perm[v]]:
            return False
    return True


def _search(
    g: Graph,
    h: Graph,
    cg: Sequence[int],
    ch: Sequence[int],
    first_only: bool,
    cancel: Optional[CancelToken] = None,
) -> List[Permutation]:
    """All (or the first) colour-preserving isomorphisms g -> h."""
    found: List[Permutation] = []

    def recurse(cg: Sequence[int], ch: Sequence[int]) -> bool:
        checkpoint(cancel)
        ref = _joint_refine([g, h], [cg, ch])
        if ref is None:
            return False
        cg, ch = ref
        cell = _target_cell(cg)
        if cell is None:
            where = {col: w for w, col in enumerate(ch)}
            perm = tuple(where[cg[v]] for v in range(g.n))
            if _is_isomorphism(g, h, perm):
                found.append(perm)
                return first_only
            return False
        v = min(u for u in range(g.n) if cg[u] == cell)
        fresh = len(cg)
        for w in [u for u in range(h.n) if ch[u] == cell]:
            cg2 = list(cg)
            ch2 = list(ch)
            cg2[v] = fresh
            ch2[w] = fresh
            if recurse(cg2, ch2):
                return True
        return False

    if g.n != h.n:
        return []
    recurse(list(cg), list(ch))
    return found


def _initial(g: Graph, c: Optional[ColouringLike]) -> List[int]:
    return [1] * g.n if c is None else list(as_colouring(g, c))


# ---------- automorphisms ----------

def automorphisms(
    g: Graph,
    c: Optional[ColouringLike] = None,
    cancel: Optional[CancelToken] = None,
) -> AutomorphismReport:
    """The full list of colour-preserving automorphisms; c=None gives Aut(g)."""
    cap = DEFAULT_CONFIG.automorphism_cap
    if g.n > cap:
        raise CapabilityError(f"automorphism listing is limited to n <= {cap}, got n={g.n}")
    init = _initial(g, c)
    elems = _search(g, g, init, init, first_only=False, cancel=cancel)
    identity = tuple(range(g.n))
    elems = sorted(elems, key=lambda p: (p != identity, p))
    fixed = frozenset(v for v in range(g.n) if all(p[v] == v for p in elems))
    return AutomorphismReport(elements=tuple(elems), fixed=fixed, order=len(elems))


def orbits(g: Graph, c: Optional[ColouringLike] = None) -> List[VertexSet]:
    """Orbit partition of Aut(g, c), orbits ordered by smallest member."""
    report = automorphisms(g, c)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in report.elements:
        for v, w in enumerate(p):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: Dict[int, List[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return [frozenset(vs) for _, vs in sorted(groups.items())]


def fixed_vertices(g: Graph, c: ColouringLike) -> VertexSet:
    return frozenset(next(iter(o)) for o in orbits(g, c) if len(o) == 1)


def has_nontrivial_automorphism(
    g: Graph,
    colours: Sequence[int],
    cancel: Optional[CancelToken] = None,
) -> bool:
    """
    True iff some non-identity automorphism preserves `colours` (any ints,
    proper or not). No size cap: the search stops at the first witness.
    """

    def recurse(cols: List[int]) -> bool:
        checkpoint(cancel)
        cols = _refine(g, cols)
        cell = _target_cell(cols)
        if cell is None:
            return False
        v = min(u for u in range(g.n) if cols[u] == cell)
        fresh = len(cols)
        left = list(cols)
        left[v] = fresh
        for w in range(g.n):
            if w != v and cols[w] == cell:
                right = list(cols)
                right[w] = fresh
                if _search(g, g, left, right, first_only=True, cancel=cancel):
                    return True
        # every automorphism fixes v
        return recurse(left)

    return recurse(list(colours))


def is_distinguishing(g: Graph, c: ColouringLike, cancel: Optional[CancelToken] = None) -> bool:
    col = as_colouring(g, c)
    if not is_proper(g, col):
        return False
    return not has_nontrivial_automorphism(g, col, cancel=cancel)


def find_isomorphism(
    g: Graph,
    h: Graph,
    cg: Optional[ColouringLike] = None,
    ch: Optional[ColouringLike] = None,
) -> Optional[Permutation]:
    """A bijection p with uv in E(g) iff p[u]p[v] in E(h) (colours respected), or None."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    found = _search(g, h, _initial(g, cg), _initial(h, ch), first_only=True)
    return found[0] if found else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


# ---------- canonical form ----------

def canonical_form(g: Graph, cancel: Optional[CancelToken] = None) -> bytes:
    """
    Minimum graph6 string over the leaves of the refinement tree, i.e. over the
    relabellings that order vertices by their discrete refined colours. This is
    generally not the minimum over all n! relabellings, but the set of leaves
    depends only on the isomorphism class, so two graphs share a form iff they
    are isomorphic. Subtrees that an automorphism found so far maps onto an
    explored sibling are skipped.
    """
    cap = DEFAULT_CONFIG.canonical_cap
    if g.n > cap:
        raise CapabilityError(f"canonical_form is limited to n <= {cap}, got n={g.n}")
    best: List[Optional[bytes]] = [None]
    first_leaf: Dict[bytes, Tuple[int, ...]] = {}
    autos: List[Tuple[int, ...]] = []

    def orbit_rep(path: Sequence[int]) -> List[int]:
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in autos:
            if all(a[p] == p for p in path):
                for v, w in enumerate(a):
                    x, y = find(v), find(w)
                    if x != y:
                        parent[max(x, y)] = min(x, y)
        return [find(v) for v in range(g.n)]

    def recurse(cols: List[int], path: List[int]) -> None:
        checkpoint(cancel)
        cols = _refine(g, cols)
        cell = _target_cell(cols)
        if cell is None:
            rank = {col: i for i, col in enumerate(sorted(cols))}
            perm = tuple(rank[cols[v]] for v in range(g.n))
            code = write_graph6(g.relabel(perm))
            if code in first_leaf:
                prev = first_leaf[code]
                inverse = [0] * g.n
                for v, r in enumerate(perm):
                    inverse[r] = v
                autos.append(tuple(inverse[prev[v]] for v in range(g.n)))
            else:
                first_leaf[code] = perm
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        fresh = len(cols)
        tried: List[int] = []
        for w in [u for u in range(g.n) if cols[u] == cell]:
            reps = orbit_rep(path)
            if any(reps[t] == reps[w] for t in tried):
                continue
            tried.append(w)
            nxt = list(cols)
            nxt[w] = fresh
            recurse(nxt, path + [w])

    recurse([g.degree(v) for v in range(g.n)], [])
    if best[0] is None:
        return write_graph6(g)
    return best[0]
