"""
Immutable simple graphs on vertices 0..n-1 and the structural predicates the
colouring algorithms consume.

Adjacency is stored as one integer bitmask per vertex (n <= 64, so a row fits a
machine word); VertexSet values handed to callers are frozensets.
"""

from __future__ import annotations
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import CapabilityError, ContractError, Graph6ParseError, TheoremViolation
from .types import ClassProfile

VertexSet = FrozenSet[int]

MAX_VERTICES = 64
GRAPH6_HEADER = b">>graph6<<"
_SIX_BIT_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)

PATTERNS = ("C3", "C4", "C5", "C6", "2K2", "claw", "diamond", "K4")


# ---------- bitmask helpers ----------

def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def members(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def vertex_set(mask: int) -> VertexSet:
    return frozenset(members(mask))


# ---------- the graph type ----------

@dataclass(frozen=True)
class Graph:
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ContractError(f"vertex count must be non-negative, got {self.n}")
        if self.n > MAX_VERTICES:
            raise CapabilityError(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        if len(self.rows) != self.n:
            raise ContractError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ContractError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ContractError(f"loop at vertex {v}")
            for u in members(row):
                if not (self.rows[u] >> v) & 1:
                    raise ContractError(f"asymmetric adjacency between {v} and {u}")

    # ---- constructors ----
    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple([0] * n))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ContractError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # ---- queries ----
    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbours(self, v: int) -> VertexSet:
        return vertex_set(self.rows[v])

    def closed_neighbours(self, v: int) -> VertexSet:
        return vertex_set(self.rows[v] | (1 << v))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(popcount(r) for r in self.rows)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in members(self.rows[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    # ---- derived graphs ----
    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to 0..k-1 in ascending order of the kept vertices."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        keep_mask = mask_of(keep)
        rows = []
        for v in keep:
            rows.append(mask_of(index[u] for u in members(self.rows[v] & keep_mask)))
        return Graph(len(keep), tuple(rows))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex v is called perm[v]."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            rows[perm[v]] = mask_of(perm[u] for u in members(row))
        return Graph(self.n, tuple(rows))

    def to_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            mat[u, v] = mat[v, u] = 1
        return mat

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count}, edges={self.edges()})"


# ---------- graph6 ----------

def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def _decode_size(data: bytes) -> Tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6ParseError("truncated 8-byte size field", offset=len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6ParseError("truncated 4-byte size field", offset=len(data))
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    return n, 4


def parse_graph6(text) -> Graph:
    """
    Decode one graph6 line (str or bytes). An optional ">>graph6<<" header and
    surrounding whitespace are ignored. Offsets in errors count from the first
    byte after the header.
    """
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6ParseError("non-ASCII character in graph6 input", offset=e.start)
    else:
        data = bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise Graph6ParseError("empty graph6 string", offset=0)
    for i, b in enumerate(data):
        if b < 63 or b > 126:
            raise Graph6ParseError(f"byte {b} outside the printable range [63,126]", offset=i)

    n, start = _decode_size(data)
    if n > MAX_VERTICES:
        raise CapabilityError(f"graph6 input has {n} vertices; at most {MAX_VERTICES} are supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start:]
    if len(body) != need:
        raise Graph6ParseError(
            f"length field says n={n} ({need} edge bytes) but {len(body)} follow",
            offset=start + min(len(body), need),
        )
    vals = np.frombuffer(body, dtype=np.uint8).astype(np.int64) - 63
    bits = ((vals[:, None] >> np.arange(5, -1, -1)) & 1).reshape(-1)
    if bits[nbits:].any():
        raise Graph6ParseError("padding bits are not zero", offset=start + need - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> bytes:
    """graph6 bytes of g under its current labelling (no header, no newline)."""
    if g.n > MAX_VERTICES:
        raise CapabilityError(f"graph6 output is limited to {MAX_VERTICES} vertices")
    nbits = g.n * (g.n - 1) // 2
    bits = np.fromiter(
        ((g.rows[i] >> j) & 1 for j in range(1, g.n) for i in range(j)),
        dtype=np.uint8,
        count=nbits,
    )
    pad = (-nbits) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6) @ _SIX_BIT_WEIGHTS + 63
    return _encode_size(g.n) + bytes(groups.astype(np.uint8).tolist())


def graph6_str(g: Graph) -> str:
    return write_graph6(g).decode("ascii")


# ---------- basic invariants ----------

def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def connected_components(g: Graph) -> List[VertexSet]:
    seen = 0
    comps = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(vertex_set(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    m = mask_of(vs)
    return all((m & ~(1 << v)) & ~g.rows[v] == 0 for v in members(m))


def is_independent(g: Graph, vs: Iterable[int]) -> bool:
    m = mask_of(vs)
    return all(g.rows[v] & m == 0 for v in members(m))


def is_dominating(g: Graph, vs: Iterable[int]) -> bool:
    m = mask_of(vs)
    covered = m
    for v in members(m):
        covered |= g.rows[v]
    return covered == g.full_mask


def is_complete(g: Graph) -> bool:
    return all(popcount(r) == g.n - 1 for r in g.rows)


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) <= 1


def is_complete_multipartite(g: Graph) -> bool:
    """Non-adjacency is an equivalence relation: non-adjacent vertices are twins."""
    for u in range(g.n):
        non_nbrs = g.full_mask & ~g.rows[u] & ~(1 << u)
        for v in members(non_nbrs):
            if g.rows[v] != g.rows[u]:
                return False
    return True


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in members(g.rows[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


# ---------- cliques ----------

def _greedy_colour_bound(rows: Sequence[int], cand: int) -> int:
    count = 0
    while cand:
        count += 1
        q = cand
        while q:
            v = lowest(q)
            cand &= ~(1 << v)
            q &= ~rows[v] & ~(1 << v)
    return count


def maximum_clique(g: Graph) -> VertexSet:
    """Branch and bound with a greedy-colouring bound on the candidate set."""
    best = [0]
    best_size = [0]

    def expand(clique: int, size: int, cand: int) -> None:
        if size > best_size[0]:
            best[0], best_size[0] = clique, size
        if not cand:
            return
        if size + _greedy_colour_bound(g.rows, cand) <= best_size[0]:
            return
        while cand:
            if size + popcount(cand) <= best_size[0]:
                return
            v = lowest(cand)
            expand(clique | (1 << v), size + 1, cand & g.rows[v])
            cand &= ~(1 << v)

    expand(0, 0, g.full_mask)
    return vertex_set(best[0])


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


def cliques_of_size(g: Graph, k: int) -> List[Tuple[int, ...]]:
    """All k-cliques as ascending tuples, in ascending lexicographic order."""
    out: List[Tuple[int, ...]] = []

    def grow(chosen: List[int], cand: int) -> None:
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        if len(chosen) + popcount(cand) < k:
            return
        for v in members(cand):
            chosen.append(v)
            grow(chosen, cand & g.rows[v] & ~((2 << v) - 1))
            chosen.pop()

    if k == 0:
        return [()]
    grow([], g.full_mask)
    return out


def maximal_cliques(g: Graph) -> List[VertexSet]:
    """Bron-Kerbosch with pivoting."""
    out: List[VertexSet] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(vertex_set(r))
            return
        pivot = max(members(p | x), key=lambda u: popcount(p & g.rows[u]))
        for v in members(p & ~g.rows[pivot]):
            bk(r | (1 << v), p & g.rows[v], x & g.rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        bk(0, g.full_mask, 0)
    return out


# ---------- induced patterns ----------

def _has_triangle(g: Graph) -> bool:
    return any(g.rows[u] & g.rows[v] for u, v in g.edges())


def _has_k4(g: Graph) -> bool:
    for u, v in g.edges():
        common = g.rows[u] & g.rows[v]
        if any(g.rows[w] & common for w in members(common)):
            return True
    return False


def _has_claw(g: Graph) -> bool:
    for c in range(g.n):
        nbrs = g.rows[c]
        for a in members(nbrs):
            for b in members(nbrs & ~g.rows[a] & ~((2 << a) - 1)):
                if nbrs & ~g.rows[a] & ~g.rows[b] & ~(1 << a) & ~(1 << b):
                    return True
    return False


def _has_diamond(g: Graph) -> bool:
    # two non-adjacent vertices with an edge among their common neighbours
    for a in range(g.n):
        for b in members(g.full_mask & ~g.rows[a] & ~((2 << a) - 1)):
            common = g.rows[a] & g.rows[b]
            if any(g.rows[w] & common for w in members(common)):
                return True
    return False


def _has_2k2(g: Graph) -> bool:
    for u, v in g.edges():
        rest = g.full_mask & ~(g.rows[u] | g.rows[v] | (1 << u) | (1 << v))
        if any(g.rows[w] & rest for w in members(rest)):
            return True
    return False


def _has_induced_cycle(g: Graph, k: int) -> bool:
    """Induced C_k (k >= 4), grown as an induced path from its smallest vertex."""
    rows = g.rows
    for start in range(g.n):
        higher = g.full_mask & ~((2 << start) - 1)

        def grow(path: List[int], inner: int) -> bool:
            last = path[-1]
            j = len(path)
            cand = rows[last] & higher & ~inner
            if j == k - 1:
                return bool(cand & rows[start])
            if j >= 2:
                cand &= ~rows[start]
                inner = inner | rows[last] | (1 << last)
            for v in members(cand):
                path.append(v)
                if grow(path, inner):
                    return True
                path.pop()
            return False

        if grow([start], 0):
            return True
    return False


_PATTERN_TESTS: Dict[str, Callable[[Graph], bool]] = {
    "C3": _has_triangle,
    "C4": lambda g: _has_induced_cycle(g, 4),
    "C5": lambda g: _has_induced_cycle(g, 5),
    "C6": lambda g: _has_induced_cycle(g, 6),
    "2K2": _has_2k2,
    "claw": _has_claw,
    "diamond": _has_diamond,
    "K4": _has_k4,
}


def has_induced(g: Graph, pattern: str) -> bool:
    try:
        test = _PATTERN_TESTS[pattern]
    except KeyError:
        raise ContractError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")
    return test(g)


def has_induced_cycle(g: Graph, k: int) -> bool:
    if k == 3:
        return _has_triangle(g)
    if k < 3:
        raise ContractError(f"cycle length must be at least 3, got {k}")
    return _has_induced_cycle(g, k)


# ---------- chordality ----------

def perfect_elimination_ordering(g: Graph) -> Optional[List[int]]:
    """Maximum cardinality search; returns a PEO or None when g is not chordal."""
    weight = [0] * g.n
    numbered = 0
    visit = []
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if not (numbered >> u) & 1),
            key=lambda u: (weight[u], -u),
        )
        visit.append(v)
        numbered |= 1 << v
        for u in members(g.rows[v] & ~numbered):
            weight[u] += 1
    peo = visit[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in members(g.rows[v]) if pos[u] > pos[v]]
        if later:
            p = min(later, key=pos.__getitem__)
            rest = mask_of(later) & ~(1 << p)
            if rest & ~g.rows[p]:
                return None
    return peo


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


# ---------- simplicial vertices, modules, domination ----------

def is_simplicial(g: Graph, v: int) -> bool:
    nbrs = g.rows[v]
    return all((nbrs & ~(1 << u)) & ~g.rows[u] == 0 for u in members(nbrs))


def simplicial_vertices(g: Graph) -> VertexSet:
    return frozenset(v for v in range(g.n) if is_simplicial(g, v))


def remove_vertices(g: Graph, s: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """
    G - S relabelled to 0..n-|S|-1; the second value maps each new label to
    its original vertex.
    """
    s_mask = mask_of(s)
    if s_mask & ~g.full_mask:
        raise ContractError(f"vertex set {sorted(members(s_mask))} is not inside 0..{g.n - 1}")
    kept = tuple(v for v in range(g.n) if not (s_mask >> v) & 1)
    return g.induced(kept), kept


def is_module(g: Graph, m: Iterable[int]) -> bool:
    mm = mask_of(m)
    for v in members(g.full_mask & ~mm):
        seen = g.rows[v] & mm
        if seen and seen != mm:
            return False
    return True


def dominating_clique(g: Graph) -> Optional[VertexSet]:
    """
    A dominating clique of size omega(g) for a connected 2K2-free graph. Cliques
    are tried in descending lexicographic order. When omega = 2 the result may be
    None; otherwise a missing clique raises TheoremViolation.
    """
    if not is_connected(g):
        raise ContractError("dominating_clique needs a connected graph")
    if has_induced(g, "2K2"):
        raise ContractError("dominating_clique needs a 2K2-free graph")
    if g.n == 0:
        return frozenset()
    omega = clique_number(g)
    for clique in sorted(cliques_of_size(g, omega), reverse=True):
        if is_dominating(g, clique):
            return frozenset(clique)
    if omega == 2:
        return None
    raise TheoremViolation(
        f"connected 2K2-free graph with omega={omega} has no dominating omega-clique",
        graph6_str(g),
    )


def bfs_layers(g: Graph, u: int) -> List[VertexSet]:
    if not 0 <= u < g.n:
        raise ContractError(f"vertex {u} not in graph with {g.n} vertices")
    layers = []
    seen = 1 << u
    frontier = 1 << u
    while frontier:
        layers.append(vertex_set(frontier))
        nxt = 0
        for v in members(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    if seen != g.full_mask:
        raise ContractError("bfs_layers needs a connected graph")
    return layers


# ---------- class profile ----------

def class_profile(g: Graph) -> ClassProfile:
    chordal = is_chordal(g)
    return ClassProfile(
        c3_free=not _has_triangle(g),
        c4_free=chordal or not _has_induced_cycle(g, 4),
        c5_free=chordal or not _has_induced_cycle(g, 5),
        c6_free=chordal or not _has_induced_cycle(g, 6),
        two_k2_free=not _has_2k2(g),
        claw_free=not _has_claw(g),
        diamond_free=not _has_diamond(g),
        k4_free=not _has_k4(g),
        chordal=chordal,
        complete=is_complete(g),
        complete_multipartite=is_complete_multipartite(g),
        bipartite=is_bipartite(g),
        regular=is_regular(g),
    )
