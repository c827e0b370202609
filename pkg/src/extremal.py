"""
Recognisers for the graphs that attain the bounds: symmetric trees and their
clique variants, joins alpha K_1 + K_q, cocktail-party graphs, balanced complete
bipartite graphs and short cycles.
"""

from __future__ import annotations
from typing import Dict, List, Optional, Tuple

from . import families
from .errors import ContractError
from .graph_core import Graph, VertexSet, is_complete, is_complete_multipartite, is_connected, max_degree, vertex_set
from .symmetry import find_isomorphism
from .types import ExtremalClass, ExtremalTag, Permutation

_BUILDERS = {
    ExtremalTag.SYMMETRIC_TREE: families.symmetric_tree,
    ExtremalTag.SYMMETRIC_A: families.symmetric_a,
    ExtremalTag.SYMMETRIC_B: families.symmetric_b,
}


def multipartite_parts(g: Graph) -> Optional[List[VertexSet]]:
    """Parts of a complete multipartite graph (ordered by smallest vertex), else None."""
    if not is_complete_multipartite(g):
        return None
    parts: List[VertexSet] = []
    seen = 0
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        part = g.full_mask & ~g.rows[v]
        seen |= part
        parts.append(vertex_set(part))
    return parts


def is_cycle(g: Graph, k: int) -> bool:
    return g.n == k and k >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_balanced_complete_bipartite(g: Graph) -> bool:
    parts = multipartite_parts(g)
    return parts is not None and len(parts) == 2 and len(parts[0]) == len(parts[1])


def is_cocktail_party(g: Graph) -> bool:
    parts = multipartite_parts(g)
    return parts is not None and len(parts) >= 2 and all(len(p) == 2 for p in parts)


def is_join_alpha_clique(g: Graph) -> bool:
    """alpha K_1 + K_q: complete multipartite with at most one part larger than one vertex."""
    parts = multipartite_parts(g)
    return parts is not None and g.n >= 1 and sum(1 for p in parts if len(p) > 1) <= 1


def symmetric_instance(g: Graph, kind: ExtremalTag) -> Optional[Tuple[int, int, Permutation]]:
    """
    (delta_s, height, p) such that the constructed symmetric graph of this kind
    with parameters (delta_s, height) maps onto g by p, or None.
    """
    build = _BUILDERS[kind]
    delta = max_degree(g)
    for delta_s in (delta, delta - 1):
        if delta_s < 2:
            continue
        height = 1
        while families.symmetric_tree_order(delta_s, height) <= g.n:
            cand = build(delta_s, height)
            if cand.n == g.n and cand.edge_count == g.edge_count:
                perm = find_isomorphism(cand, g)
                if perm is not None:
                    return delta_s, height, perm
            height += 1
    return None


def is_symmetric_tree(g: Graph) -> bool:
    if g.edge_count != g.n - 1 or not is_connected(g):
        return False
    return symmetric_instance(g, ExtremalTag.SYMMETRIC_TREE) is not None


def is_symmetric_graph(g: Graph) -> bool:
    if is_complete(g):
        return True
    return any(symmetric_instance(g, kind) is not None for kind in _BUILDERS)


def classify_extremal(g: Graph) -> ExtremalClass:
    """
    Every extremal shape g has, most specific first:
    C4, C5, C6, symmetric tree, T_A (complete graphs included), T_B,
    alpha K_1 + K_q, cocktail party, K_{p,p}, complete multipartite.
    """
    if not is_connected(g):
        raise ContractError("classify_extremal needs a connected graph")
    tags: List[ExtremalTag] = []
    params: Dict[str, int] = {}
    for k, tag in ((4, ExtremalTag.C4), (5, ExtremalTag.C5), (6, ExtremalTag.C6)):
        if is_cycle(g, k):
            tags.append(tag)
    for kind in (ExtremalTag.SYMMETRIC_TREE, ExtremalTag.SYMMETRIC_A, ExtremalTag.SYMMETRIC_B):
        if kind is ExtremalTag.SYMMETRIC_TREE and g.edge_count != g.n - 1:
            continue
        if kind is ExtremalTag.SYMMETRIC_A and is_complete(g):
            tags.append(kind)
            continue
        found = symmetric_instance(g, kind)
        if found is not None:
            tags.append(kind)
            params.setdefault("delta_s", found[0])
            params.setdefault("height", found[1])

    parts = multipartite_parts(g)
    if parts is not None:
        sizes = sorted(len(p) for p in parts)
        if sum(1 for s in sizes if s > 1) <= 1:
            tags.append(ExtremalTag.JOIN_ALPHA_K1_CLIQUE)
            params["alpha"] = sizes[-1]
            params["omega"] = len(parts)
        if len(parts) >= 2 and all(s == 2 for s in sizes):
            tags.append(ExtremalTag.COCKTAIL_PARTY)
            params["m"] = len(parts)
        if len(parts) == 2 and sizes[0] == sizes[1]:
            tags.append(ExtremalTag.BALANCED_BIPARTITE)
            params["p"] = sizes[0]
        tags.append(ExtremalTag.COMPLETE_MULTIPARTITE)
        params["parts"] = len(parts)

    if not tags:
        return ExtremalClass(ExtremalTag.NONE)
    return ExtremalClass(tags[0], params, tuple(tags[1:]))
