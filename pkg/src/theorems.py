"""
Catalogue of the bounds the sweeps check.

Each TheoremSpec names a hereditary class (a cheap membership test on the
graph and its class profile), a bound on the distinguishing chromatic number
(or index), the characterisation of the equality cases where one is known and
the listed exceptional graphs. `evaluate` turns the oracle facts of one graph
into a Verdict; a Verdict with a `problem` falsifies the statement.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .constructive import (
    colour_2k2_free,
    colour_c4_free,
    colour_chordal,
    colour_claw_diamond_free,
    colour_claw_free,
    is_claw_free_exception,
)
from .errors import ContractError
from .extremal import is_balanced_complete_bipartite, is_cycle
from .graph_core import Graph, clique_number, is_complete, max_degree
from .types import ClassProfile, Colouring, ExtremalClass, ExtremalTag, SolveResult

SYMMETRIC_TAGS = frozenset({
    ExtremalTag.SYMMETRIC_TREE,
    ExtremalTag.SYMMETRIC_A,
    ExtremalTag.SYMMETRIC_B,
})


@dataclass(frozen=True)
class GraphFacts:
    """Oracle values and structure of one graph, as the catalogue needs them."""
    graph: Graph
    graph6: str
    solve: SolveResult
    profile: ClassProfile
    extremal: ExtremalClass
    p: Optional[int] = None
    chi_index: Optional[int] = None

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def delta(self) -> int:
        return self.solve.delta

    @property
    def chi(self) -> int:
        return self.solve.chi

    @property
    def omega(self) -> int:
        return self.solve.omega

    @property
    def chi_D(self) -> int:
        return self.solve.chi_D

    def has_tag(self, *tags: ExtremalTag) -> bool:
        return any(t in self.extremal.tags for t in tags)


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    statement: str
    member: Callable[[Graph, ClassProfile, int], bool]
    bound: Callable[[GraphFacts, int], int]
    equality: Optional[Callable[[GraphFacts], bool]] = None
    exception: Optional[Callable[[GraphFacts], bool]] = None
    construct: Optional[Callable[[Graph], Colouring]] = None
    construct_when: Callable[[GraphFacts], bool] = lambda f: True
    needs_p: bool = False
    target: str = "chi_D"        # or "chi_index"
    n_min: int = 1
    n_max: Optional[int] = None

    def value(self, facts: GraphFacts) -> int:
        if self.target == "chi_index":
            if facts.chi_index is None:
                raise ContractError(f"{self.id} needs the distinguishing chromatic index of {facts.graph6}")
            return facts.chi_index
        return facts.chi_D


@dataclass
class Verdict:
    bound: int
    value: int
    holds: bool
    equality: bool
    exception: bool = False
    problem: Optional[str] = None
    extra: Dict[str, object] = field(default_factory=dict)


def evaluate(spec: TheoremSpec, facts: GraphFacts, k: int = 4) -> Verdict:
    """
    Check one in-class graph: the bound, the equality characterisation in both
    directions and the exception list (an exception must break the bound).
    """
    value = spec.value(facts)
    bound = spec.bound(facts, k)
    exception = bool(spec.exception and spec.exception(facts))
    verdict = Verdict(bound=bound, value=value, holds=value <= bound, equality=value == bound, exception=exception)
    name = "chi'_D" if spec.target == "chi_index" else "chi_D"
    if exception and verdict.holds:
        verdict.problem = f"{spec.id}: listed exception has {name}={value} within the bound {bound}"
    elif not exception and not verdict.holds:
        verdict.problem = f"{spec.id}: {name}={value} exceeds the bound {bound}"
    elif spec.equality is not None and not exception:
        predicted = spec.equality(facts)
        if predicted != verdict.equality:
            side = "attains" if verdict.equality else "misses"
            verdict.problem = (
                f"{spec.id}: {name}={value} {side} the bound {bound} but the characterisation says "
                f"{'equality' if predicted else 'strict'}"
            )
    return verdict


# ---------- class predicates ----------

def _claw_diamond_free(p: ClassProfile) -> bool:
    return p.claw_free and p.diamond_free


def _kk_member(g: Graph, p: ClassProfile, k: int) -> bool:
    if not _claw_diamond_free(p) or clique_number(g) >= k:
        return False
    # the k = 4 corollary carries no degree hypothesis
    return k == 4 or max_degree(g) >= 3


def _index_exception(f: GraphFacts) -> bool:
    g = f.graph
    return (
        is_cycle(g, 4)
        or is_cycle(g, 6)
        or (g.n == 4 and is_complete(g))
        or (g.n == 6 and g.edge_count == 9 and is_balanced_complete_bipartite(g))
    )


def _is_fig_lk13(f: GraphFacts) -> bool:
    return f.n == 9 and is_claw_free_exception(f.graph)


_CATALOGUE: List[TheoremSpec] = [
    TheoremSpec(
        id="CT-2Delta",
        statement="connected G, n >= 2: chi_D <= 2 Delta; equality iff K_{p,p} or C_6",
        member=lambda g, p, k: True,
        bound=lambda f, k: 2 * f.delta,
        equality=lambda f: f.has_tag(ExtremalTag.BALANCED_BIPARTITE, ExtremalTag.C6),
        n_min=2,
    ),
    TheoremSpec(
        id="Cranston",
        statement="connected (C_3, C_4)-free G: chi_D <= Delta + 1 except C_6",
        member=lambda g, p, k: p.c3_free and p.c4_free,
        bound=lambda f, k: f.delta + 1,
        exception=lambda f: is_cycle(f.graph, 6),
        construct=colour_c4_free,
        construct_when=lambda f: f.n >= 2,
    ),
    TheoremSpec(
        id="C4-Delta2",
        statement="connected C_4-free G: chi_D <= Delta + 2; equality iff C_6",
        member=lambda g, p, k: p.c4_free,
        bound=lambda f, k: f.delta + 2,
        equality=lambda f: f.has_tag(ExtremalTag.C6),
        construct=colour_c4_free,
        construct_when=lambda f: f.n >= 2,
    ),
    TheoremSpec(
        id="Chordal-Delta1",
        statement="connected chordal G: chi_D <= Delta + 1; equality iff symmetric or alpha K_1 + K_{omega-1}",
        member=lambda g, p, k: p.chordal,
        bound=lambda f, k: f.delta + 1,
        equality=lambda f: f.has_tag(*SYMMETRIC_TAGS, ExtremalTag.JOIN_ALPHA_K1_CLIQUE),
        construct=colour_chordal,
    ),
    TheoremSpec(
        id="C42K2-Delta1",
        statement="connected (C_4, 2K_2)-free G: chi_D <= Delta + 1; equality iff alpha K_1 + K_{omega-1} or C_5",
        member=lambda g, p, k: p.c4_free and p.two_k2_free,
        bound=lambda f, k: f.delta + 1,
        equality=lambda f: f.has_tag(ExtremalTag.JOIN_ALPHA_K1_CLIQUE, ExtremalTag.C5),
        construct=colour_c4_free,
        construct_when=lambda f: f.n >= 2,
    ),
    TheoremSpec(
        id="TwoK2-Bound",
        statement="connected 2K_2-free G: chi_D <= 2 Delta - omega + 2; equality iff complete or K_{p,p}",
        member=lambda g, p, k: p.two_k2_free,
        bound=lambda f, k: 2 * f.delta - f.omega + 2,
        equality=lambda f: f.profile.complete or f.has_tag(ExtremalTag.BALANCED_BIPARTITE),
        construct=colour_2k2_free,
        construct_when=lambda f: f.omega >= 3 and not f.profile.complete,
    ),
    TheoremSpec(
        id="ClawChiP",
        statement="connected claw-free G: chi_D <= chi + p except C_6 and the 9-vertex figure graph",
        member=lambda g, p, k: p.claw_free,
        bound=lambda f, k: f.chi + (f.p or 0),
        exception=lambda f: is_cycle(f.graph, 6) or _is_fig_lk13(f),
        construct=colour_claw_free,
        needs_p=True,
    ),
    TheoremSpec(
        id="Claw-Delta2",
        statement="connected claw-free G: chi_D <= Delta + 2; equality iff C_6 or a cocktail-party graph",
        member=lambda g, p, k: p.claw_free,
        bound=lambda f, k: f.delta + 2,
        equality=lambda f: f.has_tag(ExtremalTag.C6, ExtremalTag.COCKTAIL_PARTY),
    ),
    TheoremSpec(
        id="ClawDiamond-Delta1",
        statement="connected (claw, diamond)-free G: chi_D <= Delta + 1 except C_4 and C_6",
        member=lambda g, p, k: _claw_diamond_free(p),
        bound=lambda f, k: f.delta + 1,
        exception=lambda f: is_cycle(f.graph, 4) or is_cycle(f.graph, 6),
        construct=colour_claw_diamond_free,
    ),
    TheoremSpec(
        id="ClawDiamondKk",
        statement="connected (claw, diamond, K_k)-free G with Delta >= 3 (any Delta when k = 4): chi_D <= k",
        member=_kk_member,
        bound=lambda f, k: k,
    ),
    TheoremSpec(
        id="Index-Delta1",
        statement="connected H, 3 <= n <= 6: chi'_D <= Delta + 1 except C_4, K_4, C_6, K_{3,3}",
        member=lambda g, p, k: True,
        bound=lambda f, k: f.delta + 1,
        exception=_index_exception,
        target="chi_index",
        n_min=3,
        n_max=6,
    ),
]

THEOREMS: Dict[str, TheoremSpec] = {spec.id: spec for spec in _CATALOGUE}


def get_theorem(theorem_id: str) -> TheoremSpec:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        known = ", ".join(THEOREMS)
        raise ContractError(f"unknown theorem id: {theorem_id} (known: {known})") from None
