"""
Exhaustive enumeration of small connected graphs and the theorem sweeps run
over them.

Graphs are generated by augmentation: every connected graph on n vertices has a
vertex whose removal leaves a connected graph, so adding one vertex with every
nonempty neighbourhood to each representative on n-1 vertices reaches every
class. Duplicates are removed with canonical_form.
"""

from __future__ import annotations
from functools import partial
from multiprocessing import Pool
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union
import sys

from tqdm import tqdm

from . import SOLVER_VERSION
from .config import DEFAULT_CONFIG, load_config
from .constructive import module_partition
from .errors import CapabilityError, ContractError, TheoremViolation
from .exact import distinguishing_chromatic_index, distinguishing_chromatic_number
from .extremal import classify_extremal
from .graph_core import Graph, class_profile, graph6_str, parse_graph6
from .line_graphs import line_graph
from .logging_store import ResultCache, log, write_report
from .symmetry import canonical_form, colour_count, find_isomorphism
from .theorems import GraphFacts, TheoremSpec, evaluate, get_theorem
from .types import ClassProfile, SolveResult, SweepRecord
from . import families

_LEVELS: Dict[Tuple[int, Optional[int]], List[str]] = {}


# ---------- enumeration ----------

def _level(n: int, max_edges: Optional[int]) -> List[str]:
    key = (n, max_edges)
    if key in _LEVELS:
        return _LEVELS[key]
    if n == 1:
        _LEVELS[key] = [graph6_str(Graph.empty(1))]
        return _LEVELS[key]

    seen = set()
    out: List[str] = []
    for code in _level(n - 1, None if max_edges is None else max_edges - 1):
        base = parse_graph6(code)
        budget = n - 1 if max_edges is None else max_edges - base.edge_count
        for s in range(1, 1 << (n - 1)):
            if bin(s).count("1") > budget:
                continue
            rows = [row | (((s >> v) & 1) << (n - 1)) for v, row in enumerate(base.rows)] + [s]
            canon = canonical_form(Graph(n, tuple(rows)))
            if canon not in seen:
                seen.add(canon)
                out.append(canon.decode("ascii"))
    _LEVELS[key] = out
    log("Enum", f"n={n}{'' if max_edges is None else f' edges<={max_edges}'}: {len(out)} graphs")
    return out


def enumerate_connected(n: int, max_edges: Optional[int] = None) -> Iterator[Graph]:
    """
    One canonically labelled representative per isomorphism class of connected
    graphs on n vertices, in a fixed order. `max_edges` restricts the stream to
    graphs with at most that many edges (and lifts the vertex cap).
    """
    if n < 1:
        raise ContractError(f"enumerate_connected needs n >= 1, got n={n}")
    if max_edges is None and n > DEFAULT_CONFIG.enum_cap:
        raise CapabilityError(f"enumeration is limited to n <= {DEFAULT_CONFIG.enum_cap}, got n={n}")
    if n > DEFAULT_CONFIG.canonical_cap:
        raise CapabilityError(f"enumeration is limited to n <= {DEFAULT_CONFIG.canonical_cap}, got n={n}")
    for code in _level(n, max_edges):
        yield parse_graph6(code)


# ---------- per-graph facts ----------

def _cached(cache: Optional[ResultCache], key: str, compute) -> Any:
    if cache is None:
        return compute()
    value = cache.get(key)
    if value is None:
        value = compute()
        cache.put(key, value)
    return value


def _solve_entry(g: Graph) -> Dict[str, Any]:
    res = distinguishing_chromatic_number(g)
    return {
        "chi": res.chi,
        "chi_D": res.chi_D,
        "omega": res.omega,
        "alpha": res.alpha,
        "delta": res.delta,
        "witness": list(res.witness),
    }


def graph_facts(
    g: Graph,
    spec: TheoremSpec,
    cache: Optional[ResultCache] = None,
    profile: Optional[ClassProfile] = None,
) -> GraphFacts:
    """Oracle values of g (cached per graph6 when a cache is given)."""
    g6 = graph6_str(g)
    entry = _cached(cache, f"solve:{g6}", lambda: _solve_entry(g))
    solve = SolveResult(
        n=g.n,
        chi=entry["chi"],
        chi_D=entry["chi_D"],
        omega=entry["omega"],
        alpha=entry["alpha"],
        delta=entry["delta"],
        witness=tuple(entry["witness"]),
        extremal=classify_extremal(g),
    )
    p = None
    if spec.needs_p:
        p = _cached(cache, f"p:{g6}", lambda: {"p": module_partition(g).p})["p"]
    chi_index = None
    if spec.target == "chi_index":
        chi_index = _cached(cache, f"index:{g6}", lambda: {"chi_index": distinguishing_chromatic_index(g)})["chi_index"]
    return GraphFacts(
        graph=g,
        graph6=g6,
        solve=solve,
        profile=profile or class_profile(g),
        extremal=solve.extremal,
        p=p,
        chi_index=chi_index,
    )


# ---------- sweeps ----------

def _open_cache(cache_dir: Optional[str], version: str) -> Optional[ResultCache]:
    return ResultCache(cache_dir, version) if cache_dir else None


def _stats(cache: Optional[ResultCache]) -> Dict[str, int]:
    return cache.stats() if cache else {"hits": 0, "misses": 0}


def _sweep_one(
    code: str, theorem_id: str, k: int, cache_dir: Optional[str], version: str
) -> Tuple[Optional[Dict[str, Any]], Dict[str, int], Optional[str]]:
    """Worker: (record or None when g is outside the class, cache stats, problem)."""
    spec = get_theorem(theorem_id)
    g = parse_graph6(code)
    profile = class_profile(g)
    if not spec.member(g, profile, k):
        return None, {"hits": 0, "misses": 0}, None

    cache = _open_cache(cache_dir, version)
    facts = graph_facts(g, spec, cache, profile)
    verdict = evaluate(spec, facts, k)
    problem = verdict.problem

    colours = None
    if problem is None and spec.construct is not None and not verdict.exception and spec.construct_when(facts):
        colours = colour_count(spec.construct(g))
        if colours > verdict.bound:
            problem = f"{spec.id}: constructive colouring used {colours} colours, bound is {verdict.bound}"

    extra: Dict[str, Any] = {}
    if spec.needs_p:
        extra["p"] = facts.p
    if spec.target == "chi_index":
        extra["chi_index"] = facts.chi_index
    if spec.id == "ClawDiamondKk":
        extra["k"] = k

    record = SweepRecord(
        graph6=code,
        n=g.n,
        delta=facts.delta,
        chi=facts.chi,
        omega=facts.omega,
        alpha=facts.solve.alpha,
        chi_D=facts.chi_D,
        classes=facts.profile.to_dict(),
        extremal=facts.extremal.to_dict(),
        theorem=spec.id,
        bound=verdict.bound,
        holds=verdict.holds,
        equality=verdict.equality,
        exception=verdict.exception,
        constructive_colours=colours,
        extra=extra,
    )
    return record.to_dict(), _stats(cache), problem


def _check_n_max(n_max: int, override: bool) -> None:
    if n_max < 1:
        raise ContractError(f"n_max must be >= 1, got {n_max}")
    if n_max > DEFAULT_CONFIG.enum_cap:
        raise CapabilityError(f"sweeps are limited to n_max <= {DEFAULT_CONFIG.enum_cap}, got {n_max}")
    if n_max > DEFAULT_CONFIG.default_n_max and not override:
        raise ContractError(
            f"n_max={n_max} is above {DEFAULT_CONFIG.default_n_max}; pass override=True (--override) to run it"
        )


def _run_tasks(worker, codes: List[str], jobs: int, desc: str, verbose: bool) -> Iterator[Tuple[str, Any]]:
    """Results in the order of `codes`, from a worker pool when jobs > 1."""
    bar = dict(total=len(codes), desc=desc, file=sys.stderr, disable=not verbose, leave=False)
    if jobs <= 1:
        for code in tqdm(codes, **bar):
            yield code, worker(code)
        return
    with Pool(processes=jobs) as pool:
        for code, result in zip(codes, tqdm(pool.imap(worker, codes, chunksize=4), **bar)):
            yield code, result


def run_sweep(
    theorem: Union[str, TheoremSpec],
    n_max: Optional[int] = None,
    *,
    k: int = 4,
    jobs: int = 1,
    cache: Optional[ResultCache] = None,
    override: bool = False,
    verbose: Optional[bool] = None,
) -> List[SweepRecord]:
    """
    Check one catalogue entry on every connected graph with at most n_max
    vertices in its class.

    Args:
        theorem: catalogue id or TheoremSpec
        n_max: largest order swept (default 7; 8 needs override)
        k: clique parameter of ClawDiamondKk
        jobs: worker processes
        cache: oracle cache shared across runs

    Returns:
        One SweepRecord per in-class graph, ordered by n then enumeration order.

    Raises:
        TheoremViolation: the first graph (in that order) that breaks the bound,
            the equality characterisation or the exception list.
    """
    spec = get_theorem(theorem if isinstance(theorem, str) else theorem.id)
    n_max = DEFAULT_CONFIG.default_n_max if n_max is None else n_max
    _check_n_max(n_max, override)
    if spec.id == "ClawDiamondKk" and k < 3:
        raise ContractError(f"ClawDiamondKk needs k >= 3, got k={k}")
    if verbose is None:
        verbose = load_config().verbose

    top = n_max if spec.n_max is None else min(n_max, spec.n_max)
    codes = [graph6_str(g) for n in range(spec.n_min, top + 1) for g in enumerate_connected(n)]
    log("Sweep", f"{spec.id}: {len(codes)} connected graphs with {spec.n_min} <= n <= {top}", verbose)

    worker = partial(
        _sweep_one,
        theorem_id=spec.id,
        k=k,
        cache_dir=cache.base_dir if cache else None,
        version=cache.version if cache else SOLVER_VERSION,
    )
    records: List[SweepRecord] = []
    for code, (data, stats, problem) in _run_tasks(worker, codes, jobs, spec.id, verbose):
        if cache is not None:
            cache.hits += stats["hits"]
            cache.misses += stats["misses"]
        if problem is not None:
            log("Violation", f"{problem} on {code}", verbose)
            raise TheoremViolation(problem, code)
        if data is not None:
            records.append(SweepRecord.from_dict(data))

    equal = sum(1 for r in records if r.equality)
    log("Sweep", f"{spec.id}: {len(records)} graphs in class, {equal} attain the bound", verbose)
    if cache is not None:
        log("Cache", f"hits={cache.hits} misses={cache.misses}", verbose)
    return records


def write_sweep_report(path: str, theorem_id: str, n_max: int, records: List[SweepRecord], k: int = 4) -> int:
    header = {
        "theorem": theorem_id,
        "n_max": n_max,
        "k": k,
        "solver_version": SOLVER_VERSION,
        "records": len(records),
    }
    return write_report(path, header, (r.to_dict() for r in records))


# ---------- line graph bridge ----------

def _whitney_exceptions() -> List[Graph]:
    paw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    # K_4 too: Aut(L(K_4)) is twice Aut(K_4)
    return [families.complete(2), paw, diamond, families.complete(4)]


def _bridge_one(code: str, cache_dir: Optional[str], version: str) -> Tuple[Optional[Dict[str, Any]], Dict[str, int]]:
    h = parse_graph6(code)
    if any(find_isomorphism(h, x) is not None for x in _whitney_exceptions()):
        return None, {"hits": 0, "misses": 0}
    cache = _open_cache(cache_dir, version)
    index = _cached(cache, f"index:{code}", lambda: {"chi_index": distinguishing_chromatic_index(h)})["chi_index"]
    lg = line_graph(h)
    line_chi_d = _cached(cache, f"line:{code}", lambda: {"chi_D": distinguishing_chromatic_number(lg).chi_D})["chi_D"]
    return {
        "graph6": code,
        "n": h.n,
        "edges": h.edge_count,
        "chi_index": index,
        "chi_D_line": line_chi_d,
        "holds": index == line_chi_d,
    }, _stats(cache)


def run_whitney_bridge(
    max_edges: int = 9,
    *,
    jobs: int = 1,
    cache: Optional[ResultCache] = None,
    verbose: Optional[bool] = None,
) -> List[Dict[str, Any]]:
    """
    chi_D(L(H)) == chi'_D(H) for every connected H with 3 <= |E(H)| <= max_edges
    other than K_2, K_{1,3}+e, K_4-e and K_4. Raises TheoremViolation on the first
    graph where the two differ.
    """
    if max_edges < 3:
        raise ContractError(f"max_edges must be >= 3, got {max_edges}")
    if max_edges > DEFAULT_CONFIG.oracle_cap:
        raise CapabilityError(f"the bridge sweep is limited to {DEFAULT_CONFIG.oracle_cap} edges, got {max_edges}")
    if verbose is None:
        verbose = load_config().verbose

    codes = [
        graph6_str(h)
        for n in range(3, max_edges + 2)
        for h in enumerate_connected(n, max_edges=max_edges)
        if h.edge_count >= 3
    ]
    log("Whitney", f"{len(codes)} connected graphs with 3 <= |E| <= {max_edges}", verbose)
    worker = partial(
        _bridge_one,
        cache_dir=cache.base_dir if cache else None,
        version=cache.version if cache else SOLVER_VERSION,
    )
    rows: List[Dict[str, Any]] = []
    for code, (row, stats) in _run_tasks(worker, codes, jobs, "whitney", verbose):
        if cache is not None:
            cache.hits += stats["hits"]
            cache.misses += stats["misses"]
        if row is None:
            continue
        if not row["holds"]:
            message = f"chi_D(L(H))={row['chi_D_line']} but chi'_D(H)={row['chi_index']}"
            log("Violation", f"{message} on {code}", verbose)
            raise TheoremViolation(message, code)
        rows.append(row)
    log("Whitney", f"identity holds on {len(rows)} graphs", verbose)
    return rows
