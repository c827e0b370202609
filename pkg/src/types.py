from __future__ import annotations
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple
import threading
import time

from .errors import SearchCancelled

# A colouring is a tuple indexed by vertex; colours are positive ints.
Colouring = Tuple[int, ...]
# image[v] is the image of vertex v.
Permutation = Tuple[int, ...]


class CancelToken:
    """Cooperative cancellation for long searches; `check()` is called once per search node."""

    def __init__(self, timeout_s: Optional[float] = None):
        self._event = threading.Event()
        self.deadline = time.monotonic() + timeout_s if timeout_s is not None else None
        self.nodes = 0

    def cancel(self) -> None:
        self._event.set()

    @property
    def cancelled(self) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            self._event.set()
        return self._event.is_set()

    def check(self) -> None:
        self.nodes += 1
        if self.cancelled:
            raise SearchCancelled(f"search cancelled after {self.nodes} nodes")


def checkpoint(cancel: Optional[CancelToken]) -> None:
    if cancel is not None:
        cancel.check()


_PROFILE_LABELS = {
    "c3_free": "C3-free",
    "c4_free": "C4-free",
    "c5_free": "C5-free",
    "c6_free": "C6-free",
    "two_k2_free": "2K2-free",
    "claw_free": "claw-free",
    "diamond_free": "diamond-free",
    "k4_free": "K4-free",
    "chordal": "chordal",
    "complete": "complete",
    "complete_multipartite": "complete-multipartite",
    "bipartite": "bipartite",
    "regular": "regular",
}


@dataclass(frozen=True)
class ClassProfile:
    c3_free: bool
    c4_free: bool
    c5_free: bool
    c6_free: bool
    two_k2_free: bool
    claw_free: bool
    diamond_free: bool
    k4_free: bool
    chordal: bool
    complete: bool
    complete_multipartite: bool
    bipartite: bool
    regular: bool

    def labels(self) -> List[str]:
        """Names of the classes the graph belongs to, in declaration order."""
        return [_PROFILE_LABELS[f.name] for f in fields(self) if getattr(self, f.name)]

    def to_dict(self) -> Dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class AutomorphismReport:
    elements: Tuple[Permutation, ...]   # identity first
    fixed: FrozenSet[int]
    order: int


class ExtremalTag(str, Enum):
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    SYMMETRIC_TREE = "symmetric-tree"
    SYMMETRIC_A = "symmetric-A"
    SYMMETRIC_B = "symmetric-B"
    JOIN_ALPHA_K1_CLIQUE = "join-alpha-clique"
    COCKTAIL_PARTY = "cocktail-party"
    BALANCED_BIPARTITE = "balanced-bipartite"
    COMPLETE_MULTIPARTITE = "complete-multipartite"
    NONE = "none"


@dataclass(frozen=True)
class ExtremalClass:
    tag: ExtremalTag
    parameters: Dict[str, int] = field(default_factory=dict)
    also: Tuple[ExtremalTag, ...] = ()   # further tags that apply, in precedence order

    def __post_init__(self):
        if self.tag is ExtremalTag.NONE and self.parameters:
            raise ValueError(f"tag none carries no parameters, got {self.parameters}")

    @property
    def tags(self) -> List[ExtremalTag]:
        if self.tag is ExtremalTag.NONE:
            return []
        return [self.tag, *self.also]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tag": self.tag.value,
            "parameters": dict(self.parameters),
            "also": [t.value for t in self.also],
        }


@dataclass(frozen=True)
class SolveResult:
    n: int
    chi: int
    chi_D: int
    omega: int
    alpha: int
    delta: int
    witness: Colouring
    extremal: Optional[ExtremalClass] = None


@dataclass(frozen=True)
class ModulePartition:
    parts: Tuple[FrozenSet[int], ...]

    @property
    def p(self) -> int:
        return len(self.parts)


@dataclass
class SweepRecord:
    graph6: str
    n: int
    delta: int
    chi: int
    omega: int
    alpha: int
    chi_D: int
    classes: Dict[str, bool]
    extremal: Dict[str, Any]
    theorem: str
    bound: int
    holds: bool
    equality: bool
    exception: bool = False
    constructive_colours: Optional[int] = None
    extra: Dict[str, Any] = field(default_factory=dict)   # p, k, chi_index ...

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SweepRecord":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in names})
