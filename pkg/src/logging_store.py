from __future__ import annotations
from typing import Any, Dict, Iterable, List, Optional, Tuple
import hashlib
import json
import os
import sys
import tempfile

from . import SOLVER_VERSION
from .config import load_config


def log(tag: str, message: str, verbose: Optional[bool] = None) -> None:
    """Progress line `[Tag] message` on stderr; stdout is reserved for results."""
    if verbose is None:
        verbose = load_config().verbose
    if verbose:
        print(f"[{tag}] {message}", file=sys.stderr, flush=True)


def _dumps(obj: Dict[str, Any]) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def write_report(path: str, header: Dict[str, Any], records: Iterable[Dict[str, Any]]) -> int:
    """
    Write a JSONL report: one header object then one object per record, in the
    order given. Returns the number of records written.
    """
    count = 0
    try:
        parent = os.path.dirname(os.path.abspath(path))
        os.makedirs(parent, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(_dumps({"kind": "header", **header}) + "\n")
            for rec in records:
                f.write(_dumps({"kind": "record", **rec}) + "\n")
                count += 1
    except OSError as e:
        raise OSError(f"cannot write report {path}: {e}") from e
    return count


def read_report(path: str) -> Tuple[Dict[str, Any], List[Dict[str, Any]]]:
    if not os.path.exists(path):
        raise FileNotFoundError(f"report not found: {path}")
    header: Dict[str, Any] = {}
    records: List[Dict[str, Any]] = []
    try:
        with open(path, "r", encoding="utf-8") as f:
            for line in f:
                if not line.strip():
                    continue
                obj = json.loads(line)
                kind = obj.pop("kind", "record")
                if kind == "header":
                    header = obj
                else:
                    records.append(obj)
    except OSError as e:
        raise OSError(f"cannot read report {path}: {e}") from e
    return header, records


class ResultCache:
    """
    Content-addressed JSON cache keyed by (graph6, solver version):
    <base_dir>/<version>/<first 4 hex chars>/<sha256>.json. Safe to delete.
    """

    def __init__(self, base_dir: str = "./cache", version: str = SOLVER_VERSION):
        self.base_dir = base_dir
        self.version = version
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> str:
        digest = hashlib.sha256(f"{self.version}\n{key}".encode("utf-8")).hexdigest()
        return os.path.join(self.base_dir, self.version, digest[:4], f"{digest}.json")

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        path = self._path(key)
        try:
            with open(path, "r", encoding="utf-8") as f:
                value = json.load(f)
        except FileNotFoundError:
            self.misses += 1
            return None
        except (OSError, json.JSONDecodeError):
            # unreadable entries are recomputed
            self.misses += 1
            return None
        self.hits += 1
        return value

    def put(self, key: str, value: Dict[str, Any]) -> None:
        path = self._path(key)
        folder = os.path.dirname(path)
        try:
            os.makedirs(folder, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=folder, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                f.write(_dumps(value))
            os.replace(tmp, path)
        except OSError as e:
            raise OSError(f"cannot write cache entry {path}: {e}") from e

    def stats(self) -> Dict[str, int]:
        return {"hits": self.hits, "misses": self.misses}
