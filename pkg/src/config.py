from __future__ import annotations
import os
from dataclasses import dataclass

from dotenv import load_dotenv


def _env_flag(name: str, default: str = "1") -> bool:
    return os.getenv(name, default) not in ("0", "false", "False")


@dataclass
class SolverConfig:
    cache_dir: str = "./cache"
    jobs: int = 1
    verbose: bool = True
    automorphism_cap: int = 16      # full group listing
    canonical_cap: int = 12         # canonical_form
    oracle_cap: int = 10            # chi_D / capped search / module partition
    chromatic_cap: int = 16
    edge_index_cap: int = 15        # |E(H)| for the distinguishing chromatic index
    line_root_cap: int = 12
    enum_cap: int = 8
    default_n_max: int = 7


def load_config() -> SolverConfig:
    """
    Build the runtime config from the environment (.env honoured):
      - DCHI_CACHE_DIR: sweep cache root
      - DCHI_JOBS: default worker count for sweeps
      - VERBOSE: "0"/"false" silences [Tag] progress lines on stderr
    """
    load_dotenv()
    cfg = SolverConfig()
    cfg.cache_dir = os.getenv("DCHI_CACHE_DIR", cfg.cache_dir)
    jobs = os.getenv("DCHI_JOBS")
    if jobs:
        try:
            cfg.jobs = max(1, int(jobs))
        except ValueError:
            raise ValueError(f"DCHI_JOBS must be an integer, got: {jobs}")
    cfg.verbose = _env_flag("VERBOSE")
    return cfg


DEFAULT_CONFIG = SolverConfig()
