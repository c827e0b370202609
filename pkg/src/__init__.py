"""Distinguishing chromatic number lab: exact oracles, constructive colourings and theorem sweeps."""

SOLVER_VERSION = "1.0.0"
