"""Worked-example fixtures, the invariant suite and the seeded harness."""

from .fixtures import CLASS_EXPECTATIONS, FIXTURES_DIR, FixtureCheck, load_fixture, replay_fixtures
from .harness import HarnessResult, InvariantTally, run_verification
from .invariants import INVARIANTS, Invariant, Trial, describe_matrix
from .sampling import planted_z_matrix, random_matrix

__all__ = [
    'CLASS_EXPECTATIONS',
    'FIXTURES_DIR',
    'FixtureCheck',
    'load_fixture',
    'replay_fixtures',
    'HarnessResult',
    'InvariantTally',
    'run_verification',
    'INVARIANTS',
    'Invariant',
    'Trial',
    'describe_matrix',
    'planted_z_matrix',
    'random_matrix',
]
