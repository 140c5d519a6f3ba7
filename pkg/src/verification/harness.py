"""
Seeded verification harness behind `compmat verify`.

Draws random integer matrices, runs every invariant on each and tallies
checked / skipped / failed counts with the first counterexample matrix.
Invariants that ask for a minimum number of checks get extra draws after
the main pass, bounded by `top_up_factor` draws per requested trial.
"""

import logging
from dataclasses import dataclass, field
from math import ceil
from typing import List, Optional

import numpy as np
import pandas as pd

from ..config import Settings, VerifySettings, check_enumeration_cap, get_settings
from ..constants import INVARIANT_CLAIM, STATUS_FAIL, STATUS_FALSIFIED, STATUS_PASS, STATUS_SHORT
from ..linalg import Matrix
from .fixtures import FixtureCheck, replay_fixtures
from .invariants import INVARIANTS, Invariant, Trial, describe_matrix
from .sampling import random_matrix

MIN_TRIAL_ORDER = 2


@dataclass
class InvariantTally:
    invariant: Invariant
    checked: int = 0
    skipped: int = 0
    failures: int = 0
    errors: int = 0
    first_counterexample: Optional[str] = None
    # trials whose order was within the invariant's max_n
    drawn: int = 0
    extra_draws: int = 0
    required_checked: int = 0
    required_drawn: int = 0

    @property
    def target_met(self) -> bool:
        return self.checked >= self.required_checked and self.drawn >= self.required_drawn

    @property
    def status(self) -> str:
        if self.errors:
            return STATUS_FAIL
        if self.failures:
            return STATUS_FALSIFIED if self.invariant.kind == INVARIANT_CLAIM else STATUS_FAIL
        if not self.target_met:
            return STATUS_SHORT
        return STATUS_PASS

    def record(self, A: Matrix, detail: str) -> None:
        if self.first_counterexample is None:
            self.first_counterexample = f"A = {describe_matrix(A)}: {detail}"


@dataclass
class HarnessResult:
    seed: int
    trials: int
    n_max: int
    tallies: List[InvariantTally] = field(default_factory=list)
    fixtures: List[FixtureCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """A falsified claim is a finding, not a failure of the suite."""
        return (all(t.status not in (STATUS_FAIL, STATUS_SHORT) for t in self.tallies)
                and all(check.passed for check in self.fixtures))

    def tally(self, name: str) -> InvariantTally:
        return next(t for t in self.tallies if t.invariant.name == name)

    def invariant_table(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    'invariant': t.invariant.name,
                    'kind': t.invariant.kind,
                    'status': t.status,
                    'checked': str(t.checked),
                    'skipped': str(t.skipped),
                    'failures': str(t.failures + t.errors),
                    'drawn': str(t.drawn),
                    'extra_draws': str(t.extra_draws),
                    'first_counterexample': t.first_counterexample or '',
                }
                for t in self.tallies
            ],
            columns=['invariant', 'kind', 'status', 'checked', 'skipped', 'failures', 'drawn', 'extra_draws',
                     'first_counterexample'],
        )

    def fixture_table(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    'fixture': check.fixture,
                    'check': check.check,
                    'status': STATUS_PASS if check.passed else STATUS_FAIL,
                    'detail': '' if check.passed else check.detail,
                }
                for check in self.fixtures
            ],
            columns=['fixture', 'check', 'status', 'detail'],
        )


def _run_trial(trial: Trial, tallies: List[InvariantTally]) -> None:
    n = trial.A.n
    for tally in tallies:
        invariant = tally.invariant
        if invariant.max_n is not None and n > invariant.max_n:
            tally.skipped += 1
            continue
        tally.drawn += 1
        try:
            applicable, counterexample = invariant.check(trial)
        except Exception as e:
            tally.checked += 1
            tally.errors += 1
            tally.record(trial.A, f"{type(e).__name__}: {e}")
            logging.error(f"Invariant {invariant.name} raised on {describe_matrix(trial.A)}: {e}")
            continue
        if not applicable:
            tally.skipped += 1
            continue
        tally.checked += 1
        if counterexample is not None:
            tally.failures += 1
            tally.record(trial.A, counterexample)


def _top_up(tally: InvariantTally, rng: np.random.Generator, verify: VerifySettings, n_min: int, n_max: int,
            trials: int) -> None:
    """Draws extra matrices for one invariant until its required counts are reached."""
    invariant = tally.invariant
    top = n_max if invariant.max_n is None else min(n_max, invariant.max_n)
    sampler = invariant.sampler or random_matrix
    budget = verify.top_up_factor * trials
    while not tally.target_met and tally.extra_draws < budget and top >= n_min:
        n = int(rng.integers(n_min, top + 1))
        A = sampler(rng, n, verify.entry_min, verify.entry_max)
        _run_trial(Trial(A, rng, verify.entry_min, verify.entry_max, verify.competence_samples), [tally])
        tally.extra_draws += 1
    if tally.extra_draws:
        logging.info(f"Invariant {invariant.name}: {tally.extra_draws} extra draw(s), {tally.checked} checked")
    if not tally.target_met:
        logging.warning(
            f"Invariant {invariant.name} reached {tally.checked}/{tally.required_checked} checks and "
            f"{tally.drawn}/{tally.required_drawn} draws"
        )


def run_verification(
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    n_max: Optional[int] = None,
    include_fixtures: bool = False,
    settings: Optional[Settings] = None,
    invariants: Optional[List[Invariant]] = None,
) -> HarnessResult:
    """
    Runs the invariant suite over seeded random integer matrices.

    Args:
        seed (int): RNG seed; defaults to the configured seed.
        trials (int): Number of random matrices; 0 runs nothing (vacuous pass).
        n_max (int): Largest matrix order drawn; orders are uniform on 2..n_max.
        include_fixtures (bool): Also replay the worked-example fixtures.
        settings (Settings): Overrides the active settings.
        invariants (list): Subset of the suite to run; all of it by default.

    Returns:
        HarnessResult: Per-invariant tallies and fixture checks. An invariant
        that misses its required counts within the extra-draw budget is
        reported as short and fails the run.

    Raises:
        CapExceeded: If n_max is above the enumeration cap.
        ValueError: If trials is negative or n_max is below 1.
    """
    verify = (settings or get_settings()).verify
    seed = verify.seed if seed is None else seed
    trials = verify.trials if trials is None else trials
    n_max = verify.n_max if n_max is None else n_max
    if trials < 0:
        raise ValueError(f"trials must be non-negative, got {trials}")
    if n_max < 1:
        raise ValueError(f"n-max must be at least 1, got {n_max}")
    check_enumeration_cap(n_max)

    rng = np.random.default_rng(seed)
    n_min = min(MIN_TRIAL_ORDER, n_max)
    tallies = [
        InvariantTally(
            invariant,
            required_checked=ceil(invariant.min_checked * trials),
            required_drawn=ceil(invariant.min_drawn * trials),
        )
        for invariant in (invariants or INVARIANTS)
    ]
    logging.info(f"Running {len(tallies)} invariants over {trials} trials (seed {seed}, n <= {n_max})")

    for index in range(trials):
        n = int(rng.integers(n_min, n_max + 1))
        A = random_matrix(rng, n, verify.entry_min, verify.entry_max)
        trial = Trial(A, rng, verify.entry_min, verify.entry_max, verify.competence_samples)
        _run_trial(trial, tallies)
        if (index + 1) % 100 == 0:
            logging.info(f"Completed {index + 1} of {trials} trials")

    for tally in tallies:
        _top_up(tally, rng, verify, n_min, n_max, trials)

    for tally in tallies:
        if tally.status == STATUS_FALSIFIED:
            logging.warning(f"Claim {tally.invariant.name} falsified: {tally.first_counterexample}")
        elif tally.status == STATUS_FAIL:
            logging.error(f"Invariant {tally.invariant.name} failed: {tally.first_counterexample}")

    fixtures = replay_fixtures(seed=seed) if include_fixtures else []
    result = HarnessResult(seed, trials, n_max, tallies, fixtures)
    logging.info(f"Verification {'passed' if result.passed else 'failed'}")
    return result
