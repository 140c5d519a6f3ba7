import json

import numpy as np
import pytest

from src.classes import is_Z
from src.config import Settings, VerifySettings, load_settings
from src.constants import INVARIANT_CLAIM, INVARIANT_THEOREM, STATUS_FAIL, STATUS_FALSIFIED, STATUS_PASS, STATUS_SHORT
from src.errors import CapExceeded
from src.linalg import Matrix, det, subsets, vector
from src.verification import (
    INVARIANTS,
    Invariant,
    InvariantTally,
    Trial,
    describe_matrix,
    planted_z_matrix,
    random_matrix,
    replay_fixtures,
    run_verification,
)
from src.verification.harness import _run_trial
from src.verification.invariants import SKIP
from tests.conftest import matrix


@pytest.fixture
def quick_settings(tmp_path):
    path = tmp_path / 'quick.json'
    path.write_text(json.dumps({'verify': {'q_samples': 5, 'competence_samples': 3}}), encoding='utf-8')
    return load_settings(str(path))


def by_name(name):
    return next(invariant for invariant in INVARIANTS if invariant.name == name)


def test_invariant_names_are_unique():
    names = [invariant.name for invariant in INVARIANTS]
    assert len(names) == len(set(names))


def test_zero_trials_is_a_vacuous_pass():
    result = run_verification(seed=3, trials=0, n_max=3)
    assert result.passed
    assert all(t.checked == 0 and t.status == STATUS_PASS for t in result.tallies)
    assert len(result.invariant_table()) == len(INVARIANTS)


def test_random_matrix_is_seeded():
    first = random_matrix(np.random.default_rng(5), 3, -5, 5)
    second = random_matrix(np.random.default_rng(5), 3, -5, 5)
    assert first == second
    assert all(-5 <= x <= 5 for row in first.rows for x in row)


def test_short_run_passes_and_is_reproducible(quick_settings):
    first = run_verification(seed=1, trials=25, n_max=3)
    second = run_verification(seed=1, trials=25, n_max=3)
    assert first.passed
    assert not any(t.status == STATUS_FAIL for t in first.tallies)
    assert first.invariant_table().equals(second.invariant_table())


def test_n_max_above_cap(monkeypatch):
    monkeypatch.setenv('COMPMAT_NMAX', '2')
    load_settings()
    with pytest.raises(CapExceeded):
        run_verification(trials=1, n_max=3)


def test_adequacy_claim_is_falsified_not_failed():
    claim = by_name('competent_e0_r0_implies_adequate')
    assert claim.kind == INVARIANT_CLAIM
    tally = InvariantTally(claim)
    _run_trial(Trial(matrix([1, 2], [2, 1]), np.random.default_rng(0)), [tally])
    assert tally.failures == 1
    assert tally.status == STATUS_FALSIFIED
    assert tally.first_counterexample.startswith("A = [[1, 2], [2, 1]]")


def test_invariant_that_raises_counts_as_failure():
    tally = InvariantTally(by_name('classification_consistent'))

    class Broken(Trial):
        @property
        def report(self):
            raise RuntimeError("boom")

    _run_trial(Broken(Matrix.identity(2), np.random.default_rng(0)), [tally])
    assert tally.errors == 1
    assert tally.status == STATUS_FAIL
    assert "RuntimeError: boom" in tally.first_counterexample


def test_lcp_invariants_skip_large_orders():
    tally = InvariantTally(by_name('degree_solution_count'))
    _run_trial(Trial(Matrix.identity(4), np.random.default_rng(0)), [tally])
    assert (tally.checked, tally.skipped) == (0, 1)


def test_describe_matrix():
    assert describe_matrix(matrix(["1/2", 0], [-3, 4])) == "[[1/2, 0], [-3, 4]]"


def test_fixture_replay_passes(quick_settings):
    checks = replay_fixtures(seed=1)
    failed = [c for c in checks if not c.passed]
    assert not failed, failed
    fixtures = {c.fixture for c in checks}
    assert {'xu_singular', 'kernel_231', 'lcp_instance_2x2', 'lcp_instance_3x3'} <= fixtures


def test_planted_z_matrix_has_a_singular_principal_block():
    rng = np.random.default_rng(4)
    for _ in range(20):
        A = planted_z_matrix(rng, 3, -5, 5)
        assert is_Z(A).member
        assert any(det(A.principal(sigma)) == 0 for sigma in subsets(3))


def test_z_literal_claim_reaches_its_check_count():
    result = run_verification(seed=2, trials=20, n_max=3, invariants=[by_name('z_matrix_literal_implication')])
    tally = result.tally('z_matrix_literal_implication')
    assert tally.required_checked == 4
    assert tally.checked >= 4
    assert tally.errors == 0
    assert tally.status != STATUS_SHORT


def test_ppt_degree_relation_checks_one_triple_per_trial():
    result = run_verification(seed=3, trials=30, n_max=3, invariants=[by_name('ppt_degree_relation')])
    tally = result.tally('ppt_degree_relation')
    assert tally.checked >= 30
    assert tally.status == STATUS_PASS


def test_solver_agreement_counts_only_solvable_instances():
    tally = InvariantTally(by_name('solver_enumerator_agreement'))
    unsolvable = Trial(matrix([-1]), np.random.default_rng(0))
    unsolvable.q = vector([-1])
    _run_trial(unsolvable, [tally])
    assert (tally.checked, tally.skipped) == (0, 1)

    solvable = Trial(Matrix.identity(2), np.random.default_rng(0))
    solvable.q = vector([-1, -2])
    _run_trial(solvable, [tally])
    assert tally.checked == 1
    assert tally.failures == 0


def test_e0_r0_iff_r_checks_only_small_e0_members():
    tally = InvariantTally(by_name('e0_r0_iff_r'))
    _run_trial(Trial(matrix([-1, 0], [0, -1]), np.random.default_rng(0)), [tally])
    assert (tally.checked, tally.drawn) == (0, 1)
    _run_trial(Trial(Matrix.identity(2), np.random.default_rng(0)), [tally])
    assert (tally.checked, tally.drawn) == (1, 2)
    _run_trial(Trial(Matrix.identity(4), np.random.default_rng(0)), [tally])
    assert tally.drawn == 2


def test_unreached_check_count_fails_the_run():
    never = Invariant('never_applies', INVARIANT_THEOREM, lambda trial: SKIP, min_checked=1.0)
    settings = Settings(verify=VerifySettings(top_up_factor=1))
    result = run_verification(seed=1, trials=3, n_max=2, settings=settings, invariants=[never])
    tally = result.tally('never_applies')
    assert tally.extra_draws == 3
    assert tally.status == STATUS_SHORT
    assert not result.passed


@pytest.mark.slow
def test_full_suite_passes():
    result = run_verification(seed=1, trials=500, n_max=4)
    assert result.passed, result.invariant_table().to_string()
    assert result.tally('adequacy_modes_agree').checked >= 500
    assert result.tally('ppt_degree_relation').checked >= 500
    assert result.tally('solver_enumerator_agreement').checked >= 200
    assert result.tally('e0_r0_iff_r').drawn >= 500
    assert result.tally('e0_r0_iff_r').checked > 0
    assert result.tally('z_matrix_literal_implication').checked >= 100
