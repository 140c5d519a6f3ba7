import pytest

from src.classes import (
    adequacy_violation,
    classify,
    competence_failure,
    has_trivial_principal_kernels,
    is_column_adequate,
    is_column_competent,
    is_E0,
    is_P0,
    is_R,
    is_R0,
    is_Z,
)
from src.classes import competence
from src.classes.report import FLAG_ADEQUACY_MODES_AGREE
from src.config import load_settings
from src.constants import (
    ADEQUACY_MODE_DIRECT,
    CLASS_COLUMN_ADEQUATE,
    CLASS_COLUMN_COMPETENT,
    CLASS_E0,
    CLASS_NAMES,
    CLASS_NONDEGENERATE,
    CLASS_P,
    CLASS_P0,
    CLASS_R,
    CLASS_R0,
    CLASS_Z,
    ENV_NMAX,
)
from src.errors import CapExceeded, ModeDisagreement
from src.linalg import Matrix, vector
from src.verification import CLASS_EXPECTATIONS
from tests.conftest import matrix


@pytest.mark.parametrize("name", sorted(CLASS_EXPECTATIONS))
def test_fixture_verdicts(name, fixture_matrix):
    expectation = CLASS_EXPECTATIONS[name]
    report = classify(fixture_matrix(name))
    for class_name, expected in expectation.verdicts.items():
        assert report.member(class_name) is expected, class_name
    for class_name, witness in expectation.witnesses.items():
        assert report.verdicts[class_name].witness_vector == vector(witness)


def test_report_lists_every_class_in_order():
    report = classify(Matrix.identity(2))
    assert tuple(report.verdicts) == CLASS_NAMES
    assert all(report.member(name) for name in CLASS_NAMES)
    assert all(report.consistency_flags.values())
    assert report.kernel_basis == []


def test_negative_identity():
    report = classify(matrix([-1, 0], [0, -1]))
    assert report.member(CLASS_Z)
    assert report.member(CLASS_NONDEGENERATE)
    assert report.member(CLASS_COLUMN_COMPETENT)
    assert report.member(CLASS_R0)
    assert not report.member(CLASS_P0)
    assert not report.member(CLASS_E0)
    assert not report.member(CLASS_R)


def test_competence_witness_violates_definition(fixture_matrix):
    A = fixture_matrix('not_competent_2x2')
    sigma, z = competence_failure(A)
    assert sigma.label() == "{2}"
    assert z == vector([0, 1])
    Az = A.apply(z)
    assert all(zi * ai == 0 for zi, ai in zip(z, Az))
    assert any(Az)


def test_competent_matrix_has_no_failure(fixture_matrix):
    assert competence_failure(fixture_matrix('xu_singular')) is None
    assert is_column_competent(fixture_matrix('xu_singular')).member


def test_p0_witness_is_negative_minor(fixture_matrix):
    verdict = is_P0(fixture_matrix('cc_not_p0'))
    assert not verdict.member
    assert verdict.witness_set.label() == "{2}"


def test_adequacy_modes_agree_on_fixtures(fixture_matrix):
    for name in ('competent_p0', 'cc_not_p0', 'kernel_231', 'adequacy_claim_counterexample'):
        A = fixture_matrix(name)
        theorem = is_column_adequate(A, cross_check=False).member
        direct = is_column_adequate(A, ADEQUACY_MODE_DIRECT, cross_check=False).member
        assert theorem == direct, name


def test_direct_adequacy_witness(fixture_matrix):
    A = fixture_matrix('adequacy_claim_counterexample')
    z = adequacy_violation(A)
    Az = A.apply(z)
    assert all(zi * ai <= 0 for zi, ai in zip(z, Az))
    assert any(Az)
    assert adequacy_violation(fixture_matrix('competent_p0')) is None


def test_mode_disagreement_is_raised(monkeypatch, fixture_matrix):
    original = competence._adequate_directly

    def flipped(A):
        verdict = original(A)
        return type(verdict)(verdict.class_name, not verdict.member)

    monkeypatch.setattr(competence, '_adequate_directly', flipped)
    with pytest.raises(ModeDisagreement):
        classify(fixture_matrix('competent_p0'))


def test_unknown_adequacy_mode():
    with pytest.raises(ValueError):
        is_column_adequate(Matrix.identity(2), mode='guess')


def test_z_witness_position():
    verdict = is_Z(matrix([1, -1], [2, 1]))
    assert not verdict.member
    assert verdict.witness_set.label() == "{1,2}"


def test_e0_and_r0_witnesses():
    e0 = is_E0(matrix([-1, 0], [0, 1]))
    assert not e0.member and e0.witness_vector == vector([1, 0])
    r0 = is_R0(matrix([2, -1], [-4, 2]))
    assert not r0.member and r0.witness_vector == vector([1, 2])


def test_r_fails_for_negative_identity():
    assert not is_R(matrix([-1, 0], [0, -1])).member
    assert is_R(Matrix.identity(3)).member


def test_trivial_principal_kernels(fixture_matrix):
    assert has_trivial_principal_kernels(Matrix.identity(3)) == (True, None)
    trivial, sigma = has_trivial_principal_kernels(fixture_matrix('xu_singular'))
    assert not trivial and sigma.label() == "{2}"


def test_consistency_flags_reported(fixture_matrix):
    report = classify(fixture_matrix('adequacy_claim_counterexample'))
    assert report.consistency_flags[FLAG_ADEQUACY_MODES_AGREE]
    assert not report.member(CLASS_COLUMN_ADEQUATE)
    assert not report.member(CLASS_P)


def test_cap_exceeded(monkeypatch):
    monkeypatch.setenv(ENV_NMAX, '1')
    load_settings()
    with pytest.raises(CapExceeded) as info:
        classify(Matrix.identity(2))
    assert (info.value.n, info.value.cap) == (2, 1)
