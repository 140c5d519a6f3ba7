"""
Worked-example fixtures and their expected verdicts.

The matrices live in data/fixtures/*.json; this module holds what each one
is expected to produce and replays the checks.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..classes import classify
from ..config import get_settings
from ..constants import (
    CLASS_COLUMN_ADEQUATE,
    CLASS_COLUMN_COMPETENT,
    CLASS_E0,
    CLASS_NONDEGENERATE,
    CLASS_P,
    CLASS_P0,
    CLASS_R,
    CLASS_R0,
    METHOD_AUTO,
)
from ..data_extractors import MatrixDocument, load_document
from ..lcp import (
    LCPInstance,
    Solution,
    check_local_w_uniqueness,
    check_w_uniqueness_converse,
    enumerate_solutions,
    lemke_solve,
    solution_from_z,
    solve,
    w_solution_set,
)
from ..linalg import vector
from ..utils import format_tuple

FIXTURES_DIR = Path(__file__).resolve().parents[2] / 'data' / 'fixtures'

IntVector = Tuple[int, ...]


@dataclass(frozen=True)
class ClassExpectation:
    verdicts: Dict[str, bool]
    witnesses: Dict[str, IntVector] = field(default_factory=dict)
    kernel: Optional[List[IntVector]] = None


@dataclass(frozen=True)
class FixtureCheck:
    fixture: str
    check: str
    passed: bool
    detail: str = ''


CLASS_EXPECTATIONS: Dict[str, ClassExpectation] = {
    'xu_singular': ClassExpectation({CLASS_COLUMN_COMPETENT: True}),
    'not_competent_2x2': ClassExpectation({CLASS_COLUMN_COMPETENT: False}),
    'nonsingular_not_competent': ClassExpectation(
        {CLASS_COLUMN_COMPETENT: False},
        witnesses={CLASS_COLUMN_COMPETENT: (0, 0, 1)},
    ),
    'cc_not_p0': ClassExpectation({CLASS_COLUMN_COMPETENT: True, CLASS_P0: False}),
    'competent_p0': ClassExpectation(
        {
            CLASS_COLUMN_COMPETENT: True,
            CLASS_P0: True,
            CLASS_COLUMN_ADEQUATE: True,
            CLASS_R0: False,
            CLASS_P: False,
            CLASS_NONDEGENERATE: False,
            CLASS_R: False,
        },
        witnesses={CLASS_R0: (1, 2)},
        kernel=[(1, 2)],
    ),
    'r0_not_competent': ClassExpectation({CLASS_R0: True, CLASS_COLUMN_COMPETENT: False}),
    # z = (0,0,1) has z*(Az) = 0 while Az = (0,1,0), so this one is not competent
    'kernel_231': ClassExpectation(
        {CLASS_COLUMN_COMPETENT: False, CLASS_COLUMN_ADEQUATE: False},
        witnesses={CLASS_COLUMN_COMPETENT: (0, 0, 1)},
        kernel=[(2, 3, 1)],
    ),
    'adequacy_claim_counterexample': ClassExpectation({
        CLASS_COLUMN_COMPETENT: True,
        CLASS_E0: True,
        CLASS_R0: True,
        CLASS_COLUMN_ADEQUATE: False,
    }),
    'lcp_instance_2x2': ClassExpectation({CLASS_COLUMN_COMPETENT: True}, kernel=[(3, 1)]),
    'lcp_instance_3x3': ClassExpectation(
        {CLASS_COLUMN_COMPETENT: False},
        witnesses={CLASS_COLUMN_COMPETENT: (1, 2, 0)},
        kernel=[(2, 1, 1)],
    ),
}


def fixture_path(name: str, directory: Optional[Path] = None) -> Path:
    return (directory or FIXTURES_DIR) / f"{name}.json"


def load_fixture(name: str, directory: Optional[Path] = None) -> MatrixDocument:
    document, _ = load_document(str(fixture_path(name, directory)))
    return document


def _check(results: List[FixtureCheck], fixture: str, check: str, passed: bool, detail: str = '') -> None:
    results.append(FixtureCheck(fixture, check, bool(passed), detail))
    if not passed:
        logging.error(f"Fixture {fixture}: {check} failed {detail}")


def _replay_classes(name: str, document: MatrixDocument, results: List[FixtureCheck]) -> None:
    expectation = CLASS_EXPECTATIONS[name]
    report = classify(document.A)
    for class_name, expected in expectation.verdicts.items():
        actual = report.member(class_name)
        _check(results, name, f"{class_name} = {expected}", actual == expected, f"got {actual}")
    for class_name, witness in expectation.witnesses.items():
        actual = report.verdicts[class_name].witness_vector
        _check(results, name, f"{class_name} witness {witness}", actual == vector(witness),
               f"got {format_tuple(actual) if actual else None}")
    if expectation.kernel is not None:
        expected_kernel = [vector(v) for v in expectation.kernel]
        _check(results, name, 'kernel basis', report.kernel_basis == expected_kernel,
               f"got {[format_tuple(v) for v in report.kernel_basis]}")


def _replay_lcp_2x2(document: MatrixDocument, results: List[FixtureCheck]) -> None:
    name = 'lcp_instance_2x2'
    inst = LCPInstance(document.A, document.q)
    pieces = enumerate_solutions(inst)
    _check(results, name, 'exactly one solution piece', len(pieces) == 1, f"got {len(pieces)}")
    if len(pieces) != 1:
        return
    piece = pieces[0]
    for z in ((1, 0), (4, 1)):
        _check(results, name, f"piece contains z = {z}", piece.contains(vector(z)))
    _check(results, name, 'base point z = (1,0)', piece.particular.z == vector((1, 0)),
           f"got {format_tuple(piece.particular.z)}")
    _check(results, name, 'ray (3,1)', piece.ray_basis == [vector((3, 1))])
    _check(results, name, 'w constant (0,0)', piece.w_constant and piece.particular.w == vector((0, 0)))
    w_set = w_solution_set(inst, pieces)
    _check(results, name, 'w-solution set {(0,0)}', w_set.is_finite and w_set.finite == [vector((0, 0))])

    lemke = lemke_solve(inst)
    _check(results, name, "Lemke solves inside the piece or ends on a ray",
           not isinstance(lemke, Solution) or piece.contains(lemke.z))
    _check(results, name, "auto solve finds a solution", solve(inst, METHOD_AUTO).solvable)

    solution = solution_from_z(inst, vector((4, 1)))
    certificate = check_local_w_uniqueness(inst, solution)
    _check(results, name, 'certificate fails with z_beta = (3,1)',
           not certificate.certificate_holds and certificate.violating_pair == ((), vector((3, 1))))
    converse = check_w_uniqueness_converse(inst, solution)
    _check(results, name, 'converse fails with kernel (3,1)', not converse.holds and converse.witness == vector((3, 1)))


def _replay_lcp_3x3(document: MatrixDocument, results: List[FixtureCheck]) -> None:
    name = 'lcp_instance_3x3'
    inst = LCPInstance(document.A, document.q)
    pieces = enumerate_solutions(inst)
    target = vector((4, 4, 1))
    holding = [piece for piece in pieces if piece.contains(target)]
    _check(results, name, 'a piece contains z = (4,4,1)', bool(holding))
    _check(results, name, 'w = 0 at z = (4,4,1)', inst.w_of(target) == vector((0, 0, 0)))
    # the support {1,2} piece moves w_3 along z = (s, 2s-1, 0)
    w_set = w_solution_set(inst, pieces)
    _check(results, name, 'w-solution set infinite', not w_set.is_finite)


def _theorem_one_evidence(name: str, document: MatrixDocument, results: List[FixtureCheck], rng) -> None:
    """Sampled q: competent matrices must give finite w-solution sets."""
    settings = get_settings().verify
    competent = classify(document.A).member(CLASS_COLUMN_COMPETENT)
    infinite = 0
    for _ in range(settings.q_samples):
        q = tuple(Fraction(int(x)) for x in rng.integers(settings.entry_min, settings.entry_max + 1, size=document.n))
        if not w_solution_set(LCPInstance(document.A, q)).is_finite:
            infinite += 1
    detail = f"{infinite} of {settings.q_samples} sampled q give an infinite w-solution set"
    if competent:
        _check(results, name, 'finite w-solution sets (competent)', infinite == 0, detail)
    else:
        # sampling can only give evidence here, so this never fails
        _check(results, name, 'w-solution evidence (not competent)', True, detail)


def replay_fixtures(directory: Optional[Path] = None, seed: Optional[int] = None) -> List[FixtureCheck]:
    """
    Replays every fixture and its expected verdicts.

    Returns:
        list: One FixtureCheck per asserted fact.
    """
    settings = get_settings().verify
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    results: List[FixtureCheck] = []
    for name in CLASS_EXPECTATIONS:
        document = load_fixture(name, directory)
        logging.info(f"Replaying fixture {name}")
        _replay_classes(name, document, results)
        _theorem_one_evidence(name, document, results, rng)
    _replay_lcp_2x2(load_fixture('lcp_instance_2x2', directory), results)
    _replay_lcp_3x3(load_fixture('lcp_instance_3x3', directory), results)
    failed = sum(not r.passed for r in results)
    logging.info(f"Fixture replay: {len(results) - failed} of {len(results)} checks passed")
    return results
