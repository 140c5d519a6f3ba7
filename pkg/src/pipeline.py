"""
Command orchestration.

One cmd_* function per CLI command. Each loads its matrix document, runs the
library operation and packs the outcome into a RunReport whose payload and
tables hold exact rational strings only.
"""

import logging
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from .classes import classify
from .config import get_settings
from .constants import ADEQUACY_MODE_THEOREM, EXIT_FAILURE, EXIT_SUCCESS, METHOD_AUTO, METHOD_ENUMERATE
from .data_extractors import MatrixDocument, load_document
from .degree import local_degree, ppt_image, verify_ppt_degree_relation
from .errors import DocumentParseError, MissingVector
from .formatters import RunReport
from .lcp import (
    LCPInstance,
    Solution,
    SolutionPiece,
    check_local_w_uniqueness,
    check_w_uniqueness_converse,
    solution_from_z,
    solve,
    verify_solution,
    w_solution_set,
)
from .linalg import IndexSet, Vector, ppt
from .utils import format_rational, format_rows, format_tuple, format_vector, parse_rational
from .verification import run_verification

SAMPLED_EVIDENCE_NOTE = (
    "statements quantified over all q are sampled; a pass is evidence, a failure is a counterexample"
)


def _yes_no(value: bool) -> str:
    return 'yes' if value else 'no'


def _load(input_path: str) -> Tuple[MatrixDocument, str]:
    return load_document(input_path, get_settings().input_encoding)


def _require_q(document: MatrixDocument, command: str) -> Vector:
    if document.q is None:
        raise MissingVector(f"'{command}' needs q; add a \"q\" entry to the document")
    return document.q


def _matrix_table(rows) -> pd.DataFrame:
    rows = format_rows(rows)
    return pd.DataFrame(rows, columns=[str(j + 1) for j in range(len(rows[0]) if rows else 0)])


def _finish(report: RunReport, started: float) -> RunReport:
    report.elapsed_ms = str(int((time.perf_counter() - started) * 1000))
    logging.info(f"Command {report.command} finished in {report.elapsed_ms} ms")
    return report


def cmd_classify(input_path: str, adequacy_mode: str = ADEQUACY_MODE_THEOREM) -> RunReport:
    """
    Classifies the matrix of a document; q, if present, is ignored.

    Raises:
        DocumentParseError: If the document is malformed.
        ModeDisagreement: If the adequacy procedures disagree.
        InconsistentReport: If a cross-check fails.
        CapExceeded: If n is above the enumeration cap.
    """
    started = time.perf_counter()
    try:
        document, digest = _load(input_path)
        report = classify(document.A, adequacy_mode)
    except Exception as e:
        logging.error(f"Error classifying {input_path}: {e}")
        raise

    classes = {}
    rows = []
    for name, verdict in report.verdicts.items():
        witness_set = verdict.witness_set.one_based() if verdict.witness_set is not None else None
        classes[name] = {
            'member': verdict.member,
            'witness_vector': format_vector(verdict.witness_vector),
            'witness_set': [str(i) for i in witness_set] if witness_set is not None else None,
            'note': verdict.certificate_note,
        }
        rows.append({
            'class': name,
            'member': _yes_no(verdict.member),
            'witness': format_tuple(verdict.witness_vector) if verdict.witness_vector is not None else '',
            'witness_set': verdict.witness_set.label() if verdict.witness_set is not None else '',
            'note': verdict.certificate_note,
        })

    minors = [{'alpha': alpha.label(), 'det': format_rational(value)} for alpha, value in report.minors]
    kernel = [format_vector(v) for v in report.kernel_basis]
    results: Dict[str, Any] = {
        'n': str(document.n),
        'A': format_rows(document.A.rows),
        'adequacy_mode': adequacy_mode,
        'classes': classes,
        'consistency_flags': report.consistency_flags,
        'principal_minors': minors,
        'kernel_basis': kernel,
    }
    tables = {
        'classes': pd.DataFrame(rows, columns=['class', 'member', 'witness', 'witness_set', 'note']),
        'principal_minors': pd.DataFrame(minors, columns=['alpha', 'det']),
        'kernel_basis': pd.DataFrame({'vector': [format_tuple(v) for v in report.kernel_basis]}),
        'consistency': pd.DataFrame(
            [{'check': name, 'holds': _yes_no(ok)} for name, ok in report.consistency_flags.items()],
            columns=['check', 'holds'],
        ),
    }
    return _finish(RunReport('classify', digest, results, tables), started)


def _solution_payload(solution: Solution) -> Dict[str, Any]:
    return {'z': format_vector(solution.z), 'w': format_vector(solution.w)}


def _piece_payload(piece: SolutionPiece) -> Dict[str, Any]:
    return {
        'support': piece.support.label(),
        'z': format_vector(piece.particular.z),
        'w': format_vector(piece.particular.w),
        'rays': [format_vector(d) for d in piece.ray_basis],
        'dimension': str(piece.dimension),
        'w_constant': piece.w_constant,
    }


def cmd_solve(input_path: str, method: str = METHOD_AUTO) -> RunReport:
    """
    Solves LCP(q, A) for a document with q.

    Every printed solution, including each piece's particular point, is
    re-verified against w = q + Az, w, z >= 0, w'z = 0 before output.

    Raises:
        MissingVector: If the document has no q.
        InvalidSolution: If a computed solution fails re-verification.
        CapExceeded: If enumeration is needed above the cap.
    """
    started = time.perf_counter()
    try:
        document, digest = _load(input_path)
        inst = LCPInstance(document.A, _require_q(document, 'solve'))
        outcome = solve(inst, method)
    except Exception as e:
        logging.error(f"Error solving {input_path}: {e}")
        raise

    results: Dict[str, Any] = {
        'requested_method': method,
        'method': outcome.method,
        'solvable': outcome.solvable,
    }
    tables: Dict[str, pd.DataFrame] = {}
    if outcome.ray_termination is not None:
        ray = outcome.ray_termination
        results['ray_termination'] = {
            'iterations': str(ray.iterations),
            'entering': ray.entering,
            'z0': format_rational(ray.z0),
        }
    if outcome.solution is not None:
        solution = verify_solution(inst, outcome.solution.w, outcome.solution.z)
        results['solution'] = _solution_payload(solution)
        tables['solution'] = pd.DataFrame({
            'index': [str(i + 1) for i in range(inst.n)],
            'z': format_vector(solution.z),
            'w': format_vector(solution.w),
        })
    if outcome.method == METHOD_ENUMERATE:
        for piece in outcome.pieces:
            verify_solution(inst, piece.particular.w, piece.particular.z)
        results['pieces'] = [_piece_payload(piece) for piece in outcome.pieces]
        tables['pieces'] = pd.DataFrame(
            [
                {
                    'support': piece.support.label(),
                    'z': format_tuple(piece.particular.z),
                    'w': format_tuple(piece.particular.w),
                    'rays': '; '.join(format_tuple(d) for d in piece.ray_basis),
                    'dimension': str(piece.dimension),
                    'w_constant': _yes_no(piece.w_constant),
                }
                for piece in outcome.pieces
            ],
            columns=['support', 'z', 'w', 'rays', 'dimension', 'w_constant'],
        )
        w_set = w_solution_set(inst, outcome.pieces)
        if w_set.is_finite:
            results['w_solution_set'] = {'finite': True, 'vectors': [format_vector(w) for w in w_set.finite]}
        else:
            results['w_solution_set'] = {'finite': False, 'varying_support': w_set.infinite_witness.support.label()}
    return _finish(RunReport('solve', digest, results, tables), started)


def cmd_degree(input_path: str, beta: Optional[str] = None) -> RunReport:
    """
    Local degree of f_A at q; with beta also compares it with the pivoted degree.

    Raises:
        MissingVector: If the document has no q.
        IndexSetParseError: If beta is not a valid index set.
        DegenerateQ: If q is degenerate with respect to A.
    """
    started = time.perf_counter()
    try:
        document, digest = _load(input_path)
        q = _require_q(document, 'degree')
        pivot_set = None if beta is None else IndexSet.parse(beta, document.n)
        result = local_degree(document.A, q)
    except Exception as e:
        logging.error(f"Error computing the degree for {input_path}: {e}")
        raise

    contributions = [{'alpha': alpha.label(), 'index': str(index)} for alpha, index in result.contributions]
    results: Dict[str, Any] = {
        'degree': str(result.value),
        'q_nondegenerate': result.q_nondegenerate,
        'contributions': contributions,
    }
    tables = {'contributions': pd.DataFrame(contributions, columns=['alpha', 'index'])}

    if pivot_set is not None:
        relation = verify_ppt_degree_relation(document.A, q, pivot_set)
        results['ppt_relation'] = {
            'beta': pivot_set.label(),
            'applicable': relation.applicable,
            'failed_preconditions': relation.failed_preconditions,
            'pivot_sign': None if relation.pivot_sign is None else str(relation.pivot_sign),
            'q_prime': format_vector(relation.q_prime),
            'degree': None if relation.original is None else str(relation.original.value),
            'pivoted_degree': None if relation.transformed is None else str(relation.transformed.value),
            'holds': relation.holds,
        }
        tables['ppt_relation'] = pd.DataFrame(
            [{'field': key, 'value': '' if value is None else str(value)}
             for key, value in results['ppt_relation'].items()],
            columns=['field', 'value'],
        )
    return _finish(RunReport('degree', digest, results, tables), started)


def cmd_ppt(input_path: str, alpha: str = '') -> RunReport:
    """
    Principal pivot transform on a 1-based index set such as "1,3".

    When the document has q, the pivoted constant vector is reported as well.

    Raises:
        SingularPivot: If A_αα is singular.
        IndexSetParseError: If alpha is not a valid index set.
    """
    started = time.perf_counter()
    try:
        document, digest = _load(input_path)
        pivot_set = IndexSet.parse(alpha, document.n)
        result = ppt(document.A, pivot_set)
    except Exception as e:
        logging.error(f"Error pivoting {input_path} on {alpha!r}: {e}")
        raise

    results: Dict[str, Any] = {
        'alpha': pivot_set.label(),
        'pivot_det_sign': str(result.pivot_det_sign),
        'A_prime': format_rows(result.transformed.rows),
    }
    tables = {'A_prime': _matrix_table(result.transformed.rows)}
    if document.q is not None:
        q_prime = ppt_image(document.A, document.q, pivot_set)
        results['q_prime'] = format_vector(q_prime)
        tables['q_prime'] = pd.DataFrame({'index': [str(i + 1) for i in range(document.n)],
                                          'q_prime': format_vector(q_prime)})
    return _finish(RunReport('ppt', digest, results, tables), started)


def parse_z(text: str, n: int) -> Vector:
    """
    Parses --z as comma-separated exact rationals.

    Raises:
        DocumentParseError: On a malformed entry or the wrong number of entries.
    """
    parts = [part.strip() for part in text.split(',')] if text.strip() else []
    if len(parts) != n:
        raise DocumentParseError(f"--z has {len(parts)} entries, expected {n}")
    values: List[Fraction] = []
    for position, part in enumerate(parts, start=1):
        try:
            values.append(parse_rational(part))
        except ValueError as e:
            raise DocumentParseError(f"--z entry {position}: {e}") from e
    return tuple(values)


def cmd_wcheck(input_path: str, z: str) -> RunReport:
    """
    Runs the local w-uniqueness certificate and its converse at a given solution z.

    Raises:
        MissingVector: If the document has no q.
        InvalidSolution: If z does not solve LCP(q, A).
        SingularPivot: If A_αα is singular at that solution.
    """
    started = time.perf_counter()
    try:
        document, digest = _load(input_path)
        inst = LCPInstance(document.A, _require_q(document, 'wcheck'))
        solution = solution_from_z(inst, parse_z(z, document.n))
        verdict = check_local_w_uniqueness(inst, solution)
        converse = check_w_uniqueness_converse(inst, solution)
    except Exception as e:
        logging.error(f"Error checking w-uniqueness for {input_path}: {e}")
        raise

    pair = None
    w_alpha, z_beta = verdict.violating_pair or ((), ())
    if verdict.violating_pair is not None:
        pair = {'w_alpha': format_vector(w_alpha), 'z_beta': format_vector(z_beta)}
    results: Dict[str, Any] = {
        'solution': _solution_payload(solution),
        'alpha': verdict.alpha.label(),
        'beta': verdict.beta.label(),
        'certificate_holds': verdict.certificate_holds,
        'violating_pair': pair,
        'converse': {
            'holds': converse.holds,
            'witness': format_vector(converse.witness),
        },
    }
    tables = {
        'w_uniqueness': pd.DataFrame(
            [
                {'field': 'alpha', 'value': verdict.alpha.label()},
                {'field': 'beta', 'value': verdict.beta.label()},
                {'field': 'certificate_holds', 'value': _yes_no(verdict.certificate_holds)},
                {'field': 'violating w_alpha', 'value': format_tuple(w_alpha) if pair else ''},
                {'field': 'violating z_beta', 'value': format_tuple(z_beta) if pair else ''},
                {'field': 'converse_holds', 'value': _yes_no(converse.holds)},
                {'field': 'converse witness',
                 'value': format_tuple(converse.witness) if converse.witness is not None else ''},
            ],
            columns=['field', 'value'],
        )
    }
    return _finish(RunReport('wcheck', digest, results, tables), started)


def cmd_verify(
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    n_max: Optional[int] = None,
    fixtures: bool = False,
) -> RunReport:
    """
    Runs the seeded invariant suite, optionally with the fixture replay.

    Failing invariants are results, not errors: the report's exit code is 1
    when HarnessResult.passed is false and 0 otherwise. A falsified claim
    still passes.
    """
    started = time.perf_counter()
    try:
        outcome = run_verification(seed, trials, n_max, include_fixtures=fixtures)
    except Exception as e:
        logging.error(f"Error running verification: {e}")
        raise

    invariants = outcome.invariant_table()
    results: Dict[str, Any] = {
        'passed': outcome.passed,
        'trials': str(outcome.trials),
        'n_max': str(outcome.n_max),
        'note': SAMPLED_EVIDENCE_NOTE,
        'invariants': invariants.to_dict(orient='records'),
    }
    tables = {'invariants': invariants}
    if fixtures:
        fixture_table = outcome.fixture_table()
        results['fixtures'] = fixture_table.to_dict(orient='records')
        tables['fixtures'] = fixture_table
    return _finish(
        RunReport(
            'verify',
            None,
            results,
            tables,
            seed=outcome.seed,
            exit_code=EXIT_SUCCESS if outcome.passed else EXIT_FAILURE,
        ),
        started,
    )
