import json
import re
from fractions import Fraction

import openpyxl
import pytest

from src.constants import (
    CLASS_COLUMN_COMPETENT,
    CLASS_P0,
    ENV_NMAX,
    EXIT_CAP_EXCEEDED,
    EXIT_INCONSISTENT,
    EXIT_PARSE_ERROR,
    EXIT_PRECONDITION,
    EXIT_SUCCESS,
    SHEET_SUMMARY,
)
from src.main import main

DECIMAL = re.compile(r'\d\.\d')


def run_json(capsys, *argv):
    code = main(['--json', *argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return str(path)


def test_classify_fixture(capsys, fixture_file):
    code, payload = run_json(capsys, 'classify', fixture_file('cc_not_p0'))
    assert code == EXIT_SUCCESS
    assert payload['command'] == 'classify'
    assert payload['input_digest'].startswith('sha256:')
    classes = payload['results']['classes']
    assert classes[CLASS_COLUMN_COMPETENT]['member'] is True
    assert classes[CLASS_P0]['member'] is False
    assert classes[CLASS_P0]['witness_set'] == ['2']


def test_classify_text_output(capsys, fixture_file):
    assert main(['classify', fixture_file('xu_singular')]) == EXIT_SUCCESS
    out = capsys.readouterr().out
    assert 'command: classify' in out
    assert CLASS_COLUMN_COMPETENT in out


def test_bad_denominator_exits_2(capsys, tmp_path):
    path = write(tmp_path, 'bad.json', '{"n": 1, "A": [["1/0"]]}')
    assert main(['classify', path]) == EXIT_PARSE_ERROR
    assert 'zero denominator' in capsys.readouterr().err


def test_missing_input_exits_2(tmp_path):
    assert main(['classify', str(tmp_path / 'absent.json')]) == EXIT_PARSE_ERROR


def test_cap_exceeded_exits_5(monkeypatch, fixture_file):
    monkeypatch.setenv(ENV_NMAX, '1')
    assert main(['classify', fixture_file('xu_singular')]) == EXIT_CAP_EXCEEDED


def test_mode_disagreement_exits_3(monkeypatch, fixture_file):
    from src.classes import competence

    original = competence._adequate_directly
    monkeypatch.setattr(
        competence,
        '_adequate_directly',
        lambda A: type(original(A))(original(A).class_name, not original(A).member),
    )
    assert main(['classify', fixture_file('competent_p0')]) == EXIT_INCONSISTENT


def test_solve_enumerate_2x2(capsys, fixture_file):
    code, payload = run_json(capsys, 'solve', fixture_file('lcp_instance_2x2'), '--method', 'enumerate')
    assert code == EXIT_SUCCESS
    pieces = payload['results']['pieces']
    assert len(pieces) == 1
    assert pieces[0]['z'] == ['1', '0']
    assert pieces[0]['rays'] == [['3', '1']]
    assert pieces[0]['w'] == ['0', '0']
    assert payload['results']['w_solution_set'] == {'finite': True, 'vectors': [['0', '0']]}


def test_solve_lemke_identity(capsys, tmp_path):
    path = write(tmp_path, 'id.json', '{"n": 2, "A": [[1, 0], [0, 1]], "q": [1, 1]}')
    code, payload = run_json(capsys, 'solve', path, '--method', 'lemke')
    assert code == EXIT_SUCCESS
    assert payload['results']['solution'] == {'z': ['0', '0'], 'w': ['1', '1']}


def test_solve_auto_falls_back_after_ray_termination(capsys, fixture_file):
    code, payload = run_json(capsys, 'solve', fixture_file('lcp_instance_2x2'))
    assert code == EXIT_SUCCESS
    results = payload['results']
    assert results['requested_method'] == 'auto'
    assert results['method'] == 'enumerate'
    assert 'ray_termination' in results
    assert 'solution' not in results
    assert [piece['z'] for piece in results['pieces']] == [['1', '0']]


def test_solve_auto_keeps_the_lemke_solution(capsys, tmp_path):
    path = write(tmp_path, 'id.json', '{"n": 2, "A": [[1, 0], [0, 1]], "q": [-1, -2]}')
    code, payload = run_json(capsys, 'solve', path)
    assert code == EXIT_SUCCESS
    results = payload['results']
    assert results['method'] == 'lemke'
    assert results['solution'] == {'z': ['1', '2'], 'w': ['0', '0']}
    assert 'pieces' not in results
    assert 'ray_termination' not in results


def test_solve_auto_on_3x3_instance(capsys, fixture_file):
    code, payload = run_json(capsys, 'solve', fixture_file('lcp_instance_3x3'))
    assert code == EXIT_SUCCESS
    results = payload['results']
    assert results['solvable'] is True
    if results['method'] == 'lemke':
        z = [Fraction(x) for x in results['solution']['z']]
        w = [Fraction(x) for x in results['solution']['w']]
        assert all(x >= 0 for x in z + w)
        assert sum(a * b for a, b in zip(z, w)) == 0
        assert 'pieces' not in results
    else:
        assert results['method'] == 'enumerate'
        assert 'ray_termination' in results
        assert results['w_solution_set']['finite'] is False


def test_solve_without_q_exits_4(fixture_file):
    assert main(['solve', fixture_file('xu_singular')]) == EXIT_PRECONDITION


def test_degree_negative_identity(capsys, tmp_path):
    path = write(tmp_path, 'neg.json', '{"n": 2, "A": [[-1, 0], [0, -1]], "q": [1, 1]}')
    code, payload = run_json(capsys, 'degree', path)
    assert code == EXIT_SUCCESS
    assert payload['results']['degree'] == '0'
    assert len(payload['results']['contributions']) == 4


def test_degree_with_beta(capsys, tmp_path):
    path = write(tmp_path, 'id.json', '{"n": 2, "A": [[1, 0], [0, 1]], "q": [1, 1]}')
    code, payload = run_json(capsys, 'degree', path, '--beta', '1')
    assert code == EXIT_SUCCESS
    relation = payload['results']['ppt_relation']
    assert relation['holds'] is True
    assert relation['q_prime'] == ['-1', '1']


def test_degenerate_q_exits_4(tmp_path):
    path = write(tmp_path, 'deg.json', '{"n": 2, "A": [[1, 0], [0, 1]], "q": [0, 1]}')
    assert main(['degree', path]) == EXIT_PRECONDITION


def test_ppt_empty_alpha_echoes_matrix(capsys, fixture_file):
    code, payload = run_json(capsys, 'ppt', fixture_file('cc_not_p0'), '--alpha', '')
    assert code == EXIT_SUCCESS
    assert payload['results']['A_prime'] == [['2', '1'], ['1', '-1']]


def test_ppt_fractions(capsys, fixture_file):
    code, payload = run_json(capsys, 'ppt', fixture_file('cc_not_p0'), '--alpha', '1')
    assert code == EXIT_SUCCESS
    assert payload['results']['A_prime'] == [['1/2', '-1/2'], ['1/2', '-3/2']]


def test_ppt_singular_exits_4(fixture_file):
    assert main(['ppt', fixture_file('xu_singular'), '--alpha', '2']) == EXIT_PRECONDITION


@pytest.mark.parametrize("argv", [
    ['ppt', 'cc_not_p0', '--alpha', '7'],
    ['ppt', 'cc_not_p0', '--alpha', 'x'],
    ['degree', 'lcp_instance_2x2', '--beta', '1,1'],
])
def test_bad_index_set_exits_2(capsys, fixture_file, argv):
    command, name, *rest = argv
    assert main([command, fixture_file(name), *rest]) == EXIT_PARSE_ERROR
    assert 'index' in capsys.readouterr().err


def test_wcheck_2x2(capsys, fixture_file):
    code, payload = run_json(capsys, 'wcheck', fixture_file('lcp_instance_2x2'), '--z', '4,1')
    assert code == EXIT_SUCCESS
    results = payload['results']
    assert results['alpha'] == '{}'
    assert results['beta'] == '{1,2}'
    assert results['certificate_holds'] is False
    assert results['violating_pair'] == {'w_alpha': [], 'z_beta': ['3', '1']}
    assert results['converse'] == {'holds': False, 'witness': ['3', '1']}


def test_wcheck_non_solution_exits_4(fixture_file):
    assert main(['wcheck', fixture_file('lcp_instance_2x2'), '--z', '0,0']) == EXIT_PRECONDITION


def test_wcheck_bad_z_exits_2(fixture_file):
    assert main(['wcheck', fixture_file('lcp_instance_2x2'), '--z', '4.0,1']) == EXIT_PARSE_ERROR


def test_verify_zero_trials_is_vacuous_pass(capsys):
    code, payload = run_json(capsys, 'verify', '--trials', '0', '--seed', '7')
    assert code == EXIT_SUCCESS
    assert payload['seed'] == '7'
    assert payload['results']['passed'] is True
    assert all(row['checked'] == '0' for row in payload['results']['invariants'])


@pytest.mark.parametrize("argv", [
    ['classify', 'kernel_231'],
    ['solve', 'lcp_instance_3x3', '--method', 'enumerate'],
    ['ppt', 'competent_p0', '--alpha', '1'],
])
def test_reports_never_contain_decimals(capsys, fixture_file, argv):
    command, name, *rest = argv
    code, payload = run_json(capsys, command, fixture_file(name), *rest)
    assert code == EXIT_SUCCESS
    assert not DECIMAL.search(json.dumps(payload['results']))


def test_xlsx_export(capsys, tmp_path, fixture_file):
    target = tmp_path / 'out' / 'report.xlsx'
    assert main(['--xlsx', str(target), 'classify', fixture_file('competent_p0')]) == EXIT_SUCCESS
    workbook = openpyxl.load_workbook(target)
    assert workbook.sheetnames[0] == SHEET_SUMMARY
    assert 'classes' in workbook.sheetnames
    sheet = workbook['classes']
    assert sheet['A1'].value == 'class'
    assert sheet['A1'].font.bold
    assert sheet.freeze_panes == 'A2'
