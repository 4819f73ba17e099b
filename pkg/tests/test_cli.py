import json
import os

import pytest

from config import APP_VERSION, QUIVER_DIR
from ui.cli import main
from utils.constants import (EXIT_BUDGET, EXIT_ERROR, EXIT_INCONCLUSIVE, EXIT_NOT_COPRIME,
                             EXIT_OK, TORIC_FIXTURE_NAMES)

K3 = os.path.join(QUIVER_DIR, 'k3.json')
SEGRE6 = os.path.join(QUIVER_DIR, 'segre6.json')


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_certify_kronecker(capsys):
    code, out, _ = run(capsys, 'certify', K3, '-d', '2,3')
    assert code == EXIT_OK
    certificate = json.loads(out)
    assert list(certificate) == ['status', 'dimension', 'picard_rank', 'index', 'theta',
                                 'witness', 'notes']
    assert certificate['status'] == 'Certified'
    assert certificate['index'] == 3
    assert certificate['theta'] == [9, -6]
    assert certificate['witness'] is None
    assert certificate['notes'] and all(isinstance(note, str) for note in certificate['notes'])


def test_certify_segre_exits_not_coprime(capsys):
    code, out, _ = run(capsys, 'certify', SEGRE6, '-d', '1,1,1,1,1,1,2')
    assert code == EXIT_NOT_COPRIME
    assert json.loads(out)['witness'] == [0, 0, 0, 1, 1, 1, 1]


def test_certify_inconclusive_and_fixture_default_vector(capsys, tmp_path):
    path = tmp_path / 's3.json'
    path.write_text(json.dumps({'n': 4, 'arrows': [[0, 3, 1], [1, 3, 1], [2, 3, 1]]}))
    code, out, _ = run(capsys, 'certify', str(path), '-d', '1,1,1,2')
    assert code == EXIT_INCONCLUSIVE
    assert json.loads(out)['status'] == 'Inconclusive'

    code, out, _ = run(capsys, 'certify', '@s5')
    assert code == EXIT_OK
    assert json.loads(out)['dimension'] == 2


def test_certify_malformed_json(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"n": 2, "arrows": [[0, 1')
    code, out, err = run(capsys, 'certify', str(path), '-d', '1,1')
    assert code == EXIT_ERROR
    assert out == ''
    assert 'Malformed JSON' in err


@pytest.mark.parametrize("argv", [
    ['certify', K3, '-d', '2,x'],
    ['certify', K3, '-d', '1,2,3'],
    ['certify', K3],
    ['certify', '@nope', '-d', '1'],
    ['certify'],
    ['no-such-command'],
    [],
])
def test_usage_errors_exit_one(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_ERROR


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, 'certify', '@s5', '--budget', '10')
    assert code == EXIT_BUDGET
    assert 'budget' in err


def test_version(capsys):
    code, out, _ = run(capsys, '--version')
    assert code == EXIT_OK
    assert APP_VERSION in out


@pytest.mark.parametrize("argv, expected", [
    (['family', 'subspace', '-m', '5', '-d', '2'], (2, 5, 1)),
    (['family', 'kronecker', '-m', '3', '-d', '1', '-e', '1'], (2, 1, 3)),
    (['family', 'thickened', '-m', '3', '-k', '2', '-d', '2'], (6, 3, 2)),
])
def test_family(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['agree']
    prediction = report['prediction']
    assert (prediction['dim'], prediction['rank'], prediction['index']) == expected


def test_family_errors(capsys):
    assert run(capsys, 'family', 'grassmann', '-m', '2')[0] == EXIT_ERROR
    assert run(capsys, 'family', 'subspace', '-m', '5')[0] == EXIT_ERROR
    assert run(capsys, 'family', 'subspace', '-m', '0', '-d', '2')[0] == EXIT_ERROR
    assert run(capsys, 'family', 'subspace', '-m', '5', '-d', '0')[0] == EXIT_ERROR
    assert run(capsys, 'family', 'kronecker', '-m', '0', '-d', '1', '-e', '1')[0] == EXIT_ERROR


def test_family_kronecker_accepts_zero_entries(capsys):
    code, out, _ = run(capsys, 'family', 'kronecker', '-m', '3', '-d', '0', '-e', '1')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['params'] == {'m': 3, 'd': 0, 'e': 1}
    assert report['prediction']['dim'] == 0
    assert report['certificate']['dimension'] == 0
    assert report['agree']


def test_chambers_same_chamber(capsys):
    code, out, _ = run(capsys, 'chambers', K3, '-d', '2,3', '--theta', '9,-6', '--theta2', '3,-2')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['same_chamber'] is True
    assert report['in_chamber_interior'] is True
    assert report['sign_vector']['length'] == 10
    assert report['sign_vector']['zero_count'] == 0


def test_chambers_ample(capsys):
    code, out, _ = run(capsys, 'chambers', K3, '-d', '2,3', '--theta', '9,-6',
                       '--theta2', '1,0', '--ample')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['ample'] == 'Ample'
    assert report['theta2'] == [3, -2]


def test_chambers_rejects_stability_off_d(capsys):
    code, _, _ = run(capsys, 'chambers', K3, '-d', '2,3', '--theta', '1,0')
    assert code == EXIT_ERROR


def test_checks_kronecker_min_dim(capsys):
    code, out, _ = run(capsys, 'checks', 'kronecker-min-dim', '-m', '3', '--bound', '12')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['passed']
    assert report['reports'][0]['equality_pairs'] == [[1, 1]]


def test_checks_mukai_and_sweep_export(capsys, tmp_path):
    code, out, _ = run(capsys, 'checks', 'mukai', '--max-m', '3', '--max-k', '3')
    assert code == EXIT_OK
    assert json.loads(out)['passed']

    path = tmp_path / 'subspace.csv'
    code, out, _ = run(capsys, 'checks', 'subspace', '--max-m', '5', '--max-d', '4',
                       '--export', str(path))
    assert code == EXIT_OK
    assert 'results' not in json.loads(out)
    lines = path.read_text().strip().splitlines()
    assert lines[0].startswith('m,d,status')
    assert len(lines) == 1 + 5 * 4


def test_checks_unknown(capsys):
    assert run(capsys, 'checks', 'hodge')[0] == EXIT_ERROR


def test_checks_export_rejected(capsys, tmp_path):
    path = tmp_path / 'mukai.csv'
    assert run(capsys, 'checks', 'mukai', '--export', str(path))[0] == EXIT_ERROR
    assert run(capsys, 'checks', 'subspace', '--export', str(tmp_path / 'x.txt'))[0] == EXIT_ERROR
    assert not path.exists()


def test_toric_enumerate(capsys, tmp_path):
    path = tmp_path / 'catalog.csv'
    code, out, _ = run(capsys, 'toric-enumerate', '-n', '3', '--max-arrows', '4',
                       '--export', str(path))
    assert code == EXIT_OK
    catalog = json.loads(out)
    assert {'spec': {'n': 3, 'arrows': [[0, 2, 2], [1, 2, 2]]}, 'dim': 2, 'rank': 2, 'index': 2} in catalog
    lines = path.read_text().strip().splitlines()
    assert lines[0] == 'n,arrows,total_arrows,dim,rank,index'
    assert len(lines) == 1 + len(catalog)


def test_toric_enumerate_output_independent_of_jobs(capsys):
    _, first, _ = run(capsys, 'toric-enumerate', '-n', '3', '--max-arrows', '5')
    _, second, _ = run(capsys, 'toric-enumerate', '-n', '3', '--max-arrows', '5', '--jobs', '2')
    assert first == second


def test_toric_enumerate_budget(capsys):
    code, _, _ = run(capsys, 'toric-enumerate', '-n', '3', '--max-arrows', '4', '--budget', '5')
    assert code == EXIT_BUDGET


def test_toric_enumerate_bad_export(capsys):
    code, _, _ = run(capsys, 'toric-enumerate', '-n', '3', '--max-arrows', '4', '--export', 'a.txt')
    assert code == EXIT_ERROR


@pytest.mark.parametrize("name", TORIC_FIXTURE_NAMES)
def test_toric_check_fixtures(capsys, name):
    code, out, _ = run(capsys, 'toric-check', '@' + name)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['conditions_ok']
    assert report['agree']
    assert report['matches_expected']


def test_toric_check_failing_quiver(capsys, tmp_path):
    path = tmp_path / 'chain.json'
    path.write_text(json.dumps({'n': 3, 'arrows': [[0, 1, 1], [1, 2, 1]]}))
    code, out, _ = run(capsys, 'toric-check', str(path))
    assert code == EXIT_OK
    report = json.loads(out)
    assert not report['conditions_ok']
    assert report['failing_k'] == [0]
    assert report['certificate']['status'] == 'NotCoprime'


def test_toric_check_reports_original_vertex_labels(capsys, tmp_path):
    path = tmp_path / 'relabelled.json'
    path.write_text(json.dumps({'n': 3, 'arrows': [[2, 0, 1], [2, 1, 2], [0, 1, 1]]}))
    code, out, _ = run(capsys, 'toric-check', str(path))
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['vertex_order'] == [2, 0, 1]
    assert report['spec']['arrows'] == [[0, 1, 1], [0, 2, 2], [1, 2, 1]]
    # vertex 0 has one arrow in and one out
    assert report['failing_k'] == [0]
    assert report['failing_reason'] == "a(K,K') = a(K',K)"


def test_fixtures_listing(capsys):
    code, out, _ = run(capsys, 'fixtures')
    assert code == EXIT_OK
    names = [entry['name'] for entry in json.loads(out)]
    assert '@bl3p2' in names and '@k3' in names
