# -*- coding: utf-8 -*-
import csv
import json

import pytest

from genrank.cli import EXIT_FAILURE, EXIT_REFUSED, EXIT_USAGE, main
from genrank.utils.io import read_csv


def csv_rows(text):
    lines = text.splitlines()
    assert lines[0] == '# genrank rank-grid v1'
    return list(csv.DictReader(lines[1:]))


def test_capacity_check(capsys):
    assert main(['capacity-check', '--m', '6', '--n', '10', '--d', '4']) == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict['surjective_predicted']
    assert verdict['reason'] == 'thm61_satisfied'
    assert verdict['act'] == 'tanh'


def test_capacity_check_polynomial(capsys):
    assert main(['capacity-check', '--m', '3', '--n', '11', '--d', '2',
                 '--coeffs', '0,0,0,1']) == 0
    assert json.loads(capsys.readouterr().out)['reason'] == 'sard_poly_rank'


def test_capacity_check_rejects_zero_width():
    assert main(['capacity-check', '--n', '10', '--d', '4']) == EXIT_USAGE


def test_interpolate_random(capsys, tmp_path):
    params = tmp_path / 'params.json'
    trace = tmp_path / 'trace.jsonl'
    code = main(['interpolate', '--random', '4,10,6', '--params-out', str(params),
                 '--trace-out', str(trace)])
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary['ok'] and summary['residual'] < 1e-6
    assert summary['m'] == 6 and summary['n'] == 10
    saved = json.loads(params.read_text())
    assert saved['m'] == 6 and saved['act'] == 'tanh'
    assert trace.read_text().count('\n') == summary['iterations']


def test_interpolate_odd_width_is_refused(capsys):
    assert main(['interpolate', '--random', '4,10,6', '--m', '5']) == EXIT_REFUSED
    assert json.loads(capsys.readouterr().out)['reason'] == 'm_odd'


def test_interpolate_parameter_count_is_refused(capsys):
    assert main(['interpolate', '--random', '2,9,2']) == EXIT_REFUSED
    verdict = json.loads(capsys.readouterr().out)
    assert not verdict['surjective_predicted']
    assert verdict['reason'] == 'sard_param_count'


def test_interpolate_pad_odd(capsys):
    assert main(['interpolate', '--random', '4,10,7', '--pad-odd']) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary['padded'] and summary['m'] == 7


def test_interpolate_from_files(capsys, tmp_path):
    X = tmp_path / 'X.txt'
    y = tmp_path / 'y.txt'
    X.write_text('2 3\n0.1 0.5 -0.3\n1.0 -0.2 0.4\n')
    y.write_text('3 1\n0.5\n-1.0\n0.25\n')
    assert main(['interpolate', '--X', str(X), '--y', str(y), '--m', '4']) == 0
    assert json.loads(capsys.readouterr().out)['ok']

    y.write_text('2 1\n0.5\n-1.0\n')
    assert main(['interpolate', '--X', str(X), '--y', str(y), '--m', '4']) == EXIT_USAGE
    y.write_text('0.5 -1.0 0.25\n')
    assert main(['interpolate', '--X', str(X), '--y', str(y), '--m', '4']) == EXIT_USAGE
    assert main(['interpolate', '--m', '4']) == EXIT_USAGE


def test_decompose_verify(tmp_path):
    out = tmp_path / 'verify.csv'
    argv = ['decompose-verify', '--instances', '4', '--max-d', '2', '--max-k', '2',
            '--max-dim', '3', '-o', str(out)]
    assert main(argv) == 0
    rows = read_csv(out)
    assert {row['kind'] for row in rows} >= {'matmul', 'hadamard_power', 'khatri_poly'}
    assert all(row['failures'] == '0' for row in rows)


def test_decompose_verify_detects_injected_fault(capsys):
    argv = ['decompose-verify', '--kinds', 'matmul,khatri-power', '--instances', '6',
            '--max-dim', '3', '--inject-fault', '-f', 'json']
    assert main(argv) == EXIT_FAILURE
    document = json.loads(capsys.readouterr().out)
    assert document['failures']
    assert all(row['failures'] >= 1 for row in document['kinds'])


def test_decompose_verify_unknown_kind():
    assert main(['decompose-verify', '--kinds', 'nonsense']) == EXIT_USAGE


def test_rank_grid_csv(capsys):
    argv = ['rank-grid', '--law', 'hadamard-power', '--d', '2', '--k', '2',
            '--m', '3-4', '--n', '4', '-t', '5']
    assert main(argv) == 0
    rows = csv_rows(capsys.readouterr().out)
    assert [(row['m'], row['n']) for row in rows] == [('3', '4'), ('4', '4')]
    assert all(row['predicted'] == row['min_empirical'] == '3' for row in rows)
    assert all(row['mismatch_count'] == '0' for row in rows)


def test_rank_grid_zhang_blockdiag(capsys):
    argv = ['rank-grid', '--law', 'zhang-blockdiag', '--coeffs', '0,0,0,1',
            '--d', '2', '--m', '3', '--n', '3-4', '-t', '3']
    assert main(argv) == 0
    rows = csv_rows(capsys.readouterr().out)
    # n = 3 is not a multiple of d and is skipped
    assert len(rows) == 1
    assert rows[0]['predicted'] == rows[0]['max_empirical'] == '2'


def test_rank_grid_empty_grid():
    argv = ['rank-grid', '--law', 'khatri-power', '--d', '3', '--m', '4', '--max-md', '6']
    assert main(argv) == EXIT_USAGE
    assert main(['rank-grid', '--m', '5-2']) == EXIT_USAGE


def test_rank_grid_needs_coefficients():
    assert main(['rank-grid', '--law', 'poly', '--d', '2']) == EXIT_USAGE


def test_rank_grid_is_reproducible(tmp_path):
    outputs = []
    for workers in ('0', '2'):
        out = tmp_path / 'grid-{}.json'.format(workers)
        argv = ['rank-grid', '--law', 'khatri-poly', '--coeffs', '1,1', '--d', '1-2',
                '--m', '2-3', '--n', '2-4', '-t', '4', '-s', '7', '-f', 'json',
                '-o', str(out), '-j', workers]
        assert main(argv) == 0
        document = json.loads(out.read_text())
        assert document['schema'] == 'genrank rank-grid v1'
        outputs.append(document['reports'])
    assert outputs[0] == outputs[1]


def test_rank_grid_with_config_file(tmp_path, capsys):
    config = tmp_path / 'grid.json'
    config.write_text(json.dumps({'law': 'matmul', 'd': '2', 'm': '3', 'n': '2-3',
                                  'trials': 2}))
    assert main(['rank-grid', '-C', str(config), '--n', '3']) == 0
    rows = csv_rows(capsys.readouterr().out)
    assert len(rows) == 1 and rows[0]['trials'] == '2'

    config.write_text(json.dumps({'trails': 2}))
    assert main(['rank-grid', '-C', str(config)]) == EXIT_USAGE


def test_missing_command():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


@pytest.mark.slow
def test_decompose_verify_default_grid(tmp_path):
    out = tmp_path / 'verify.json'
    assert main(['decompose-verify', '-f', 'json', '-o', str(out)]) == 0
    document = json.loads(out.read_text())
    assert all(row['instances'] == 50 for row in document['kinds'])
    assert not document['failures']
