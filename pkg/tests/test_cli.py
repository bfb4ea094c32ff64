import json
from pathlib import Path

import pytest

from tricusp.__main__ import main


config_dir = Path(
    __file__, '..', 'test-config-dir/'
).resolve()

CUBIC = 'x1*x2*x3 - x0^3'
FERMAT = 'x0^4 + x1^4 + x2^4 + x3^4'


@pytest.fixture
def run(tmp_path, capsys):
    '''Run the CLI against an empty config dir, returning (status, stdout).'''
    def _run(*argv, config=tmp_path):
        status = main(['-c', str(config), *argv])
        return status, capsys.readouterr().out
    return _run


def test_no_subcommand(run):
    status, out = run()
    assert status == 0
    assert 'usage' in out

def test_table(run):
    status, out = run('table')
    assert status == 0
    assert 'minimal three-divisible cusp sets' in out

    status, out = run('table', '--json')
    assert status == 0
    assert {d: row['cusps'] for d, row in json.loads(out).items()} == {
        '3': 3, '4': 6, '5': 12, '6': 18,
    }

def test_construct(run):
    status, out = run('construct', '-f', 'cubic3', '--json')
    data = json.loads(out)

    assert status == 0
    assert data['equation'] == '-x0^3 + x1*x2*x3'
    assert data['predicted']['cusps'] == 3

def test_verify_family(run):
    # the test config sets json output and a different prime
    status, out = run('verify', '-f', 'cubic3', '-s', '0', config=config_dir)
    data = json.loads(out)
    (result,) = data['results']

    assert status == 0
    assert data['config']['prime'] == 10009
    assert result['field'] == 'GF(10009)'
    assert result['verdict'] == 'PASS'
    assert result['census']['count'] == 3
    assert 'timings' not in result

def test_verify_input(run, tmp_path):
    path = tmp_path / 'cubic.txt'
    path.write_text(CUBIC + '\n')

    status, out = run('verify', '-i', str(path))
    assert status == 0
    assert 'PASS' in out

    status, out = run('verify', '-i', FERMAT, '--json')
    assert status == 1
    assert json.loads(out)['results'][0]['verdict'] == 'FAIL'

def test_classify(run):
    status, out = run('classify', '-i', FERMAT, '--json')
    assert status == 0
    assert json.loads(out)['census']['count'] == 0

    status, out = run('classify', '-i', CUBIC, '--json')
    census = json.loads(out)['census']
    assert census['classification'] == {'A2': 3}
    assert census['total_length'] == 6

    status, _ = run('classify', '-i', 'x0*x1*x2*x3')
    assert status == 1

def test_oracle_scan(run):
    status, out = run('oracle-scan', '-i', CUBIC, '-q', '7', '--json')
    data = json.loads(out)

    assert status == 0
    assert data['scanned'] == 400
    assert data['points'] == [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]

@pytest.mark.parametrize('argv', [
    ('classify', '-i', 'x0 + + x1'),
    ('verify', '-f', 'cubic3', '-p', '12'),
    ('oracle-scan', '-i', CUBIC, '-q', '263'),
    ('verify',),
    ('classify', '-i', 'x0^2 + x1'),
    ('classify', '-i', 'x^2 + y^2 + z^2'),
    ('verify', '-i', 'x0 + x1'),
    ('oracle-scan', '-i', 'x0*x1 + x2', '-q', '7'),
])
def test_usage_errors(run, argv):
    status, _ = run(*argv)
    assert status == 2

def test_report(run, tmp_path):
    out_path = tmp_path / 'report.json'
    argv = ('report', '-f', 'cubic3', '--seeds', '0,1', '-q', '7')

    status, out = run(*argv, '--json')
    data = json.loads(out)
    assert status == 0
    assert data['schema'] == 'tricusp/report-v1'
    assert data['summary'] == {
        'total': 2, 'passed': 2, 'failed': 0, 'oracle_agree': 2, 'oracle_checked': 2,
    }
    assert set(data['timings']) == {'cubic3/0', 'cubic3/1'}

    # reports are reproducible apart from their timings
    status, _ = run(*argv, '-o', str(out_path), '-j', '2')
    assert status == 0
    written = json.loads(out_path.read_text())
    data.pop('timings'), written.pop('timings')
    assert written == data
