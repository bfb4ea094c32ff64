import json

import pytest

from tricusp import report
from tricusp.config import RunConfig
from tricusp.families import cubic_three_cusps
from tricusp.certify import verify_family


def valid_report():
    config = RunConfig('report', seeds=(0,), fingerprint='f' * 16)
    result = verify_family(cubic_three_cusps(), config.fingerprint).to_dict()
    return report.build_report(config, [result])


def test_schema_is_packaged():
    schema = report.load_schema()
    assert schema['$id'] == report.SCHEMA_ID
    assert 'results' in schema['required']

def test_build_report():
    config = RunConfig('report', seeds=(0,), fingerprint='f' * 16)
    result = verify_family(cubic_three_cusps(), config.fingerprint).to_dict()
    data = report.build_report(config, [result])

    assert report.validate(data) == []
    assert data['summary']['passed'] == 1
    assert data['summary']['oracle_checked'] == 0
    assert 'timings' not in data['results'][0]
    assert set(data['timings']) == {'cubic3/0'}

    # the original result dict is left alone
    assert 'timings' in result

def test_validate_reports_missing_keys():
    problems = report.validate({'schema': report.SCHEMA_ID, 'results': [{'family': 'x'}]})
    assert "$: 'summary' is a required property" in problems
    assert "$.results[0]: 'verdict' is a required property" in problems

@pytest.mark.parametrize('key, value', [
    ('verdict', 'MAYBE'),
    ('seed', []),
    ('degree', '3'),
    ('checks', {'count': 'yes'}),
    ('failures', [1]),
])
def test_validate_reports_bad_values(key, value):
    data = valid_report()
    data['results'][0][key] = value

    (problem,) = report.validate(data)
    assert problem.startswith(f'$.results[0].{key}')

def test_validate_checks_nested_blocks():
    data = valid_report()
    data['schema'] = 'tricusp/report-v0'
    data['config']['oracle'] = 'no'
    data['results'][0]['oracle'] = {'q': 7, 'agree': 1}

    problems = report.validate(data)
    assert len(problems) == 3
    assert any(p.startswith('$.schema') for p in problems)
    assert any(p.startswith('$.config.oracle') for p in problems)
    assert any(p.startswith('$.results[0].oracle.agree') for p in problems)

def test_dumps_sorts_keys(tmp_path):
    path = tmp_path / 'out.json'
    report.write_report({'b': 1, 'a': {'d': 2, 'c': 3}}, path)

    text = path.read_text()
    assert text.index('"a"') < text.index('"b"')
    assert text.index('"c"') < text.index('"d"')
    assert json.loads(text) == {'a': {'c': 3, 'd': 2}, 'b': 1}

def test_instance_to_dict():
    data = report.instance_to_dict(cubic_three_cusps())
    assert data['family'] == 'cubic3'
    assert data['degree'] == 3
    assert data['certificate'] == {}
    assert data['predicted']['loci'][0]['count'] == 3
