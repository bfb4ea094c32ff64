from pathlib import Path

import pytest

from tricusp.config import (
    DEFAULTS,
    PRESENTATION_KEYS,
    RunConfig,
    load_config,
    load_layers,
    read_toml,
    lookup,
    assign,
    drop,
)
from tricusp.errors import ConfigError


config_dir = Path(
    __file__, '..', 'test-config-dir/'
).resolve()


def test_config_file_layer():
    config = load_config('report', config_dir)

    assert config.prime == 10009
    assert config.oracle_prime == 101
    assert config.max_reseeds == 4
    assert config.seeds == (7, 8)
    assert config.oracle is False
    assert config.json is True
    assert config.seed == 0

def test_defaults_without_config_file(tmp_path):
    config = load_config('table', tmp_path)

    assert config.prime == DEFAULTS['field']['prime']
    assert config.seeds == (0, 1, 2, 3, 4)
    assert config.json is False

def test_flags_override_file():
    config = load_config('verify', config_dir, **{
        'field.prime': 101,
        'run.family': 'cubic3',
        'run.seed': 5,
        'output.json': None,
    })

    assert config.prime == 101
    assert config.family == 'cubic3'
    assert config.seed == 5
    # unset flags fall through to the file
    assert config.json is True

def test_random_seed_for_families(tmp_path):
    config = load_config('construct', tmp_path, **{'run.family': 'sexticA'})
    assert isinstance(config.seed, int) and config.seed >= 0

@pytest.mark.parametrize('overrides', [
    {'field.prime': 10},
    {'field.prime': 3},
    {'oracle.prime': 263},
    {'run.family': 'septic'},
    {'run.seed': -1},
    {'report.jobs': 0},
    {'report.seeds': 'all'},
    {'field.prime': '10007'},
])
def test_invalid_settings(tmp_path, overrides):
    with pytest.raises(ConfigError):
        load_config('verify', tmp_path, **overrides)

def test_invalid_toml(tmp_path):
    (tmp_path / 'config.toml').write_text('[field\nprime = ')
    with pytest.raises(ConfigError):
        load_config('table', tmp_path)

def test_run_config_is_frozen():
    config = RunConfig('table')
    with pytest.raises(AttributeError):
        config.prime = 101

def test_fingerprint():
    base = load_config('report', config_dir)
    again = load_config('report', config_dir)
    other_prime = load_config('report', config_dir, **{'field.prime': 101})
    other_out = load_config('report', config_dir, **{'run.out': '/tmp/report.json'})
    other_jobs = load_config('report', config_dir, **{'report.jobs': 4})

    assert len(base.fingerprint) == 16
    assert base.fingerprint == again.fingerprint
    assert base.fingerprint != other_prime.fingerprint
    # output paths, formats and worker counts do not change results
    assert base.fingerprint == other_out.fingerprint
    assert base.fingerprint == other_jobs.fingerprint
    assert other_jobs.jobs == 4

def test_presentation_keys_are_settings():
    fields = set(RunConfig.__dataclass_fields__)
    for key in PRESENTATION_KEYS:
        table, _, name = key.partition('.')
        assert table in DEFAULTS or table == 'run'
        if table == 'run':
            assert name in fields

def test_dotted_keys():
    settings = read_toml(config_dir / 'config.toml')

    assert lookup(settings, 'field.prime') == 10009
    assert lookup(settings, 'field.missing', 'x') == 'x'
    assert lookup(settings, 'report.seeds.inner') is None

    assign(settings, 'oracle.prime', 13)
    assign(settings, 'run.seed', 3)
    assert lookup(settings, 'oracle.prime') == 13
    assert settings['run'] == {'seed': 3}

    with pytest.raises(ConfigError):
        assign(settings, 'field.prime.inner', 1)

def test_drop_leaves_input_alone():
    settings = {'field': {'prime': 7}, 'output': {'json': True}}

    assert drop(settings, 'output') == {'field': {'prime': 7}}
    assert drop(settings, 'field.prime') == {'field': {}, 'output': {'json': True}}
    assert drop(settings, 'run.out') is settings
    assert settings == {'field': {'prime': 7}, 'output': {'json': True}}

def test_layers_merge_tables(tmp_path):
    (tmp_path / 'config.toml').write_text('[report]\njobs = 3\n')
    settings = load_layers(tmp_path)

    assert settings['report'] == {'seeds': [0, 1, 2, 3, 4], 'jobs': 3, 'oracle': True}
    assert DEFAULTS['report']['jobs'] == 1
