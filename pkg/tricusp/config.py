'''
Run configuration

Settings are stacked in three layers: built-in defaults, the user's
``$XDG_CONFIG_HOME/tricusp/config.toml`` and finally command-line flags. The stacked
result is frozen into a :class:`RunConfig`, which is all the command implementations
see.

.. code-block:: toml

    [field]
    prime = 10007

    [oracle]
    prime = 101

    [families]
    max_reseeds = 16

    [report]
    seeds = [0, 1, 2, 3, 4]
    jobs = 1
    oracle = true

    [output]
    json = false
'''
import copy
import json
import random
import hashlib
import logging
import tomllib
from pathlib import Path
from dataclasses import dataclass, field

from sympy import isprime

from tricusp import util
from tricusp.families import FAMILY_TAGS, MAX_RESEEDS
from tricusp.oracle import MAX_ORACLE_PRIME
from tricusp.errors import ConfigError


logger = logging.getLogger(__name__)

CONFIG_FILE = 'config.toml'

DEFAULTS = {
    'field':    {'prime': 10007},
    'oracle':   {'prime': 101},
    'families': {'max_reseeds': MAX_RESEEDS},
    'report':   {'seeds': [0, 1, 2, 3, 4], 'jobs': 1, 'oracle': True},
    'output':   {'json': False},
}

# keys that change presentation only, left out of the fingerprint
PRESENTATION_KEYS = ('output', 'run.verbosity', 'run.out', 'report.jobs')


# -- dotted keys over nested tables -------------------------------------------------
def lookup(settings: dict, key: str, default=None):
    '''``lookup(s, 'field.prime')`` is ``s['field']['prime']``, or ``default``.'''
    *tables, name = key.split('.')
    for table in tables:
        settings = settings.get(table)
        if not isinstance(settings, dict):
            return default
    return settings.get(name, default)

def assign(settings: dict, key: str, value):
    '''Set a dotted key in place, creating missing tables.'''
    *tables, name = key.split('.')
    for table in tables:
        settings = settings.setdefault(table, {})
        if not isinstance(settings, dict):
            raise ConfigError(f'cannot set "{key}": "{table}" is not a table')
    settings[name] = value

def drop(settings: dict, key: str) -> dict:
    '''Copy of ``settings`` without the dotted ``key``.'''
    head, _, rest = key.partition('.')
    if head not in settings:
        return settings
    if not rest:
        return {k: v for k, v in settings.items() if k != head}
    if not isinstance(settings[head], dict):
        return settings
    return {**settings, head: drop(settings[head], rest)}

def fingerprint(settings: dict, exclude_keys=()) -> str:
    '''Short sha256 of the sorted JSON form of ``settings`` minus ``exclude_keys``.'''
    for key in exclude_keys:
        settings = drop(settings, key)
    text = json.dumps(settings, sort_keys=True, default=str)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def read_toml(path: str | Path) -> dict:
    try:
        return tomllib.loads(Path(path).read_text())
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f'invalid TOML in "{util.to_tilde_path(path)}": {exc}') from exc

def load_layers(config_dir: str | Path | None = None) -> dict:
    '''Defaults updated with ``<config_dir>/config.toml`` when it exists.'''
    if config_dir is None:
        config_dir = util.xdg_config_path()
    config_path = Path(util.absolute_path(config_dir), CONFIG_FILE)

    if not config_path.exists():
        return copy.deepcopy(DEFAULTS)

    logger.debug(f'reading config from {util.to_tilde_path(config_path)}')
    return util.deep_update(copy.deepcopy(DEFAULTS), read_toml(config_path))


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: str | None = None
    seed: int = 0
    prime: int = 10007
    oracle_prime: int = 101
    max_reseeds: int = MAX_RESEEDS
    seeds: tuple[int, ...] = (0, 1, 2, 3, 4)
    jobs: int = 1
    oracle: bool = True
    input: str | None = None
    certificate: dict[str, str] = field(default_factory=dict)
    out: Path | None = None
    json: bool = False
    verbosity: int = 0
    fingerprint: str = ''

    def __post_init__(self):
        if not isprime(self.prime) or self.prime <= 3:
            raise ConfigError(f'field prime must be a prime greater than 3, got {self.prime}')
        if not isprime(self.oracle_prime) or self.oracle_prime <= 3:
            raise ConfigError(
                f'oracle prime must be a prime greater than 3, got {self.oracle_prime}'
            )
        if self.oracle_prime > MAX_ORACLE_PRIME:
            raise ConfigError(f'oracle prime must not exceed {MAX_ORACLE_PRIME}')
        if self.family is not None and self.family not in FAMILY_TAGS:
            raise ConfigError(
                f'unknown family "{self.family}", expected one of {", ".join(FAMILY_TAGS)}'
            )
        if self.seed < 0 or any(s < 0 for s in self.seeds):
            raise ConfigError('seeds must be unsigned integers')
        if self.max_reseeds < 1 or self.jobs < 1:
            raise ConfigError('max_reseeds and jobs must be positive')


def _as_int(settings: dict, key: str) -> int:
    value = lookup(settings, key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f'"{key}" must be an integer, got {value!r}')
    return value

def load_config(
    command: str,
    config_dir: str | Path | None = None,
    **overrides,
) -> RunConfig:
    '''
    Build the run configuration for ``command``. ``overrides`` are dotted config keys
    (``field.prime``) or ``run.*`` keys holding command-line values; ``None`` values are
    ignored so unset flags fall through to the file and the defaults.

    When a family is requested without ``run.seed``, a fresh random seed is drawn. It
    ends up in the output so the run can be replayed.
    '''
    settings = load_layers(config_dir)
    for key, value in overrides.items():
        if value is not None:
            assign(settings, key, value)

    if lookup(settings, 'run.seed') is None:
        seed = 0
        if lookup(settings, 'run.family') is not None and command != 'report':
            seed = random.SystemRandom().randrange(2**32)
            logger.info(f'no seed given, using {seed}')
        assign(settings, 'run.seed', seed)

    seeds = lookup(settings, 'report.seeds')
    if not isinstance(seeds, list) or not all(isinstance(s, int) for s in seeds):
        raise ConfigError(f'"report.seeds" must be a list of integers, got {seeds!r}')

    out = lookup(settings, 'run.out')
    return RunConfig(
        command=command,
        family=lookup(settings, 'run.family'),
        seed=_as_int(settings, 'run.seed'),
        prime=_as_int(settings, 'field.prime'),
        oracle_prime=_as_int(settings, 'oracle.prime'),
        max_reseeds=_as_int(settings, 'families.max_reseeds'),
        seeds=tuple(seeds),
        jobs=_as_int(settings, 'report.jobs'),
        oracle=bool(lookup(settings, 'report.oracle')),
        input=lookup(settings, 'run.input'),
        certificate=dict(lookup(settings, 'run.certificate') or {}),
        out=None if out is None else util.absolute_path(out),
        json=bool(lookup(settings, 'output.json')),
        verbosity=lookup(settings, 'run.verbosity', 0),
        fingerprint=fingerprint(settings, PRESENTATION_KEYS),
    )
