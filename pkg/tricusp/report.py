'''
JSON report assembly

Reports are written with sorted keys. Everything that depends on wall-clock time lives
in the top-level ``timings`` block, so two runs with the same configuration produce
identical documents apart from that block.
'''
import json
from pathlib import Path
from importlib.resources import files

from jsonschema import Draft202012Validator

from tricusp.config import RunConfig
from tricusp.families import SurfaceInstance
from tricusp.certify import tool_version


SCHEMA_ID = 'tricusp/report-v1'
SCHEMA_FILE = 'report-v1.json'


def load_schema() -> dict:
    return json.loads(files('tricusp').joinpath('schema', SCHEMA_FILE).read_text())


def instance_to_dict(instance: SurfaceInstance) -> dict:
    predicted = instance.predicted
    return {
        'family': instance.family_tag,
        'seed': instance.seed,
        'field': str(instance.field),
        'degree': instance.degree,
        'equation': instance.phi.format(),
        'certificate': {k: p.format() for k, p in sorted(instance.certificate.items())},
        'components': {k: p.format() for k, p in sorted(instance.components.items())},
        'residual': None if instance.residual is None else instance.residual.format(),
        'parameters': dict(instance.parameters),
        'attempts': instance.attempts,
        'rejections': list(instance.rejections),
        'predicted': {
            'cusps': predicted.cusps,
            'source': predicted.source,
            'loci': [locus.to_dict() for locus in predicted.loci],
        },
    }


def build_report(config: RunConfig, results: list[dict]) -> dict:
    '''
    One document for a batch of verification results (dicts as produced by
    ``VerificationReport.to_dict``, possibly carrying an ``oracle`` block).
    '''
    timings = {}
    clean = []
    for result in results:
        result = dict(result)
        timings[f'{result["family"]}/{result["seed"]}'] = result.pop('timings', {})
        clean.append(result)

    passed = sum(r['verdict'] == 'PASS' for r in clean)
    oracle = [r['oracle'] for r in clean if 'oracle' in r]
    return {
        'schema': SCHEMA_ID,
        'version': tool_version(),
        'command': config.command,
        'config': {
            'prime': config.prime,
            'oracle_prime': config.oracle_prime,
            'max_reseeds': config.max_reseeds,
            'seeds': list(config.seeds),
            'oracle': config.oracle,
        },
        'fingerprint': config.fingerprint,
        'results': clean,
        'summary': {
            'total': len(clean),
            'passed': passed,
            'failed': len(clean) - passed,
            'oracle_agree': sum(bool(o.get('agree')) for o in oracle),
            'oracle_checked': len(oracle),
        },
        'timings': timings,
    }


def validate(report: dict, schema: dict | None = None) -> list[str]:
    '''
    Schema violations in ``report``, one message per error, prefixed with the JSON path
    of the offending value. An empty list means the document is valid.
    '''
    validator = Draft202012Validator(schema or load_schema())
    errors = sorted(validator.iter_errors(report), key=lambda e: list(map(str, e.absolute_path)))
    return [f'{e.json_path}: {e.message}' for e in errors]


def dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2)

def write_report(data: dict, path: str | Path):
    Path(path).write_text(dumps(data) + '\n')
