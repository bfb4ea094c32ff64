'''
Command implementations

``Runner`` executes one :class:`~tricusp.config.RunConfig` and returns the process exit
status: 0 when every requested verification passes, 1 otherwise. Progress is printed
as a tree; with ``--json`` the structured document goes to stdout (or ``--out``)
instead.
'''
import time
import logging
from concurrent.futures import ProcessPoolExecutor

from colorama import Fore, Style

from tricusp import report
from tricusp.util import printc, color_text, branch, leaf, read_text_or_path, to_tilde_path
from tricusp.field import PrimeField
from tricusp.poly import Poly, parse
from tricusp.config import RunConfig
from tricusp.families import (
    FAMILY_TAGS,
    FAMILY_DEGREES,
    MINIMAL_TABLE,
    TABLE_SOURCES,
    SurfaceInstance,
    construct,
    surface_from_equation,
)
from tricusp.singular import find_singular_points
from tricusp.certify import VerificationReport, verify_family, census_dict
from tricusp.oracle import scan_projective, compare
from tricusp.errors import (
    ConfigError,
    DegenerateInstance,
    PositiveDimensionalSingularLocus,
)


logger = logging.getLogger(__name__)


def _batch_job(
    tag: str,
    seed: int,
    prime: int,
    oracle_prime: int | None,
    max_reseeds: int,
    fingerprint: str,
) -> dict:
    '''Construct, verify and optionally cross-check one family instance.'''
    F = PrimeField(prime)
    try:
        instance = construct(tag, seed, F, max_reseeds=max_reseeds)
        result = verify_family(instance, fingerprint).to_dict()
    except DegenerateInstance as exc:
        result = VerificationReport.failed(tag, seed, str(F), FAMILY_DEGREES[tag], str(exc))
        result.config_fingerprint = fingerprint
        result = result.to_dict()

    if oracle_prime is not None:
        start = time.perf_counter()
        # generated directly over F_q so both pipelines see the same coefficients
        try:
            small = construct(tag, seed, PrimeField(oracle_prime), max_reseeds=max_reseeds)
            result['oracle'] = compare(scan_projective(small.phi, oracle_prime), small.scheme)
        except DegenerateInstance as exc:
            result['oracle'] = {'q': oracle_prime, 'agree': False, 'error': str(exc)}
        result['timings']['oracle'] = round(time.perf_counter() - start, 6)

    return result


class Runner:
    def __init__(self, config: RunConfig):
        self.config = config
        self.field = PrimeField(config.prime)

    def run(self) -> int:
        command = getattr(self, f'run_{self.config.command.replace("-", "_")}', None)
        if command is None:
            raise ConfigError(f'unknown command "{self.config.command}"')
        return command()

    # -- input ----------------------------------------------------------------------
    def _parse_input(self, field: PrimeField) -> Poly:
        text = read_text_or_path(self.config.input)
        return parse(text, field=field)

    def _instance(self, field: PrimeField | None = None) -> SurfaceInstance:
        '''User-supplied surface from ``--input``, else the configured family.'''
        field = field or self.field
        if self.config.input is not None:
            phi = self._parse_input(field)
            certificate = {
                name: parse(read_text_or_path(text), ring=phi.ring)
                for name, text in self.config.certificate.items()
            }
            return surface_from_equation(phi, certificate, seed=self.config.seed)

        if self.config.family is None:
            raise ConfigError('either --family or --input is required')
        return construct(
            self.config.family,
            self.config.seed,
            field,
            max_reseeds=self.config.max_reseeds,
        )

    def _emit(self, data: dict):
        if self.config.out is not None:
            report.write_report(data, self.config.out)
            if not self.config.json:
                print(f'> report written to {to_tilde_path(self.config.out)}')
        elif self.config.json:
            print(report.dumps(data))

    # -- commands -------------------------------------------------------------------
    def run_construct(self) -> int:
        try:
            instance = self._instance()
        except DegenerateInstance as exc:
            printc(str(exc), Fore.RED)
            return 1

        data = report.instance_to_dict(instance)
        if not self.config.json:
            branch(f'{instance.family_tag} :: seed {instance.seed} over {instance.field}')
            leaf(f'phi = {data["equation"]}', Fore.BLUE)
            for name, text in data['certificate'].items():
                leaf(f'{name} = {text}', Fore.BLUE + Style.DIM)
            leaf(f'accepted after {instance.attempts} attempt(s)', Fore.GREEN)
        self._emit(data)
        return 0

    def run_verify(self) -> int:
        try:
            instance = self._instance()
        except DegenerateInstance as exc:
            printc(str(exc), Fore.RED)
            return 1

        result = verify_family(instance, self.config.fingerprint)
        if not self.config.json:
            self._print_verification(result)
        self._emit(report.build_report(self.config, [result.to_dict()]))
        return 0 if result.passed else 1

    def run_classify(self) -> int:
        instance = self._instance()
        try:
            scheme = find_singular_points(instance.phi, seed=self.config.seed)
        except PositiveDimensionalSingularLocus as exc:
            printc(str(exc), Fore.RED)
            return 1

        census = census_dict(scheme)
        if not self.config.json:
            branch(f'{instance.family_tag} :: {census["count"]} singular points')
            for pt in census['points']:
                leaf(
                    f'{pt["projective"]} degree {pt["degree"]} :: tau={pt["tjurina"]} '
                    f'corank={pt["hessian_corank"]} {pt["classification"]}',
                    Fore.BLUE
                )
            leaf(f'total length {census["total_length"]}', Fore.BLUE + Style.DIM)
        self._emit({'equation': instance.phi.format(), 'census': census})
        return 0

    def run_oracle_scan(self) -> int:
        q = self.config.oracle_prime
        instance = self._instance(PrimeField(q))
        scan = scan_projective(instance.phi, q)

        if not self.config.json:
            branch(f'{instance.family_tag} :: scanned {scan.scanned} points of P3(F_{q})')
            for pt in scan.points:
                leaf(f'{list(pt)}', Fore.BLUE)
            leaf(f'{len(scan)} rational singular points', Fore.GREEN)
        self._emit({
            'q': q,
            'equation': instance.phi.format(),
            'scanned': scan.scanned,
            'evaluations': scan.evaluations,
            'points': [list(pt) for pt in scan.points],
        })
        return 0

    def run_table(self) -> int:
        if not self.config.json:
            print(f'> minimal three-divisible cusp sets')
            for d, n in MINIMAL_TABLE.items():
                branch(f'd={d} :: n={color_text(n, Fore.YELLOW)}  {TABLE_SOURCES[d]}')
        self._emit({
            str(d): {'cusps': n, 'source': TABLE_SOURCES[d]} for d, n in MINIMAL_TABLE.items()
        })
        return 0

    def run_report(self) -> int:
        config = self.config
        tags = [config.family] if config.family else list(FAMILY_TAGS)
        jobs = [(tag, seed) for tag in tags for seed in config.seeds]
        oracle_prime = config.oracle_prime if config.oracle else None

        if not config.json:
            print(f'> tricusp report: ')
            print(f'  > families :: {color_text(", ".join(tags), Fore.YELLOW)}')
            print(f'  > seeds    :: {color_text(list(config.seeds), Fore.YELLOW)}')
            print(f'  > field    :: {color_text(self.field, Fore.YELLOW)}\n')

        args = [
            (tag, seed, config.prime, oracle_prime, config.max_reseeds, config.fingerprint)
            for tag, seed in jobs
        ]
        if config.jobs > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                results = list(pool.map(_batch_job, *zip(*args)))
        else:
            results = [_batch_job(*a) for a in args]

        if not config.json:
            for result in results:
                self._print_verification(VerificationReport.from_dict(
                    {k: v for k, v in result.items() if k != 'oracle'}
                ), oracle=result.get('oracle'))

        data = report.build_report(config, results)
        problems = report.validate(data)
        if problems:
            logger.error(f'report does not match its schema: {problems}')

        self._emit(data)
        agree = all(r.get('oracle', {'agree': True})['agree'] for r in results)
        ok = all(r['verdict'] == 'PASS' for r in results) and agree and not problems
        return 0 if ok else 1

    # -- output ---------------------------------------------------------------------
    def _print_verification(self, result: VerificationReport, oracle: dict | None = None):
        color = Fore.GREEN if result.passed else Fore.RED
        branch(
            f'{result.family} :: seed {result.seed} over {result.field} '
            f'-> {color_text(result.verdict, color + Style.BRIGHT)}'
        )

        census = result.census
        classes = ', '.join(f'{v} {k}' for k, v in census.get('classification', {}).items())
        leaf(
            f'degree {result.degree}, {census["count"]} singular points ({classes or "none"}), '
            f'expected {result.expected_cusps}',
            Fore.BLUE
        )
        cert = result.certificate
        if cert:
            residual = f', residual {cert["residual"]}' if cert.get('residual') else ''
            state = 'holds' if cert['identity_ok'] else 'fails'
            leaf(f'certificate {cert["kind"]} {state}{residual}', Fore.BLUE + Style.DIM)
        for locus in result.loci:
            leaf(f'{locus["name"]} :: {locus["observed"]} / {locus["expected"]}', Style.DIM)
        if result.line_cusps:
            good = sum(c['sqh'] for c in result.line_cusps)
            leaf(f'line cusps with weighted principal part :: {good} / {len(result.line_cusps)}')
        if oracle is not None:
            text = 'agrees' if oracle.get('agree') else 'DISAGREES'
            detail = oracle.get('error') or (
                f'{oracle["oracle_points"]} rational points over F_{oracle["q"]}'
            )
            leaf(f'oracle {text} :: {detail}', Fore.GREEN if oracle.get('agree') else Fore.RED)
        for failure in result.failures:
            leaf(failure, Fore.RED)


def run_command(config: RunConfig) -> int:
    return Runner(config).run()
