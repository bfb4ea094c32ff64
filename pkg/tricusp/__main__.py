import sys
import argparse

from colorama import Fore

from tricusp import util, __version__
from tricusp.config import load_config
from tricusp.runner import run_command
from tricusp.families import FAMILY_TAGS
from tricusp.errors import ConfigError, PolySyntaxError, NotASurface


def _add_family_args(parser, family_required=False):
    parser.add_argument(
        '-f', '--family',
        required = family_required,
        choices  = FAMILY_TAGS,
        help     = 'Surface family to construct'
    )
    parser.add_argument(
        '-s', '--seed',
        type     = int,
        help     = 'Seed for the family draws. A random seed is chosen (and reported) '
                   'when omitted'
    )
    parser.add_argument(
        '-p', '--prime',
        type     = int,
        help     = 'Characteristic of the coefficient field (default 10007)'
    )
    parser.add_argument(
        '--max-reseeds',
        type     = int,
        help     = 'Maximum number of draws before a construction is given up'
    )

def _add_input_args(parser):
    parser.add_argument(
        '-i', '--input',
        help     = 'Surface equation in x0..x3, either as text or as a path to a file '
                   'holding it'
    )

def _add_output_args(parser):
    parser.add_argument(
        '-o', '--out',
        type     = util.absolute_path,
        help     = 'Write the JSON document to this path'
    )
    parser.add_argument(
        '--json',
        action   = 'store_const',
        const    = True,
        help     = 'Print the JSON document instead of the progress tree'
    )


def add_construct_subparser(subparsers):
    parser = subparsers.add_parser(
        'construct',
        description='Construct a family instance and print its equation and certificate.'
    )
    _add_family_args(parser, family_required=True)
    _add_output_args(parser)
    parser.set_defaults(command='construct')

def add_verify_subparser(subparsers):
    parser = subparsers.add_parser(
        'verify',
        description='Verify the cusp census and three-divisibility certificate of a '
                    'family instance or of a user-supplied surface.'
    )
    _add_family_args(parser)
    _add_input_args(parser)
    parser.add_argument(
        '-C', '--certificate',
        nargs    = '+',
        default  = {},
        action   = util.KVPair,
        help     = 'Certificate for --input, in the form name=polynomial: s1, s2, s for '
                   'contact cubics or l1, l2, g, f for the second sextic family'
    )
    _add_output_args(parser)
    parser.set_defaults(command='verify')

def add_classify_subparser(subparsers):
    parser = subparsers.add_parser(
        'classify',
        description='Compute and classify the singular points of a surface.'
    )
    _add_family_args(parser)
    _add_input_args(parser)
    _add_output_args(parser)
    parser.set_defaults(command='classify')

def add_oracle_subparser(subparsers):
    parser = subparsers.add_parser(
        'oracle-scan',
        description='Brute-force scan of P3(F_q) for singular points of a surface.'
    )
    _add_family_args(parser)
    _add_input_args(parser)
    parser.add_argument(
        '-q', '--oracle-prime',
        type     = int,
        help     = 'Prime q of the scanned field, at most 257 (default 101)'
    )
    _add_output_args(parser)
    parser.set_defaults(command='oracle-scan')

def add_table_subparser(subparsers):
    parser = subparsers.add_parser(
        'table',
        description='Print the minimal number of cusps of a three-divisible set by degree.'
    )
    _add_output_args(parser)
    parser.set_defaults(command='table')

def add_report_subparser(subparsers):
    parser = subparsers.add_parser(
        'report',
        description='Verify every family across a list of seeds and write one report.'
    )
    parser.add_argument(
        '-f', '--family',
        choices  = FAMILY_TAGS,
        help     = 'Restrict the batch to one family'
    )
    parser.add_argument(
        '--seeds',
        type     = lambda s: [int(x) for x in s.split(',')],
        help     = 'Comma-separated seeds (default 0,1,2,3,4)'
    )
    parser.add_argument(
        '-p', '--prime',
        type     = int,
        help     = 'Characteristic of the coefficient field (default 10007)'
    )
    parser.add_argument(
        '-q', '--oracle-prime',
        type     = int,
        help     = 'Prime of the brute-force cross-check (default 101)'
    )
    parser.add_argument(
        '--no-oracle',
        action   = 'store_const',
        const    = False,
        dest     = 'oracle',
        help     = 'Skip the brute-force cross-check'
    )
    parser.add_argument(
        '-j', '--jobs',
        type     = int,
        help     = 'Number of worker processes'
    )
    parser.add_argument(
        '--max-reseeds',
        type     = int,
        help     = 'Maximum number of draws before a construction is given up'
    )
    _add_output_args(parser)
    parser.set_defaults(command='report')


# central argparse entry point
parser = argparse.ArgumentParser(
    'tricusp',
    description='Construct and certify surfaces with three-divisible sets of cusps.'
)
parser.add_argument(
    '-c', '--config-dir',
    default = None,
    type    = util.absolute_path,
    help    = 'Path to config directory (default $XDG_CONFIG_HOME/tricusp)'
)
parser.add_argument(
    '-v', '--version',
    action  = 'version',
    version = __version__,
    help    = 'Print tricusp version'
)
parser.add_argument(
    '--verbose',
    action  = 'count',
    default = 0,
    help    = 'Show library progress; repeat for debug output'
)
parser.add_argument(
    '--quiet',
    action  = 'store_true',
    help    = 'Only show errors'
)

# add subparsers
subparsers = parser.add_subparsers(title='subcommand actions')
add_construct_subparser(subparsers)
add_verify_subparser(subparsers)
add_classify_subparser(subparsers)
add_oracle_subparser(subparsers)
add_table_subparser(subparsers)
add_report_subparser(subparsers)


def config_from_args(args):
    '''Map parsed flags onto config keys; unset flags stay ``None``.'''
    get = lambda name: getattr(args, name, None)
    verbosity = -1 if args.quiet else args.verbose
    return load_config(
        args.command,
        args.config_dir,
        **{
            'field.prime': get('prime'),
            'oracle.prime': get('oracle_prime'),
            'families.max_reseeds': get('max_reseeds'),
            'report.seeds': get('seeds'),
            'report.jobs': get('jobs'),
            'report.oracle': get('oracle'),
            'output.json': get('json'),
            'run.family': get('family'),
            'run.seed': get('seed'),
            'run.input': get('input'),
            'run.certificate': get('certificate') or None,
            'run.out': get('out'),
            'run.verbosity': verbosity,
        },
    )

def main(argv=None) -> int:
    args = parser.parse_args(argv)

    if 'command' not in args:
        parser.print_help()
        return 0

    util.setup_logging(-1 if args.quiet else args.verbose)
    try:
        config = config_from_args(args)
        return run_command(config)
    except (ConfigError, PolySyntaxError, NotASurface) as exc:
        util.printc(f'error: {exc}', Fore.RED)
        return 2

if __name__ == '__main__':
    sys.exit(main())
