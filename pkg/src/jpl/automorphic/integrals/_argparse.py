# encoding: utf-8

'''🧮 Global Integrals: argument parsing.'''


from . import VERSION
from .const import EMIT_FORMATS, EMIT_JSON
from multiprocessing import cpu_count
import argparse, logging, re


_range_re = re.compile(r'^\s*(\d+)\s*(?:\.\.|-|:)\s*(\d+)\s*$')


def range_type(value: str) -> tuple[int, int]:
    '''Parse an inclusive range such as ``1..6`` (a single number ``3`` means ``3..3``).'''
    value = value.strip()
    if value.isdigit():
        lo = hi = int(value)
    else:
        match = _range_re.match(value)
        if not match:
            raise argparse.ArgumentTypeError(f'{value} is not a range like 1..6')
        lo, hi = int(match.group(1)), int(match.group(2))
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f'{value} must be a non-empty range of positive integers')
    return lo, hi


def positive_int(value: str) -> int:
    '''Parse a strictly positive integer.'''
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{value} is not an integer')
    if number < 1:
        raise argparse.ArgumentTypeError(f'{value} must be at least 1')
    return number


def add_logging_argparse_options(parser):
    '''Add the mutually exclusive ``--debug`` and ``--quiet`` options; both set ``loglevel``.'''
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        '-d', '--debug', action='store_const', const=logging.DEBUG, default=logging.INFO, dest='loglevel',
        help='Log solver and scan internals',
    )
    group.add_argument(
        '-q', '--quiet', action='store_const', const=logging.WARNING, dest='loglevel',
        help='Log only discrepancies and failures',
    )


def add_standard_argparse_options(parser):
    '''Add ``--version`` and the logging options.'''
    parser.add_argument('--version', action='version', version=f'%(prog)s {VERSION}')
    add_logging_argparse_options(parser)


def add_emit_argparse_options(parser, default: str = EMIT_JSON):
    '''Add the `--emit` output-format option.'''
    parser.add_argument(
        '-e', '--emit', choices=EMIT_FORMATS, default=default, help='Output format, defaults to %(default)s'
    )


def add_concurrency_argparse_options(parser):
    '''Add the `--concurrency` option; 1 keeps everything in this process.'''
    parser.add_argument(
        '-c', '--concurrency', type=positive_int, default=cpu_count(),
        help='Number of concurrent processes, defaults to %(default)d'
    )
