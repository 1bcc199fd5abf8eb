# encoding: utf-8

'''🧮 Global Integrals.

Classifies global integrals of automorphic representations whose Fourier coefficients have stabilizer
GL_m, by solving the dimension equation over the catalog of coefficient families, and reruns the
supporting verifications: inducing data of Eisenstein series, admissible Weyl elements, root-system
identities, and the exceptional orbit fixture.

To regenerate the m = 2 tables as Markdown:

    classify-global-integrals tables --m 2 --params 1..6 --emit markdown

To run every verification suite:

    classify-global-integrals verify-all

Exit status is 0 when everything checks out, 1 when a verification fails, and 2 for bad input or a
problem writing output.
'''

from . import VERSION
from ._argparse import (
    add_concurrency_argparse_options, add_emit_argparse_options, add_standard_argparse_options, positive_int, range_type
)
from ._classes import RunConfig
from .checks import CHECKS, DEFAULT_CHECKS, run_checks
from .const import E6, E7, EMIT_JSON, EMIT_MARKDOWN, EXIT_FAILED, EXIT_OK, EXIT_USAGE, GL, GSO, GSP
from .errors import DomainError, LabelLookupError
from .inducing import classify_inducing_data, compare_with_stated, induce_with_diagnostics, label_row
from .orbits import classical_orbit, exceptional_orbit, half_dim, orbit_dim
from .partitions import ClassicalFamily, Partition
from .solver import STATUSES, SolutionRow, enumerate_rows
from .tables import enumerate_tables, match_tables
from .weyl import AdmissibilityContext, admissible_set, check_admissibility
import argparse, json, logging, sys


__doc__ = '🧮 Global Integrals: classify global integrals with Fourier coefficients stabilized by GL_m'
__copyright__ = 'Copyright © 2025 California Institute of Technology'
__license__ = 'Apache 2.0'
_logger = logging.getLogger(__name__)

_groups = {g.lower(): g for g in (GL, GSP, GSO, E6, E7)}


def _group_type(value: str) -> str:
    '''Accept a group name in any case and return its canonical tag.'''
    try:
        return _groups[value.strip().lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f'{value} is not one of {", ".join(_groups.values())}')


def _partition_type(value: str) -> Partition:
    '''Parse a comma-separated partition for argparse.'''
    try:
        return Partition.parse(value)
    except DomainError as ex:
        raise argparse.ArgumentTypeError(str(ex))


def _dump(payload) -> str:
    '''Serialize a JSON payload the way every command emits it.'''
    return json.dumps(payload, indent=2, ensure_ascii=False) + '\n'


def _rows_markdown(title: str, rows: list[SolutionRow]) -> str:
    '''Render solver rows as a Markdown table under the given title.'''
    lines = [f'# {title}', '', '| l | Contributions | Status | Representations |', '| --- | --- | --- | --- |']
    for row in rows:
        flags = f' [{", ".join(sorted(row.flags))}]' if row.flags else ''
        lines.append(f'| {row.l} | ({",".join(str(c) for c in row.contributions)}) | {row.status}{flags} | {row} |')
    return '\n'.join(lines) + '\n'


def cmd_orbit_dim(args: argparse.Namespace, cfg: RunConfig) -> tuple[str, int]:
    '''Report the dimension and half-dimension of one orbit.'''
    if args.group in (E6, E7):
        orbit = exceptional_orbit(args.group, args.orbit.strip())
    else:
        parts = Partition.parse(args.orbit)
        orbit = classical_orbit(args.group, parts.size, parts)
    return _dump({'orbit': orbit.to_json(), 'dim': orbit_dim(orbit), 'half_dim': half_dim(orbit)}), EXIT_OK


def cmd_induce(args: argparse.Namespace, cfg: RunConfig) -> tuple[str, int]:
    '''Report the orbit induced from τ1 ⊗ τ2 and whether it is valid for the group.'''
    result, valid = induce_with_diagnostics(args.group, args.tau1, args.tau2)
    return _dump({'group': args.group, 'tau1': args.tau1.to_json(), 'tau2': args.tau2.to_json(), 'orbit': result.to_json(), 'valid': valid}), EXIT_OK


def _inducing_family(args: argparse.Namespace) -> ClassicalFamily:
    '''Return the classical family of the target, checking it against ``--p`` when given.'''
    family = ClassicalFamily(args.group, args.target.size)
    if args.p is not None:
        expected = {GL: 2 * args.p, GSP: 2 * (2 * args.p + 1), GSO: 4 * args.p}[args.group]
        if expected != family.size:
            raise DomainError(f'{args.target} is a partition of {family.size}, but p={args.p} needs {expected}')
    return family


def cmd_inducing(args: argparse.Namespace, cfg: RunConfig) -> tuple[str, int]:
    '''Classify the inducing data of a target orbit and compare them with the closed form.'''
    family = _inducing_family(args)
    data = classify_inducing_data(family, args.target)
    try:
        missing, extra = compare_with_stated(family, args.target)
        stated = True
    except DomainError:
        missing, extra, stated = set(), set(), False
    code = EXIT_FAILED if missing or extra else EXIT_OK
    if cfg.emit == EMIT_MARKDOWN:
        lines = [f'# Inducing data for {args.target} in {family}', '']
        lines.extend(f'- {datum} (Levi {datum.n1}×{datum.n2}, a={datum.a}, i={datum.i})' for datum in data)
        for label, extras in (('Closed form only', missing), ('Brute force only', extra)):
            lines.extend(f'- 💥 {label}: {datum}' for datum in sorted(extras, key=str))
        return '\n'.join(lines) + '\n', code
    return _dump({
        'group': str(family), 'target': args.target.to_json(), 'data': [datum.to_json() for datum in data],
        'closed_form': stated, 'missing': [d.to_json() for d in sorted(missing, key=str)],
        'extra': [d.to_json() for d in sorted(extra, key=str)],
    }), code


def _solver_args(cfg: RunConfig) -> tuple:
    '''Return the positional solver arguments held by the run configuration.'''
    return cfg.m, cfg.params, cfg.l_max, cfg.cuspidal_exclusion, cfg.allow_open_regime, cfg.concurrency


def cmd_classify(args: argparse.Namespace, cfg: RunConfig) -> tuple[str, int]:
    '''Solve the dimension equation and emit every row; fail if the rows miss the tables.'''
    rows = enumerate_rows(*_solver_args(cfg))
    tables = match_tables(rows, cfg.m, cfg.params)
    code = EXIT_OK if tables.ok else EXIT_FAILED
    if cfg.emit == EMIT_MARKDOWN:
        return _rows_markdown(f'Global integrals for GL_{cfg.m}', rows), code
    return _dump({'m': cfg.m, 'params': list(cfg.params), 'ok': tables.ok, 'rows': [row.to_json() for row in rows]}), code


def cmd_tables(args: argparse.Namespace, cfg: RunConfig) -> tuple[str, int]:
    '''Solve the dimension equation and emit the rows matched against the expected tables.'''
    tables = enumerate_tables(*_solver_args(cfg))
    code = EXIT_OK if tables.ok else EXIT_FAILED
    if cfg.emit == EMIT_MARKDOWN:
        return tables.to_markdown(), code
    return _dump(tables.to_json()), code


def cmd_label(args: argparse.Namespace, cfg: RunConfig) -> tuple[str, int]:
    '''Solve the dimension equation and label each row by its odd Eisenstein series.'''
    rows = [label_row(row) for row in enumerate_rows(*_solver_args(cfg))]
    if cfg.emit == EMIT_MARKDOWN:
        return _rows_markdown(f'Labeled global integrals for GL_{cfg.m}', rows), EXIT_OK
    counts = {status: sum(1 for row in rows if row.status == status) for status in STATUSES}
    return _dump({'m': cfg.m, 'params': list(cfg.params), 'counts': counts, 'rows': [row.to_json() for row in rows]}), EXIT_OK


def cmd_weyl(args: argparse.Namespace, cfg: RunConfig) -> tuple[str, int]:
    '''List the admissible Weyl elements or, with ``--check``, compare them with the w_q.'''
    ctx = AdmissibilityContext(args.p, args.r)
    if args.check:
        report = check_admissibility(args.p, args.r, cfg.concurrency)
        found, code = report.found, EXIT_OK if report.ok else EXIT_FAILED
        payload = report.to_json()
    else:
        found, code = admissible_set(ctx, cfg.concurrency), EXIT_OK
        payload = {'p': args.p, 'r': args.r, 'admissible': [w.to_json() for w in found]}
    if cfg.emit == EMIT_MARKDOWN:
        lines = [f'# Admissible Weyl elements, p={args.p}, r={args.r}', '']
        lines.extend(f'- {w}' for w in found)
        if args.check: lines.extend(['', '**✅ Matches the w_q**' if code == EXIT_OK else '**💥 Differs from the w_q**'])
        return '\n'.join(lines) + '\n', code
    return _dump(payload), code


def cmd_verify_roots(args: argparse.Namespace, cfg: RunConfig) -> tuple[str, int]:
    '''Run the root-system suite alone.'''
    report = run_checks(cfg, ('roots',))
    return report.generate_report(cfg.emit), EXIT_OK if report.ok else EXIT_FAILED


def cmd_verify_all(args: argparse.Namespace, cfg: RunConfig) -> tuple[str, int]:
    '''Run the chosen verification suites, logging each failure.'''
    report = run_checks(cfg, args.only or DEFAULT_CHECKS)
    for finding in report.failures:
        _logger.error('💥 %s: %s', finding.check, finding.value)
    return report.generate_report(cfg.emit), EXIT_OK if report.ok else EXIT_FAILED


def _add_solver_options(parser: argparse.ArgumentParser, m_required: bool = True):
    '''Add the options shared by every command that drives the solver.'''
    parser.add_argument('-m', '--m', type=positive_int, required=m_required, help='Size of the stabilizer GL_m')
    parser.add_argument(
        '-p', '--params', type=range_type, default='1..6', help='Inclusive family parameter range, defaults to %(default)s'
    )
    parser.add_argument('-l', '--l-max', type=positive_int, help='Most representations in one integral')
    parser.add_argument(
        '--allow-open-regime', action='store_true', help='Also solve the m ≥ 4 rows with a cuspidal GL_m slot, flagged'
    )
    parser.add_argument(
        '--lift-cuspidal-exclusion', '--disable-lemma1', action='store_true',
        help='Let GE6 cuspidal representations sit on D5 and D5(a1)'
    )
    add_concurrency_argparse_options(parser)


def _build_parser() -> argparse.ArgumentParser:
    '''Build the argument parser with one subcommand per operation.'''
    parser = argparse.ArgumentParser(
        description=__doc__,
        epilog='\n'.join(['Verification suites:'] + [f'• {name}: {cls.description}' for name, cls in CHECKS.items()]),
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    add_standard_argparse_options(parser)
    parser.add_argument('-o', '--output', default='-', help='Where to write results, defaults to standard output')
    commands = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

    sub = commands.add_parser('orbit-dim', help='Dimension of a unipotent orbit')
    sub.add_argument('-g', '--group', type=_group_type, required=True, help='GL, GSp, GSO, E6 or E7')
    sub.add_argument('orbit', help='Partition such as 4,2 or a Bala–Carter label such as E7(a2)')
    sub.set_defaults(handler=cmd_orbit_dim)

    sub = commands.add_parser('induce', help='Orbit of an Eisenstein series induced from τ1 ⊗ τ2')
    sub.add_argument('-g', '--group', type=_group_type, required=True, help='GL, GSp or GSO')
    sub.add_argument('--tau1', type=_partition_type, required=True, help='Orbit of τ1 on the GL block')
    sub.add_argument('--tau2', type=_partition_type, required=True, help='Orbit of τ2 on the other block')
    sub.set_defaults(handler=cmd_induce)

    sub = commands.add_parser('inducing', help='Every inducing datum of a two-row orbit')
    sub.add_argument('-g', '--group', type=_group_type, required=True, help='GL, GSp or GSO')
    sub.add_argument('-t', '--target', type=_partition_type, required=True, help='Target orbit such as 5,3')
    sub.add_argument('--p', type=positive_int, help='Optional p, checked against the size of the target')
    add_emit_argparse_options(sub)
    sub.set_defaults(handler=cmd_inducing)

    for name, handler, text in (
        ('classify', cmd_classify, 'Solve the dimension equation and list every row'),
        ('tables', cmd_tables, 'Solve the dimension equation and match the rows against the tables'),
        ('label', cmd_label, 'Solve for m = 2 and label rows by odd Eisenstein series'),
    ):
        sub = commands.add_parser(name, help=text)
        _add_solver_options(sub)
        add_emit_argparse_options(sub, default=EMIT_MARKDOWN if name == 'tables' else EMIT_JSON)
        sub.set_defaults(handler=handler)

    sub = commands.add_parser('weyl', help='Admissible Weyl elements in GL_2p')
    sub.add_argument('--p', type=positive_int, required=True, help='Half the size of GL_2p')
    sub.add_argument('--r', type=positive_int, required=True, help='Size of the first Levi block, p ≤ r < 2p')
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument('--list', action='store_false', dest='check', help='List the admissible elements (default)')
    mode.add_argument('--check', action='store_true', help='Compare them with the w_q')
    add_emit_argparse_options(sub)
    add_concurrency_argparse_options(sub)
    sub.set_defaults(handler=cmd_weyl, check=False)

    sub = commands.add_parser('verify-roots', help='Check the root-system identities')
    add_emit_argparse_options(sub, default=EMIT_MARKDOWN)
    sub.set_defaults(handler=cmd_verify_roots)

    sub = commands.add_parser('verify-all', help='Run every verification suite')
    _add_solver_options(sub, m_required=False)
    sub.add_argument('--only', nargs='+', choices=CHECKS.keys(), help='Run just these suites')
    add_emit_argparse_options(sub, default=EMIT_MARKDOWN)
    sub.set_defaults(handler=cmd_verify_all)
    return parser


def _write(output: str, text: str):
    '''Write the text to standard output or to the named file.'''
    if output == '-':
        sys.stdout.write(text)
    else:
        with open(output, 'w') as io:
            io.write(text)
        _logger.info('📝 Wrote %s', output)


def main():
    '''Main entry point to get the show on the road.'''
    parser = _build_parser()
    args = parser.parse_args()
    logging.basicConfig(level=args.loglevel, format='%(levelname)s %(message)s')
    _logger.debug('🧮 Global Integrals version %s', VERSION)
    try:
        cfg = RunConfig.from_args(args)
        text, code = args.handler(args, cfg)
    except (DomainError, LabelLookupError) as ex:
        _logger.error('🤷 %s', ex)
        sys.exit(EXIT_USAGE)
    try:
        _write(args.output, text)
    except OSError as ex:
        _logger.error('💥 Cannot write %s: %s', args.output, ex)
        sys.exit(EXIT_USAGE)
    sys.exit(code)


if __name__ == '__main__':
    main()
