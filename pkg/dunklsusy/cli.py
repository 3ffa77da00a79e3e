"""Command line front end: ``dunkl-susy <command> [options]``.

Exit codes: 0 success, 1 a verification failed (the report is still
written), 2 usage or parameter error.
"""

import argparse
from collections import namedtuple
import logging
import sys

from dunklsusy.constants import CLASSICAL_FAMILIES
from dunklsusy.constants import EXIT_OK
from dunklsusy.constants import EXIT_USAGE_ERROR
from dunklsusy.constants import EXIT_VERIFICATION_FAILED
from dunklsusy.constants import FORMAT_CSV
from dunklsusy.constants import FORMAT_JSON
from dunklsusy.constants import FORMAT_TABLE
from dunklsusy.constants import LEVEL_PARTNER_1
from dunklsusy.constants import LEVEL_PARTNER_2
from dunklsusy.constants import OUTPUT_FORMATS
from dunklsusy.constants import POTENTIAL_SPECS
from dunklsusy.constants import SUSY_FAMILIES
from dunklsusy.dunklsusy_client import Client
from dunklsusy.errors import DunklSusyError
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import UnknownSelectorError
from dunklsusy.errors import VerificationFailed
from dunklsusy.helpers.report_helpers import json_stringify
from dunklsusy.helpers.report_helpers import remove_nones
from dunklsusy.helpers.report_helpers import render_csv
from dunklsusy.helpers.report_helpers import render_table
from dunklsusy.helpers.report_helpers import write_report

logger = logging.getLogger(__name__)

DEFAULT_N_MAX = 4
PARAMETER_FLAGS = ('s', 'alpha', 'beta', 'A', 'B', 'l')

RunConfig = namedtuple(
    'RunConfig',
    [
        'command',
        'selector',
        'params',
        'n',
        'n_max',
        'order',
        'x',
        'level',
        'orthonormal',
        'output_format',
        'out',
        'tolerance',
        'verbose',
    ],
)

Report = namedtuple(
    'Report',
    [
        'headers',
        'rows',
        'max_residual',
        'passed',
        'summary',
    ],
)

# Selectors each command accepts.
SELECTORS = {
    'eval': SUSY_FAMILIES + CLASSICAL_FAMILIES + POTENTIAL_SPECS,
    'coeffs': SUSY_FAMILIES + CLASSICAL_FAMILIES,
    'gram': SUSY_FAMILIES + POTENTIAL_SPECS,
    'eigencheck': SUSY_FAMILIES + POTENTIAL_SPECS,
    'potentials': POTENTIAL_SPECS,
    'recurrence-check': SUSY_FAMILIES,
    'list': [],
}


# ============ Parsing ============

def build_parser():
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument(
        '--family', '--spec', dest='selector',
        help='family or potential name (see the list command)',
    )
    for flag in PARAMETER_FLAGS:
        common.add_argument('--' + flag, dest=flag, type=float)
    common.add_argument('--n', type=int)
    common.add_argument('--nmax', dest='n_max', type=int,
                        default=DEFAULT_N_MAX)
    common.add_argument('--order', type=int)
    common.add_argument('--x', type=float, nargs='+')
    common.add_argument(
        '--level', type=int, default=LEVEL_PARTNER_1,
        choices=[LEVEL_PARTNER_1, LEVEL_PARTNER_2],
    )
    common.add_argument('--orthonormal', action='store_true')
    common.add_argument(
        '--format', dest='output_format', default=FORMAT_TABLE,
        choices=OUTPUT_FORMATS,
    )
    common.add_argument('--out')
    common.add_argument('--tol', dest='tolerance', type=float)
    common.add_argument('--verbose', action='store_true')

    parser = argparse.ArgumentParser(
        prog='dunkl-susy',
        description='Dunkl-SUSY orthogonal polynomials and shape invariant '
                    'potentials.',
        allow_abbrev=False,
    )
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    for name in SELECTORS:
        commands.add_parser(name, parents=[common], allow_abbrev=False)
    return parser


def parse_config(argv=None):
    arguments = build_parser().parse_args(argv)
    return RunConfig(
        command=arguments.command,
        selector=arguments.selector,
        params=remove_nones(
            {flag: getattr(arguments, flag) for flag in PARAMETER_FLAGS},
        ),
        n=arguments.n,
        n_max=arguments.n_max,
        order=arguments.order,
        x=arguments.x,
        level=arguments.level,
        orthonormal=arguments.orthonormal,
        output_format=arguments.output_format,
        out=arguments.out,
        tolerance=arguments.tolerance,
        verbose=arguments.verbose,
    )


def validate_config(config):
    """Reject unknown selectors and missing arguments before computing."""
    allowed = SELECTORS[config.command]
    if allowed and not (
        config.selector is None and config.command == 'potentials'
    ):
        if config.selector is None:
            raise ParameterDomainError(
                '{} needs --family or --spec'.format(config.command),
            )
        if config.selector not in allowed:
            raise UnknownSelectorError(
                'Unknown selector {!r} for {}; expected one of {}'.format(
                    config.selector, config.command, allowed,
                ),
            )
    if config.command in ('eval', 'coeffs') and config.n is None:
        raise ParameterDomainError('{} needs --n'.format(config.command))
    if config.command == 'eval' and not config.x:
        raise ParameterDomainError('eval needs --x')
    if config.n_max < 0:
        raise ParameterDomainError(
            '--nmax must be nonnegative, got {}'.format(config.n_max),
        )
    if config.n_max < 1 and config.command == 'recurrence-check':
        raise ParameterDomainError('recurrence-check needs --nmax >= 1')


# ============ Commands ============

def _family_params(config):
    params = config.params
    return {'s': params.get('s', 1), 'alpha': params.get('alpha')}


def cmd_eval(client, config):
    rows = []
    for x in config.x:
        if config.selector in POTENTIAL_SPECS:
            value = client.potentials.wavefunction(
                config.selector, config.n, x, level=config.level,
                **config.params
            )
        else:
            value = client.families.evaluate(
                config.selector, config.n, x,
                beta=config.params.get('beta'),
                orthonormal=config.orthonormal,
                **_family_params(config)
            )
        rows.append((config.n, x, float(value)))
    return Report(('n', 'x', 'value'), rows, None, None, None)


def cmd_coeffs(client, config):
    polynomial = client.families.coefficients(
        config.selector, config.n,
        beta=config.params.get('beta'),
        orthonormal=config.orthonormal,
        **_family_params(config)
    )
    rows = [(i, float(c)) for i, c in enumerate(polynomial.coefficients)]
    return Report(('power', 'coefficient'), rows, None, None, None)


def cmd_gram(client, config):
    if config.selector in POTENTIAL_SPECS:
        report, passed = client.potentials.gram(
            config.selector, config.n_max, **config.params
        )
    else:
        report, passed = client.families.gram(
            config.selector, config.n_max,
            orthonormal=config.orthonormal,
            **_family_params(config)
        )
    headers = ['index'] + [str(i) for i in report.indices]
    rows = [
        [index] + [float(value) for value in row]
        for index, row in zip(report.indices, report.matrix)
    ]
    residual = max(
        report.max_offdiag_abs / report.scale, report.max_diag_relerr,
    )
    summary = 'max_offdiag={:.3g} max_diag_relerr={:.3g}'.format(
        report.max_offdiag_abs, report.max_diag_relerr,
    )
    return Report(headers, rows, residual, passed, summary)


def _eigen_report(reports):
    rows = [(r.n, r.eigenvalue, r.residual, r.passed) for r in reports]
    worst = max(r.residual for r in reports)
    return Report(
        ('n', 'eigenvalue', 'residual', 'pass'),
        rows,
        worst,
        all(r.passed for r in reports),
        'max_residual={:.3g}'.format(worst),
    )


def cmd_eigencheck(client, config):
    if config.selector in POTENTIAL_SPECS:
        reports = client.potentials.eigencheck(
            config.selector, config.n_max, **config.params
        )
    else:
        reports = client.families.eigencheck(
            config.selector, config.n_max, **_family_params(config)
        )
    return _eigen_report(reports)


def cmd_potentials(client, config):
    if config.selector is None:
        return Report(
            ('name', 'description', 'parameters', 'case'),
            [
                (name, display, ', '.join(parameters), case)
                for name, display, parameters, case
                in client.potentials.list()
            ],
            None, None, None,
        )
    rows = client.potentials.report(
        config.selector, config.n_max, **config.params
    )
    residuals = [
        value for check, _, value, _ in rows
        if check in (
            'shape_invariance_residual',
            'partner_potential_deviation',
            'intertwining_spread',
        )
    ]
    worst = max(residuals)
    return Report(
        ('check', 'n', 'value', 'pass'),
        rows,
        worst,
        all(row[3] for row in rows),
        'R={:.6g} max_residual={:.3g}'.format(rows[0][2], worst),
    )


def cmd_recurrence_check(client, config):
    rows, passed = client.families.recurrence_check(
        config.selector, config.n_max, **_family_params(config)
    )
    worst = max((max(r[1], r[2]) for r in rows), default=0.0)
    return Report(
        ('n', 'plus_difference', 'minus_difference'),
        rows,
        worst,
        passed,
        'max_difference={:.3g}'.format(worst),
    )


def cmd_list(client, config):
    rows = [(name, 'dunkl-susy', 's, alpha') for name in SUSY_FAMILIES]
    rows += [(name, 'classical', 'alpha, beta') for name in CLASSICAL_FAMILIES]
    rows += [
        (name, display, ', '.join(parameters))
        for name, display, parameters, _ in client.potentials.list()
    ]
    return Report(('name', 'description', 'parameters'), rows, None, None,
                  None)


COMMANDS = {
    'eval': cmd_eval,
    'coeffs': cmd_coeffs,
    'gram': cmd_gram,
    'eigencheck': cmd_eigencheck,
    'potentials': cmd_potentials,
    'recurrence-check': cmd_recurrence_check,
    'list': cmd_list,
}


# ============ Output ============

def render(config, report):
    if config.output_format == FORMAT_CSV:
        return render_csv(report.headers, report.rows)
    if config.output_format == FORMAT_JSON:
        params = remove_nones(dict(
            config.params,
            selector=config.selector,
            n=config.n,
            n_max=config.n_max if config.command not in (
                'eval', 'coeffs', 'list',
            ) else None,
            order=config.order,
            level=config.level if config.command == 'eval' else None,
            orthonormal=config.orthonormal or None,
        ))
        return json_stringify({
            'command': config.command,
            'params': params,
            'results': [dict(zip(report.headers, row))
                        for row in report.rows],
            'max_residual': report.max_residual,
            'pass': True if report.passed is None else report.passed,
        }) + '\n'
    return render_table(report.headers, report.rows)


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config = parse_config(argv)
    except SystemExit as error:
        return error.code
    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
    )

    client = Client(tolerance=config.tolerance, order=config.order)
    try:
        validate_config(config)
        report = COMMANDS[config.command](client, config)
        write_report(render(config, report), config.out, stdout)
        if report.summary:
            stderr.write(report.summary + '\n')
        if report.passed is False:
            raise VerificationFailed(
                config.command, report.max_residual, config.tolerance, report,
            )
    except VerificationFailed as failure:
        logger.debug('%r', failure)
        stderr.write('dunkl-susy: verification failed: max residual {}\n'
                     .format(failure.max_residual))
        return EXIT_VERIFICATION_FAILED
    except (DunklSusyError, ValueError, OSError) as error:
        stderr.write('dunkl-susy: error: {}\n'.format(error))
        return EXIT_USAGE_ERROR
    return EXIT_OK
