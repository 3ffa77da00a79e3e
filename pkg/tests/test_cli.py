import io
import json
import math

import pytest

from dunklsusy.cli import main
from dunklsusy.cli import parse_config
from dunklsusy.constants import EXIT_OK
from dunklsusy.constants import EXIT_USAGE_ERROR
from dunklsusy.constants import EXIT_VERIFICATION_FAILED


def run(*argv):
    stdout = io.StringIO()
    stderr = io.StringIO()
    code = main(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def run_json(*argv):
    code, out, err = run(*(argv + ('--format', 'json')))
    return code, json.loads(out) if out else None, err


class TestParsing():

    def test_parse_config(self):
        config = parse_config([
            'gram', '--family', 'laguerre-susy', '--s', '2', '--alpha', '1.5',
            '--nmax', '3', '--format', 'csv',
        ])
        assert config.command == 'gram'
        assert config.selector == 'laguerre-susy'
        assert config.params == {'s': 2.0, 'alpha': 1.5}
        assert config.n_max == 3
        assert config.output_format == 'csv'

    def test_spec_is_an_alias(self):
        config = parse_config(['potentials', '--spec', 'scarf1', '--A', '2'])
        assert config.selector == 'scarf1'
        assert config.params == {'A': 2.0}


class TestCommands():

    def test_eval(self):
        code, data, _ = run_json(
            'eval', '--family', 'hermite-susy', '--s', '1', '--n', '1',
            '--x', '0.5',
        )
        assert code == EXIT_OK
        assert data['command'] == 'eval'
        assert data['results'] == [{'n': 1, 'x': 0.5, 'value': 0.25}]
        assert data['pass'] is True

        code, data, _ = run_json(
            'eval', '--family', 'hermite-susy', '--n', '-1', '--x', '0.5',
        )
        assert data['results'][0]['value'] == -0.75

        code, data, _ = run_json(
            'eval', '--family', 'hermite-susy', '--n', '0', '--x', '9.9',
        )
        assert [r['value'] for r in data['results']] == [1]

    def test_eval_potential(self):
        code, data, _ = run_json(
            'eval', '--spec', '3d-oscillator', '--s', '1', '--l', '0',
            '--n', '1', '--x', '1.0', '2.0',
        )
        assert code == EXIT_OK
        assert data['results'][0]['value'] == pytest.approx(
            0.5 * math.exp(-0.5),
        )
        assert len(data['results']) == 2

    def test_coeffs_csv(self):
        code, out, _ = run(
            'coeffs', '--family', 'hermite-susy', '--n', '1',
            '--format', 'csv',
        )
        assert code == EXIT_OK
        assert out == 'power,coefficient\n0,-0.5\n1,1\n2,1\n'

    def test_gram(self):
        code, data, err = run_json(
            'gram', '--family', 'hermite-susy', '--s', '1', '--nmax', '4',
        )
        assert code == EXIT_OK
        assert data['max_residual'] <= 1e-10
        assert len(data['results']) == 9
        assert err.startswith('max_offdiag=')

        code, data, _ = run_json(
            'gram', '--family', 'laguerre-susy', '--s', '1', '--alpha', '1.5',
            '--nmax', '4',
        )
        assert code == EXIT_OK

        code, data, _ = run_json(
            'gram', '--family', 'hermite-susy', '--nmax', '0',
        )
        assert data['results'] == [
            {'index': 0, '0': pytest.approx(math.sqrt(math.pi))},
        ]

    def test_gram_order_too_small(self):
        code, out, err = run(
            'gram', '--family', 'hermite-susy', '--nmax', '4', '--order', '5',
        )
        assert code == EXIT_USAGE_ERROR
        assert out == ''
        assert err.startswith('dunkl-susy: error:')

    def test_eigencheck(self):
        code, data, _ = run_json(
            'eigencheck', '--family', 'hermite-susy', '--s', '1',
            '--nmax', '6',
        )
        assert code == EXIT_OK
        assert data['max_residual'] <= 1e-12
        assert data['results'][0] == {
            'n': 0, 'eigenvalue': 0.0, 'residual': 0.0, 'pass': True,
        }
        assert data['results'][1]['eigenvalue'] == 2

        code, data, _ = run_json(
            'eigencheck', '--spec', 'scarf1', '--A', '2', '--alpha', '1',
            '--nmax', '4',
        )
        assert code == EXIT_OK
        assert data['max_residual'] <= 1e-7

    def test_verification_failure_still_writes_report(self):
        code, data, err = run_json(
            'eigencheck', '--spec', 'scarf1', '--A', '2', '--alpha', '1',
            '--nmax', '2', '--tol', '1e-300',
        )
        assert code == EXIT_VERIFICATION_FAILED
        assert data['pass'] is False
        assert 'verification failed' in err

    def test_potentials(self):
        code, data, err = run_json(
            'potentials', '--spec', 'shifted-oscillator', '--s', '1',
        )
        assert code == EXIT_OK
        assert data['results'][0]['check'] == 'shape_constant'
        assert data['results'][0]['value'] == pytest.approx(2)
        assert data['results'][1]['value'] <= 1e-12
        assert err.startswith('R=2 ')

        code, _, err = run(
            'potentials', '--spec', 'gen-poschl-teller', '--A', '3',
            '--B', '2', '--alpha', '1',
        )
        assert code == EXIT_USAGE_ERROR
        assert err.startswith('dunkl-susy: error:')

    def test_potentials_catalog(self):
        code, out, err = run('potentials')
        assert code == EXIT_OK
        assert err == ''
        lines = out.splitlines()
        assert len(lines) == 7
        assert lines[0].split() == [
            'name', 'description', 'parameters', 'case',
        ]
        assert lines[1].split()[0] == 'shifted-oscillator'

        code, data, _ = run_json('potentials')
        assert code == EXIT_OK
        assert data['pass'] is True
        assert [row['name'] for row in data['results']] == [
            'shifted-oscillator', 'scarf2', 'scarf1', '3d-oscillator',
            'gen-poschl-teller', 'poschl-teller',
        ]
        assert data['results'][3]['case'] == 'B'
        assert data['results'][1]['parameters'] == 'A, alpha'

    def test_recurrence_check(self):
        code, data, _ = run_json(
            'recurrence-check', '--family', 'hermite-susy', '--nmax', '20',
        )
        assert code == EXIT_OK
        assert data['max_residual'] <= 1e-11

        code, data, _ = run_json(
            'recurrence-check', '--family', 'hermite-susy', '--nmax', '1',
        )
        assert data['max_residual'] == 0

    def test_list(self):
        code, out, _ = run('list')
        assert code == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 13
        assert 'shifted-oscillator' in out
        assert 'gen-poschl-teller' in out

    def test_out_path(self, tmpdir):
        path = str(tmpdir.join('gram.csv'))
        code, out, _ = run(
            'gram', '--family', 'hermite-susy', '--nmax', '1',
            '--format', 'csv', '--out', path,
        )
        assert code == EXIT_OK
        assert out == ''
        with open(path) as handle:
            assert handle.readline() == 'index,0,1,-1\n'


class TestUsageErrors():

    def test_unknown_selector(self):
        code, out, err = run('gram', '--family', 'chebyshev-susy')
        assert code == EXIT_USAGE_ERROR
        assert out == ''
        assert 'chebyshev-susy' in err

    def test_selector_not_valid_for_command(self):
        code, _, _ = run('coeffs', '--spec', 'scarf1', '--n', '1')
        assert code == EXIT_USAGE_ERROR

    def test_missing_arguments(self):
        assert run('eval', '--family', 'hermite-susy', '--x', '1')[0] \
            == EXIT_USAGE_ERROR
        assert run('eval', '--family', 'hermite-susy', '--n', '1')[0] \
            == EXIT_USAGE_ERROR
        assert run('gram')[0] == EXIT_USAGE_ERROR
        assert run('gram', '--family', 'hermite-susy', '--nmax', '-1')[0] \
            == EXIT_USAGE_ERROR

    def test_argparse_errors(self, capsys):
        assert run('integrate')[0] == EXIT_USAGE_ERROR
        assert run('gram', '--family', 'hermite-susy', '--nmax', 'x')[0] \
            == EXIT_USAGE_ERROR

    def test_missing_potential_parameter(self):
        code, _, err = run('potentials', '--spec', 'scarf1', '--A', '2')
        assert code == EXIT_USAGE_ERROR
        assert 'alpha' in err
