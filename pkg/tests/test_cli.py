# -*- coding: utf-8 -*-

import json
import math
from dataclasses import replace

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner

from cqedmetro.metrology import lambda_uncertainty
from cqedmetro.scripts.cqedmetro import cqedmetro
from cqedmetro.sweep import RunConfig
from cqedmetro.util import get_example_path

DISPERSIVE = {
    'n_qubits': 4, 'b_z': 1.0, 'B_x': 0.8660254037844386, 'lambda': 0.0,
    'lambda_c': 0.04, 'omega_c': 0.8, 'T': 10.0
}

DEGENERATE = {
    'n_qubits': 3, 'b_z': 1.0, 'B_x': 0.3, 'lambda': 0.5, 'lambda_c': 0.02,
    'omega_c': 0.2, 'T': 10.0
}


@pytest.fixture
def write_config(tmp_path):
    def _write(d, name='config.json'):
        path = tmp_path / name
        path.write_text(json.dumps(d))
        return str(path)
    return _write


def _invoke(*args):
    return CliRunner().invoke(cqedmetro, list(args))


def _read_csv(path):
    return pd.read_csv(path, float_precision='round_trip')


class TestProtocolCommand(object):
    def test_tracked_example(self):
        result = _invoke('protocol', '-c',
                         str(get_example_path('protocol_tracked.json')))
        assert result.exit_code == 0
        record = json.loads(result.stdout)
        assert record['phi'] == 0
        assert record['p_up'] == pytest.approx(1, abs=1e-12)
        assert record['delta_phi'] == 0.25
        assert record['delta_omega'] == pytest.approx(0.025, rel=1e-15)
        assert record['sql_delta_phi'] == 0.5
        assert record['representation'] == 'spin_only'
        assert record['p_up_raw'] == pytest.approx(1, abs=1e-12)
        assert record['p_up_raw'] + record['p_down_raw'] + \
            record['leakage'] == pytest.approx(1, abs=1e-12)

    def test_degenerate_example(self):
        result = _invoke('protocol', '-c',
                         str(get_example_path('protocol_degenerate.json')))
        assert result.exit_code == 3
        assert 'degeneracy' in result.output

    def test_degenerate_without_delta_lambda(self, write_config):
        path = write_config(dict(DEGENERATE, delta_lambda=False))
        result = _invoke('protocol', '--config', path)
        assert result.exit_code == 0
        assert json.loads(result.stdout)['delta_lambda'] is None

    def test_target_phase(self, write_config):
        path = write_config(dict(DISPERSIVE, n_qubits=2, phi=math.pi / 4))
        result = _invoke('protocol', '--config', path)
        assert result.exit_code == 0
        record = json.loads(result.stdout)
        assert record['phi'] == pytest.approx(math.pi / 4, abs=1e-12)
        assert record['p_up'] == pytest.approx(0.5, abs=1e-9)

    def test_missing_file(self, tmp_path):
        result = _invoke('protocol', '-c', str(tmp_path / 'nothing.json'))
        assert result.exit_code == 2

    def test_parse_errors(self, write_config):
        bad = [
            dict(DISPERSIVE, colour='blue'),
            {k: v for k, v in DISPERSIVE.items() if k != 'omega_c'},
            dict(DISPERSIVE, phi=0.1, omega_ref=1.0),
            dict(DISPERSIVE, n_qubits=0),
            dict(DISPERSIVE, representation='dense'),
            dict(DISPERSIVE, representation='composite', n_max=3,
                 photon_number=4),
            dict(DISPERSIVE, hamiltonian='collective'),
            dict(DISPERSIVE, representation='composite', hamiltonian='exact'),
        ]
        for i, d in enumerate(bad):
            result = _invoke('protocol', '-c',
                             write_config(d, 'bad{}.json'.format(i)))
            assert result.exit_code == 2, d

    def test_invalid_json(self, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('{"n_qubits": 4,')
        result = _invoke('protocol', '-c', str(path))
        assert result.exit_code == 2

    def test_missing_time(self, write_config):
        d = {k: v for k, v in DISPERSIVE.items() if k != 'T'}
        result = _invoke('protocol', '-c', write_config(d))
        assert result.exit_code == 2

    def test_negative_shift_is_domain_error(self, write_config):
        # Delta < 0 gives chi < 0
        result = _invoke('protocol', '-c',
                         write_config(dict(DISPERSIVE, omega_c=1.2)))
        assert result.exit_code == 3

    def test_collective_leakage_is_domain_error(self, write_config):
        d = dict(DISPERSIVE, n_qubits=2, representation='composite', n_max=2,
                 photon_number=2, hamiltonian='collective')
        result = _invoke('protocol', '-c', write_config(d))
        assert result.exit_code == 3
        assert 'Leakage' in result.output

    def test_quiet(self):
        result = _invoke('protocol', '--quiet', '-c',
                         str(get_example_path('protocol_tracked.json')))
        assert result.exit_code == 0
        assert json.loads(result.stdout)['n_qubits'] == 4


class TestSweepCommand(object):
    def test_n_qubits_example(self, tmp_path):
        config_path = get_example_path('sweep_n_qubits.json')
        out = tmp_path / 'n_qubits.csv'
        result = _invoke('sweep', '-c', str(config_path), '-o', str(out))
        assert result.exit_code == 0
        df = _read_csv(out)
        assert list(df.columns[:2]) == ['n_qubits', 'phi']
        assert df.n_qubits.tolist() == list(range(1, 9))
        params = RunConfig.from_file(config_path).params
        for row in df.itertuples():
            n = row.n_qubits
            assert row.delta_phi == pytest.approx(1 / n, rel=1e-12)
            assert row.sql_delta_phi == pytest.approx(1 / math.sqrt(n),
                                                      rel=1e-12)
            assert row.delta_lambda == lambda_uncertainty(
                replace(params, n_qubits=n), 10.0)
            assert row.p_up == pytest.approx((1 + math.cos(n * 0.2)) / 2,
                                             abs=1e-9)

    def test_phi_sweep(self, write_config, tmp_path):
        d = dict(DISPERSIVE, n_qubits=2, sweep_axis='phi', sweep_start=-1.0,
                 sweep_stop=1.0, sweep_steps=9)
        out = tmp_path / 'phi.csv'
        result = _invoke('sweep', '-c', write_config(d), '-o', str(out))
        assert result.exit_code == 0
        df = _read_csv(out)
        assert len(df) == 9
        expected = (1 + np.cos(2 * np.linspace(-1, 1, 9))) / 2
        assert np.allclose(df.p_up, expected, atol=1e-9)
        assert np.allclose(df.p_up + df.p_down, 1, atol=1e-12)

    def test_time_sweep(self, write_config, tmp_path):
        d = dict(DISPERSIVE, sweep_axis='T', sweep_values=[1.0, 2.0, 4.0])
        del d['T']
        out = tmp_path / 'T.csv'
        result = _invoke('sweep', '-c', write_config(d), '-o', str(out))
        assert result.exit_code == 0
        df = _read_csv(out)
        assert np.allclose(df.delta_omega * df['T'], 0.25, rtol=1e-14)

    def test_invalid_axis_values(self, write_config, tmp_path):
        time_axis = {k: v for k, v in DISPERSIVE.items() if k != 'T'}
        bad = [
            dict(time_axis, sweep_axis='T', sweep_values=[1.0, 0.0]),
            dict(time_axis, sweep_axis='T', sweep_start=-1.0, sweep_stop=2.0,
                 sweep_steps=4),
            dict(DISPERSIVE, sweep_axis='g_over_delta', sweep_values=[-0.1]),
            dict(DISPERSIVE, sweep_axis='phi', sweep_values=[0.1],
                 representation='composite', n_max=2, photon_number=3),
        ]
        for i, d in enumerate(bad):
            out = tmp_path / 'bad{}.csv'.format(i)
            result = _invoke('sweep', '-c',
                             write_config(d, 'bad{}.json'.format(i)),
                             '-o', str(out))
            assert result.exit_code == 2, d
            assert not out.exists()

    def test_lambda_example(self, tmp_path):
        config_path = get_example_path('sweep_lambda.json')
        out = tmp_path / 'lambda.csv'
        result = _invoke('sweep', '-c', str(config_path), '-o', str(out))
        assert result.exit_code == 0
        df = _read_csv(out)
        assert df['lambda'].tolist() == [0.45, 0.4, 0.3, 0.2, 0.1, 0.0]
        assert list(df.columns[-5:]) == [
            'chi', 't_sz', 'strong_coupling', 'dispersive', 'hierarchy']
        # moving away from lambda = 1/2 trades twisting speed for sensitivity
        assert np.all(np.diff(df.chi) < 0)
        assert np.all(np.diff(df.t_sz) > 0)
        assert np.all(np.diff(df.delta_lambda) < 0)
        assert df.hierarchy.tolist() == [True, True, True, False, False,
                                         False]
        params = RunConfig.from_file(config_path).params
        for row in df.itertuples(index=False):
            p = replace(params, lam=row[0])
            assert row.chi == pytest.approx(p.chi, rel=1e-12)
            assert row.delta_lambda == pytest.approx(
                lambda_uncertainty(p, 10.0), rel=1e-12)
            assert row.p_up == pytest.approx((1 + math.cos(3 * 0.2)) / 2,
                                             abs=1e-9)

    def test_lambda_sweep_through_degeneracy(self, write_config, tmp_path):
        d = dict(DEGENERATE, sweep_axis='lambda', sweep_values=[0.4, 0.5])
        out = tmp_path / 'through.csv'
        result = _invoke('sweep', '-c', write_config(d), '-o', str(out))
        assert result.exit_code == 3
        assert 'degeneracy' in result.output
        assert not out.exists()

    def test_coupling_ratio_example(self, tmp_path):
        out = tmp_path / 'g_over_delta.csv'
        result = _invoke('sweep', '-c',
                         str(get_example_path('sweep_g_over_delta.json')),
                         '-o', str(out))
        assert result.exit_code == 0
        df = _read_csv(out)
        assert df.g_over_delta.tolist() == [0.1, 0.05, 0.025]
        for column in ('spectrum_error', 'polaron_residual'):
            errors = df[column].to_numpy()
            ratios = errors[:-1] / errors[1:]
            assert np.all((ratios >= 3.2) & (ratios <= 4.8)), column

    def test_deterministic_output(self, write_config, tmp_path):
        d = dict(DISPERSIVE, sweep_axis='n_qubits', sweep_start=1,
                 sweep_stop=6, sweep_steps=6, phi=0.3)
        serial = write_config(d, 'serial.json')
        threaded = write_config(dict(d, workers=3), 'threaded.json')
        outputs = []
        for i, path in enumerate((serial, serial, threaded)):
            out = tmp_path / 'run{}.csv'.format(i)
            assert _invoke('sweep', '-c', path, '-o', str(out)).exit_code == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1] == outputs[2]

    def test_unwritable_output(self, tmp_path):
        out = tmp_path / 'missing' / 'out.csv'
        result = _invoke('sweep', '-c',
                         str(get_example_path('sweep_n_qubits.json')),
                         '-o', str(out))
        assert result.exit_code == 4

    def test_degenerate_sweep(self, write_config, tmp_path):
        d = dict(DEGENERATE, sweep_axis='n_qubits', sweep_start=1,
                 sweep_stop=3, sweep_steps=3, phi=0.2)
        out = tmp_path / 'degenerate.csv'
        result = _invoke('sweep', '-c', write_config(d), '-o', str(out))
        assert result.exit_code == 3
        assert 'degeneracy' in result.output
        assert not out.exists()

        result = _invoke('sweep', '-c',
                         write_config(dict(d, delta_lambda=False), 'ok.json'),
                         '-o', str(out))
        assert result.exit_code == 0
        assert ',,' in out.read_text().splitlines()[1]
        df = _read_csv(out)
        assert df.delta_lambda.isna().all()
        assert df.delta_phi.notna().all()

    def test_missing_axis(self, write_config, tmp_path):
        result = _invoke('sweep', '-c', write_config(DISPERSIVE),
                         '-o', str(tmp_path / 'x.csv'))
        assert result.exit_code == 2


class TestCheckCommand(object):
    def _report(self, result):
        return json.loads(result.stdout.strip().splitlines()[-1])

    def test_strong_coupling_example(self):
        result = _invoke('check', '-c',
                         str(get_example_path('check_strong_coupling.json')))
        assert result.exit_code == 0
        report = self._report(result)
        assert report['strong_coupling'] is True
        assert report['g_over_kappa'] == pytest.approx(10, rel=1e-12)
        assert report['g_over_gamma'] is None
        assert report['passed'] is True
        assert 'strong coupling  yes' in result.stdout

    def test_not_dispersive(self, write_config):
        # Omega = 0.5, Delta = 0.1, g = 0.03
        d = {'n_qubits': 2, 'b_z': 1.0, 'B_x': 0.0, 'lambda': 0.0,
             'lambda_c': 0.06, 'omega_c': 0.4}
        result = _invoke('check', '-c', write_config(d))
        assert result.exit_code == 1
        report = self._report(result)
        assert report['g_over_delta'] == pytest.approx(0.3, rel=1e-12)
        assert report['dispersive'] is False
        assert report['passed'] is False

    def test_lossless(self, write_config):
        result = _invoke('check', '--quiet', '-c', write_config(DISPERSIVE))
        assert result.exit_code == 0
        report = self._report(result)
        assert report['strong_coupling'] is True
        assert report['g_over_kappa'] is None
