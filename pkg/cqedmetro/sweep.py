# -*- coding: utf-8 -*-
"""
Run configurations and sweep driver behind the command line interface.

A run configuration is a flat JSON object. It holds the system
parameters, the protocol settings and optionally one sweep axis, for
example::

    {"n_qubits": 4, "b_z": 1.0, "B_x": 0.8660254037844386,
     "lambda": 0.0, "lambda_c": 0.002, "omega_c": 0.5, "T": 10.0,
     "sweep_axis": "n_qubits", "sweep_start": 1, "sweep_stop": 8,
     "sweep_steps": 8}

Attributes:
    SWEEP_AXES (tuple): names of the axes a sweep can scan.
    CONFIG_KEYS (dict): accepted keys and their default values, None marks
        a key without default.
    REQUIRED_KEYS (tuple): keys every configuration must define.
    AXIS_COLUMNS (dict): extra CSV columns reported by some sweep axes.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from cqedmetro.composite_space import DEFAULT_N_MAX
from cqedmetro.hamiltonians import (
    SystemParams, polaron_residual, regime_check, spectrum_error
)
from cqedmetro.metrology import (
    ProtocolConfig, frame_for_phase, lambda_uncertainty, operating_point,
    protocol_run, sql_baseline
)
from cqedmetro.util import InvalidArgumentError

SWEEP_AXES = ('n_qubits', 'phi', 'T', 'g_over_delta', 'lambda')

REQUIRED_KEYS = ('n_qubits', 'b_z', 'B_x', 'lambda', 'lambda_c', 'omega_c')

CONFIG_KEYS = {
    'n_qubits': None,
    'b_z': None,
    'B_x': None,
    'lambda': None,
    'lambda_c': None,
    'omega_c': None,
    'kappa': 0.0,
    'gamma': 0.0,
    'T': None,
    'omega_ref': None,
    'phi': None,
    'photon_number': 0,
    'representation': 'spin_only',
    'n_max': DEFAULT_N_MAX,
    'hamiltonian': 'effective',
    'delta_lambda': True,
    'sweep_axis': None,
    'sweep_start': None,
    'sweep_stop': None,
    'sweep_steps': None,
    'sweep_values': None,
    'workers': 1,
}

CSV_COLUMNS = ('phi', 'p_up', 'p_down', 'delta_phi', 'delta_omega',
               'delta_lambda', 'sql_delta_phi')

AXIS_COLUMNS = {
    'g_over_delta': ('spectrum_error', 'polaron_residual'),
    'lambda': ('chi', 't_sz', 'strong_coupling', 'dispersive', 'hierarchy'),
}


class ConfigError(InvalidArgumentError):
    """Run configuration could not be parsed or validated."""


def _number(d, key):
    value = d[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(
            '{} is not a valid {}, use a number'.format(value, key))
    return float(value)


def _integer(d, key):
    value = d[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)) \
            or value != int(value):
        raise ConfigError(
            '{} is not a valid {}, use an integer'.format(value, key))
    return int(value)


def _optional_number(d, key):
    return None if d[key] is None else _number(d, key)


@dataclass(frozen=True)
class SweepAxis(object):
    """
    One scanned parameter.

    Arguments:
        name (str): one of :attr:`SWEEP_AXES`.
        start (float): first value.
        stop (float): last value, >= start.
        steps (int): number of evenly spaced points, >= 1.
        values (tuple or None): explicit values, overrides the range.
    """
    name: str
    start: Optional[float] = None
    stop: Optional[float] = None
    steps: Optional[int] = None
    values: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if self.name not in SWEEP_AXES:
            raise ConfigError(
                '{} is not a valid sweep axis, use one of: {}'.format(
                    self.name, ', '.join(SWEEP_AXES)))
        if self.values is not None:
            if len(self.values) == 0:
                raise ConfigError('sweep_values must not be empty')
        elif None in (self.start, self.stop, self.steps):
            raise ConfigError(
                'sweep_start, sweep_stop and sweep_steps are required '
                'without sweep_values')
        elif self.steps < 1:
            raise ConfigError(
                '{} is not a valid sweep_steps, use steps >= 1'.format(
                    self.steps))
        elif self.start > self.stop:
            raise ConfigError(
                'sweep_start {} is larger than sweep_stop {}'.format(
                    self.start, self.stop))
        # value checks of the axis
        self.points()

    def points(self):
        """Axis values in sweep order."""
        if self.values is not None:
            pts = np.array(self.values, dtype=float)
        elif self.steps == 1:
            pts = np.array([self.start], dtype=float)
        else:
            pts = np.linspace(self.start, self.stop, self.steps)
        if self.name == 'n_qubits':
            if not np.all(pts == np.round(pts)) or np.any(pts < 1):
                raise ConfigError(
                    'n_qubits sweep needs integer values >= 1, got {}'.format(
                        pts.tolist()))
            return [int(p) for p in pts]
        if self.name == 'T' and np.any(pts <= 0):
            raise ConfigError(
                'T sweep needs values > 0, got {}'.format(pts.tolist()))
        if self.name == 'g_over_delta' and np.any(pts < 0):
            raise ConfigError(
                'g_over_delta sweep needs values >= 0, got {}'.format(
                    pts.tolist()))
        return [float(p) for p in pts]


@dataclass(frozen=True)
class RunConfig(object):
    """
    Parsed run configuration.

    Arguments:
        params (:class:`cqedmetro.hamiltonians.SystemParams`): parameters.
        T (float or None): free-evolution time, needed by protocol and
            sweep runs.
        omega_ref (float or None): frame frequency, None tracks the shifted
            qubit frequency.
        phi (float or None): target phase, alternative to ``omega_ref``.
        photon_number (int): cavity occupation.
        representation (str): 'spin_only' or 'composite'.
        n_max (int): Fock cutoff.
        hamiltonian (str): composite free evolution, 'effective' or
            'collective'.
        delta_lambda (bool): whether delta lambda is requested, a request
            at the degeneracy point is an error.
        sweep (:class:`SweepAxis` or None): scanned axis.
        workers (int): threads used to evaluate sweep points.
    """
    params: SystemParams
    T: Optional[float] = None
    omega_ref: Optional[float] = None
    phi: Optional[float] = None
    photon_number: int = 0
    representation: str = 'spin_only'
    n_max: int = DEFAULT_N_MAX
    hamiltonian: str = 'effective'
    delta_lambda: bool = True
    sweep: Optional[SweepAxis] = None
    workers: int = 1

    @classmethod
    def from_dict(cls, d):
        """
        Build a configuration from a flat dictionary.

        Raises:
            KeyError: if a required key is missing.
            ConfigError: for unknown keys, wrong types and invalid
                parameter values.
        """
        if not isinstance(d, dict):
            raise ConfigError('Configuration must be a JSON object')
        unknown = sorted(set(d) - set(CONFIG_KEYS))
        if unknown:
            raise ConfigError(
                'Unknown configuration keys: {}'.format(', '.join(unknown)))
        missing = [k for k in REQUIRED_KEYS if k not in d]
        if missing:
            raise KeyError(
                'Missing configuration keys: {}'.format(', '.join(missing)))
        merged = dict(CONFIG_KEYS)
        merged.update(d)
        if merged['phi'] is not None and merged['omega_ref'] is not None:
            raise ConfigError('phi and omega_ref are mutually exclusive')

        try:
            params = SystemParams(
                n_qubits=_integer(merged, 'n_qubits'),
                b_z=_number(merged, 'b_z'),
                B_x=_number(merged, 'B_x'),
                lam=_number(merged, 'lambda'),
                lam_c=_number(merged, 'lambda_c'),
                omega_c=_number(merged, 'omega_c'),
                kappa=_number(merged, 'kappa'),
                gamma=_number(merged, 'gamma'),
            )
        except InvalidArgumentError as e:
            raise ConfigError(str(e)) from e

        sweep = None
        if merged['sweep_axis'] is not None:
            values = merged['sweep_values']
            if values is not None:
                if not isinstance(values, list) or not all(
                        isinstance(v, (int, float)) and
                        not isinstance(v, bool) for v in values):
                    raise ConfigError('sweep_values must be a list of numbers')
                values = tuple(float(v) for v in values)
            sweep = SweepAxis(
                name=merged['sweep_axis'],
                start=_optional_number(merged, 'sweep_start'),
                stop=_optional_number(merged, 'sweep_stop'),
                steps=None if merged['sweep_steps'] is None
                else _integer(merged, 'sweep_steps'),
                values=values,
            )

        representation = merged['representation']
        if representation not in ('spin_only', 'composite'):
            raise ConfigError(
                '{} is not a valid representation, use spin_only or '
                'composite'.format(representation))
        if not isinstance(merged['delta_lambda'], bool):
            raise ConfigError('delta_lambda must be true or false')
        T = _optional_number(merged, 'T')
        if T is not None and T <= 0:
            raise ConfigError('{} is not a valid T, use T > 0'.format(T))
        workers = _integer(merged, 'workers')
        if workers < 1:
            raise ConfigError(
                '{} is not a valid workers count, use >= 1'.format(workers))
        n_max = _integer(merged, 'n_max')
        photon_number = _integer(merged, 'photon_number')
        if n_max < 1 or photon_number < 0:
            raise ConfigError(
                'n_max must be >= 1 and photon_number >= 0, got {} and '
                '{}'.format(n_max, photon_number))
        if representation == 'composite' and photon_number > n_max:
            raise ConfigError(
                'photon_number {} exceeds the Fock cutoff n_max = {}'.format(
                    photon_number, n_max))
        hamiltonian = merged['hamiltonian']
        if hamiltonian not in ('effective', 'collective'):
            raise ConfigError(
                '{} is not a valid hamiltonian, use effective or '
                'collective'.format(hamiltonian))
        if hamiltonian == 'collective' and representation != 'composite':
            raise ConfigError(
                'The collective hamiltonian needs the composite '
                'representation')

        return cls(
            params=params,
            T=T,
            omega_ref=_optional_number(merged, 'omega_ref'),
            phi=_optional_number(merged, 'phi'),
            photon_number=photon_number,
            representation=representation,
            n_max=n_max,
            hamiltonian=hamiltonian,
            delta_lambda=merged['delta_lambda'],
            sweep=sweep,
            workers=workers,
        )

    @classmethod
    def from_file(cls, path):
        """
        Read a JSON configuration file.

        Raises:
            FileNotFoundError: if ``path`` does not exist.
            ConfigError: if the content is not a valid configuration.
        """
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundError(
                'Configuration file: {} was not found'.format(path))
        try:
            d = json.loads(path.read_text())
        except ValueError as e:
            raise ConfigError(
                '{} is not valid JSON: {}'.format(path, e)) from e
        logging.debug('Read configuration from {}'.format(path.absolute()))
        return cls.from_dict(d)

    def require_time(self):
        if self.T is None:
            raise ConfigError('Configuration needs T for protocol runs')
        return self.T

    def protocol_config(self, params=None, T=None, phi=None):
        """
        :class:`cqedmetro.metrology.ProtocolConfig` for one run.

        Arguments override the stored values, ``phi`` wins over the stored
        frame frequency.
        """
        params = params or self.params
        T = T if T is not None else self.require_time()
        phi = phi if phi is not None else self.phi
        if phi is not None:
            omega_ref = frame_for_phase(params, T, phi, self.photon_number)
        else:
            omega_ref = self.omega_ref
        return ProtocolConfig(
            params=params, T=T, omega_ref=omega_ref,
            photon_number=self.photon_number,
            representation=self.representation, n_max=self.n_max,
            hamiltonian=self.hamiltonian,
        )


def _record(params, T, with_delta_lambda, result):
    """Output row for one protocol result."""
    n = params.n_qubits
    delta_lambda = None
    if with_delta_lambda:
        # raises at the degeneracy point
        delta_lambda = lambda_uncertainty(params, T)
    return dict(
        phi=result.phi,
        p_up=result.p_up,
        p_down=result.p_down,
        delta_phi=result.delta_phi,
        delta_omega=result.delta_omega,
        delta_lambda=delta_lambda,
        sql_delta_phi=sql_baseline(n, result.phi),
    )


def run_protocol(config):
    """
    Run one protocol and return a JSON-ready dictionary.

    Raises:
        DegenerateSensitivityError: if delta lambda is requested at the
            degeneracy point.
        UnsupportedRegimeError: if chi <= 0.
    """
    pc = config.protocol_config()
    params = pc.params
    if config.delta_lambda:
        lambda_uncertainty(params, pc.T)
    logging.info(
        'Running {} protocol for N = {} qubits, T = {}'.format(
            pc.representation, params.n_qubits, pc.T))
    result = protocol_run(pc)
    record = _record(params, pc.T, config.delta_lambda, result)
    record.update(p_up_raw=result.p_up_raw, p_down_raw=result.p_down_raw,
                  leakage=result.leakage, representation=result.representation,
                  n_qubits=params.n_qubits)
    return record


def _point_inputs(config, value):
    """SystemParams, T and phi of one sweep point."""
    name = config.sweep.name
    params, T, phi = config.params, config.T, config.phi
    if name == 'n_qubits':
        params = replace(params, n_qubits=value)
    elif name == 'phi':
        phi = value
    elif name == 'T':
        T = value
    elif name == 'lambda':
        params = replace(params, lam=value)
    else:
        params = params.with_coupling_ratio(value)
    return params, T, phi


def _evaluate_point(config, value):
    params, T, phi = _point_inputs(config, value)
    pc = config.protocol_config(params=params, T=T, phi=phi)
    result = protocol_run(pc)
    row = {config.sweep.name: value}
    row.update(_record(params, pc.T, config.delta_lambda, result))
    if config.sweep.name == 'g_over_delta':
        row['spectrum_error'] = spectrum_error(params, config.n_max)
        row['polaron_residual'] = polaron_residual(params, config.n_max)
    elif config.sweep.name == 'lambda':
        row.update(operating_point(params, pc.T).to_dict())
    return row


def run_sweep(config):
    """
    Evaluate the protocol at every point of the sweep axis.

    Points are independent. With ``workers`` > 1 they are evaluated on a
    thread pool and collected in axis order.

    Arguments:
        config (:class:`RunConfig`): configuration with a sweep axis.

    Returns:
        :obj:`pandas.DataFrame`: one row per point, first column is the
        axis value.

    Raises:
        ConfigError: if the configuration has no sweep axis or no T.
    """
    if config.sweep is None:
        raise ConfigError('Configuration has no sweep_axis')
    if config.sweep.name != 'T':
        config.require_time()
    points = config.sweep.points()
    if config.delta_lambda:
        # fail before the sweep starts
        if config.sweep.name == 'lambda':
            for value in points:
                lambda_uncertainty(_point_inputs(config, value)[0], config.T)
        else:
            lambda_uncertainty(config.params, config.T or 1.0)
    logging.info(
        'Sweeping {} over {} points with {} worker(s)'.format(
            config.sweep.name, len(points), config.workers))

    def worker(value):
        return _evaluate_point(config, value)

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            rows = list(pool.map(worker, points))
    else:
        rows = [worker(v) for v in points]

    columns = [config.sweep.name] + list(CSV_COLUMNS) + \
        list(AXIS_COLUMNS.get(config.sweep.name, ()))
    df = pd.DataFrame(rows, columns=columns)
    df['delta_lambda'] = df['delta_lambda'].astype(float)
    return df


def write_sweep(df, path):
    """
    Write a sweep table as CSV with 17 significant digits.

    Undefined values are written as empty cells.
    """
    path = Path(path)
    df.to_csv(path, index=False, float_format='%.17g', na_rep='')
    logging.info('Wrote {} sweep rows to: {}'.format(
        len(df), path.absolute()))


def check_regime(config):
    """:func:`cqedmetro.hamiltonians.regime_check` of the configured system."""
    return regime_check(config.params)

