# -*- coding: utf-8 -*-
"""
Command line interface for cqedmetro.

Exit codes are 0 on success, 1 when a regime check fails, 2 for
configuration or usage errors, 3 for physics-domain errors raised by the
library and 4 for I/O errors.
"""
import json
import logging
import sys

import click

from cqedmetro.sweep import (
    ConfigError, RunConfig, check_regime, run_protocol, run_sweep,
    write_sweep
)
from cqedmetro.util import InvalidArgumentError, PhysicsDomainError

EXIT_OK = 0
EXIT_REGIME = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

logging.basicConfig(level=logging.INFO, format='%(message)s')


def _set_quiet(quiet):
    if quiet:
        logging.getLogger().setLevel(logging.ERROR)
    else:
        logging.getLogger().setLevel(logging.INFO)


def _fail(message, code):
    click.echo('Error: {}'.format(message), err=True)
    sys.exit(code)


def _load(config_path):
    try:
        return RunConfig.from_file(config_path)
    except (ConfigError, KeyError) as e:
        _fail(e.args[0] if e.args else e, EXIT_PARSE)
    except OSError as e:
        _fail(e, EXIT_IO)


def _run(func, *args):
    """Call a library function and map its errors to exit codes."""
    try:
        return func(*args)
    except ConfigError as e:
        _fail(e, EXIT_PARSE)
    except (PhysicsDomainError, InvalidArgumentError) as e:
        _fail(e, EXIT_DOMAIN)


config_option = click.option(
    '--config', '-c', 'config_path', required=True,
    type=click.Path(exists=True, dir_okay=False),
    help='Path to a JSON run configuration')

quiet_option = click.option(
    '--quiet', default=False, is_flag=True,
    help='Supress command line output')


@click.group()
def cqedmetro():
    """
    Access cqedmetro functionality from the command line

    The ``cqedmetro`` tools are accesible via a command line interface using
    the console command "cqedmetro" (also installed as "simulate"). To print
    a list of all available commands from the command line type,::

        cqedmetro --help

    Or to print information on a specific command,::

        cqedmetro COMMAND --help

    Standard output only carries results, progress messages are written to
    standard error.
    """


@cqedmetro.command()
@config_option
@quiet_option
def protocol(config_path, quiet):
    """
    Run the GHZ protocol once and print the result as JSON.

    The JSON object holds the acquired phase, the probabilities P_up and
    P_down, the uncertainties delta_phi, delta_omega and delta_lambda, the
    standard quantum limit sql_delta_phi, the probabilities p_up_raw and
    p_down_raw before normalization and the leakage out of the extremal
    states. Requesting ``delta_lambda`` at the degeneracy point
    lambda = 1/2 exits with code 3.
    """
    _set_quiet(quiet)
    config = _load(config_path)
    if config.T is None:
        _fail('Configuration needs T for protocol runs', EXIT_PARSE)
    record = _run(run_protocol, config)
    click.echo(json.dumps(record, sort_keys=True))


@cqedmetro.command()
@config_option
@click.option('--out', '-o', 'out_path', required=True,
              type=click.Path(dir_okay=False),
              help='File path to save the output CSV')
@quiet_option
def sweep(config_path, out_path, quiet):
    """
    Scan one parameter and save the results as CSV.

    The configuration names the axis with ``sweep_axis`` (n_qubits, phi, T,
    g_over_delta or lambda) and its range with ``sweep_start``, ``sweep_stop``
    and ``sweep_steps`` or an explicit ``sweep_values`` list. The CSV holds
    one row per point in axis order, numbers are written with 17
    significant digits and undefined values are left empty.

    The g_over_delta axis adds the columns spectrum_error and
    polaron_residual. The lambda axis adds chi, the twisting time t_sz and
    the regime flags strong_coupling, dispersive and hierarchy, which show
    the trade-off between bias sensitivity and twisting speed.
    """
    _set_quiet(quiet)
    config = _load(config_path)
    df = _run(run_sweep, config)
    try:
        write_sweep(df, out_path)
    except OSError as e:
        _fail(e, EXIT_IO)


@cqedmetro.command()
@config_option
@quiet_option
def check(config_path, quiet):
    """
    Check strong-coupling, dispersive and hierarchy conditions.

    Prints a readable report followed by a one line JSON mirror, exits
    with 0 when every condition holds and 1 otherwise.
    """
    _set_quiet(quiet)
    config = _load(config_path)
    report = _run(check_regime, config)
    click.echo(report.summary())
    click.echo(json.dumps(report.to_dict(), sort_keys=True))
    sys.exit(EXIT_OK if report.passed else EXIT_REGIME)
