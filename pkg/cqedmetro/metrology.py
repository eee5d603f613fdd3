# -*- coding: utf-8 -*-
"""
Entanglement-enhanced estimation of the qubit bias parameter lambda.

The protocol prepares a GHZ state from |-N/2>_z with the twisting
sequence U_N, lets it acquire the phase N phi during a free evolution of
length T in a frame rotating at ``omega_ref``, and applies U_N again. The
extremal populations then read P_up = (1 + cos N phi)/2 and the error
propagation formula gives delta phi = 1/N, delta Omega = 1/(N T) and
delta lambda = 1/(N T b_z |cos theta|).

Attributes:
    LEAK_TOL (float): largest composite-representation leakage out of
        {|-N/2>, |+N/2>} accepted by :func:`protocol_run`, value = 1e-8.
    SPIN_LEAK_WARN (float): spin-only leakage above which a warning is
        logged, value = 1e-10.
    NODE_GUARD (float): finite-difference uncertainty estimates need
        |sin(N phi)| >= NODE_GUARD, value = 1e-3.
    FD_STEP (float): default phase step of the central difference,
        value = 1e-5.
"""

import enum
import logging
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from cqedmetro.composite_space import DEFAULT_N_MAX, embed_product, lift
from cqedmetro.dynamics import (
    EvolutionStep, PulseSequence, UnitaryStep, evolve, run_sequence
)
from cqedmetro.hamiltonians import (
    RegimeReport, SystemParams, h_collective, h_effective, h_effective_spin,
    regime_check
)
from cqedmetro.spin_algebra import (
    basis_state, collective_operator, m_values, rotation, x_basis_state
)
from cqedmetro.util import (
    DegenerateSensitivityError, DickeState, InvalidArgumentError,
    OperatorMatrix, Space, TruncationLeakError, UnsupportedRegimeError,
    check_nonnegative_int, check_positive_int
)

LEAK_TOL = 1e-8
SPIN_LEAK_WARN = 1e-10
NODE_GUARD = 1e-3
FD_STEP = 1e-5


class Representation(enum.Enum):
    SPIN_ONLY = 'spin_only'
    COMPOSITE = 'composite'


class FreeEvolution(enum.Enum):
    """Hamiltonian of the composite free evolution."""
    EFFECTIVE = 'effective'
    COLLECTIVE = 'collective'


def parity_constant(n_qubits):
    """E = 2 for odd N and E = 1 for even N."""
    n_qubits = check_positive_int(n_qubits, 'n_qubits')
    return 2 if n_qubits % 2 else 1


def twist_time(params):
    """
    Duration pi/(2 chi) of the one-axis twisting step.

    Raises:
        ResonanceError: if Delta = 0.
        UnsupportedRegimeError: if chi <= 0.
    """
    chi = params.chi
    if chi <= 0:
        raise UnsupportedRegimeError(
            'Twisting needs chi > 0, got chi = {} (Delta = {})'.format(
                chi, params.Delta))
    return math.pi / (2 * chi)


def _twist_diagonal(n_qubits):
    """Diagonal of exp(-i pi/2 S_z^2), times exp(i pi/2 S_z) for odd N."""
    m = m_values(n_qubits)
    phase = -np.pi / 2 * m ** 2
    if n_qubits % 2:
        phase = phase + np.pi / 2 * m
    return np.exp(1j * phase)


def ghz_generate(n_qubits):
    """
    GHZ state from one-axis twisting of the coherent state |-N/2>_x.

    Applies exp(-i pi/2 S_z^2) and, for odd N, exp(i pi/2 S_z).

    Returns:
        :class:`cqedmetro.util.DickeState` equal to
        (|-N/2>_x + i^(N+E) |+N/2>_x)/sqrt(2) up to a global phase.
    """
    start = x_basis_state(n_qubits, -n_qubits / 2)
    return start.with_amplitudes(_twist_diagonal(n_qubits) * start.amplitudes)


def ghz_target(n_qubits):
    """(|-N/2>_x + i^(N+E) |+N/2>_x)/sqrt(2)."""
    phase = 1j ** (n_qubits + parity_constant(n_qubits))
    down = x_basis_state(n_qubits, -n_qubits / 2).amplitudes
    up = x_basis_state(n_qubits, n_qubits / 2).amplitudes
    return DickeState(n_qubits, (down + phase * up) / math.sqrt(2))


def u_n_sequence(n_qubits, params):
    """
    Steps of the GHZ mapping U_N in application order.

    exp(-i pi/2 S_x), evolution under chi S_z^2 for :func:`twist_time`,
    exp(i pi/2 S_z) for odd N and exp(i pi/2 S_x).

    Arguments:
        n_qubits (int): number of qubits N, chi is taken from ``params``.
        params (:class:`cqedmetro.hamiltonians.SystemParams`): parameters.

    Returns:
        :class:`cqedmetro.dynamics.PulseSequence`
    """
    t_sz = twist_time(params)
    sz = collective_operator('Sz', n_qubits)
    steps = [
        UnitaryStep(rotation('Sx', -np.pi / 2, n_qubits)),
        EvolutionStep(params.chi * (sz @ sz), t_sz),
    ]
    if n_qubits % 2:
        steps.append(UnitaryStep(rotation('Sz', np.pi / 2, n_qubits)))
    steps.append(UnitaryStep(rotation('Sx', np.pi / 2, n_qubits)))
    return PulseSequence(tuple(steps))


def build_u_n(n_qubits, params):
    """
    U_N as a single (N+1) x (N+1) unitary.

    Maps |-N/2>_z onto a GHZ state of the z basis.

    Raises:
        UnsupportedRegimeError: if chi <= 0.
    """
    mat = u_n_sequence(n_qubits, params).propagator()
    return OperatorMatrix(mat, Space.dicke(n_qubits))


def ideal_u_n(n_qubits):
    """U_N with the twisting step applied exactly, independent of chi."""
    rot_in = rotation('Sx', -np.pi / 2, n_qubits).matrix
    rot_out = rotation('Sx', np.pi / 2, n_qubits).matrix
    mat = rot_out @ (_twist_diagonal(n_qubits)[:, None] * rot_in)
    return OperatorMatrix(mat, Space.dicke(n_qubits))


def tracking_frequency(params, photon_number=0):
    """Shifted qubit frequency Omega + chi + 2 chi n."""
    chi = params.chi
    return params.Omega + chi + 2 * chi * photon_number


def wrap_phase(phi):
    """Map ``phi`` into (-pi, pi]."""
    return math.pi - (math.pi - phi) % (2 * math.pi)


def frame_for_phase(params, T, phi, photon_number=0):
    """Frame frequency omega_ref that makes the protocol acquire ``phi``."""
    _check_time(T)
    return tracking_frequency(params, photon_number) - phi / T


def _check_time(T):
    if isinstance(T, bool) or not np.isfinite(T) or T <= 0:
        raise InvalidArgumentError(
            '{} is not a valid evolution time T, use T > 0'.format(T))


@dataclass(frozen=True)
class ProtocolConfig(object):
    """
    One run of the double-U_N protocol.

    Arguments:
        params (:class:`cqedmetro.hamiltonians.SystemParams`): parameters.
        T (float): free-evolution time, > 0.
        omega_ref (float or None): rotating-frame frequency, None tracks
            :func:`tracking_frequency` so that phi = 0.
        photon_number (int): cavity occupation during the free evolution.
        representation (str): 'spin_only' or 'composite'.
        n_max (int): Fock cutoff of the composite representation.
        hamiltonian (str): composite free evolution under the dispersive
            'effective' Hamiltonian or the full 'collective' one. The
            spin-only representation only supports 'effective'.
    """
    params: SystemParams
    T: float
    omega_ref: Optional[float] = None
    photon_number: int = 0
    representation: str = Representation.SPIN_ONLY.value
    n_max: int = DEFAULT_N_MAX
    hamiltonian: str = FreeEvolution.EFFECTIVE.value

    def __post_init__(self):
        _check_time(self.T)
        check_nonnegative_int(self.photon_number, 'photon_number')
        check_nonnegative_int(self.n_max, 'n_max')
        try:
            rep = Representation(self.representation)
        except ValueError:
            raise InvalidArgumentError(
                '{} is not a valid representation, use spin_only or '
                'composite'.format(self.representation)) from None
        object.__setattr__(self, 'representation', rep.value)
        if rep is Representation.COMPOSITE and \
                self.photon_number > self.n_max:
            raise InvalidArgumentError(
                'photon_number {} exceeds the Fock cutoff n_max = {}'.format(
                    self.photon_number, self.n_max))
        try:
            free = FreeEvolution(self.hamiltonian)
        except ValueError:
            raise InvalidArgumentError(
                '{} is not a valid free-evolution Hamiltonian, use effective '
                'or collective'.format(self.hamiltonian)) from None
        object.__setattr__(self, 'hamiltonian', free.value)
        if free is FreeEvolution.COLLECTIVE and \
                rep is Representation.SPIN_ONLY:
            raise InvalidArgumentError(
                'The collective Hamiltonian needs the composite '
                'representation')

    @property
    def frame_frequency(self):
        if self.omega_ref is None:
            return tracking_frequency(self.params, self.photon_number)
        return self.omega_ref

    @property
    def phi(self):
        """Acquired phase (Omega + chi + 2 chi n - omega_ref) T in (-pi, pi]."""
        shifted = tracking_frequency(self.params, self.photon_number)
        return wrap_phase((shifted - self.frame_frequency) * self.T)

    def with_phase(self, phi):
        """Copy whose frame frequency produces the phase ``phi``."""
        return replace(self, omega_ref=frame_for_phase(
            self.params, self.T, phi, self.photon_number))


@dataclass(frozen=True)
class ProtocolResult(object):
    """
    Outcome of :func:`protocol_run`.

    Attributes:
        phi (float): acquired phase in (-pi, pi].
        p_up (float): probability of |+N/2>_z.
        p_down (float): probability of |-N/2>_z.
        p_up_raw (float): P_up before normalizing over the two extremal
            states.
        p_down_raw (float): P_down before normalizing.
        delta_phi (float): phase uncertainty 1/N.
        delta_omega (float): frequency uncertainty 1/(N T).
        delta_lambda (float or None): bias uncertainty, None at the
            degeneracy point.
        leakage (float): probability outside {|-N/2>, |+N/2>}.
        representation (str): 'spin_only' or 'composite'.
    """
    phi: float
    p_up: float
    p_down: float
    p_up_raw: float
    p_down_raw: float
    delta_phi: float
    delta_omega: float
    delta_lambda: Optional[float]
    leakage: float
    representation: str

    def to_dict(self):
        return dict(
            phi=self.phi, p_up=self.p_up, p_down=self.p_down,
            p_up_raw=self.p_up_raw, p_down_raw=self.p_down_raw,
            delta_phi=self.delta_phi, delta_omega=self.delta_omega,
            delta_lambda=self.delta_lambda, leakage=self.leakage,
            representation=self.representation,
        )


def _extremal_populations(config):
    """Raw P(|+N/2>), P(|-N/2>) after the protocol."""
    params = config.params
    n = params.n_qubits
    u_n = build_u_n(n, params)
    omega_ref = config.frame_frequency
    start = basis_state(n, -n / 2)
    sz = collective_operator('Sz', n)

    if config.representation == Representation.SPIN_ONLY.value:
        h = h_effective_spin(params, config.photon_number) - omega_ref * sz
        psi = u_n @ evolve(h, u_n @ start, config.T)
        probs = psi.probabilities()
        return probs[-1], probs[0]

    n_max = config.n_max
    if config.hamiltonian == FreeEvolution.COLLECTIVE.value:
        h_free = h_collective(params, n_max)
    else:
        h_free = h_effective(params, n_max)
    h = h_free - omega_ref * lift(sz, 'spin', n, n_max)
    u_lifted = lift(u_n, 'spin', n, n_max)
    psi = embed_product(start, config.photon_number, n_max)
    psi = u_lifted @ evolve(h, u_lifted @ psi, config.T)
    probs = np.abs(psi.as_matrix()) ** 2
    return probs[-1].sum(), probs[0].sum()


def protocol_run(config):
    """
    Run U_N, free evolution for T and U_N again on |-N/2>_z.

    The reported probabilities are normalized over the two extremal
    outcomes, the remainder is reported as ``leakage``.

    Arguments:
        config (:class:`ProtocolConfig`): run configuration.

    Returns:
        :class:`ProtocolResult`

    Raises:
        UnsupportedRegimeError: if chi <= 0.
        ResonanceError: if Delta = 0.
        TruncationLeakError: if composite leakage exceeds :attr:`LEAK_TOL`.
    """
    params = config.params
    n = params.n_qubits
    p_up_raw, p_down_raw = _extremal_populations(config)
    leakage = max(0.0, 1 - p_up_raw - p_down_raw)

    if config.representation == Representation.COMPOSITE.value:
        if leakage > LEAK_TOL:
            raise TruncationLeakError(
                'Leakage {:.3e} out of the extremal states exceeds {} with '
                'n_max = {} and the {} Hamiltonian'.format(
                    leakage, LEAK_TOL, config.n_max, config.hamiltonian))
    elif leakage > SPIN_LEAK_WARN:
        logging.warning(
            'Spin-only leakage {:.3e} exceeds {}'.format(
                leakage, SPIN_LEAK_WARN))

    total = p_up_raw + p_down_raw
    p_up, p_down = float(p_up_raw / total), float(p_down_raw / total)
    phi = config.phi
    if params.is_degenerate:
        delta_lambda = None
    else:
        delta_lambda = lambda_uncertainty(params, config.T)

    logging.debug(
        'Protocol N={} T={} phi={:.6g}: P_up={:.12g} leakage={:.2e}'.format(
            n, config.T, phi, p_up, leakage))
    return ProtocolResult(
        phi=phi,
        p_up=p_up,
        p_down=p_down,
        p_up_raw=float(p_up_raw),
        p_down_raw=float(p_down_raw),
        delta_phi=phase_uncertainty(n, phi),
        delta_omega=frequency_uncertainty(n, config.T),
        delta_lambda=delta_lambda,
        leakage=float(leakage),
        representation=config.representation,
    )


def p_up_analytic(n_qubits, phi):
    """Fringe (1 + cos(N phi))/2."""
    return (1 + math.cos(n_qubits * phi)) / 2


def p_down_analytic(n_qubits, phi):
    """Complementary fringe (1 - cos(N phi))/2."""
    return (1 - math.cos(n_qubits * phi)) / 2


def error_propagation(p_up, slope):
    """
    Uncertainty sqrt(P (1 - P)) / |dP/dphi| of a two-outcome measurement.

    Raises:
        InvalidArgumentError: if the slope vanishes.
    """
    if slope == 0:
        raise InvalidArgumentError(
            'Error propagation is undefined where the fringe slope is 0')
    return math.sqrt(max(p_up * (1 - p_up), 0.0)) / abs(slope)


def phase_uncertainty(n_qubits, phi):
    """
    Phase uncertainty of the GHZ fringe by error propagation.

    P = (1 + cos N phi)/2 has variance (sin(N phi)/2)^2 and slope
    -N sin(N phi)/2, so the quotient is 1/N. Inside the node guard band
    |sin(N phi)| < :attr:`NODE_GUARD` both vanish and the limit 1/N is
    returned.
    """
    n_qubits = check_positive_int(n_qubits, 'n_qubits')
    return _fringe_uncertainty(n_qubits, phi)


def _fringe_uncertainty(rate, phi):
    """Error propagation for the fringe (1 + cos(rate phi))/2."""
    sin_rate = math.sin(rate * phi)
    if abs(sin_rate) < NODE_GUARD:
        return 1 / rate
    return error_propagation(p_up_analytic(rate, phi), -rate * sin_rate / 2)


def frequency_uncertainty(n_qubits, T):
    """delta Omega = 1/(N T)."""
    n_qubits = check_positive_int(n_qubits, 'n_qubits')
    _check_time(T)
    return 1 / (n_qubits * T)


def lambda_uncertainty(params, T):
    """
    Uncertainty of lambda from delta Omega = b_z |cos(theta)| delta lambda.

    Arguments:
        params (:class:`cqedmetro.hamiltonians.SystemParams`): parameters.
        T (float): free-evolution time, > 0.

    Returns:
        float: 1/(N T |b_z| |cos(theta)|).

    Raises:
        DegenerateSensitivityError: at the degeneracy point lambda = 1/2,
            where cos(theta) = 0.
    """
    _check_time(T)
    if params.is_degenerate or params.b_z == 0:
        raise DegenerateSensitivityError(
            'lambda = {} is the degeneracy point (B_z = 0, cos(theta) = 0), '
            'the bias sensitivity vanishes there'.format(params.lam))
    return 1 / (params.n_qubits * T * abs(params.b_z) *
                abs(params.cos_theta))


def sql_baseline(n_qubits, phi=0.0):
    """
    Phase uncertainty of N independent Ramsey qubits.

    Error propagation of the single-qubit fringe P = (1 + cos phi)/2 gives
    1, with the same node guard as :func:`phase_uncertainty`. Averaging N
    qubits divides it by sqrt(N).
    """
    n_qubits = check_positive_int(n_qubits, 'n_qubits')
    return _fringe_uncertainty(1, phi) / math.sqrt(n_qubits)


@dataclass(frozen=True)
class OperatingPoint(object):
    """
    Figures of merit of the protocol at one bias lambda.

    Moving lambda away from the degeneracy point 1/2 raises the bias
    sensitivity b_z |cos(theta)| but chi falls with sin(theta)^2 and the
    twisting step gets longer. The product chi * delta_lambda^2 equals
    g^2 tan(theta)^2 / (Delta (N T b_z)^2).

    Attributes:
        lam (float): bias lambda.
        theta (float): mixing angle.
        chi (float): dispersive shift.
        t_sz (float): duration of the twisting step pi/(2 chi).
        delta_lambda (float or None): bias uncertainty, None at the
            degeneracy point.
        regime (:class:`cqedmetro.hamiltonians.RegimeReport`): validity
            flags at this lambda.
    """
    lam: float
    theta: float
    chi: float
    t_sz: float
    delta_lambda: Optional[float]
    regime: RegimeReport

    def to_dict(self):
        return dict(
            chi=self.chi, t_sz=self.t_sz,
            strong_coupling=self.regime.strong_coupling,
            dispersive=self.regime.dispersive,
            hierarchy=self.regime.hierarchy,
        )


def operating_point(params, T):
    """
    Evaluate chi, the twisting time, delta lambda and the regime at the
    lambda stored in ``params``.

    Raises:
        UnsupportedRegimeError: if chi <= 0.
        ResonanceError: if Delta = 0.
    """
    t_sz = twist_time(params)
    if params.is_degenerate:
        delta_lambda = None
    else:
        delta_lambda = lambda_uncertainty(params, T)
    point = OperatingPoint(
        lam=params.lam, theta=params.theta, chi=params.chi, t_sz=t_sz,
        delta_lambda=delta_lambda, regime=regime_check(params))
    logging.debug(
        'Operating point lambda={}: chi={:.6g} t_sz={:.6g}'.format(
            point.lam, point.chi, point.t_sz))
    return point


@dataclass(frozen=True)
class ReadoutPhase(object):
    """Cavity transmission phase for the two collective branches."""
    up: float
    down: float


def readout_phase(params):
    """
    Phase shift of a readout tone transmitted through the cavity,
    tan(theta_r) = +-2 chi N / kappa.

    Returns:
        :class:`ReadoutPhase`: + branch for |+N/2>, - branch for |-N/2>.

    Raises:
        InvalidArgumentError: if kappa <= 0.
    """
    if params.kappa <= 0:
        raise InvalidArgumentError(
            '{} is not a valid kappa for readout, a lossless cavity has no '
            'transmission linewidth'.format(params.kappa))
    angle = math.atan(2 * params.chi * params.n_qubits / params.kappa)
    return ReadoutPhase(up=angle, down=-angle)


def simulated_phase_uncertainty(config, step=FD_STEP):
    """
    Phase uncertainty from simulated protocol runs.

    Uses P_up at the configured phase and a central difference of P_up at
    phi +- ``step``, obtained by shifting the frame frequency by
    -+ step/T.

    Raises:
        InvalidArgumentError: inside the node guard band
            |sin(N phi)| < :attr:`NODE_GUARD`.
    """
    n = config.params.n_qubits
    phi = config.phi
    if abs(math.sin(n * phi)) < NODE_GUARD:
        raise InvalidArgumentError(
            'phi = {} lies inside the node guard band |sin(N phi)| < '
            '{}'.format(phi, NODE_GUARD))
    omega_ref = config.frame_frequency
    p_0 = protocol_run(config).p_up
    p_plus = protocol_run(
        replace(config, omega_ref=omega_ref - step / config.T)).p_up
    p_minus = protocol_run(
        replace(config, omega_ref=omega_ref + step / config.T)).p_up
    return error_propagation(p_0, (p_plus - p_minus) / (2 * step))
