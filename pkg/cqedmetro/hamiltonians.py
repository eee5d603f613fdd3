# -*- coding: utf-8 -*-
"""
Hamiltonians and unitary frame changes of N identical qubits coupled to
one cavity mode, built from an immutable :class:`SystemParams`.

The single-qubit bias is linear in the control parameter lambda,
``B_z = b_z * (1/2 - lambda)``, and every other quantity (Omega, theta, g,
Delta, chi) is derived from the stored inputs on access.

Attributes:
    DISPERSIVE_CUTOFF (float): largest |g|/|Delta| flagged as dispersive,
        value = 0.1.
    STRONG_COUPLING_FACTOR (float): |g| must reach this multiple of kappa
        and gamma to be flagged as strong coupling, value = 10.
    DEGENERACY_RTOL (float): |B_z|/Omega below this value is treated as
        the degeneracy point cos(theta) = 0, value = 1e-12.
"""

import logging
import math
from dataclasses import asdict, dataclass, replace

import numpy as np
from scipy import linalg

from cqedmetro.composite_space import DEFAULT_N_MAX, ladder_operator, lift
from cqedmetro.spin_algebra import collective_operator
from cqedmetro.util import (
    InvalidArgumentError, OperatorMatrix, ResonanceError, Space,
    check_positive_int, unitary_from_hermitian
)

DISPERSIVE_CUTOFF = 0.1
STRONG_COUPLING_FACTOR = 10
DEGENERACY_RTOL = 1e-12

# relative slack on the inclusive regime thresholds
_THRESHOLD_RTOL = 1e-12

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class SystemParams(object):
    """
    Physical parameters of the qubit register and cavity.

    Energies are angular frequencies (hbar = 1).

    Arguments:
        n_qubits (int): number of qubits N >= 1.
        b_z (float): bias energy scale.
        B_x (float): transverse energy, >= 0.
        lam (float): dimensionless control parameter lambda.
        lam_c (float): cavity increment of lambda per field quadrature.
        omega_c (float): cavity frequency, > 0.
        kappa (float): cavity decay rate, >= 0, used by the readout model.
        gamma (float): qubit decay rate, >= 0, only validated and
            reported.

    Raises:
        InvalidArgumentError: for out-of-range inputs or Omega = 0.
    """
    n_qubits: int
    b_z: float
    B_x: float
    lam: float
    lam_c: float
    omega_c: float
    kappa: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        check_positive_int(self.n_qubits, 'n_qubits')
        for name in ('b_z', 'B_x', 'lam', 'lam_c', 'omega_c', 'kappa',
                     'gamma'):
            value = getattr(self, name)
            if isinstance(value, bool) or not np.isfinite(value):
                raise InvalidArgumentError(
                    '{} is not a valid {}, use a finite number'.format(
                        value, name)
                )
        if self.B_x < 0:
            raise InvalidArgumentError(
                '{} is not a valid B_x, use B_x >= 0'.format(self.B_x))
        if self.omega_c <= 0:
            raise InvalidArgumentError(
                '{} is not a valid omega_c, use omega_c > 0'.format(
                    self.omega_c))
        for name in ('kappa', 'gamma'):
            if getattr(self, name) < 0:
                raise InvalidArgumentError(
                    '{} is not a valid {}, use a rate >= 0'.format(
                        getattr(self, name), name))
        if self.Omega <= 0:
            raise InvalidArgumentError(
                'Qubit splitting Omega vanishes for B_x = {} and '
                'lambda = {}'.format(self.B_x, self.lam)
            )

    @property
    def B_z(self):
        return self.b_z * (0.5 - self.lam)

    @property
    def Omega(self):
        return math.hypot(self.B_x, self.B_z)

    @property
    def theta(self):
        return math.atan2(self.B_x, self.B_z)

    @property
    def cos_theta(self):
        """cos(theta) = B_z / Omega, exactly 0 at the degeneracy point."""
        return self.B_z / self.Omega

    @property
    def sin_theta(self):
        return self.B_x / self.Omega

    @property
    def is_degenerate(self):
        return abs(self.B_z) <= DEGENERACY_RTOL * self.Omega

    @property
    def g(self):
        return -self.b_z * self.lam_c / 2

    @property
    def Delta(self):
        return self.Omega - self.omega_c

    @property
    def chi(self):
        """
        Dispersive shift (g sin(theta))^2 / Delta.

        Raises:
            ResonanceError: if Delta = 0.
        """
        if self.Delta == 0:
            raise ResonanceError(
                'Qubit splitting Omega = {} is resonant with the cavity, '
                'chi is undefined at Delta = 0'.format(self.Omega)
            )
        return (self.g * self.sin_theta) ** 2 / self.Delta

    def with_coupling_ratio(self, g_over_delta):
        """
        Copy with lam_c chosen so that |g| / |Delta| = ``g_over_delta``.

        The sign of g follows from ``-b_z * lam_c / 2`` with lam_c > 0 when
        b_z > 0.
        """
        if self.b_z == 0:
            raise InvalidArgumentError(
                'Coupling ratio cannot be set with b_z = 0')
        if self.Delta == 0:
            raise ResonanceError(
                'Coupling ratio g/Delta is undefined at Delta = 0')
        if g_over_delta < 0:
            raise InvalidArgumentError(
                '{} is not a valid g/Delta ratio, use a value >= 0'.format(
                    g_over_delta))
        lam_c = 2 * g_over_delta * abs(self.Delta) / abs(self.b_z)
        return replace(self, lam_c=lam_c)

    def derived(self):
        """Dictionary of the derived quantities, chi is None at resonance."""
        try:
            chi = self.chi
        except ResonanceError:
            chi = None
        return dict(
            B_z=self.B_z, Omega=self.Omega, theta=self.theta, g=self.g,
            Delta=self.Delta, chi=chi
        )


@dataclass(frozen=True)
class RegimeReport(object):
    """
    Coupling ratios and validity flags of a parameter set.

    ``strong_coupling`` requires |g| >= 10 kappa and |g| >= 10 gamma (a zero
    rate passes), ``dispersive`` requires |g|/|Delta| <= 0.1 and
    ``hierarchy`` requires |g| < Delta < omega_c with Delta > 0.

    Close to theta = 0 the transverse field vanishes, the qubit loses its
    dispersive coupling and the two-level picture of the devices is no
    longer justified. The report does not flag this case.

    Attributes:
        g_over_delta (float): |g| / |Delta|, inf at resonance.
        delta_over_omega_c (float): |Delta| / omega_c.
        g_over_kappa (float): |g| / kappa, inf for kappa = 0.
        g_over_gamma (float): |g| / gamma, inf for gamma = 0.
        abs_delta (float): |Delta|.
    """
    g_over_delta: float
    delta_over_omega_c: float
    g_over_kappa: float
    g_over_gamma: float
    abs_delta: float
    strong_coupling: bool
    dispersive: bool
    hierarchy: bool

    @property
    def passed(self):
        return self.strong_coupling and self.dispersive and self.hierarchy

    def to_dict(self):
        """JSON-ready mirror, infinite ratios become None."""
        out = asdict(self)
        for key, value in out.items():
            if isinstance(value, float) and math.isinf(value):
                out[key] = None
        out['passed'] = self.passed
        return out

    def summary(self):
        """Human readable multi-line report."""
        def fmt(value):
            return 'inf' if math.isinf(value) else '{:.6g}'.format(value)

        def flag(value):
            return 'yes' if value else 'NO'

        return '\n'.join([
            'g/|Delta|        {}'.format(fmt(self.g_over_delta)),
            '|Delta|/omega_c  {}'.format(fmt(self.delta_over_omega_c)),
            'g/kappa          {}'.format(fmt(self.g_over_kappa)),
            'g/gamma          {}'.format(fmt(self.g_over_gamma)),
            '|Delta|          {}'.format(fmt(self.abs_delta)),
            'strong coupling  {}'.format(flag(self.strong_coupling)),
            'dispersive       {}'.format(flag(self.dispersive)),
            'hierarchy        {}'.format(flag(self.hierarchy)),
        ])


def _ratio(num, den):
    return math.inf if den == 0 else num / den


def regime_check(params):
    """
    Evaluate strong-coupling, dispersive and hierarchy conditions.

    Thresholds are inclusive, so |g| = 10 kappa is strong coupling.

    Arguments:
        params (:class:`SystemParams`): parameters to check.

    Returns:
        :class:`RegimeReport`
    """
    g = abs(params.g)
    delta = params.Delta
    abs_delta = abs(delta)
    slack = 1 + _THRESHOLD_RTOL

    def strong(rate):
        return rate == 0 or g * slack >= STRONG_COUPLING_FACTOR * rate

    g_over_delta = _ratio(g, abs_delta)
    report = RegimeReport(
        g_over_delta=g_over_delta,
        delta_over_omega_c=abs_delta / params.omega_c,
        g_over_kappa=_ratio(g, params.kappa),
        g_over_gamma=_ratio(g, params.gamma),
        abs_delta=abs_delta,
        strong_coupling=strong(params.kappa) and strong(params.gamma),
        dispersive=g_over_delta <= DISPERSIVE_CUTOFF * slack,
        hierarchy=delta > 0 and g < delta < params.omega_c,
    )
    logging.debug('Regime check: {}'.format(report))
    return report


def h_single_qubit(params):
    """
    Single-qubit Hamiltonian -(B_z/2) sigma_z - (B_x/2) sigma_x.

    Uses standard Pauli matrices, the eigenvalues are -Omega/2 and
    +Omega/2.
    """
    mat = -params.B_z / 2 * SIGMA_Z - params.B_x / 2 * SIGMA_X
    return OperatorMatrix(mat, Space.qubit())


def h_qubit_cavity(params, n_max=DEFAULT_N_MAX):
    """
    One qubit coupled to the cavity through its bias.

    The cavity field shifts lambda by ``lam_c (a + a^dagger)``, which adds
    ``(b_z lam_c / 2)(a + a^dagger) sigma_z`` to :func:`h_single_qubit`.
    The cavity energy is omega_c (a^dagger a + 1/2). Qubit is the first
    tensor factor.

    Arguments:
        params (:class:`SystemParams`): parameters (n_qubits is ignored).
        n_max (int): Fock cutoff, >= 1.

    Returns:
        :class:`cqedmetro.util.OperatorMatrix` on the 2 (n_max + 1)
        qubit-cavity space.
    """
    _check_n_max(n_max)
    a = ladder_operator('annihilate', n_max).matrix
    number = ladder_operator('number', n_max).matrix
    eye_c = np.eye(n_max + 1)
    quadrature = a + a.T
    mat = np.kron(h_single_qubit(params).matrix, eye_c) \
        + np.kron(np.eye(2), params.omega_c * (number + 0.5 * eye_c)) \
        + params.b_z * params.lam_c / 2 * np.kron(SIGMA_Z, quadrature)
    return OperatorMatrix(mat, Space.qubit_cavity(n_max))


def _check_n_max(n_max, minimum=1):
    if isinstance(n_max, bool) or not isinstance(n_max, (int, np.integer)) \
            or n_max < minimum:
        raise InvalidArgumentError(
            '{} is not a valid n_max, use an integer >= {}'.format(
                n_max, minimum))


def _composite_parts(params, n_max):
    """Lifted S_z, S_x, S_+, S^2, a, n and the quadrature a + a^dagger."""
    _check_n_max(n_max)
    n = params.n_qubits
    spin = {k: lift(collective_operator(k, n), 'spin', n, n_max).matrix
            for k in ('Sz', 'Sx', 'Splus', 'Ssquared')}
    a = lift(ladder_operator('annihilate', n_max), 'cavity', n, n_max).matrix
    number = lift(ladder_operator('number', n_max), 'cavity', n, n_max).matrix
    return spin, a, number


def _h_bare(params, spin, number):
    eye = np.eye(number.shape[0])
    return params.Omega * spin['Sz'] + params.omega_c * (number + 0.5 * eye)


def h_collective(params, n_max=DEFAULT_N_MAX):
    """
    Collective qubit-cavity Hamiltonian in the qubit eigenbasis.

    Omega S_z + omega_c (a^dagger a + 1/2)
    + 2 g (a^dagger + a)(S_z cos(theta) + S_x sin(theta)).

    Arguments:
        params (:class:`SystemParams`): parameters.
        n_max (int): Fock cutoff, >= 1.

    Returns:
        :class:`cqedmetro.util.OperatorMatrix` on the composite space.
    """
    spin, a, number = _composite_parts(params, n_max)
    coupling = spin['Sz'] * params.cos_theta + spin['Sx'] * params.sin_theta
    mat = _h_bare(params, spin, number) \
        + 2 * params.g * (a + a.conj().T) @ coupling
    return OperatorMatrix(mat, Space.composite(params.n_qubits, n_max))


def h_collective_rwa(params, n_max=DEFAULT_N_MAX):
    """
    :func:`h_collective` without the counter-rotating terms
    g sin(theta)(a^dagger S_+ + a S_-).
    """
    spin, a, number = _composite_parts(params, n_max)
    s_plus = spin['Splus']
    exchange = a @ s_plus
    mat = _h_bare(params, spin, number) \
        + 2 * params.g * params.cos_theta * (a + a.conj().T) @ spin['Sz'] \
        + params.g * params.sin_theta * (exchange + exchange.conj().T)
    return OperatorMatrix(mat, Space.composite(params.n_qubits, n_max))


def h_effective_diagonal(params, n_max=DEFAULT_N_MAX):
    """Diagonal of :func:`h_effective` in composite index order."""
    chi = params.chi
    n = params.n_qubits
    j = n / 2
    m = np.repeat(np.arange(n + 1) - j, n_max + 1)
    photons = np.tile(np.arange(n_max + 1, dtype=float), n + 1)
    return params.Omega * m + params.omega_c * (photons + 0.5) \
        + chi * (j * (j + 1) - m ** 2 + m + 2 * photons * m)


def h_effective(params, n_max=DEFAULT_N_MAX):
    """
    Dispersive Hamiltonian, first order in chi.

    Omega S_z + omega_c (a^dagger a + 1/2)
    + chi (S^2 - S_z^2 + S_z + 2 a^dagger a S_z), diagonal in |M, n>.

    Raises:
        ResonanceError: if Delta = 0.
    """
    _check_n_max(n_max, minimum=0)
    diagonal = h_effective_diagonal(params, n_max)
    return OperatorMatrix(
        np.diag(diagonal), Space.composite(params.n_qubits, n_max))


def h_effective_spin(params, photon_number=0):
    """
    :func:`h_effective` restricted to the photon-number eigenspace n,
    with the cavity energy dropped as a global phase:
    Omega S_z + chi (S^2 - S_z^2 + S_z) + 2 chi n S_z.

    Raises:
        ResonanceError: if Delta = 0.
    """
    chi = params.chi
    n = params.n_qubits
    j = n / 2
    m = np.arange(n + 1) - j
    diagonal = (params.Omega + chi + 2 * chi * photon_number) * m \
        + chi * (j * (j + 1) - m ** 2)
    return OperatorMatrix(np.diag(diagonal), Space.dicke(n))


def polaron_generator(params, n_max=DEFAULT_N_MAX):
    """Anti-Hermitian (g sin(theta)/Delta)(a S_+ - a^dagger S_-)."""
    if params.Delta == 0:
        raise ResonanceError(
            'Polaron transform is undefined at Delta = 0 (Omega = {})'.format(
                params.Omega))
    spin, a, _ = _composite_parts(params, n_max)
    exchange = a @ spin['Splus']
    coeff = params.g * params.sin_theta / params.Delta
    return OperatorMatrix(
        coeff * (exchange - exchange.conj().T),
        Space.composite(params.n_qubits, n_max))


def polaron_transform(params, n_max=DEFAULT_N_MAX):
    """
    Polaron unitary U = exp((g sin(theta)/Delta)(a S_+ - a^dagger S_-)).

    ``U H U^dagger`` removes the resonant exchange term of
    :func:`h_collective` to first order.

    Raises:
        ResonanceError: if Delta = 0.
    """
    generator = polaron_generator(params, n_max)
    # exp(X) = exp(-i (i X) 1) with i X Hermitian
    mat = unitary_from_hermitian(1j * generator.matrix, 1)
    return OperatorMatrix(mat, generator.space)


def displaced_transform(params, n_max=DEFAULT_N_MAX):
    """
    Conditional displacement U_d = exp((2 g cos(theta)/omega_c)
    (a^dagger - a) S_z).

    ``U_d H U_d^dagger`` cancels the longitudinal coupling
    2 g cos(theta)(a + a^dagger) S_z against the cavity energy, leaving a
    second-order S_z^2 shift.
    """
    spin, a, _ = _composite_parts(params, n_max)
    coeff = 2 * params.g * params.cos_theta / params.omega_c
    generator = coeff * (a.conj().T - a) @ spin['Sz']
    mat = unitary_from_hermitian(1j * generator, 1)
    return OperatorMatrix(mat, Space.composite(params.n_qubits, n_max))


def transformed_hamiltonian(params, n_max=DEFAULT_N_MAX, displaced=True,
                            rwa=True):
    """
    Hamiltonian seen in the polaron frame, ``V H V^dagger``.

    Arguments:
        params (:class:`SystemParams`): parameters.
        n_max (int): Fock cutoff.
        displaced (bool): if True V = U_d U, else V = U.
        rwa (bool): transform :func:`h_collective_rwa` when True,
            :func:`h_collective` otherwise.

    Returns:
        :class:`cqedmetro.util.OperatorMatrix`
    """
    h = h_collective_rwa(params, n_max) if rwa else h_collective(params, n_max)
    frame = polaron_transform(params, n_max)
    if displaced:
        frame = displaced_transform(params, n_max) @ frame
    return frame @ h @ frame.dag()


def offdiagonal_norm(op):
    """Frobenius norm of the part of ``op`` off the |M, n> diagonal."""
    mat = op.matrix if isinstance(op, OperatorMatrix) else np.asarray(op)
    return float(linalg.norm(mat - np.diag(np.diag(mat))))


def polaron_residual(params, n_max=DEFAULT_N_MAX, displaced=True):
    """
    Relative distance between the transformed Hamiltonian and
    :func:`h_effective`, ||V H V^dagger - H_eff||_F / ||H||_F with
    H = :func:`h_collective_rwa`.

    Both first-order couplings cancel exactly, so the residual is
    quadratic in g.
    """
    h = h_collective_rwa(params, n_max)
    transformed = transformed_hamiltonian(params, n_max, displaced=displaced)
    residual = transformed - h_effective(params, n_max)
    out = float(linalg.norm(residual.matrix) / linalg.norm(h.matrix))
    logging.debug(
        'Polaron residual {:.3e} at g/Delta = {:.4g}'.format(
            out, abs(params.g / params.Delta))
    )
    return out


def spectrum_error(params, n_max=DEFAULT_N_MAX, n_levels=3):
    """
    Largest absolute difference between the ``n_levels`` lowest
    eigenvalues of :func:`h_collective` and :func:`h_effective`.

    Arguments:
        params (:class:`SystemParams`): parameters.
        n_max (int): Fock cutoff.
        n_levels (int): number of low-lying levels compared.

    Returns:
        float
    """
    check_positive_int(n_levels, 'n_levels')
    exact = h_collective(params, n_max).eigenvalues()
    approx = np.sort(h_effective_diagonal(params, n_max))
    if n_levels > exact.size:
        raise InvalidArgumentError(
            'Cannot compare {} levels in a space of dimension {}'.format(
                n_levels, exact.size))
    out = float(np.max(np.abs(exact[:n_levels] - approx[:n_levels])))
    logging.debug(
        'Spectrum error {:.3e} over {} levels at g/Delta = {:.4g}'.format(
            out, n_levels, abs(params.g / params.Delta))
    )
    return out
