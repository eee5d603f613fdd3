# -*- coding: utf-8 -*-
"""
Brute-force reference on the 2^N product space of individual qubits,
optionally tensored with the truncated cavity.

Qubit 1 is the most significant tensor factor, every qubit is ordered
down before up and the Fock index comes last. In this ordering the
single-qubit Pauli matrices are sigma_z = diag(-1, +1) and
sigma_y = [[0, i], [-i, 0]], which makes the N = 1 product space coincide
with the N = 1 Dicke basis.

Attributes:
    MAX_ORACLE_QUBITS (int): largest N the oracle builds, value = 6.
    MAX_ORACLE_N_MAX (int): largest Fock cutoff the oracle builds,
        value = 10.
"""

import logging

import numpy as np
from scipy.special import comb

from cqedmetro.composite_space import DEFAULT_N_MAX, ladder_operator
from cqedmetro.dynamics import trajectory
from cqedmetro.metrology import ideal_u_n
from cqedmetro.spin_algebra import basis_state
from cqedmetro.util import (
    CompositeState, DickeState, FullState, InvalidArgumentError,
    OperatorMatrix, OracleSizeError, Space, amplitudes_of,
    check_positive_int, unitary_from_hermitian
)

MAX_ORACLE_QUBITS = 6
MAX_ORACLE_N_MAX = 10

_PAULI = {
    'x': np.array([[0, 1], [1, 0]], dtype=complex),
    'y': np.array([[0, 1j], [-1j, 0]], dtype=complex),
    'z': np.array([[-1, 0], [0, 1]], dtype=complex),
}


def _check_size(n_qubits, n_max=None):
    n_qubits = check_positive_int(n_qubits, 'n_qubits')
    if n_qubits > MAX_ORACLE_QUBITS:
        raise OracleSizeError(
            'Oracle is limited to N <= {}, got N = {}'.format(
                MAX_ORACLE_QUBITS, n_qubits))
    if n_max is not None and n_max > MAX_ORACLE_N_MAX:
        raise OracleSizeError(
            'Oracle is limited to n_max <= {}, got n_max = {}'.format(
                MAX_ORACLE_N_MAX, n_max))
    return n_qubits


def _single_site(op, site, n_qubits):
    return np.kron(np.kron(np.eye(2 ** site), op),
                   np.eye(2 ** (n_qubits - site - 1)))


def _with_cavity(mat, n_max):
    if n_max is None:
        return mat
    return np.kron(mat, np.eye(n_max + 1))


def full_spin_operators(n_qubits, n_max=None):
    """
    Collective (S_x, S_y, S_z) as sums of single-qubit sigma/2.

    Arguments:
        n_qubits (int): N <= :attr:`MAX_ORACLE_QUBITS`.
        n_max (int or None): Fock cutoff when the cavity is included.

    Returns:
        tuple of :class:`cqedmetro.util.OperatorMatrix` on the full space.
    """
    n_qubits = _check_size(n_qubits, n_max)
    space = Space.full(n_qubits, n_max)
    out = []
    for axis in 'xyz':
        mat = sum(_single_site(_PAULI[axis], k, n_qubits)
                  for k in range(n_qubits)) / 2
        out.append(OperatorMatrix(_with_cavity(mat, n_max), space))
    return tuple(out)


def full_hamiltonian(params, n_max=DEFAULT_N_MAX):
    """
    Collective qubit-cavity Hamiltonian expanded over individual qubits.

    Omega S_z + omega_c (a^dagger a + 1/2)
    + 2 g (a^dagger + a)(S_z cos(theta) + S_x sin(theta)) with
    2 S = sum_i sigma_i.

    Raises:
        OracleSizeError: if N > 6 or n_max > 10.
    """
    n = _check_size(params.n_qubits, n_max)
    sx, _, sz = (op.matrix for op in full_spin_operators(n))
    a = ladder_operator('annihilate', n_max).matrix
    number = ladder_operator('number', n_max).matrix
    eye_q = np.eye(2 ** n)
    eye_c = np.eye(n_max + 1)
    coupling = sz * params.cos_theta + sx * params.sin_theta
    mat = params.Omega * np.kron(sz, eye_c) \
        + params.omega_c * np.kron(eye_q, number + 0.5 * eye_c) \
        + 2 * params.g * np.kron(coupling, a + a.T)
    logging.debug('Full oracle Hamiltonian of dimension {}'.format(
        mat.shape[0]))
    return OperatorMatrix(mat, Space.full(n, n_max))


def symmetric_isometry(n_qubits):
    """
    Columns are the Dicke kets written in the product basis.

    Column M + N/2 is the normalized sum of product states with M + N/2
    qubits up.

    Returns:
        :obj:`numpy.ndarray` of shape (2^N, N + 1) with orthonormal columns.
    """
    n_qubits = _check_size(n_qubits)
    out = np.zeros((2 ** n_qubits, n_qubits + 1))
    for index in range(2 ** n_qubits):
        n_up = bin(index).count('1')
        out[index, n_up] = 1 / np.sqrt(comb(n_qubits, n_up, exact=True))
    return out


def embed_symmetric(state, n_max=None):
    """
    Lift a Dicke or composite state to the product space.

    Arguments:
        state (:class:`cqedmetro.util.DickeState` or
            :class:`cqedmetro.util.CompositeState`): state to embed.
        n_max (int or None): for a Dicke state, tensor the result with the
            cavity vacuum of this cutoff. Composite states carry their own
            cutoff and ignore it.

    Returns:
        :class:`cqedmetro.util.FullState`
    """
    if isinstance(state, CompositeState):
        iso = symmetric_isometry(state.n_qubits)
        _check_size(state.n_qubits, state.n_max)
        lifted = np.kron(iso, np.eye(state.n_max + 1)) @ state.amplitudes
        return FullState(state.n_qubits, state.n_max, lifted)
    if isinstance(state, DickeState):
        _check_size(state.n_qubits, n_max)
        lifted = symmetric_isometry(state.n_qubits) @ state.amplitudes
        if n_max is not None:
            vacuum = np.zeros(n_max + 1)
            vacuum[0] = 1
            lifted = np.kron(lifted, vacuum)
        return FullState(state.n_qubits, n_max, lifted)
    raise InvalidArgumentError(
        'Cannot embed a {}, use a DickeState or CompositeState'.format(
            type(state).__name__))


def symmetric_leakage(state):
    """Norm of the part of a full state outside the symmetric sector."""
    iso = symmetric_isometry(state.n_qubits)
    projector = _with_cavity(iso @ iso.T, state.n_max)
    vec = state.amplitudes
    return float(np.linalg.norm(vec - projector @ vec))


def parity_diagonal(n_qubits, n_max=None):
    """Diagonal of prod_i sigma_z,i, the sign is (-1)^(number of downs)."""
    n_qubits = _check_size(n_qubits, n_max)
    n_down = np.array([n_qubits - bin(i).count('1')
                       for i in range(2 ** n_qubits)])
    sign = (-1.0) ** n_down
    if n_max is None:
        return sign
    return np.repeat(sign, n_max + 1)


def parity_expectation(state):
    """<prod_i sigma_z,i> of a :class:`cqedmetro.util.FullState`."""
    if not isinstance(state, FullState):
        raise InvalidArgumentError(
            'Parity needs a FullState, got {}'.format(type(state).__name__))
    weights = np.abs(state.amplitudes) ** 2
    return float(np.dot(parity_diagonal(state.n_qubits, state.n_max),
                        weights))


def parity_fringe(n_qubits, phis):
    """
    Parity Ramsey fringe of the GHZ state.

    Prepares U_N|-N/2>_z in the product space, applies exp(-i phi S_z),
    a collective pi/2 pulse exp(-i pi/2 S_y) and returns
    <prod_i sigma_z,i>, which oscillates as +-cos(N phi + const).

    Arguments:
        n_qubits (int): N <= :attr:`MAX_ORACLE_QUBITS`.
        phis (array_like): phases.

    Returns:
        :obj:`numpy.ndarray` of parity expectations.
    """
    n_qubits = _check_size(n_qubits)
    ghz = ideal_u_n(n_qubits) @ basis_state(n_qubits, -n_qubits / 2)
    psi = embed_symmetric(ghz)
    _, sy, sz = full_spin_operators(n_qubits)
    pulse = unitary_from_hermitian(sy.matrix, np.pi / 2)
    sz_diag = np.diag(sz.matrix).real
    parity = parity_diagonal(n_qubits)
    out = []
    for phi in np.atleast_1d(phis):
        vec = pulse @ (np.exp(-1j * phi * sz_diag) * psi.amplitudes)
        out.append(np.dot(parity, np.abs(vec) ** 2))
    return np.array(out)


def single_qubit_purity(state):
    """Purity tr(rho_1^2) of qubit 1 of a full state."""
    vec = amplitudes_of(state).reshape(2, -1)
    rho = vec @ vec.conj().T
    return float(np.trace(rho @ rho).real)


def full_sz_trajectory(params, state, times, n_max=DEFAULT_N_MAX):
    """
    <S_z>(t) from full-space evolution under :func:`full_hamiltonian`.

    Arguments:
        params (:class:`cqedmetro.hamiltonians.SystemParams`): parameters.
        state (:class:`cqedmetro.util.CompositeState`): symmetric initial
            state, embedded with :func:`embed_symmetric`.
        times (array_like): sample times.

    Returns:
        :obj:`numpy.ndarray`
    """
    h = full_hamiltonian(params, n_max)
    sz = full_spin_operators(params.n_qubits, n_max)[2]
    return trajectory(h, sz, embed_symmetric(state), times)


def product_down_state(n_qubits, n_max=None):
    """|down>_1 ... |down>_N (x) |0>, the all-ground product state."""
    n_qubits = _check_size(n_qubits, n_max)
    dim = Space.full(n_qubits, n_max).dim
    vec = np.zeros(dim)
    vec[0] = 1
    return FullState(n_qubits, n_max, vec)
