# -*- coding: utf-8 -*-
"""
Collective spin operators and rotations of N spin-1/2 qubits restricted to
the symmetric (Dicke) sector |J = N/2, M>.

Kets are ordered ascending in M so that index 0 is M = -N/2 (all qubits
down) and index N is M = +N/2. Units have hbar = 1.
"""

import enum

import numpy as np
import qutip

from cqedmetro.util import (
    DickeState, InvalidArgumentError, OperatorMatrix, Space,
    check_positive_int, unitary_from_hermitian
)


class SpinOperatorKind(enum.Enum):
    """Closed set of collective spin operators."""
    SX = 'Sx'
    SY = 'Sy'
    SZ = 'Sz'
    SPLUS = 'Splus'
    SMINUS = 'Sminus'
    SSQUARED = 'Ssquared'


ROTATION_AXES = (SpinOperatorKind.SX, SpinOperatorKind.SY, SpinOperatorKind.SZ)


def _as_kind(kind):
    try:
        return SpinOperatorKind(kind)
    except ValueError:
        raise InvalidArgumentError(
            '{} is not a valid spin operator, use one of: {}'.format(
                kind, ', '.join(k.value for k in SpinOperatorKind))
        ) from None


def _ascending(op):
    """Dense matrix of a qutip spin operator, reordered to ascending M."""
    # qutip.jmat lists M from +J down to -J
    return np.ascontiguousarray(op.full()[::-1, ::-1])


def m_values(n_qubits):
    """Magnetic quantum numbers -N/2 ... +N/2 in basis order."""
    n_qubits = check_positive_int(n_qubits, 'n_qubits')
    return np.arange(n_qubits + 1) - n_qubits / 2


def collective_operator(kind, n_qubits):
    """
    Matrix of a collective spin operator in the Dicke basis.

    Arguments:
        kind (:class:`SpinOperatorKind` or str): operator, e.g. 'Sz'.
        n_qubits (int): number of qubits N >= 1.

    Returns:
        :class:`cqedmetro.util.OperatorMatrix`: (N+1) x (N+1) operator
        with S_z|M> = M|M>, S_+|M> = sqrt(J(J+1) - M(M+1))|M+1>.

    Raises:
        InvalidArgumentError: if ``n_qubits`` is not a positive integer or
            ``kind`` is unknown.

    Example:
        >>> collective_operator('Sx', 1).matrix.real
        array([[0. , 0.5],
               [0.5, 0. ]])

    """
    kind = _as_kind(kind)
    n_qubits = check_positive_int(n_qubits, 'n_qubits')
    j = n_qubits / 2
    space = Space.dicke(n_qubits)

    s_plus = _ascending(qutip.jmat(j, '+')).real
    if kind is SpinOperatorKind.SZ:
        mat = _ascending(qutip.jmat(j, 'z')).real
    elif kind is SpinOperatorKind.SPLUS:
        mat = s_plus
    elif kind is SpinOperatorKind.SMINUS:
        mat = s_plus.T
    elif kind is SpinOperatorKind.SX:
        mat = (s_plus + s_plus.T) / 2
    elif kind is SpinOperatorKind.SY:
        mat = (s_plus - s_plus.T) / 2j
    else:
        mat = j * (j + 1) * np.eye(n_qubits + 1)

    return OperatorMatrix(mat, space)


def spin_matrices(n_qubits):
    """Tuple (S_x, S_y, S_z) of collective operators for N qubits."""
    return tuple(collective_operator(k, n_qubits) for k in ROTATION_AXES)


def rotation(axis, angle, n_qubits):
    """
    Collective rotation ``exp(+i * angle * S_axis)``.

    Arguments:
        axis (:class:`SpinOperatorKind` or str): 'Sx', 'Sy' or 'Sz'.
        angle (float): rotation angle in radians, the sign is explicit.
        n_qubits (int): number of qubits N >= 1.

    Returns:
        :class:`cqedmetro.util.OperatorMatrix`: unitary rotation.

    Raises:
        InvalidArgumentError: if ``axis`` is S_+, S_- or S^2.
    """
    axis = _as_kind(axis)
    if axis not in ROTATION_AXES:
        raise InvalidArgumentError(
            '{} is not a valid rotation axis, use Sx, Sy or Sz'.format(
                axis.value)
        )
    generator = collective_operator(axis, n_qubits)
    # exp(+i a S) = exp(-i S t) with t = -a
    mat = unitary_from_hermitian(generator.matrix, -angle)
    return OperatorMatrix(mat, generator.space)


def basis_state(n_qubits, m):
    """
    Dicke ket |J = N/2, M = m> along z.

    Arguments:
        n_qubits (int): number of qubits N >= 1.
        m (float): magnetic quantum number, -N/2 <= m <= N/2 in integer
            steps from -N/2.

    Returns:
        :class:`cqedmetro.util.DickeState`
    """
    n_qubits = check_positive_int(n_qubits, 'n_qubits')
    index = m + n_qubits / 2
    if not np.isclose(index, round(index)) or not 0 <= round(index) <= n_qubits:
        raise InvalidArgumentError(
            '{} is not a valid M for N = {}, use -N/2 ... N/2 in unit '
            'steps'.format(m, n_qubits)
        )
    amplitudes = np.zeros(n_qubits + 1, dtype=complex)
    amplitudes[int(round(index))] = 1
    return DickeState(n_qubits, amplitudes)


def x_basis_state(n_qubits, m):
    """
    Dicke ket |J, m> along x, defined as exp(-i pi/2 S_y)|J, m>_z.

    The rotation carries +z onto +x, so x_basis_state(N, N/2) has all
    qubits along +x. This fixes the relative phase of the two GHZ
    components.
    """
    return rotation(SpinOperatorKind.SY, -np.pi / 2, n_qubits) @ \
        basis_state(n_qubits, m)
