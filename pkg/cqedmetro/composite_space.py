# -*- coding: utf-8 -*-
"""
Tensor product of the Dicke sector with a truncated cavity (Fock) space.

Composite vectors and operators are Dicke-major: the composite index of
|M, n> is ``dicke_index * (n_max + 1) + n``. The top Fock level is kept as
is, so truncated ladder operators carry the usual edge artifact
``[a, a^dagger] = -n_max`` at n = n_max.

Attributes:
    DEFAULT_N_MAX (int): default highest retained photon number, value = 10.
"""

import enum
import logging
from dataclasses import dataclass

import numpy as np
import qutip

from cqedmetro.util import (
    CompositeState, DickeState, InvalidArgumentError, OperatorMatrix, Space,
    check_nonnegative_int
)

DEFAULT_N_MAX = 10


@dataclass(frozen=True)
class FockSpace(object):
    """Cavity mode truncated to photon numbers 0 ... n_max."""
    n_max: int

    def __post_init__(self):
        check_nonnegative_int(self.n_max, 'n_max')

    @property
    def dim(self):
        return self.n_max + 1


class LadderKind(enum.Enum):
    ANNIHILATE = 'annihilate'
    CREATE = 'create'
    NUMBER = 'number'


class Side(enum.Enum):
    SPIN = 'spin'
    CAVITY = 'cavity'


def ladder_operator(kind, n_max):
    """
    Truncated cavity operator a, a^dagger or a^dagger a.

    Arguments:
        kind (:class:`LadderKind` or str): 'annihilate', 'create' or
            'number'.
        n_max (int): highest retained photon number, >= 0.

    Returns:
        :class:`cqedmetro.util.OperatorMatrix` on the Fock space.
    """
    fock = FockSpace(n_max)
    try:
        kind = LadderKind(kind)
    except ValueError:
        raise InvalidArgumentError(
            '{} is not a valid ladder operator, use annihilate, create or '
            'number'.format(kind)
        ) from None

    if kind is LadderKind.ANNIHILATE:
        op = qutip.destroy(fock.dim)
    elif kind is LadderKind.CREATE:
        op = qutip.create(fock.dim)
    else:
        op = qutip.num(fock.dim)
    return OperatorMatrix(op.full(), Space.fock(n_max))


def lift(op, side, n_qubits, n_max):
    """
    Embed a spin or cavity operator into the composite space.

    ``side='spin'`` gives ``A (x) I_fock`` and ``side='cavity'`` gives
    ``I_dicke (x) B``.

    Arguments:
        op (:class:`cqedmetro.util.OperatorMatrix` or array): operator on
            the declared side.
        side (str): 'spin' or 'cavity'.
        n_qubits (int): number of qubits N.
        n_max (int): Fock cutoff.

    Returns:
        :class:`cqedmetro.util.OperatorMatrix` on the composite space.

    Raises:
        InvalidArgumentError: if the operator size does not match ``side``.
    """
    space = Space.composite(n_qubits, n_max)
    side = Side(side)
    mat = op.matrix if isinstance(op, OperatorMatrix) else np.asarray(op)
    spin_dim, fock_dim = n_qubits + 1, n_max + 1
    expected = spin_dim if side is Side.SPIN else fock_dim
    if mat.shape != (expected, expected):
        raise InvalidArgumentError(
            'Operator of shape {} cannot be lifted from the {} side, '
            'expected size {}'.format(mat.shape, side.value, expected)
        )
    if side is Side.SPIN:
        product = qutip.tensor(qutip.Qobj(mat), qutip.qeye(fock_dim))
    else:
        product = qutip.tensor(qutip.qeye(spin_dim), qutip.Qobj(mat))
    return OperatorMatrix(product.full(), space)


def embed_product(spin_state, photon_number, n_max=DEFAULT_N_MAX):
    """
    Product of a Dicke state with the Fock state |photon_number>.

    Arguments:
        spin_state (:class:`cqedmetro.util.DickeState`): spin part.
        photon_number (int): cavity occupation, 0 <= n <= n_max.
        n_max (int): Fock cutoff, default :attr:`DEFAULT_N_MAX`.

    Returns:
        :class:`cqedmetro.util.CompositeState`
    """
    if not isinstance(spin_state, DickeState):
        raise InvalidArgumentError(
            'embed_product needs a DickeState, got {}'.format(
                type(spin_state).__name__)
        )
    check_nonnegative_int(n_max, 'n_max')
    check_nonnegative_int(photon_number, 'photon_number')
    if photon_number > n_max:
        raise InvalidArgumentError(
            'photon_number {} exceeds the Fock cutoff n_max = {}'.format(
                photon_number, n_max)
        )
    fock = np.zeros(n_max + 1)
    fock[photon_number] = 1
    logging.debug(
        'Embedding N={} spin state with {} photons, n_max={}'.format(
            spin_state.n_qubits, photon_number, n_max)
    )
    return CompositeState(
        spin_state.n_qubits, n_max, np.kron(spin_state.amplitudes, fock))


def partial_trace(state_vector, dims, keep):
    """
    Reduced density matrix of a bipartite pure state.

    Arguments:
        state_vector (array or state container): amplitudes ordered with the
            first factor most significant.
        dims (tuple): (first factor dimension, second factor dimension).
        keep (int): 0 keeps the first factor, 1 keeps the second.

    Returns:
        :obj:`numpy.ndarray`: Hermitian reduced density matrix.
    """
    vec = getattr(state_vector, 'amplitudes', state_vector)
    vec = np.asarray(vec, dtype=complex)
    d0, d1 = dims
    if vec.size != d0 * d1:
        raise InvalidArgumentError(
            'State of length {} does not factor as {} x {}'.format(
                vec.size, d0, d1)
        )
    psi = vec.reshape(d0, d1)
    if keep == 0:
        return psi @ psi.conj().T
    if keep == 1:
        return psi.T @ psi.conj()
    raise InvalidArgumentError('{} is not a valid factor, use 0 or 1'.format(
        keep))
