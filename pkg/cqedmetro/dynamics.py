# -*- coding: utf-8 -*-
"""
Exact unitary evolution and pulse sequences on any supported space.

Propagators come from a dense Hermitian eigendecomposition,
``exp(-i H t) = V exp(-i L t) V^dagger``.
"""

import logging
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from scipy import linalg

from cqedmetro.util import (
    HERMITIAN_ATOL, InvalidArgumentError, OperatorMatrix, amplitudes_of,
    hermitian_deviation, rewrap, unitary_from_hermitian
)


def _check_hamiltonian(h):
    if not isinstance(h, OperatorMatrix):
        raise InvalidArgumentError(
            'Hamiltonian must be an OperatorMatrix, got {}'.format(
                type(h).__name__))
    deviation = hermitian_deviation(h.matrix)
    if deviation > HERMITIAN_ATOL:
        raise InvalidArgumentError(
            'Hamiltonian is not Hermitian, max |H - H^dagger| = {:.3e}'.format(
                deviation))


def _check_dim(dim, vec):
    if vec.shape[0] != dim:
        raise InvalidArgumentError(
            'State of length {} does not match operator of size {}'.format(
                vec.shape[0], dim))


def propagator(h, t):
    """
    Time-evolution operator exp(-i h t).

    Arguments:
        h (:class:`cqedmetro.util.OperatorMatrix`): Hermitian Hamiltonian.
        t (float): time in units of 1/energy.

    Returns:
        :class:`cqedmetro.util.OperatorMatrix` on the space of ``h``.

    Raises:
        InvalidArgumentError: if ``h`` is not Hermitian within 1e-10.
    """
    _check_hamiltonian(h)
    return OperatorMatrix(unitary_from_hermitian(h.matrix, t), h.space)


def evolve(h, state, t):
    """
    Evolve ``state`` under ``h`` for time ``t``.

    Arguments:
        h (:class:`cqedmetro.util.OperatorMatrix`): Hermitian Hamiltonian.
        state: state container or amplitude vector of matching length.
        t (float): evolution time.

    Returns:
        state of the same type as ``state``.

    Raises:
        InvalidArgumentError: on dimension mismatch or non-Hermitian ``h``.

    Example:
        >>> import numpy as np
        >>> from cqedmetro import OperatorMatrix, Space
        >>> h = OperatorMatrix(np.array([[0, 0.5], [0.5, 0]]), Space.qubit())
        >>> np.abs(evolve(h, np.array([1, 0]), np.pi)).round(12)
        array([0., 1.])

    """
    _check_hamiltonian(h)
    vec = amplitudes_of(state)
    _check_dim(h.dim, vec)
    if t == 0:
        return state
    return rewrap(state, unitary_from_hermitian(h.matrix, t) @ vec)


def expectation(op, state):
    """Real expectation value <psi|op|psi> of a Hermitian operator."""
    vec = amplitudes_of(state)
    mat = op.matrix if isinstance(op, OperatorMatrix) else np.asarray(op)
    _check_dim(mat.shape[0], vec)
    return float(np.vdot(vec, mat @ vec).real)


def trajectory(h, op, state, times):
    """
    Expectation values of ``op`` along the evolution of ``state`` under
    ``h``, sampled at ``times``.

    ``h`` is diagonalized once and reused for every sample.

    Returns:
        :obj:`numpy.ndarray` of floats, one per time.
    """
    _check_hamiltonian(h)
    vec = amplitudes_of(state)
    _check_dim(h.dim, vec)
    mat = op.matrix if isinstance(op, OperatorMatrix) else np.asarray(op)
    evals, evecs = linalg.eigh(h.matrix)
    coeffs = evecs.conj().T @ vec
    op_eig = evecs.conj().T @ mat @ evecs
    out = np.empty(len(times))
    for i, t in enumerate(times):
        c_t = coeffs * np.exp(-1j * evals * t)
        out[i] = np.vdot(c_t, op_eig @ c_t).real
    return out


@dataclass(frozen=True)
class UnitaryStep(object):
    """Apply a fixed unitary."""
    unitary: OperatorMatrix

    @property
    def dim(self):
        return self.unitary.dim

    def matrix(self):
        return self.unitary.matrix


@dataclass(frozen=True)
class EvolutionStep(object):
    """Evolve under ``hamiltonian`` for ``duration`` >= 0."""
    hamiltonian: OperatorMatrix
    duration: float

    def __post_init__(self):
        _check_hamiltonian(self.hamiltonian)
        if self.duration < 0:
            raise InvalidArgumentError(
                '{} is not a valid duration, use a time >= 0'.format(
                    self.duration))

    @property
    def dim(self):
        return self.hamiltonian.dim

    def matrix(self):
        return unitary_from_hermitian(self.hamiltonian.matrix, self.duration)


Step = Union[UnitaryStep, EvolutionStep]


@dataclass(frozen=True)
class PulseSequence(object):
    """
    Ordered steps applied left to right, all on one space.

    Arguments:
        steps (tuple): :class:`UnitaryStep` and :class:`EvolutionStep`
            instances, the first step acts first.

    Raises:
        InvalidArgumentError: if the steps do not share one dimension.
    """
    steps: Tuple[Step, ...] = ()

    def __post_init__(self):
        steps = tuple(self.steps)
        dims = {step.dim for step in steps}
        if len(dims) > 1:
            raise InvalidArgumentError(
                'Pulse sequence mixes spaces of dimension {}'.format(
                    sorted(dims)))
        object.__setattr__(self, 'steps', steps)

    def __len__(self):
        return len(self.steps)

    @property
    def dim(self):
        return self.steps[0].dim if self.steps else None

    def then(self, step):
        """New sequence with ``step`` appended."""
        return PulseSequence(self.steps + (step,))

    def propagator(self):
        """
        Single matrix equal to the ordered product of the steps.

        Returns:
            :obj:`numpy.ndarray` or None for an empty sequence.
        """
        if not self.steps:
            return None
        out = np.eye(self.dim, dtype=complex)
        for step in self.steps:
            out = step.matrix() @ out
        return out


def run_sequence(seq, state):
    """
    Apply every step of ``seq`` to ``state`` in listed order.

    An empty sequence returns ``state`` unchanged.

    Raises:
        InvalidArgumentError: if the state length differs from the
            sequence dimension.
    """
    vec = amplitudes_of(state)
    if not seq.steps:
        return state
    _check_dim(seq.dim, vec)
    for step in seq.steps:
        vec = step.matrix() @ vec
    logging.debug('Applied pulse sequence of {} steps'.format(len(seq)))
    return rewrap(state, vec)
