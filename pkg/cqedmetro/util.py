# -*- coding: utf-8 -*-
"""
Utility functions and classes for the ``cqedmetro`` package: exception
types, the space-tagged :class:`OperatorMatrix`, the state containers and
small argument checks shared by every module.

Attributes:
    NORM_ATOL (float): tolerance on the squared-amplitude sum of a state
        when a state container is built, value = 1e-10.
    HERMITIAN_ATOL (float): largest entry of ``H - H^dagger`` accepted for
        a Hermitian operator, value = 1e-10.
    EXAMPLE_CONFIGS (tuple): names of the JSON run configurations shipped
        in ``cqedmetro/example_data``.

Note:
    Every vector and matrix in the package uses the same ordering. Dicke
    kets are ascending in M (index 0 is M = -N/2), Fock kets ascending in
    photon number, and composite spaces are Dicke-major, i.e. index =
    dicke_index * (n_max + 1) + fock_index.
"""

import enum
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import Optional

import numpy as np
from scipy import linalg

NORM_ATOL = 1e-10
HERMITIAN_ATOL = 1e-10

EXAMPLE_CONFIGS = (
    'protocol_tracked.json',
    'protocol_degenerate.json',
    'sweep_n_qubits.json',
    'sweep_g_over_delta.json',
    'sweep_lambda.json',
    'check_strong_coupling.json',
)


class InvalidArgumentError(ValueError):
    """Argument has the wrong dimension, kind or range."""


class OracleSizeError(InvalidArgumentError):
    """Product-space oracle requested beyond its size cap."""


class PhysicsDomainError(ValueError):
    """Inputs are valid numbers but outside the regime a model supports."""


class ResonanceError(PhysicsDomainError):
    """Qubit-cavity detuning is zero, dispersive quantities are undefined."""


class UnsupportedRegimeError(PhysicsDomainError):
    """Twisting interaction has the wrong sign (chi <= 0)."""


class DegenerateSensitivityError(PhysicsDomainError):
    """Bias sensitivity vanishes at the degeneracy point lambda = 1/2."""


class TruncationLeakError(PhysicsDomainError):
    """Probability leaked out of the retained Fock space."""


class SpaceKind(enum.Enum):
    """Hilbert spaces an :class:`OperatorMatrix` can act on."""
    QUBIT = 'qubit'
    DICKE = 'dicke'
    FOCK = 'fock'
    COMPOSITE = 'composite'
    QUBIT_CAVITY = 'qubit_cavity'
    FULL = 'full'


@dataclass(frozen=True)
class Space(object):
    """
    Descriptor of a finite Hilbert space.

    Arguments:
        kind (:class:`SpaceKind`): which space.
        n_qubits (int): number of qubits, 0 when the space has no qubits.
        n_max (int or None): highest retained photon number, None when the
            space has no cavity factor.
    """
    kind: SpaceKind
    n_qubits: int = 0
    n_max: Optional[int] = None

    @classmethod
    def qubit(cls):
        return cls(SpaceKind.QUBIT, 1)

    @classmethod
    def dicke(cls, n_qubits):
        return cls(SpaceKind.DICKE, n_qubits)

    @classmethod
    def fock(cls, n_max):
        return cls(SpaceKind.FOCK, 0, n_max)

    @classmethod
    def composite(cls, n_qubits, n_max):
        return cls(SpaceKind.COMPOSITE, n_qubits, n_max)

    @classmethod
    def qubit_cavity(cls, n_max):
        return cls(SpaceKind.QUBIT_CAVITY, 1, n_max)

    @classmethod
    def full(cls, n_qubits, n_max=None):
        return cls(SpaceKind.FULL, n_qubits, n_max)

    @property
    def fock_dim(self):
        return 1 if self.n_max is None else self.n_max + 1

    @property
    def dim(self):
        if self.kind is SpaceKind.QUBIT:
            return 2
        if self.kind is SpaceKind.DICKE:
            return self.n_qubits + 1
        if self.kind is SpaceKind.FOCK:
            return self.fock_dim
        if self.kind is SpaceKind.COMPOSITE:
            return (self.n_qubits + 1) * self.fock_dim
        if self.kind is SpaceKind.QUBIT_CAVITY:
            return 2 * self.fock_dim
        return 2 ** self.n_qubits * self.fock_dim


@dataclass(frozen=True, eq=False)
class OperatorMatrix(object):
    """
    Dense complex square matrix tagged with the space it acts on.

    The wrapped array is copied on construction and made read-only, so
    instances can be shared between threads.

    Arguments:
        matrix (array_like): square matrix of size ``space.dim``.
        space (:class:`Space`): space descriptor.

    Example:
        >>> from cqedmetro import collective_operator
        >>> sz = collective_operator('Sz', 2)
        >>> sz.space.kind
        <SpaceKind.DICKE: 'dicke'>
        >>> (sz @ sz).matrix.real.diagonal()
        array([1., 0., 1.])

    """
    matrix: np.ndarray
    space: Space

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise InvalidArgumentError(
                'Operator must be a square matrix, got shape {}'.format(
                    mat.shape)
            )
        if mat.shape[0] != self.space.dim:
            raise InvalidArgumentError(
                'Operator of size {} does not match {} space of '
                'dimension {}'.format(
                    mat.shape[0], self.space.kind.value, self.space.dim)
            )
        mat.setflags(write=False)
        object.__setattr__(self, 'matrix', mat)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def dag(self):
        return OperatorMatrix(self.matrix.conj().T, self.space)

    def _check_space(self, other):
        if other.space != self.space:
            raise InvalidArgumentError(
                'Cannot combine operators on {} and {}'.format(
                    self.space, other.space)
            )

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            self._check_space(other)
            return OperatorMatrix(self.matrix @ other.matrix, self.space)
        vec = amplitudes_of(other)
        if vec.shape[0] != self.dim:
            raise InvalidArgumentError(
                'State of length {} does not match operator of size '
                '{}'.format(vec.shape[0], self.dim)
            )
        return rewrap(other, self.matrix @ vec)

    def __add__(self, other):
        self._check_space(other)
        return OperatorMatrix(self.matrix + other.matrix, self.space)

    def __sub__(self, other):
        self._check_space(other)
        return OperatorMatrix(self.matrix - other.matrix, self.space)

    def __mul__(self, scalar):
        return OperatorMatrix(scalar * self.matrix, self.space)

    __rmul__ = __mul__

    def __neg__(self):
        return OperatorMatrix(-self.matrix, self.space)

    def commutator(self, other):
        """Return ``[self, other]``."""
        return self @ other - other @ self

    def is_hermitian(self, atol=HERMITIAN_ATOL):
        return hermitian_deviation(self.matrix) <= atol

    def is_unitary(self, atol=1e-10):
        eye = np.eye(self.dim)
        return np.max(np.abs(self.matrix.conj().T @ self.matrix - eye)) <= atol

    def eigenvalues(self):
        """Sorted eigenvalues of a Hermitian operator."""
        return linalg.eigvalsh(self.matrix)


class _StateVector(object):
    """Length and norm validation shared by the state containers."""

    def __post_init__(self):
        vec = np.array(self.amplitudes, dtype=complex).ravel()
        if vec.size != self.space.dim:
            raise InvalidArgumentError(
                '{} needs {} amplitudes, got {}'.format(
                    type(self).__name__, self.space.dim, vec.size)
            )
        norm = np.vdot(vec, vec).real
        if abs(norm - 1) > NORM_ATOL:
            raise InvalidArgumentError(
                '{} is not normalized, squared-amplitude sum = {}'.format(
                    type(self).__name__, norm)
            )
        vec.setflags(write=False)
        object.__setattr__(self, 'amplitudes', vec)

    @property
    def dim(self):
        return self.space.dim

    def with_amplitudes(self, amplitudes):
        """Copy of this state holding new amplitudes."""
        return replace(self, amplitudes=amplitudes)

    def overlap(self, other):
        """Inner product ``<self|other>``."""
        return np.vdot(self.amplitudes, amplitudes_of(other))

    def probabilities(self):
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True, eq=False)
class DickeState(_StateVector):
    """
    Pure state of the symmetric sector, amplitudes over M = -N/2 ... +N/2.

    Arguments:
        n_qubits (int): number of qubits N.
        amplitudes (array_like): N + 1 complex amplitudes.
    """
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        check_positive_int(self.n_qubits, 'n_qubits')
        super().__post_init__()

    @property
    def space(self):
        return Space.dicke(self.n_qubits)


@dataclass(frozen=True, eq=False)
class CompositeState(_StateVector):
    """
    Pure state on Dicke (x) truncated Fock space, Dicke-major ordering.

    Arguments:
        n_qubits (int): number of qubits N.
        n_max (int): highest retained photon number.
        amplitudes (array_like): (N + 1) * (n_max + 1) amplitudes.
    """
    n_qubits: int
    n_max: int
    amplitudes: np.ndarray

    def __post_init__(self):
        check_positive_int(self.n_qubits, 'n_qubits')
        check_nonnegative_int(self.n_max, 'n_max')
        super().__post_init__()

    @property
    def space(self):
        return Space.composite(self.n_qubits, self.n_max)

    def as_matrix(self):
        """Amplitudes reshaped to (dicke index, photon number)."""
        return self.amplitudes.reshape(self.n_qubits + 1, self.n_max + 1)


@dataclass(frozen=True, eq=False)
class FullState(_StateVector):
    """
    Pure state on the 2^N product space of individual qubits, optionally
    tensored with a truncated Fock space. Qubit 1 is the most significant
    factor and each qubit is ordered down before up.

    Arguments:
        n_qubits (int): number of qubits N.
        n_max (int or None): highest retained photon number, None without
            cavity.
        amplitudes (array_like): 2^N * (n_max + 1) amplitudes.
    """
    n_qubits: int
    n_max: Optional[int]
    amplitudes: np.ndarray

    def __post_init__(self):
        check_positive_int(self.n_qubits, 'n_qubits')
        if self.n_max is not None:
            check_nonnegative_int(self.n_max, 'n_max')
        super().__post_init__()

    @property
    def space(self):
        return Space.full(self.n_qubits, self.n_max)


def check_positive_int(value, name):
    """Raise :class:`InvalidArgumentError` unless ``value`` is an int >= 1."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) \
            or value < 1:
        raise InvalidArgumentError(
            '{} is not a valid {}, use an integer >= 1'.format(value, name))
    return int(value)


def check_nonnegative_int(value, name):
    """Raise :class:`InvalidArgumentError` unless ``value`` is an int >= 0."""
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) \
            or value < 0:
        raise InvalidArgumentError(
            '{} is not a valid {}, use an integer >= 0'.format(value, name))
    return int(value)


def amplitudes_of(state):
    """Amplitude vector of a state container or a plain array."""
    if isinstance(state, _StateVector):
        return state.amplitudes
    vec = np.asarray(state, dtype=complex)
    if vec.ndim != 1:
        raise InvalidArgumentError(
            'State vector must be one dimensional, got shape {}'.format(
                vec.shape)
        )
    return vec


def rewrap(template, vector):
    """Return ``vector`` in the same container type as ``template``."""
    if isinstance(template, _StateVector):
        return template.with_amplitudes(vector)
    return vector


def hermitian_deviation(matrix):
    """Largest entry of ``matrix - matrix^dagger``."""
    matrix = np.asarray(matrix)
    return float(np.max(np.abs(matrix - matrix.conj().T)))


def unitary_from_hermitian(matrix, t):
    """
    Compute ``exp(-i * matrix * t)`` for a Hermitian matrix.

    Diagonal generators are exponentiated entrywise, everything else goes
    through a dense Hermitian eigendecomposition ``V exp(-i L t) V^dagger``.

    Arguments:
        matrix (:obj:`numpy.ndarray`): Hermitian matrix.
        t (float): time (or angle) multiplying the generator.

    Returns:
        :obj:`numpy.ndarray`: unitary matrix.
    """
    matrix = np.asarray(matrix, dtype=complex)
    diagonal = np.diag(matrix)
    if not np.any(matrix - np.diag(diagonal)):
        return np.diag(np.exp(-1j * diagonal.real * t))
    evals, evecs = linalg.eigh(matrix)
    return (evecs * np.exp(-1j * evals * t)) @ evecs.conj().T


def get_example_path(name):
    """
    Find path to an example configuration packaged with cqedmetro.

    Arguments:
        name (str): file name, one of :attr:`EXAMPLE_CONFIGS`.

    Returns:
        :obj:`pathlib.Path`: path to the JSON file.

    Raises:
        FileNotFoundError: if the file is not part of the install.
    """
    resource = resources.files('cqedmetro') / 'example_data' / name
    if not resource.is_file():
        raise FileNotFoundError(
            '{} was not found in the cqedmetro install directory, '
            'available examples: {}'.format(name, ', '.join(EXAMPLE_CONFIGS))
        )
    return Path(str(resource))
