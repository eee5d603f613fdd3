"""
A package for simulating entanglement-enhanced measurement of the bias of superconducting qubits that share one cavity mode. Major functionality includes tools to: build collective spin operators in the symmetric Dicke sector and the truncated cavity space; build the single-qubit, qubit-cavity, collective and dispersive Hamiltonians together with the polaron and displacement transforms that connect them; evolve states exactly and compose pulse sequences; generate GHZ states by one-axis twisting and run the double-U_N Ramsey protocol with its phase, frequency and bias uncertainties; validate collective results against a brute-force product-space oracle; and sweep parameters from the command line with deterministic CSV output. cqedmetro includes a command line interface and a Python API.
"""

__name__ = 'cqedmetro'
__author__ = 'cqedmetro developers'
__version__ = '0.1.1'


from cqedmetro.util import (
    OperatorMatrix, Space, DickeState, CompositeState, FullState,
    InvalidArgumentError, PhysicsDomainError, ResonanceError,
    UnsupportedRegimeError, DegenerateSensitivityError, TruncationLeakError,
    OracleSizeError
)
from cqedmetro.spin_algebra import (
    SpinOperatorKind, collective_operator, rotation, basis_state,
    x_basis_state, spin_matrices
)
from cqedmetro.composite_space import (
    FockSpace, ladder_operator, lift, embed_product, partial_trace
)
from cqedmetro.hamiltonians import (
    SystemParams, RegimeReport, regime_check, h_single_qubit,
    h_qubit_cavity, h_collective, h_collective_rwa, h_effective,
    polaron_transform, displaced_transform, spectrum_error, polaron_residual
)
from cqedmetro.dynamics import (
    PulseSequence, UnitaryStep, EvolutionStep, evolve, run_sequence,
    propagator, expectation
)
from cqedmetro.metrology import (
    ProtocolConfig, ProtocolResult, twist_time, ghz_generate, build_u_n,
    protocol_run, p_up_analytic, phase_uncertainty, frequency_uncertainty,
    lambda_uncertainty, sql_baseline, readout_phase, OperatingPoint,
    operating_point
)
from cqedmetro.oracle import (
    full_hamiltonian, symmetric_isometry, parity_expectation, parity_fringe
)
