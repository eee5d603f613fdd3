# -*- coding: utf-8 -*-

import math
from dataclasses import replace

import numpy as np
import pytest
from scipy.special import comb

from cqedmetro.composite_space import embed_product, lift
from cqedmetro.dynamics import evolve, trajectory
from cqedmetro.hamiltonians import SystemParams, h_collective, h_qubit_cavity
from cqedmetro.metrology import ghz_generate
from cqedmetro.oracle import (
    embed_symmetric, full_hamiltonian, full_spin_operators,
    full_sz_trajectory, parity_expectation, parity_fringe,
    product_down_state, single_qubit_purity, symmetric_isometry,
    symmetric_leakage
)
from cqedmetro.spin_algebra import collective_operator, x_basis_state
from cqedmetro.util import FullState, OracleSizeError


@pytest.fixture(scope="module")
def coupled():
    """Strongly coupled system so that <S_z>(t) actually moves."""
    return SystemParams(n_qubits=2, b_z=1.0, B_x=0.5 * math.sqrt(3),
                        lam=0.0, lam_c=0.4, omega_c=0.8)


def _fit(phis, values, frequency):
    design = np.column_stack([np.cos(frequency * phis),
                              np.sin(frequency * phis)])
    coeffs, *_ = np.linalg.lstsq(design, values, rcond=None)
    residual = np.max(np.abs(design @ coeffs - values))
    return math.hypot(*coeffs), residual


class TestFullHamiltonian(object):
    def test_hermitian_and_conserves_total_spin(self, coupled):
        p = replace(coupled, n_qubits=3)
        h = full_hamiltonian(p, 4)
        assert h.is_hermitian(atol=1e-12)
        sx, sy, sz = full_spin_operators(3, 4)
        s2 = sx @ sx + sy @ sy + sz @ sz
        assert np.allclose(h.commutator(s2).matrix, 0, atol=1e-10)

    def test_single_qubit_matches_collective(self, coupled):
        p = replace(coupled, n_qubits=1)
        assert np.allclose(full_hamiltonian(p, 5).matrix,
                           h_collective(p, 5).matrix, atol=1e-14)

    def test_single_qubit_from_qubit_cavity_model(self, coupled):
        p = replace(coupled, n_qubits=1)
        n_max = 5
        # columns are the ground and excited states of h_single_qubit
        c, s = math.cos(p.theta / 2), math.sin(p.theta / 2)
        frame = np.kron(np.array([[c, -s], [s, c]]), np.eye(n_max + 1))
        rotated = frame.T @ h_qubit_cavity(p, n_max).matrix @ frame
        assert np.allclose(rotated, full_hamiltonian(p, n_max).matrix,
                           atol=1e-12)

    def test_symmetric_restriction(self, coupled):
        p = replace(coupled, n_qubits=3)
        n_max = 5
        iso = np.kron(symmetric_isometry(3), np.eye(n_max + 1))
        restricted = iso.T @ full_hamiltonian(p, n_max).matrix @ iso
        assert np.allclose(np.linalg.eigvalsh(restricted),
                           h_collective(p, n_max).eigenvalues(), atol=1e-10)

    def test_decoupled_degeneracies(self, coupled):
        p = replace(coupled, n_qubits=3, lam_c=0.0)
        n_max = 2
        expected = []
        for n_up in range(4):
            for n in range(n_max + 1):
                energy = p.Omega * (n_up - 1.5) + p.omega_c * (n + 0.5)
                expected += [energy] * int(comb(3, n_up))
        assert np.allclose(full_hamiltonian(p, n_max).eigenvalues(),
                           np.sort(expected), atol=1e-12)

    def test_size_limit(self, coupled):
        with pytest.raises(OracleSizeError):
            full_hamiltonian(replace(coupled, n_qubits=7), 2)
        with pytest.raises(OracleSizeError):
            full_hamiltonian(coupled, 11)
        with pytest.raises(OracleSizeError):
            symmetric_isometry(7)


class TestIsometry(object):
    def test_examples(self):
        assert np.array_equal(symmetric_isometry(1), np.eye(2))
        triplet = symmetric_isometry(2)[:, 1]
        assert np.allclose(triplet, [0, 1 / math.sqrt(2), 1 / math.sqrt(2), 0])

    def test_orthonormal_columns(self):
        for n in range(1, 7):
            iso = symmetric_isometry(n)
            assert np.allclose(iso.T @ iso, np.eye(n + 1), atol=1e-12)

    def test_congruence_with_collective_operators(self):
        iso = symmetric_isometry(3)
        for full, kind in zip(full_spin_operators(3), ('Sx', 'Sy', 'Sz')):
            assert np.allclose(iso.T @ full.matrix @ iso,
                               collective_operator(kind, 3).matrix,
                               atol=1e-12)


class TestParity(object):
    def test_product_states(self):
        assert parity_expectation(product_down_state(3)) == -1
        vec = np.zeros(8)
        vec[0b010] = 1
        assert parity_expectation(FullState(3, None, vec)) == 1

    def test_parity_with_cavity(self):
        assert parity_expectation(product_down_state(2, n_max=3)) == 1

    def test_fringe_amplitude_and_frequency(self):
        phis = np.linspace(0, 2 * np.pi, 41)
        amplitude, residual = _fit(phis, parity_fringe(3, phis), 3)
        assert amplitude == pytest.approx(1, abs=1e-9)
        assert residual <= 1e-6
        # the GHZ fringe does not fit the single-qubit frequency
        _, wrong = _fit(phis, parity_fringe(3, phis), 1)
        assert wrong > 0.1

    def test_single_qubit_fringe(self):
        phis = np.linspace(0, 2 * np.pi, 41)
        amplitude, residual = _fit(phis, parity_fringe(1, phis), 1)
        assert amplitude == pytest.approx(1, abs=1e-9)
        assert residual <= 1e-6

    def test_ghz_is_maximally_entangled(self):
        for n in range(2, 6):
            purity = single_qubit_purity(embed_symmetric(ghz_generate(n)))
            assert purity == pytest.approx(0.5, abs=1e-10)
        assert single_qubit_purity(embed_symmetric(ghz_generate(1))) == \
            pytest.approx(1, abs=1e-12)


class TestOracleEquivalence(object):
    def test_sz_trajectory(self, coupled):
        n_max = 6
        for n in range(1, 5):
            p = replace(coupled, n_qubits=n)
            state = embed_product(x_basis_state(n, n / 2), 0, n_max)
            times = np.linspace(0, 20 / p.Omega, 50)
            sz = lift(collective_operator('Sz', n), 'spin', n, n_max)
            collective = trajectory(h_collective(p, n_max), sz, state, times)
            full = full_sz_trajectory(p, state, times, n_max)
            assert np.allclose(full, collective, atol=1e-8)

    @pytest.mark.slow
    def test_sz_trajectory_largest_oracle(self, coupled):
        n_max = 10
        for n in (5, 6):
            p = replace(coupled, n_qubits=n)
            state = embed_product(x_basis_state(n, -n / 2), 1, n_max)
            times = np.linspace(0, 20 / p.Omega, 50)
            sz = lift(collective_operator('Sz', n), 'spin', n, n_max)
            collective = trajectory(h_collective(p, n_max), sz, state, times)
            full = full_sz_trajectory(p, state, times, n_max)
            assert np.allclose(full, collective, atol=1e-8)

    def test_symmetric_sector_is_preserved(self, coupled):
        n_max = 5
        p = replace(coupled, n_qubits=3)
        h = full_hamiltonian(p, n_max)
        psi = embed_symmetric(ghz_generate(3), n_max=n_max)
        assert symmetric_leakage(psi) < 1e-12
        for t in (1.0, 5.0, 20.0):
            assert symmetric_leakage(evolve(h, psi, t)) <= 1e-10
