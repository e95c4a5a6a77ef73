import math

import numpy as np
import pytest

from cavityent import binomial as bi
from cavityent import fock
from cavityent import heisenberg as hb
from cavityent.params import ModelParams, to_physical_time


class TestBasis:
    def test_index_occupation_bijection(self):
        basis = fock.TruncatedBasis(4, 7)
        seen = set()
        for n_a in range(5):
            for n_b in range(8):
                flat = basis.index(n_a, n_b)
                assert basis.occupation(flat) == (n_a, n_b)
                seen.add(flat)
        assert seen == set(range(basis.dim))

    def test_fock_state_is_unit_vector(self):
        basis = fock.TruncatedBasis(3, 3)
        psi = fock.fock_state(basis, 2, 1)
        assert np.linalg.norm(psi) == 1.0
        assert psi[basis.index(2, 1)] == 1.0


class TestHamiltonian:
    def test_diagonal_counts_photons(self):
        p = ModelParams(1.3, 0.0, 0.0, 0)
        basis = fock.TruncatedBasis(3, 3)
        h = fock.build_hamiltonian(p, basis)
        for n_a in range(4):
            for n_b in range(4):
                i = basis.index(n_a, n_b)
                assert h[i, i] == pytest.approx(1.3 * (n_a + n_b))

    def test_hopping_element(self):
        # <n_a - 1, n_b + 1| H |n_a, n_b> = lam sqrt(n_a (n_b + 1))
        p = ModelParams(1.0, 0.1, 0.0, 0)
        basis = fock.TruncatedBasis(5, 5)
        h = fock.build_hamiltonian(p, basis)
        i = basis.index(3, 1)
        j = basis.index(2, 2)
        assert h[j, i] == pytest.approx(0.1 * math.sqrt(3 * 2))

    def test_pump_element(self):
        # <n_a + 2, n_b| H |n_a, n_b> = eps sqrt((n_a + 1)(n_a + 2))
        p = ModelParams(1.0, 0.0, 0.2, 0)
        basis = fock.TruncatedBasis(6, 2)
        h = fock.build_hamiltonian(p, basis)
        i = basis.index(1, 1)
        j = basis.index(3, 1)
        assert h[j, i] == pytest.approx(0.2 * math.sqrt(2 * 3))

    def test_drive_element(self):
        basis = fock.TruncatedBasis(4, 1)
        h = fock.build_hamiltonian(ModelParams(1.0, 0.0, 0.0, 0), basis, linear_drive=0.05)
        i = basis.index(1, 0)
        j = basis.index(2, 0)
        assert h[j, i] == pytest.approx(0.05 * math.sqrt(2))

    def test_symmetric(self):
        p = ModelParams(1.0, 0.1, 0.1, 0)
        basis = fock.TruncatedBasis(8, 8)
        h = fock.build_hamiltonian(p, basis, linear_drive=0.02)
        assert np.array_equal(h, h.T)


class TestEvolution:
    def test_identity_at_t0(self):
        p = ModelParams(1.0, 0.1, 0.1, 2)
        basis = fock.TruncatedBasis(10, 10)
        h = fock.build_hamiltonian(p, basis)
        psi0 = fock.fock_state(basis, 2, 0)
        np.testing.assert_allclose(fock.evolve(psi0, h, 0.0), psi0, atol=1e-14)

    def test_norm_preserved(self):
        p = ModelParams(1.0, 0.08, 0.06, 3)
        basis = fock.TruncatedBasis(24, 24)
        h = fock.build_hamiltonian(p, basis)
        psi = fock.evolve(fock.fock_state(basis, 3, 0), h, 40.0)
        assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-12)

    def test_pump_free_matches_binomial_magnitudes(self):
        # with the pump off the exact state lives on the N-photon shell
        # |N - n, n>; amplitudes agree with the closed form up to a
        # mode-local phase convention, so magnitudes are compared
        N, lam = 5, 0.1
        p = ModelParams(1.0, lam, 0.0, N)
        basis = fock.TruncatedBasis(N, N)
        h = fock.build_hamiltonian(p, basis)
        psi0 = fock.fock_state(basis, N, 0)
        for s in (0.1, 0.25, 0.4, 0.75):
            t = to_physical_time(s, p)
            grid = fock.evolve(psi0, h, t).reshape(N + 1, N + 1)
            closed = bi.binomial_state(p, t)
            for n in range(N + 1):
                assert abs(grid[N - n, n]) == pytest.approx(abs(closed[n]), abs=1e-9)
            off_shell = sum(
                abs(grid[i, j]) for i in range(N + 1) for j in range(N + 1) if i + j != N
            )
            assert off_shell < 1e-9

    def test_spectral_evolver_batch_matches_single(self):
        p = ModelParams(1.0, 0.1, 0.05, 2)
        basis = fock.TruncatedBasis(16, 16)
        h = fock.build_hamiltonian(p, basis)
        ev = fock.SpectralEvolver(h)
        psi0 = fock.fock_state(basis, 2, 0)
        times = np.array([0.0, 3.0, 17.0])
        batch = ev.at_times(psi0, times)
        for t, row in zip(times, batch):
            np.testing.assert_allclose(row, ev.at(psi0, t), atol=1e-12)


class TestObservables:
    def test_fock_state_moments(self):
        basis = fock.TruncatedBasis(6, 6)
        obs = fock.observables(fock.fock_state(basis, 4, 0), basis)
        assert obs["mean_na"] == pytest.approx(4.0)
        assert obs["mean_nb"] == pytest.approx(0.0)
        assert obs["cov_ab"] == pytest.approx(0.0)
        assert obs["Y"] == 0.0

    def test_peak_measure_pump_free(self):
        N, lam = 5, 0.1
        p = ModelParams(1.0, lam, 0.0, N)
        basis = fock.TruncatedBasis(N, N)
        h = fock.build_hamiltonian(p, basis)
        t = to_physical_time(0.25, p)
        obs = fock.observables(fock.evolve(fock.fock_state(basis, N, 0), h, t), basis)
        assert obs["Y"] == pytest.approx(N / (math.sqrt(2.0) * (N + 1)), abs=1e-10)

    def test_unnormalized_state_rejected(self):
        basis = fock.TruncatedBasis(3, 3)
        with pytest.raises(ValueError):
            fock.observables(2.0 * fock.fock_state(basis, 1, 0), basis)

    def test_linear_drive_leaves_measure_invariant(self):
        # the barred second moments subtract the coherent displacement, so a
        # classical drive term must not move Y
        N, lam = 3, 0.1
        p = ModelParams(1.0, lam, 0.0, N)
        basis = fock.TruncatedBasis(40, 12)
        h0 = fock.build_hamiltonian(p, basis)
        h1 = fock.build_hamiltonian(p, basis, linear_drive=0.3)
        psi0 = fock.fock_state(basis, N, 0)
        for s in (0.1, 0.25, 0.6):
            t = to_physical_time(s, p)
            y0 = fock.observables(fock.evolve(psi0, h0, t), basis)["Y"]
            y1 = fock.observables(fock.evolve(psi0, h1, t), basis)["Y"]
            assert abs(y1 - y0) < 1e-8


class TestEntropy:
    def test_product_state_has_zero_entropy(self):
        basis = fock.TruncatedBasis(4, 4)
        assert fock.reduced_entropy(fock.fock_state(basis, 2, 2), basis) == pytest.approx(0.0)

    def test_peak_entropy_matches_binomial_spectrum(self):
        N, lam = 5, 0.1
        p = ModelParams(1.0, lam, 0.0, N)
        basis = fock.TruncatedBasis(N, N)
        h = fock.build_hamiltonian(p, basis)
        t = to_physical_time(0.25, p)
        psi = fock.evolve(fock.fock_state(basis, N, 0), h, t)
        s = fock.reduced_entropy(psi, basis)
        assert s == pytest.approx(bi.entropy(bi.reduced_spectrum(p, t)), abs=1e-10)
        assert s == pytest.approx(2.198, abs=1e-3)
        assert s <= math.log2(N + 1) + 1e-12


class TestConvergence:
    def test_pump_free_cutoff_is_exact(self):
        p = ModelParams(1.0, 0.1, 0.0, 7)
        basis = fock.check_convergence(p, 10.0)
        assert (basis.cutoff_a, basis.cutoff_b) == (7, 7)

    def test_ceiling_raises(self):
        # deep in the unstable regime no finite cutoff settles
        p = ModelParams(1.0, 0.1, 0.6, 5)
        with pytest.raises(fock.ConvergenceError):
            fock.check_convergence(p, to_physical_time(0.5, p), ceiling=24, n_probe=2)

    def test_weak_pump_converges_quickly(self):
        p = ModelParams(1.0, 0.1, 0.02, 2)
        basis = fock.check_convergence(p, to_physical_time(0.5, p), n_probe=3)
        assert basis.cutoff_a <= 32


class TestAgreementWithTransport:
    def test_random_draws_match_moment_transport(self):
        # stable-regime draws; cutoffs stay <= 64 so the eigensolver fits
        # comfortably in memory
        rng = np.random.default_rng(2024)
        worst = 0.0
        for _ in range(6):
            lam = rng.uniform(0.02, 0.15)
            eps = rng.uniform(0.0, 0.12)
            n0 = int(rng.integers(1, 6))
            p = ModelParams(1.0, lam, eps, n0)
            t_max = to_physical_time(0.5, p)
            basis = fock.check_convergence(p, t_max, tol=1e-6, n_probe=3, ceiling=64)
            h = fock.build_hamiltonian(p, basis)
            ev = fock.SpectralEvolver(h)
            psi0 = fock.fock_state(basis, n0, 0)
            for t in np.linspace(0.0, t_max, 5):
                obs = fock.observables(ev.at(psi0, t), basis)
                y_ref = hb.covariance_measure(hb.moments_transport(p, t))
                worst = max(worst, abs(obs["Y"] - y_ref))
        assert worst < 1e-5
