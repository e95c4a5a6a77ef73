"""Brute-force simulator in a truncated two-mode Fock basis.

This is the independent oracle for every closed form in the package.  The
full Hamiltonian

    H = omega (n_a + n_b) + lambda (a^dag b + a b^dag)
        + epsilon (a^dag^2 + a^2) + drive (a^dag + a)

is built as a dense real-symmetric matrix on a per-mode photon-number
cutoff, evolved by spectral decomposition, and interrogated for moments,
the covariance measure and the a-mode entanglement entropy.  Cutoff
adequacy is certified operationally by check_convergence, never assumed.
"""

import numpy as np
from scipy import sparse
from scipy.special import xlogy


class ConvergenceError(RuntimeError):
    """Cutoff ceiling reached before observables converged."""


class TruncatedBasis:
    """Two-mode Fock basis with per-mode cutoffs; flat index = n_a*(cb+1)+n_b."""

    def __init__(self, cutoff_a, cutoff_b):
        if cutoff_a < 0 or cutoff_b < 0:
            raise ValueError("cutoffs must be non-negative")
        self.cutoff_a = int(cutoff_a)
        self.cutoff_b = int(cutoff_b)

    @property
    def dim(self):
        return (self.cutoff_a + 1) * (self.cutoff_b + 1)

    def index(self, n_a, n_b):
        if not (0 <= n_a <= self.cutoff_a and 0 <= n_b <= self.cutoff_b):
            raise IndexError(f"({n_a}, {n_b}) outside basis")
        return n_a * (self.cutoff_b + 1) + n_b

    def occupation(self, flat):
        return divmod(int(flat), self.cutoff_b + 1)

    def __repr__(self):
        return f"TruncatedBasis({self.cutoff_a}, {self.cutoff_b})"


def fock_state(basis, n_a, n_b):
    psi = np.zeros(basis.dim, dtype=complex)
    psi[basis.index(n_a, n_b)] = 1.0
    return psi


def _destroy(cutoff):
    return np.diag(np.sqrt(np.arange(1.0, cutoff + 1)), 1)


def build_hamiltonian(params, basis, linear_drive=0.0):
    """Dense real-symmetric Hamiltonian matrix in the truncated basis.

    Assembled from sparse ladder operators so memory stays linear until
    the final densification for the eigensolver.
    """
    a1 = sparse.csr_matrix(_destroy(basis.cutoff_a))
    b1 = sparse.csr_matrix(_destroy(basis.cutoff_b))
    ia = sparse.identity(basis.cutoff_a + 1, format="csr")
    ib = sparse.identity(basis.cutoff_b + 1, format="csr")
    a = sparse.kron(a1, ib, format="csr")
    b = sparse.kron(ia, b1, format="csr")
    num = sparse.kron(sparse.diags(np.arange(basis.cutoff_a + 1.0)), ib) + sparse.kron(
        ia, sparse.diags(np.arange(basis.cutoff_b + 1.0))
    )
    h = params.omega * num
    h = h + params.lam * (a.T @ b + a @ b.T)
    h = h + params.epsilon * (a.T @ a.T + a @ a)
    if linear_drive:
        h = h + linear_drive * (a.T + a)
    h = np.asarray(h.todense())
    if not np.array_equal(h, h.T):
        raise AssertionError("Hamiltonian not symmetric")
    return h


class SpectralEvolver:
    """Caches the eigendecomposition of H for evaluation at many times."""

    def __init__(self, h):
        self.energies, self.modes = np.linalg.eigh(h)

    def at(self, psi0, t):
        coeff = self.modes.conj().T @ psi0
        return self.modes @ (np.exp(-1j * self.energies * t) * coeff)

    def at_times(self, psi0, times):
        coeff = self.modes.conj().T @ psi0
        phases = np.exp(-1j * np.outer(np.asarray(times, float), self.energies))
        return (phases * coeff) @ self.modes.T


def evolve(state, h, t):
    """exp(-iHt) applied to state; norm preserved to 1e-9."""
    out = SpectralEvolver(h).at(np.asarray(state, dtype=complex), t)
    norm = np.linalg.norm(out)
    if abs(norm - 1.0) > 1e-9 and abs(np.linalg.norm(state) - 1.0) < 1e-9:
        raise AssertionError(f"norm drift during evolution: {norm!r}")
    return out


def _grid(state, basis):
    return np.asarray(state, dtype=complex).reshape(basis.cutoff_a + 1, basis.cutoff_b + 1)


def _ann_a(psi_grid):
    out = np.zeros_like(psi_grid)
    na = np.arange(1.0, psi_grid.shape[0])
    out[:-1, :] = np.sqrt(na)[:, None] * psi_grid[1:, :]
    return out


def _ann_b(psi_grid):
    out = np.zeros_like(psi_grid)
    nb = np.arange(1.0, psi_grid.shape[1])
    out[:, :-1] = np.sqrt(nb)[None, :] * psi_grid[:, 1:]
    return out


def _cre_b(psi_grid):
    out = np.zeros_like(psi_grid)
    nb = np.arange(1.0, psi_grid.shape[1])
    out[:, 1:] = np.sqrt(nb)[None, :] * psi_grid[:, :-1]
    return out


def observables(state, basis):
    """First/second moments, covariances and Y for a normalized state."""
    psi = _grid(state, basis)
    norm = np.vdot(psi, psi).real
    if abs(norm - 1.0) > 1e-6:
        raise ValueError(f"state not normalized: |psi|^2 = {norm!r}")
    a_psi = _ann_a(psi)
    b_psi = _ann_b(psi)
    mean_a = np.vdot(psi, a_psi)
    mean_b = np.vdot(psi, b_psi)
    exp_ab = np.vdot(psi, _ann_a(b_psi))
    exp_abdag = np.vdot(psi, _ann_a(_cre_b(psi)))
    mean_na = np.vdot(a_psi, a_psi).real
    mean_nb = np.vdot(b_psi, b_psi).real
    cov_ab = exp_ab - mean_a * mean_b
    cov_abdag = exp_abdag - mean_a * np.conj(mean_b)
    # photon numbers in the measure carry the bar too: n_bar = <n> - |<a>|^2,
    # which is what makes Y exactly insensitive to a linear drive
    nbar_a = mean_na - abs(mean_a) ** 2
    nbar_b = mean_nb - abs(mean_b) ** 2
    y = np.sqrt(
        (abs(cov_abdag) ** 2 + abs(cov_ab) ** 2)
        / (2.0 * (nbar_a + 0.5) * (nbar_b + 0.5))
    )
    return {
        "mean_a": mean_a,
        "mean_b": mean_b,
        "exp_ab": exp_ab,
        "exp_abdag": exp_abdag,
        "cov_ab": cov_ab,
        "cov_ab_dagger": cov_abdag,
        "mean_na": mean_na,
        "mean_nb": mean_nb,
        "Y": float(y),
    }


def reduced_entropy(state, basis):
    """Entanglement entropy (bits) of the a-mode reduced density matrix."""
    psi = _grid(state, basis)
    # rho_a = psi psi^dag traced over b; its eigenvalues are the squared
    # singular values of the amplitude grid
    s = np.linalg.svd(psi, compute_uv=False)
    p = np.clip(s ** 2, 0.0, None)
    return float(-np.sum(xlogy(p, p)) / np.log(2.0))


def check_convergence(
    params,
    t_max,
    tol=1e-6,
    linear_drive=0.0,
    start_cutoff=8,
    ceiling=120,
    n_probe=5,
):
    """Grow cutoffs geometrically until Y, n_a, n_b and S stabilize below tol.

    Returns an adequate TruncatedBasis.  With epsilon = 0 and no drive the
    total photon number is conserved and cutoff N is exact.
    """
    n0 = params.n_initial
    if params.epsilon == 0.0 and linear_drive == 0.0:
        return TruncatedBasis(n0, n0)
    probes = np.linspace(0.0, float(t_max), n_probe + 1)[1:]

    def panel(cutoff):
        basis = TruncatedBasis(cutoff, cutoff)
        h = build_hamiltonian(params, basis, linear_drive)
        ev = SpectralEvolver(h)
        psi0 = fock_state(basis, n0, 0)
        rows = []
        for psi in ev.at_times(psi0, probes):
            obs = observables(psi, basis)
            rows.append([obs["Y"], obs["mean_na"], obs["mean_nb"], reduced_entropy(psi, basis)])
        return np.array(rows)

    cutoff = max(int(start_cutoff), n0 + 2)
    prev = None
    while cutoff <= ceiling:
        current = panel(cutoff)
        if prev is not None and np.abs(current - prev).max() < tol:
            return TruncatedBasis(cutoff, cutoff)
        prev = current
        cutoff = min(2 * cutoff, ceiling) if cutoff < ceiling else ceiling + 1
    raise ConvergenceError(
        f"cutoff ceiling {ceiling} reached without convergence; "
        "unstable or strong-pump regime, raise the ceiling or shorten t"
    )
