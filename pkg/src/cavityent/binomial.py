"""Pump-free closed forms: two-mode binomial states and their entanglement.

With epsilon = 0 the hopping term conserves the total photon number, so an
initial |N,0> stays inside the (N+1)-dimensional sector spanned by
|N-n, n>.  Everything here is an explicit function of lambda*t.

Amplitudes are computed as cos^(N-n) * sin^n (with the binomial square
root), never via tan^n, so lambda*t = pi/2 is perfectly regular.

Note on phases: the amplitudes here carry only the global phase
exp(-i N omega t).  Generic evolution under a^dag b + a b^dag attaches an
extra (-i)^n to the n-th amplitude; that relative phase drops out of every
quantity computed from this module (|amplitude|, photon numbers, Y, the
reduced spectrum and the entropy), and the brute-force Fock comparison is
therefore done on magnitudes.
"""

import numpy as np
from scipy.special import gammaln, xlogy


def _log_binomial(n, k):
    return gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)


def binomial_state(params, t):
    """Amplitudes of exp(-iHt)|N,0> over the basis |N-n, n>, n = 0..N.

    Returns a complex array of length N+1.
    """
    n_total = params.n_initial
    n = np.arange(n_total + 1)
    phase = np.exp(-1j * n_total * params.omega * t)
    c, s = np.cos(params.lam * t), np.sin(params.lam * t)
    # sign-safe even for negative cos/sin: powers of possibly negative reals
    magnitude = np.exp(0.5 * _log_binomial(n_total, n))
    amps = phase * magnitude * c ** (n_total - n) * s ** n
    return amps.astype(complex)


def photon_numbers(params, t):
    """Mean photon numbers (a-mode, b-mode); their sum is exactly N."""
    n_total = params.n_initial
    c2 = np.cos(params.lam * t) ** 2
    return n_total * c2, n_total * (1.0 - c2)


def covariance_measure_closed(n_total, lam, t):
    """Covariance entanglement measure Y of the evolved |N,0>, closed form."""
    c2 = np.cos(lam * t) ** 2
    s2 = 1.0 - c2
    num = n_total * np.abs(np.sin(2.0 * lam * t))
    den = 2.0 * np.sqrt(2.0 * (n_total * c2 + 0.5) * (n_total * s2 + 0.5))
    return num / den


def state_moments(amplitudes):
    """First and second moments of a state in the fixed-N sector.

    Returns a dict with <a>, <b>, <ab>, <ab^dag>, <a^dag a>, <b^dag b>.
    Operators that change the total photon number have zero expectation
    inside the sector.
    """
    amps = np.asarray(amplitudes, dtype=complex)
    n_total = len(amps) - 1
    n = np.arange(n_total + 1)
    prob = np.abs(amps) ** 2
    # a b^dag |N-n, n>  ->  sqrt((N-n)(n+1)) |N-n-1, n+1>
    hop = np.sqrt((n_total - n[:-1]) * (n[:-1] + 1.0))
    exp_abdag = np.sum(np.conj(amps[1:]) * amps[:-1] * hop)
    return {
        "mean_a": 0.0 + 0.0j,
        "mean_b": 0.0 + 0.0j,
        "exp_ab": 0.0 + 0.0j,
        "exp_abdag": exp_abdag,
        "mean_na": float(np.sum(prob * (n_total - n))),
        "mean_nb": float(np.sum(prob * n)),
    }


def covariance_measure_from_state(amplitudes):
    """Y computed directly from sector amplitudes (must match the closed form)."""
    amps = np.asarray(amplitudes, dtype=complex)
    norm = np.sum(np.abs(amps) ** 2)
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"state not normalized: |psi|^2 = {norm!r}")
    m = state_moments(amps)
    cov_abdag = m["exp_abdag"] - m["mean_a"] * np.conj(m["mean_b"])
    cov_ab = m["exp_ab"] - m["mean_a"] * m["mean_b"]
    num = abs(cov_abdag) ** 2 + abs(cov_ab) ** 2
    den = 2.0 * (m["mean_na"] + 0.5) * (m["mean_nb"] + 0.5)
    return float(np.sqrt(num / den))


def reduced_spectrum(params, t):
    """Eigenvalues p_n of the a-mode reduced density matrix (coefficient of |N-n><N-n|)."""
    n_total = params.n_initial
    n = np.arange(n_total + 1)
    c2 = np.cos(params.lam * t) ** 2
    s2 = 1.0 - c2
    log_p = _log_binomial(n_total, n)
    # p_n = C(N,n) cos^(2(N-n)) sin^(2n); handle c2 or s2 = 0 via xlogy
    log_p = log_p + xlogy(n_total - n, c2) + xlogy(n, s2)
    p = np.where(np.isneginf(log_p), 0.0, np.exp(log_p))
    return p


def entropy(probabilities):
    """von Neumann entropy in bits, with 0 log 0 = 0."""
    p = np.asarray(probabilities, dtype=float)
    return float(-np.sum(xlogy(p, p)) / np.log(2.0))
