"""Pumped Heisenberg-picture dynamics of the operator vector (a, b, a^dag, b^dag).

The linear Heisenberg equations i dv/dt = M v are solved by the 4x4
propagator S(t) = exp(-i t M).  S is built by the Cayley-Hamilton cubic
in M whenever the spectrum {+-alpha, +-gamma} is non-degenerate, and by a
dense matrix exponential otherwise.  The quadratic congruence
G(t) = S G(0) S^T transports the second moments of |N,0> and is the
authoritative route to the covariance measure; the published structure-
function formulas for the same moments are kept as an audit, not trusted.

Sign convention for the Cayley-Hamilton coefficients: c0 and c1 here are
rederived from the four interpolation conditions
c0 + c1 th + c2 th^2 + c3 th^3 = exp(-i th t), th in {+-alpha, +-gamma};
the variant with both signs flipped (see printed_ch_coefficients) gives
exp(0) = -I and is retained only for the audit.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

SIGMA = np.diag([1.0, 1.0, -1.0, -1.0])

DEGENERACY_TOL = 1e-10


class DegenerateSpectrumError(RuntimeError):
    """Cayley-Hamilton denominators vanish; caller must use the dense path."""


@dataclass(frozen=True)
class SpectralData:
    A: float
    B: complex       # real and >= 0 for all real couplings of interest
    alpha: complex   # sqrt(A - 2B); imaginary in the parametrically unstable regime
    gamma: complex   # sqrt(A + 2B)
    unstable: bool


@dataclass(frozen=True)
class StructureFunctions:
    u: complex
    v: complex
    w: complex
    x: complex
    y_coef: complex
    z_coef: complex


@dataclass(frozen=True)
class MomentSet:
    cov_ab: complex
    cov_ab_dagger: complex
    mean_na: float
    mean_nb: float


def build_matrix(params):
    """Coefficient matrix M of i d/dt (a, b, a^dag, b^dag) = M (...)."""
    w, l, e = params.omega, params.lam, params.epsilon
    return np.array(
        [
            [w, l, 2.0 * e, 0.0],
            [l, w, 0.0, 0.0],
            [-2.0 * e, 0.0, -w, -l],
            [0.0, 0.0, -l, -w],
        ],
        dtype=complex,
    )


def spectral(params, verify=True):
    """Eigenvalue data {A, B, alpha, gamma} of M for real epsilon.

    The four eigenvalues of M are +-alpha and +-gamma.  A - 2B < 0 marks
    the parametrically unstable regime (alpha imaginary, exponential
    growth); it is flagged, not an error.
    """
    w, l, e = params.omega, params.lam, params.epsilon
    a_val = w * w + l * l - 2.0 * e * e
    radicand = w * w * l * l - l * l * e * e + e ** 4
    b_val = math.sqrt(radicand) if radicand >= 0 else complex(0.0, math.sqrt(-radicand))
    alpha = np.sqrt(complex(a_val - 2.0 * b_val))
    gamma = np.sqrt(complex(a_val + 2.0 * b_val))
    unstable = (a_val - 2.0 * b_val).real < 0
    if verify:
        m = build_matrix(params)
        scale = max(1.0, abs(alpha), abs(gamma)) ** 4
        for theta in (alpha, -alpha, gamma, -gamma):
            det = np.linalg.det(m - theta * np.eye(4))
            if abs(det) > 1e-8 * scale:
                raise AssertionError(
                    f"{theta!r} is not an eigenvalue of M (det = {det!r})"
                )
    return SpectralData(a_val, b_val, alpha, gamma, unstable)


def _sinc_scaled(theta, t):
    # sin(theta t)/theta; theta bounded away from 0 by the degeneracy guard
    return np.sin(theta * t) / theta


def ch_coefficients(spec_data, t):
    """Cayley-Hamilton coefficients (c0, c1, c2, c3) of exp(-i t M).

    t may be a scalar or an array; the coefficient index is the last axis.
    Raises DegenerateSpectrumError when 4B or alpha is too small for the
    interpolation denominators.
    """
    four_b = 4.0 * spec_data.B
    if abs(four_b) < DEGENERACY_TOL or abs(spec_data.alpha) < DEGENERACY_TOL:
        raise DegenerateSpectrumError(
            f"degenerate spectrum: 4B = {four_b!r}, alpha = {spec_data.alpha!r}"
        )
    t = np.asarray(t, dtype=float)
    al, ga = spec_data.alpha, spec_data.gamma
    sa = _sinc_scaled(al, t)
    sg = _sinc_scaled(ga, t)
    ca = np.cos(al * t)
    cg = np.cos(ga * t)
    c0 = (ga ** 2 * ca - al ** 2 * cg) / four_b
    c1 = -1j * (ga ** 2 * sa - al ** 2 * sg) / four_b
    c2 = (cg - ca) / four_b
    c3 = 1j * (sa - sg) / four_b
    return np.stack(np.broadcast_arrays(c0, c1, c2, c3), axis=-1)


def printed_ch_coefficients(spec_data, t):
    """Coefficients with the published signs on the I and M terms (audit only)."""
    c = ch_coefficients(spec_data, t)
    c = c.copy()
    c[..., 0] *= -1.0
    c[..., 1] *= -1.0
    return c


def _matrix_powers(m):
    m2 = m @ m
    return np.stack([np.eye(4, dtype=complex), m, m2, m2 @ m])


def propagator(params, t):
    """S(t) = exp(-i t M): Cayley-Hamilton path with dense-expm fallback."""
    m = build_matrix(params)
    try:
        c = ch_coefficients(spectral(params, verify=False), t)
    except DegenerateSpectrumError:
        return expm(-1j * t * m)
    return np.einsum("k,kij->ij", c, _matrix_powers(m))


def propagators(params, times):
    """Vectorized S(t) over a time array; shape (len(times), 4, 4)."""
    times = np.asarray(times, dtype=float)
    m = build_matrix(params)
    try:
        c = ch_coefficients(spectral(params, verify=False), times)
    except DegenerateSpectrumError:
        return np.stack([expm(-1j * t * m) for t in times])
    return np.einsum("tk,kij->tij", c, _matrix_powers(m))


def structure_functions(params, t, sign_omega=1, sign_lambda=1):
    """The six published polynomials in c0..c3, at signed arguments.

    The signs substitute omega -> sign_omega*omega, lambda -> sign_lambda*lambda
    as the published subscripts indicate; the coefficients themselves only
    depend on omega^2 and lambda^2 and are sign-invariant.
    """
    sd = spectral(params, verify=False)
    c0, c1, c2, c3 = ch_coefficients(sd, t)
    w = sign_omega * params.omega
    l = sign_lambda * params.lam
    e = params.epsilon
    a_val = sd.A
    return StructureFunctions(
        u=c0 + w * c1 + (a_val - 2.0 * e * e) * c2 + w * (2.0 * l * l - 2.0 * e * e + a_val) * c3,
        v=l * c1 + 2.0 * l * w * c2 + l * (2.0 * w * w - 2.0 * e * e + a_val) * c3,
        w=2.0 * e * c1 + 2.0 * e * (l * l + a_val) * c3,
        x=c0 + w * c1 + (l * l + w * w) * c2 + w * (3.0 * l * l + w * w) * c3,
        y_coef=2.0 * e * (l * c2 + w * c3),
        z_coef=-2.0 * l * l * e * c3,
    )


def initial_moments(n_initial):
    """Second-moment matrix <v_i v_j> of |N,0> over v = (a, b, a^dag, b^dag)."""
    g = np.zeros((4, 4), dtype=complex)
    g[0, 2] = n_initial + 1.0   # <a a^dag>
    g[1, 3] = 1.0               # <b b^dag>
    g[2, 0] = float(n_initial)  # <a^dag a>
    return g


def transported_moment_arrays(params, times):
    """(cov_ab, cov_ab_dagger, mean_na, mean_nb) arrays over a time grid.

    First moments of |N,0> vanish and stay zero under the homogeneous
    equations, so covariances equal raw second moments.
    """
    s = propagators(params, times)
    g0 = initial_moments(params.n_initial)
    g = np.einsum("tik,kl,tjl->tij", s, g0, s)
    return g[:, 0, 1], g[:, 0, 3], g[:, 2, 0].real, g[:, 3, 1].real


def moments_transport(params, t):
    """Second moments of |N,0> at time t via the propagator congruence."""
    cab, cabd, na, nb = transported_moment_arrays(params, [t])
    return MomentSet(complex(cab[0]), complex(cabd[0]), float(na[0]), float(nb[0]))


def moments_closed_form(params, t):
    """The published moment formulas, evaluated verbatim (audit path).

    Any disagreement with moments_transport is data for the audit report;
    the transport path stays authoritative.
    """
    n = params.n_initial
    f_pp = structure_functions(params, t, +1, +1)
    f_mm = structure_functions(params, t, -1, -1)
    f_mp = structure_functions(params, t, -1, +1)
    cov_ab = (1 + n) * f_pp.x * f_pp.y_coef + n * f_pp.w * f_pp.v + f_pp.v * f_pp.z_coef
    cov_abd = (1 + n) * f_pp.u * f_mm.v + n * f_pp.w * f_mp.y_coef + f_pp.v * f_mm.x
    mean_na = (1 + n) * f_pp.u * f_mm.u - n * f_pp.w ** 2 + f_pp.v * f_mm.v - 1.0
    mean_nb = (1 + n) * f_pp.v * f_mm.v + n * f_pp.y_coef * f_mp.y_coef + f_pp.x * f_mm.x - 1.0
    return MomentSet(complex(cov_ab), complex(cov_abd), complex(mean_na).real, complex(mean_nb).real)


def covariance_measure(moments, vacuum_half=0.5):
    """Entanglement measure Y from a MomentSet.

    vacuum_half rescales the +1/2 vacuum terms; the fluctuation module
    uses it when moments are carried with an extracted scale factor.
    """
    num = abs(moments.cov_ab_dagger) ** 2 + abs(moments.cov_ab) ** 2
    den = 2.0 * (moments.mean_na + vacuum_half) * (moments.mean_nb + vacuum_half)
    return float(np.sqrt(num / den))


def covariance_series(params, times):
    """Y(t) over a time grid via moment transport (vectorized)."""
    cab, cabd, na, nb = transported_moment_arrays(params, times)
    num = np.abs(cabd) ** 2 + np.abs(cab) ** 2
    den = 2.0 * (na + 0.5) * (nb + 0.5)
    return np.sqrt(num / den)


def photon_ratio_series(params, times):
    """|n_a - n_b| / (n_a + n_b) over a time grid."""
    _, _, na, nb = transported_moment_arrays(params, times)
    total = na + nb
    if np.any(total <= 0):
        raise ValueError("photon difference ratio undefined at zero total photons")
    return np.abs(na - nb) / total


def photon_difference_ratio(moments):
    """|n_a - n_b| / (n_a + n_b) for a single MomentSet."""
    total = moments.mean_na + moments.mean_nb
    if total <= 0:
        raise ValueError("photon difference ratio undefined at zero total photons")
    return abs(moments.mean_na - moments.mean_nb) / total


def closed_form_audit(params, times):
    """Deviation of the published moment formulas from the transport path.

    Returns per-quantity maximum absolute deviations over the grid.
    """
    dev = {"cov_ab": 0.0, "cov_ab_dagger": 0.0, "mean_na": 0.0, "mean_nb": 0.0}
    for t in np.asarray(times, dtype=float):
        ref = moments_transport(params, t)
        aud = moments_closed_form(params, t)
        dev["cov_ab"] = max(dev["cov_ab"], abs(aud.cov_ab - ref.cov_ab))
        dev["cov_ab_dagger"] = max(dev["cov_ab_dagger"], abs(aud.cov_ab_dagger - ref.cov_ab_dagger))
        dev["mean_na"] = max(dev["mean_na"], abs(aud.mean_na - ref.mean_na))
        dev["mean_nb"] = max(dev["mean_nb"], abs(aud.mean_nb - ref.mean_nb))
    return dev


def ch_sign_audit(params, times):
    """Max reconstruction error of exp(-itM) for corrected vs published signs."""
    m = build_matrix(params)
    powers = _matrix_powers(m)
    sd = spectral(params, verify=False)
    err = {"corrected": 0.0, "printed": 0.0}
    for t in np.asarray(times, dtype=float):
        exact = expm(-1j * t * m)
        scale = max(1.0, np.abs(exact).max())
        for key, coeffs in (
            ("corrected", ch_coefficients(sd, t)),
            ("printed", printed_ch_coefficients(sd, t)),
        ):
            rebuilt = np.einsum("k,kij->ij", coeffs, powers)
            err[key] = max(err[key], float(np.abs(rebuilt - exact).max() / scale))
    return err
