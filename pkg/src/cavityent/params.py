"""Model parameters and scaled-time conventions for the coupled-cavity system.

All quantities are in dimensionless (scaled) units.  Time is often quoted
in units of pi/lambda, the period of the pump-free photon exchange between
the two cavities.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ModelParams:
    """Physical constants of the two coupled single-mode cavities.

    omega     -- angular frequency common to both modes
    lam       -- cavity-cavity photon hopping strength
    epsilon   -- quadratic (two-photon) pump amplitude, real
    n_initial -- photon number N of the a-mode at t = 0 (b-mode in vacuum)
    """

    omega: float = 1.0
    lam: float = 0.1
    epsilon: float = 0.0
    n_initial: int = 5

    def with_epsilon(self, epsilon):
        return ModelParams(self.omega, self.lam, float(epsilon), self.n_initial)


def violations(params):
    """List every violated parameter invariant; empty list means valid."""
    problems = []
    for name in ("omega", "lam", "epsilon"):
        value = getattr(params, name)
        if not isinstance(value, (int, float)) or not math.isfinite(value):
            problems.append(f"{name} must be a finite real number")
    if isinstance(params.omega, (int, float)) and math.isfinite(params.omega):
        if params.omega <= 0:
            problems.append("omega must be positive")
    n = params.n_initial
    if not isinstance(n, int) or isinstance(n, bool):
        problems.append("n_initial must be an integer")
    elif n < 0:
        problems.append("n_initial must be non-negative")
    return problems


def validate(params):
    """Return params unchanged if valid, else raise ValueError naming each problem."""
    problems = violations(params)
    if problems:
        raise ValueError("invalid parameters: " + "; ".join(problems))
    return params


def to_physical_time(s, params):
    """Convert scaled time (units of pi/lambda) to physical time."""
    if params.lam == 0:
        raise ValueError("scaled time undefined for uncoupled cavities")
    return s * math.pi / params.lam


def to_scaled_time(t, params):
    """Convert physical time to scaled time (units of pi/lambda)."""
    if params.lam == 0:
        raise ValueError("scaled time undefined for uncoupled cavities")
    return t * params.lam / math.pi
