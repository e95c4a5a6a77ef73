import math

import numpy as np
import pytest

from cavityent.params import (
    ModelParams,
    to_physical_time,
    to_scaled_time,
    validate,
    violations,
)


def test_zero_scaled_time_is_zero():
    assert to_physical_time(0.0, ModelParams(lam=0.3)) == 0.0


def test_scaled_unit_is_pi_over_lambda():
    assert to_physical_time(1.0, ModelParams(lam=0.1)) == pytest.approx(10 * math.pi)


def test_first_peak_instant():
    # scaled time 0.25 at lambda = 0.1 lands on lambda*t = pi/4
    t = to_physical_time(0.25, ModelParams(lam=0.1))
    assert 0.1 * t == pytest.approx(math.pi / 4, abs=1e-15)


def test_uncoupled_cavities_rejected():
    with pytest.raises(ValueError, match="uncoupled"):
        to_physical_time(1.0, ModelParams(lam=0.0))
    with pytest.raises(ValueError, match="uncoupled"):
        to_scaled_time(1.0, ModelParams(lam=0.0))


def test_round_trip_across_lambda_range():
    rng = np.random.default_rng(3)
    for lam in 10 ** rng.uniform(-4, 0, size=200):
        p = ModelParams(lam=float(lam))
        t = float(rng.uniform(0, 100))
        assert to_physical_time(to_scaled_time(t, p), p) == pytest.approx(t, rel=1e-14)


def test_reference_parameter_sets_are_valid():
    validate(ModelParams(1.0, 0.1, 0.1, 5))
    validate(ModelParams(1.0, 0.001, 0.3, 5))


def test_invalid_parameters_are_all_named():
    bad = ModelParams(omega=0.0, lam=float("nan"), epsilon=1.0, n_initial=-2)
    problems = violations(bad)
    assert len(problems) == 3
    joined = " ".join(problems)
    assert "omega" in joined and "lam" in joined and "n_initial" in joined
    with pytest.raises(ValueError):
        validate(bad)


def test_validate_returns_params_unchanged():
    p = ModelParams(1.0, 0.1, 0.1, 5)
    assert validate(p) is p
