import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from fracver.core.errors import DomainError, PoleError
from fracver.numerics import specfun
from fracver.numerics.specfun import (
    ab_normalization,
    gamma,
    mittag_leffler,
    mittag_leffler_array,
    ml_laplace,
    prabhakar_ml,
    prabhakar_ml_array,
    rgamma,
)
from fracver.schemas.specfun import MLPolicy
from tests.oracles import ml_series_oracle


def test_gamma_values():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gamma(5.0) == pytest.approx(24.0, rel=1e-14)
    assert gamma(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-14)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma(x)
    assert rgamma(x) == 0.0


def test_ab_normalization_endpoints():
    assert ab_normalization(1.0) == pytest.approx(1.0)
    assert ab_normalization(0.5) == pytest.approx(0.5 + 0.5 / math.sqrt(math.pi))


def test_mittag_leffler_reference_values():
    assert mittag_leffler(1, 1, 1) == pytest.approx(math.e, rel=1e-14)
    assert mittag_leffler(0.7, 2, 0) == 1.0
    # E_{1/2}(z) = exp(z²)·erfc(−z)
    assert mittag_leffler(0.5, 1, -1) == pytest.approx(math.e * math.erfc(1.0), abs=1e-12)
    assert mittag_leffler(1, 2, 1) == pytest.approx(math.e - 1.0, rel=1e-14)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8, 1.0])
@pytest.mark.parametrize("beta", [1.0, 2.0])
def test_mittag_leffler_against_extended_series(alpha, beta):
    for z in np.linspace(-5.0, 5.0, 51):
        reference = ml_series_oracle(alpha, beta, float(z))
        value = mittag_leffler(alpha, beta, float(z))
        assert abs(value - reference) <= 1e-10 * max(1.0, abs(reference)), (alpha, beta, z)


def test_mittag_leffler_one_is_exp():
    z = np.linspace(-30.0, 30.0, 121)
    values = np.array([mittag_leffler(1.0, 1.0, float(x)) for x in z])
    assert np.allclose(values, np.exp(z), rtol=1e-12, atol=1e-12)


def test_mittag_leffler_half_matches_erfcx_far_on_negative_axis():
    # E_{1/2}(−x) = erfcx(x), décroît comme 1/(x√π)
    for x in (10.0, 49.0, 60.0, 200.0):
        assert mittag_leffler(0.5, 1.0, -x) == pytest.approx(float(special.erfcx(x)), rel=1e-9)


def test_mittag_leffler_rejects_bad_alpha():
    with pytest.raises(DomainError):
        mittag_leffler(0.0, 1.0, 0.5)


@settings(max_examples=60, deadline=None)
@given(
    alpha=st.floats(min_value=0.2, max_value=1.0),
    beta=st.floats(min_value=0.5, max_value=2.0),
    z=st.floats(min_value=-5.0, max_value=5.0),
)
def test_prabhakar_with_unit_gamma_is_two_parameter(alpha, beta, z):
    assert prabhakar_ml(alpha, beta, 1.0, z) == pytest.approx(mittag_leffler(alpha, beta, z), rel=1e-12, abs=1e-12)


def test_prabhakar_reference_values():
    assert prabhakar_ml(0.5, 1, 1, -1) == pytest.approx(mittag_leffler(0.5, 1, -1), abs=1e-12)
    # γ = 0 : seul le terme k = 0 reste
    assert prabhakar_ml(0.5, 0.5, 0.0, -3.0) == pytest.approx(1.0 / math.sqrt(math.pi))
    for z in (-2.0, -0.5, 0.7):
        assert prabhakar_ml(0.5, 0.5, 0.5, z) == pytest.approx(ml_series_oracle(0.5, 0.5, z, 0.5), abs=1e-10)


def test_array_versions_match_scalar():
    z = np.linspace(-4.0, 2.0, 25)
    array = mittag_leffler_array(0.6, 1.3, z)
    scalar = np.array([mittag_leffler(0.6, 1.3, float(x)) for x in z])
    assert np.allclose(array, scalar, rtol=1e-12, atol=1e-13)
    array = prabhakar_ml_array(0.5, 0.5, -0.5, z)
    scalar = np.array([prabhakar_ml(0.5, 0.5, -0.5, float(x)) for x in z])
    assert np.allclose(array, scalar, rtol=1e-11, atol=1e-12)


def test_ml_laplace_of_relaxation():
    # L[E_α(−t^α)](s) = s^(α−1)/(s^α + 1)
    s = np.array([0.5, 2.0, 10.0])
    assert np.allclose(ml_laplace(0.5, 1.0, 1.0, s), s ** -0.5 / (s ** 0.5 + 1.0))


@settings(max_examples=60, deadline=None)
@given(
    alpha=st.floats(min_value=0.2, max_value=1.0),
    beta=st.floats(min_value=0.5, max_value=2.0),
    z=st.floats(min_value=-5.0, max_value=5.0),
)
def test_mittag_leffler_beta_recurrence(alpha, beta, z):
    # E_{α,β}(z) = z·E_{α,α+β}(z) + 1/Γ(β)
    shifted = z * mittag_leffler(alpha, alpha + beta, z)
    left = mittag_leffler(alpha, beta, z)
    scale = max(1.0, abs(left), abs(shifted))
    assert abs(left - shifted - rgamma(beta)) <= 1e-9 * scale


@settings(max_examples=25, deadline=None)
@given(alpha=st.floats(min_value=0.1, max_value=0.95))
def test_mittag_leffler_decreases_on_negative_axis(alpha):
    x = np.linspace(0.0, 20.0, 41)
    values = mittag_leffler_array(alpha, 1.0, -x)
    assert values[0] == 1.0
    assert np.all(np.diff(values) < 0.0)
    assert np.all((values > 0.0) & (values <= 1.0))


def test_series_radius_bounds_the_series_path(monkeypatch):
    seen = []
    original = specfun._ml_series

    def recording(alpha, beta, z, *args, **kwargs):
        seen.append(z)
        return original(alpha, beta, z, *args, **kwargs)

    monkeypatch.setattr(specfun, "_ml_series", recording)
    expected = ml_series_oracle(0.9, 1.0, -2.0)
    assert mittag_leffler(0.9, 1.0, -2.0) == pytest.approx(expected, rel=1e-12)
    assert seen == [-2.0]
    narrow = MLPolicy(series_radius=1.0)
    assert mittag_leffler(0.9, 1.0, -2.0, narrow) == pytest.approx(expected, rel=1e-9)
    assert mittag_leffler(0.9, 1.0, -0.5, narrow) == pytest.approx(ml_series_oracle(0.9, 1.0, -0.5), rel=1e-12)
    assert seen == [-2.0, -0.5]
