import math

import numpy as np
import pytest

from fracver.core.errors import DomainError
from fracver.numerics.glcalc import gl_coefficients, gl_derivative
from fracver.schemas.glcalc import ExtensionKind
from fracver.schemas.grid import Grid
from fracver.testfunctions import LINEAR, SIN, constant, power


def test_first_coefficients():
    omega = gl_coefficients(0.3, 4).omega
    assert omega[0] == 1.0
    assert omega[1] == pytest.approx(-0.3)
    assert omega[2] == pytest.approx(0.3 * (0.3 - 1.0) / 2.0)
    assert omega.shape == (5,)


def test_integer_order_is_backward_difference():
    assert np.array_equal(gl_coefficients(1.0, 5).omega, [1.0, -1.0, 0.0, 0.0, 0.0, 0.0])


def test_partial_sums_decrease_towards_zero():
    partial = np.cumsum(gl_coefficients(0.5, 2000).omega)
    assert np.all(np.diff(partial) < 0)
    assert 0.0 < partial[-1] < 0.02


@pytest.mark.parametrize("alpha,N", [(0.0, 4), (1.2, 4), (0.5, -1)])
def test_coefficient_arguments(alpha, N):
    with pytest.raises(DomainError):
        gl_coefficients(alpha, N)


def test_derivative_rejects_integer_order(unit_grid):
    with pytest.raises(DomainError):
        gl_derivative(1.0, LINEAR, unit_grid)


def test_taylor_extension_ignores_constants(unit_grid):
    out = gl_derivative(0.5, constant(4.0), unit_grid, ext=ExtensionKind.TAYLOR)
    assert np.all(out.values == 0.0)


def test_zero_extension_of_constant_approaches_rl_derivative():
    grid = Grid(T=1.0, N=1024)
    out = gl_derivative(0.5, constant(1.0), grid, ext=ExtensionKind.ZERO)
    # D_RL 1 = t^(−1/2)/Γ(1/2)
    assert out.values[-1] == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-3)


def test_first_order_convergence_to_caputo():
    exact = 2.0 / math.sqrt(math.pi)
    errors = [abs(gl_derivative(0.5, LINEAR, Grid(T=1.0, N=N)).values[-1] - exact) for N in (256, 512, 1024)]
    orders = [math.log2(errors[i] / errors[i + 1]) for i in range(2)]
    assert all(0.8 <= order <= 1.2 for order in orders)


@pytest.mark.parametrize("f", [SIN, LINEAR, power(1.5)], ids=["sin", "linear", "t1.5"])
def test_extensions_agree_when_f_vanishes_at_zero(f, unit_grid):
    zero = gl_derivative(0.5, f, unit_grid, ext=ExtensionKind.ZERO)
    taylor = gl_derivative(0.5, f, unit_grid, ext=ExtensionKind.TAYLOR)
    assert np.array_equal(zero.values, taylor.values)
