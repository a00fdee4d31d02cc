import math

import numpy as np
import pytest

from fracver.core.errors import DomainError
from fracver.routers.common import OutputFormat, write_sampled
from fracver.schemas.grid import AnalyticFunction, Grid, SampledFunction
from fracver.schemas.kernel import ABML, CFExp, PowerLaw, PrabhakarK, Tabulated
from fracver.testfunctions import (
    COS,
    named_function,
    named_profile,
    named_rhs,
    parse_kernel,
    power,
)


def test_named_functions():
    assert named_function("cos") is COS
    assert named_function("const")(np.array([0.3]))[0] == 1.0
    assert named_function("const:2.5")(np.array([0.3]))[0] == 2.5
    f = named_function("power:1.5")
    assert isinstance(f, AnalyticFunction)
    assert f.derivative(np.array([4.0]))[0] == pytest.approx(3.0)
    assert named_function("power:0")(np.array([2.0]))[0] == 1.0


def test_csv_function(tmp_path):
    grid = Grid(T=1.0, N=4)
    path = tmp_path / "f.csv"
    write_sampled(COS.sample(grid), OutputFormat.CSV, path)
    f = named_function(f"csv:{path}")
    assert isinstance(f, SampledFunction)
    assert f.grid == grid


@pytest.mark.parametrize("selector", ["nope", "power", "power:a", "power:-1", "const:1:2", "cos:1"])
def test_bad_function_selectors(selector):
    with pytest.raises(DomainError):
        named_function(selector)


def test_power_rejects_negative_exponent():
    with pytest.raises(DomainError):
        power(-0.5)


def test_kernel_selectors():
    assert parse_kernel("power:0.5") == PowerLaw(mu=0.5)
    assert parse_kernel("cf:0.3") == CFExp(alpha=0.3)
    assert parse_kernel("cf:0.3:2") == CFExp(alpha=0.3, M=2.0)
    assert parse_kernel("abc:0.6:1.5") == ABML(alpha=0.6, B=1.5)
    assert parse_kernel("prabhakar:0.5:0.5:1:-1") == PrabhakarK(alpha=0.5, beta=0.5, gamma_p=1.0, lam=-1.0)


def test_tabulated_kernel_selector(tmp_path):
    grid = Grid(T=1.0, N=4)
    path = tmp_path / "k.csv"
    write_sampled(SampledFunction(grid=grid, values=np.exp(-grid.nodes)), OutputFormat.CSV, path)
    kernel = parse_kernel(f"csv:{path}")
    assert isinstance(kernel, Tabulated)
    assert kernel.is_bounded


@pytest.mark.parametrize("selector", ["gauss:1", "cf", "cf:0.3:1:1", "prabhakar:0.5:0.5", "csv:"])
def test_bad_kernel_selectors(selector):
    with pytest.raises(DomainError):
        parse_kernel(selector)


def test_right_hand_sides():
    g, g_t, g_y = named_rhs("const:3")
    assert (g(1.0, 5.0), g_t(1.0, 5.0), g_y(1.0, 5.0)) == (3.0, 0.0, 0.0)
    g, _, g_y = named_rhs("decay:2")
    assert g(0.0, 1.5) == -3.0 and g_y(0.0, 1.5) == -2.0
    g, g_t, g_y = named_rhs("sin-y")
    assert g(0.0, 7.0) == 0.0
    assert g_t(0.0, 2.0) == 2.0
    assert g_y(math.pi / 2, 0.0) == pytest.approx(1.0)
    g, g_t, _ = named_rhs("cos")
    assert g(0.0, 9.0) == 1.0 and g_t(0.0, 9.0) == 0.0


@pytest.mark.parametrize("selector", ["decay", "sin-y:1", "exp", "const:a"])
def test_bad_rhs_selectors(selector):
    with pytest.raises(DomainError):
        named_rhs(selector)


def test_profiles():
    x = np.array([0.0, 0.5, 1.0])
    assert np.allclose(named_profile("sin")(x), [0.0, 1.0, 0.0], atol=1e-15)
    assert np.allclose(named_profile("sin:2")(x), [0.0, 2.0, 0.0], atol=1e-15)
    assert np.array_equal(named_profile("bump")(x), [0.0, 0.25, 0.0])
    assert np.array_equal(named_profile("zero")(x), np.zeros(3))
    with pytest.raises(DomainError):
        named_profile("square")
