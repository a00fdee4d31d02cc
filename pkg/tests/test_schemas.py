import numpy as np
import pytest
from pydantic import ValidationError

from fracver.schemas.claim import ClaimReport, Direction
from fracver.schemas.diagnostics import SonineClassification, SonineReport
from fracver.schemas.grid import Grid, SampledFunction
from fracver.schemas.kernel import ABML, CFExp, PowerLaw, PrabhakarK
from fracver.schemas.specfun import MLPolicy


def test_grid():
    grid = Grid(T=2.0, N=4)
    assert grid.h == 0.5
    assert np.array_equal(grid.nodes, [0.0, 0.5, 1.0, 1.5, 2.0])
    assert np.array_equal(grid.midpoints, [0.25, 0.75, 1.25, 1.75])
    with pytest.raises(ValidationError):
        Grid(T=1.0, N=0)
    with pytest.raises(ValidationError):
        Grid(T=0.0, N=4)


def test_sampled_function_lengths():
    grid = Grid(T=1.0, N=4)
    f = SampledFunction(grid=grid, values=[0.0, 1.0, 2.0, 3.0, 4.0])
    assert f.values[2] == 2.0
    with pytest.raises(ValidationError):
        SampledFunction(grid=grid, values=np.zeros(4))
    with pytest.raises(ValidationError):
        SampledFunction(grid=grid, values=np.zeros(5), deriv_values=np.zeros(3))


def test_with_derivative_keeps_warnings():
    f = SampledFunction(grid=Grid(T=1.0, N=2), values=np.zeros(3), warnings=["a"])
    g = f.with_derivative(np.ones(3), warning="b")
    assert g.warnings == ["a", "b"]
    assert f.deriv_values is None
    assert not g.numeric_derivative
    assert f.with_derivative(np.ones(3), numeric=True).numeric_derivative


def test_kernel_parameters():
    assert CFExp(alpha=0.5).W == pytest.approx(1.0)
    assert ABML(alpha=0.75).W == pytest.approx(3.0)
    assert not PowerLaw(mu=0.5).is_bounded and PowerLaw(mu=1.0).is_bounded
    assert not PrabhakarK(alpha=0.5, beta=1.5).is_bounded
    for bad in (dict(alpha=0.0), dict(alpha=1.0), dict(alpha=0.5, M=0.0)):
        with pytest.raises(ValidationError):
            CFExp(**bad)


def test_sonine_report_requires_decreasing_gaps():
    with pytest.raises(ValidationError):
        SonineReport(gaps=[0.1, 1.0], integrals=[1.0, 1.0], classification=SonineClassification.SONINE_PAIR)


def test_ml_policy_radii():
    with pytest.raises(ValidationError):
        MLPolicy(series_radius=60.0, asymptotic_radius=50.0)


def test_claim_report_alias():
    report = ClaimReport(id="x", paper_ref="§1", metric="m", value=0.0, tolerance=1.0,
                         direction=Direction.UPPER, runtime_ms=3, **{"pass": True})
    assert report.passed
    assert report.model_dump(by_alias=True)["pass"] is True
    with pytest.raises(ValidationError):
        ClaimReport(id="x", paper_ref="§1", metric="m", value=0.0, tolerance=1.0,
                    direction=Direction.UPPER, passed=True, runtime_ms=-1)
