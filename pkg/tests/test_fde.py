import numpy as np
import pytest
from pydantic import ValidationError

from fracver.core.errors import (
    ConstraintViolationError,
    DegenerateSystemError,
    DomainError,
    MissingDerivativeError,
    NonConvergenceError,
)
from fracver.numerics.fde import (
    reduce_abc_to_caputo,
    reduce_cf_to_integer,
    residual_check,
    solve,
    solve_caputo,
    solve_pseudo,
)
from fracver.numerics.specfun import gamma, mittag_leffler_array
from fracver.schemas.fde import FDEProblem
from fracver.schemas.grid import Grid, SampledFunction
from fracver.schemas.kernel import CFExp, PowerLaw
from fracver.schemas.operator import OperatorKind
from fracver.testfunctions import named_rhs


def _problem(kind, g, y0, grid, alpha=0.5, **extra):
    return FDEProblem(kind=kind, alpha=alpha, g=g, y0=y0, grid=grid, **extra)


def _one(t, y):
    return 1.0


def _decay(t, y):
    return -y


def test_caputo_relaxation_follows_mittag_leffler():
    grid = Grid(T=1.0, N=1024)
    problem = _problem(OperatorKind.CAPUTO_DERIVATIVE, _decay, y0=1.0, grid=grid)
    y = solve_caputo(problem)
    exact = mittag_leffler_array(0.5, 1.0, -grid.nodes ** 0.5)
    assert y.values[0] == 1.0
    assert np.max(np.abs(y.values - exact)) < 1e-2


def test_cf_pseudo_solution_of_constant_forcing(unit_grid):
    problem = _problem(OperatorKind.CF_DERIVATIVE, _one, y0=0.0, grid=unit_grid, alpha=0.4)
    y = solve_pseudo(problem)
    # y = I_CF 1 = (1 − α) + α t, discontinu en 0
    assert np.allclose(y.values, 0.6 + 0.4 * unit_grid.nodes, rtol=1e-12, atol=1e-14)


def test_cf_pseudo_solution_misses_the_equation_by_the_predicted_defect(unit_grid):
    problem = _problem(OperatorKind.CF_DERIVATIVE, _one, y0=0.0, grid=unit_grid, alpha=0.4)
    report = residual_check(problem, solve_pseudo(problem))
    W = 0.4 / 0.6
    t = unit_grid.nodes
    assert np.allclose(report.predicted_defect.values, -np.exp(-W * t))
    assert report.max_mismatch < 1e-9
    assert np.max(report.relative_mismatch) < 1e-8
    # le défaut ne s'annule pas près de 0
    assert abs(report.residual.values[1]) > 0.9


def test_residual_check_requires_matching_grid(unit_grid):
    problem = _problem(OperatorKind.CF_DERIVATIVE, _one, y0=0.0, grid=unit_grid)
    other = SampledFunction(grid=Grid(T=1.0, N=128), values=np.zeros(129))
    with pytest.raises(DomainError):
        residual_check(problem, other)


def test_reductions_require_vanishing_initial_forcing(unit_grid):
    for kind, reduce in ((OperatorKind.CF_DERIVATIVE, reduce_cf_to_integer),
                         (OperatorKind.ABC_DERIVATIVE, reduce_abc_to_caputo)):
        problem = _problem(kind, _one, y0=0.0, grid=unit_grid, g_t=_one, g_y=_one)
        with pytest.raises(ConstraintViolationError):
            reduce(problem)


def test_cf_reduction_needs_partial_derivatives(unit_grid):
    g, _, _ = named_rhs("sin-y")
    problem = _problem(OperatorKind.CF_DERIVATIVE, g, y0=1.0, grid=unit_grid)
    with pytest.raises(MissingDerivativeError):
        reduce_cf_to_integer(problem)


def test_cf_reduction_detects_degenerate_factor(unit_grid):
    alpha, M = 0.5, 2.0
    slope = M / (1 - alpha)
    problem = _problem(
        OperatorKind.CF_DERIVATIVE, lambda t, y: slope * y, y0=0.0, grid=unit_grid, alpha=alpha, M=M,
        g_t=lambda t, y: 0.0, g_y=lambda t, y: slope,
    )
    with pytest.raises(DegenerateSystemError):
        reduce_cf_to_integer(problem)


def test_stiff_forcing_does_not_converge(unit_grid):
    problem = _problem(OperatorKind.CF_DERIVATIVE, lambda t, y: 1e6 * y, y0=1.0, grid=unit_grid)
    with pytest.raises(NonConvergenceError):
        solve(problem)


def test_problem_validation(unit_grid):
    with pytest.raises(ValidationError):
        _problem(OperatorKind.RL_DERIVATIVE, _one, y0=0.0, grid=unit_grid)
    with pytest.raises(ValidationError):
        _problem(OperatorKind.GENERIC_DPHI, _one, y0=0.0, grid=unit_grid)
    with pytest.raises(ValidationError):
        _problem(OperatorKind.CAPUTO_DERIVATIVE, _one, y0=0.0, grid=unit_grid, alpha=1.0)


def test_pseudo_solution_agrees_with_integer_reduction(fine_grid):
    g, g_t, g_y = named_rhs("sin-y")
    problem = _problem(OperatorKind.CF_DERIVATIVE, g, y0=1.0, grid=fine_grid, g_t=g_t, g_y=g_y)
    pseudo = solve(problem)
    reduced = reduce_cf_to_integer(problem)
    assert np.max(np.abs(pseudo.values - reduced.values)) < 1e-4


def test_pseudo_solution_agrees_with_caputo_reduction(fine_grid):
    g, g_t, g_y = named_rhs("sin-y")
    problem = _problem(OperatorKind.ABC_DERIVATIVE, g, y0=1.0, grid=fine_grid, g_t=g_t, g_y=g_y)
    pseudo = solve(problem)
    reduced = reduce_abc_to_caputo(problem)
    assert np.max(np.abs(pseudo.values - reduced.values)) < 1e-3


def test_generic_solver_uses_sonine_partner(unit_grid):
    caputo = _problem(OperatorKind.CAPUTO_DERIVATIVE, _decay, y0=1.0, grid=unit_grid)
    generic = _problem(OperatorKind.GENERIC_DPHI, _decay, y0=1.0, grid=unit_grid,
                       kernel=PowerLaw(mu=0.5))
    assert np.allclose(solve(generic).values, solve(caputo).values, rtol=1e-13, atol=1e-15)


def test_generic_solver_with_cf_kernel_is_pseudo_solution(unit_grid):
    named = _problem(OperatorKind.CF_DERIVATIVE, _decay, y0=1.0, grid=unit_grid, alpha=0.3, M=2.0)
    generic = _problem(OperatorKind.GENERIC_DPHI, _decay, y0=1.0, grid=unit_grid, alpha=0.3,
                       kernel=CFExp(alpha=0.3, M=2.0))
    assert np.allclose(solve(generic).values, solve(named).values, rtol=1e-12, atol=1e-14)




def test_caputo_solution_satisfies_its_equation():
    grid = Grid(T=1.0, N=2048)
    problem = _problem(OperatorKind.CAPUTO_DERIVATIVE, _decay, y0=1.0, grid=grid)
    report = residual_check(problem, solve_caputo(problem))
    assert report.residual.values[0] == 0.0
    assert np.max(np.abs(report.residual.values)) <= 5e-3
    assert np.all(report.predicted_defect.values == 0.0)


def test_singular_generic_solution_satisfies_its_equation(unit_grid):
    kernel = PowerLaw(mu=0.3)
    problem = _problem(OperatorKind.GENERIC_DPHI, _decay, y0=1.0, grid=unit_grid, kernel=kernel)
    report = residual_check(problem, solve(problem))
    assert report.max_mismatch <= 5e-3


def test_caputo_residual_of_exact_power_is_small(unit_grid):
    # y = t², D^½ y = 2·t^{3/2}/Γ(5/2)
    problem = _problem(OperatorKind.CAPUTO_DERIVATIVE, lambda t, y: 2.0 * t ** 1.5 / gamma(2.5),
                       y0=0.0, grid=unit_grid)
    exact = SampledFunction(grid=unit_grid, values=unit_grid.nodes ** 2)
    report = residual_check(problem, exact)
    assert np.max(np.abs(report.residual.values)) < 1e-2
