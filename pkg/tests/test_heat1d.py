import numpy as np
import pytest
from pydantic import ValidationError

from fracver.numerics.heat1d import (
    INCOMPATIBLE_NOTE,
    UNSATISFIABLE_NOTE,
    first_level_residual,
    initial_slice_residual,
    separation_oracle,
    solve_heat,
)
from fracver.schemas.grid import Grid
from fracver.schemas.heat import HeatProblem
from fracver.schemas.kernel import CFExp, PowerLaw
from fracver.testfunctions import named_profile


def _problem(kernel, v0="sin", x_nodes=64, N=64):
    profile = named_profile(v0) if isinstance(v0, str) else v0
    return HeatProblem(x_nodes=x_nodes, grid=Grid(T=1.0, N=N), kernel=kernel, v0=profile)


def test_problem_needs_three_interior_nodes():
    with pytest.raises(ValidationError):
        _problem(PowerLaw(mu=0.5), x_nodes=2)


def test_initial_slice_residual():
    assert initial_slice_residual(_problem(CFExp(alpha=0.5))) == pytest.approx(np.pi ** 2, rel=1e-3)
    assert initial_slice_residual(_problem(CFExp(alpha=0.5), v0="sin:0.5")) == pytest.approx(
        0.5 * np.pi ** 2, rel=1e-3)
    assert initial_slice_residual(_problem(CFExp(alpha=0.5), v0="zero")) == 0.0


def test_bounded_kernel_with_sine_data_is_unsatisfiable():
    solution = solve_heat(_problem(CFExp(alpha=0.5)))
    assert not solution.satisfiable
    assert UNSATISFIABLE_NOTE in solution.annotations
    # l'équation n'est pas vérifiée dès le premier niveau
    assert solution.per_level_residuals[0] > 1.0


def test_bounded_kernel_with_zero_data_gives_zero_field():
    solution = solve_heat(_problem(CFExp(alpha=0.5), v0="zero"))
    assert solution.satisfiable
    assert solution.annotations == []
    assert np.all(solution.field == 0.0)
    assert np.all(solution.per_level_residuals == 0.0)


def test_first_level_residual_persists_under_refinement():
    assert first_level_residual(_problem(CFExp(alpha=0.5)), 1024) >= 4.9


def test_caputo_kernel_matches_separation_solution():
    problem = _problem(PowerLaw(mu=0.5), N=1024)
    solution = solve_heat(problem)
    assert solution.satisfiable
    exact = separation_oracle(0.5, solution.x, solution.grid.nodes)
    assert np.max(np.abs(solution.field - exact)) <= 5e-2


def test_incompatible_corner_data_is_annotated():
    solution = solve_heat(_problem(PowerLaw(mu=0.5), v0=lambda x: np.ones_like(np.asarray(x, dtype=float))))
    assert INCOMPATIBLE_NOTE in solution.annotations
    assert solution.satisfiable


def test_solution_shapes():
    problem = _problem(PowerLaw(mu=0.7), x_nodes=16, N=32)
    solution = solve_heat(problem)
    assert solution.field.shape == (33, 16)
    assert solution.per_level_residuals.shape == (32,)
    assert np.array_equal(solution.x, problem.x)
    assert np.allclose(solution.field[0], np.sin(np.pi * problem.x))
    summary = solution.summary()
    assert set(summary) == {"initial_slice_residual", "per_level_residuals", "satisfiable", "annotations"}


def test_separation_oracle_at_initial_time():
    x = np.linspace(0.1, 0.9, 5)
    oracle = separation_oracle(0.5, x, np.array([0.0, 0.5]))
    assert np.allclose(oracle[0], np.sin(np.pi * x))
    assert np.all(np.abs(oracle[1]) < np.abs(oracle[0]))
