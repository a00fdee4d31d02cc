"""Réductions des équations CF / ABC et opérateurs de Prabhakar"""
import math

import numpy as np

from fracver.claims.registry import Measurement, registry
from fracver.numerics.convquad import differentiate_samples, kernel_antiderivative
from fracver.numerics.fde import reduce_abc_to_caputo, reduce_cf_to_integer, solve_pseudo
from fracver.numerics.operators import (
    caputo_derivative,
    prabhakar_derivative,
    prabhakar_integral,
    rl_integral,
)
from fracver.schemas.claim import Direction
from fracver.schemas.fde import FDEProblem
from fracver.schemas.grid import Grid, SampledFunction
from fracver.schemas.kernel import PrabhakarK
from fracver.schemas.operator import OperatorKind
from fracver.testfunctions import COS

REDUCTION_GRID = Grid(T=1.0, N=2048)
REDUCTION_ALPHA = 0.5


def _g(t: float, y: float) -> float:
    return math.sin(t) * y


def _g_t(t: float, y: float) -> float:
    return math.cos(t) * y


def _g_y(t: float, y: float) -> float:
    return math.sin(t)


def _reduction_problem(kind: OperatorKind) -> FDEProblem:
    return FDEProblem(kind=kind, alpha=REDUCTION_ALPHA, g=_g, g_t=_g_t, g_y=_g_y,
                      y0=1.0, grid=REDUCTION_GRID)


@registry.claim(
    "R5-CF-integer",
    paper_ref="§5, CF equation reduces to an integer-order ODE",
    anchor="so y(t) is the solution of an integer-order differential equation",
    tags=["§5"],
    metric="max |pseudo-solution CF − EDO réduite (RK4)|, g = sin(t)·y, y0 = 1, α=0.5, N=2048",
    tolerance=1e-4,
)
def cf_reduction() -> Measurement:
    p = _reduction_problem(OperatorKind.CF_DERIVATIVE)
    gap = np.abs(solve_pseudo(p).values - reduce_cf_to_integer(p).values)
    return Measurement(float(np.max(gap)))


@registry.claim(
    "R5-ABC-Caputo",
    paper_ref="§5, ABC equation reduces to a Caputo equation",
    anchor="so y is the solution of a Caputo differential equation",
    tags=["§5"],
    metric="max |pseudo-solution ABC − équation de Caputo réduite (produit trapèze)|, g = sin(t)·y, y0 = 1, α=0.5, N=2048",
    tolerance=1e-3,
)
def abc_reduction() -> Measurement:
    p = _reduction_problem(OperatorKind.ABC_DERIVATIVE)
    gap = np.abs(solve_pseudo(p).values - reduce_abc_to_caputo(p).values)
    return Measurement(float(np.max(gap)))


PRABHAKAR_GRID = Grid(T=1.0, N=1024)
PRABHAKAR = dict(alpha=0.5, beta=0.5, gamma_p=0.5, lam=-1.0)
INITIAL_LAYER = 0.05


@registry.claim(
    "P5-Prabhakar-degeneration",
    paper_ref="§5, Prabhakar operators reduce to Riemann-Liouville / Caputo",
    anchor="obtained when γ=0 or λ=0",
    tags=["§5", "Prabhakar"],
    metric="max |Prabhakar − RL/Caputo| pour γ = 0 puis λ = 0, β=0.5, f = cos, N=1024",
    tolerance=1e-6,
)
def prabhakar_degeneration() -> Measurement:
    beta = 0.5
    grid = PRABHAKAR_GRID
    integral = rl_integral(beta, COS, grid).values
    derivative = caputo_derivative(beta, COS, grid).values
    worst = 0.0
    for gamma_p, lam in ((0.0, -1.0), (0.7, 0.0)):
        pi = prabhakar_integral(0.5, beta, gamma_p, lam, COS, grid).values
        pd = prabhakar_derivative(0.5, beta, gamma_p, lam, COS, grid).values
        worst = max(worst, float(np.max(np.abs(pi - integral))), float(np.max(np.abs(pd - derivative))))
    return Measurement(worst)


@registry.claim(
    "P5-Prabhakar-FT",
    paper_ref="§5, fundamental theorem for Prabhakar operators",
    anchor="naturally satisfies the fundamental theorem of fractional calculus",
    tags=["§5", "Prabhakar"],
    metric="max_{t≥0.05} |D_Pr[I_Pr cos] − cos|, (α, β, γ, λ) = (0.5, 0.5, 0.5, −1), N=1024",
    tolerance=1e-3,
)
def prabhakar_fundamental_theorem() -> Measurement:
    grid = PRABHAKAR_GRID
    integral = differentiate_samples(prabhakar_integral(f=COS, grid=grid, **PRABHAKAR))
    composed = prabhakar_derivative(f=integral, grid=grid, **PRABHAKAR)
    mask = grid.nodes >= INITIAL_LAYER
    return Measurement(float(np.max(np.abs(composed.values[mask] - np.cos(grid.nodes[mask])))))


ZERO_GRID = Grid(T=1e-3, N=512)


@registry.claim(
    "P5-Prabhakar-no-zero-zero",
    paper_ref="§5, Prabhakar derivative has no zero-zero property",
    anchor="no zero-zero property holds with the Prabhakar derivative",
    tags=["§5", "Prabhakar"],
    metric="|D_Pr f(1e−3)| pour f = t^β·E^γ_{α,β+1}(λ t^α) = I_Pr[1], (α, β, γ, λ) = (0.5, 0.5, 0.5, −1)",
    tolerance=0.5,
    direction=Direction.LOWER,
)
def prabhakar_no_zero_zero() -> Measurement:
    # I_Pr[1] en forme close, puis D_Pr doit redonner 1 jusqu'en 0⁺
    primitive = kernel_antiderivative(PrabhakarK(**PRABHAKAR), ZERO_GRID.nodes)
    f = differentiate_samples(SampledFunction(grid=ZERO_GRID, values=np.asarray(primitive, dtype=float)))
    value = prabhakar_derivative(f=f, grid=ZERO_GRID, **PRABHAKAR).values[-1]
    return Measurement(abs(float(value)))
