"""Diffusion fractionnaire en temps : contrainte initiale des noyaux bornés"""
import numpy as np

from fracver.claims.registry import Measurement, registry
from fracver.numerics.heat1d import first_level_residual, initial_slice_residual, separation_oracle, solve_heat
from fracver.schemas.claim import Direction
from fracver.schemas.grid import Grid
from fracver.schemas.heat import HeatProblem
from fracver.schemas.kernel import CFExp, PowerLaw

X_NODES = 64
ALPHA = 0.5


def _sine_profile(c: float):
    def v0(x):
        return c * np.sin(np.pi * np.asarray(x, dtype=float))
    return v0


def _problem(c: float, N: int, kernel=None) -> HeatProblem:
    return HeatProblem(x_nodes=X_NODES, grid=Grid(T=1.0, N=N),
                       kernel=kernel if kernel is not None else CFExp(alpha=ALPHA),
                       v0=_sine_profile(c))


@registry.claim(
    "T4.1-heat-forced-initial",
    paper_ref="§4 Theorem 4.1",
    anchor="must satisfy the equation",
    tags=["§4"],
    metric="min sur N ∈ {256, 1024, 4096} du résidu au premier niveau, noyau CF(0.5), v0 = sin(πx), 64 nœuds",
    tolerance=4.9,
    direction=Direction.LOWER,
)
def heat_forced_initial() -> Measurement:
    p = _problem(1.0, 256)
    residuals = [first_level_residual(p, N) for N in (256, 1024, 4096)]
    slice_residual = initial_slice_residual(p)
    return Measurement(min(residuals), guard=slice_residual >= 1.0,
                       note=f"max |Δ_h v0| = {slice_residual:.4f}")


FAMILY = (0.0, 0.25, 0.5, 1.0)


@registry.claim(
    "E4.1-trivial-solution",
    paper_ref="§4 Example 4.1",
    anchor="is only an illusion",
    tags=["§4"],
    metric="résidu au premier niveau pour v0 = c·sin(πx), c = 0 ; les autres c restent ≥ c·π²/2 (N=4096)",
    tolerance=1e-6,
)
def trivial_solution() -> Measurement:
    residuals = {c: first_level_residual(_problem(c, 4096), 4096) for c in FAMILY}
    persistent = all(residuals[c] >= 0.5 * c * np.pi ** 2 for c in FAMILY if c > 0)
    zero_field = solve_heat(_problem(0.0, 256)).field
    return Measurement(residuals[0.0], guard=persistent and float(np.max(np.abs(zero_field))) == 0.0)


@registry.claim(
    "E4-heat-caputo-separation",
    paper_ref="§4, Caputo heat equation with separable data",
    anchor="Consider the fractional heat equation",
    tags=["§4"],
    metric="max |u − sin(πx)·E_α(−π² t^α)| pour le noyau de Caputo (α=0.5), 64 nœuds, N=1024",
    tolerance=5e-2,
)
def caputo_separation() -> Measurement:
    p = _problem(1.0, 1024, kernel=PowerLaw(mu=1.0 - ALPHA))
    solution = solve_heat(p)
    oracle = separation_oracle(ALPHA, solution.x, solution.grid.nodes)
    return Measurement(float(np.max(np.abs(solution.field - oracle))))
