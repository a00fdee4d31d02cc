"""Dérivée de Grünwald-Letnikov (limites à droite uniquement)"""
import numpy as np

from fracver.core.errors import DomainError
from fracver.numerics.operators import initial_value, prepare_input
from fracver.schemas.glcalc import ExtensionKind, GLWeights
from fracver.schemas.grid import FunctionInput, Grid, SampledFunction


def gl_coefficients(alpha: float, N: int) -> GLWeights:
    """ω_j = ω_{j−1}·(1 − (α+1)/j), ω_0 = 1"""
    if not 0 < alpha <= 1:
        raise DomainError("gl_coefficients : α doit être dans (0, 1]", alpha=alpha)
    if N < 0:
        raise DomainError("gl_coefficients : N doit être >= 0", N=N)
    j = np.arange(1, N + 1, dtype=float)
    omega = np.concatenate(([1.0], np.cumprod(1.0 - (alpha + 1.0) / j)))
    return GLWeights(alpha=alpha, omega=omega)


def gl_derivative(alpha: float, f: FunctionInput, grid: Grid,
                  ext: ExtensionKind = ExtensionKind.TAYLOR) -> SampledFunction:
    """h^(−α)·Σ_{j≤n} ω_j·F(t_n − j h), F = f (ZERO) ou f − f(0) (TAYLOR)"""
    if not 0 < alpha < 1:
        raise DomainError("gl_derivative : α doit être dans (0, 1)", alpha=alpha)
    sampled, _, _ = prepare_input(f, grid)
    F = sampled.values
    if ext == ExtensionKind.TAYLOR:
        F = F - initial_value(f)
    omega = gl_coefficients(alpha, grid.N).omega
    values = np.convolve(omega, F)[:grid.N + 1] * grid.h ** (-alpha)
    return SampledFunction(grid=grid, values=values, warnings=list(sampled.warnings))
