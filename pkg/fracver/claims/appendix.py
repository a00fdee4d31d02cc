"""Grünwald-Letnikov et décomposition par parties des compositions CF / ABC"""
import math

import numpy as np

from fracver.claims.registry import Measurement, registry
from fracver.numerics.convquad import convolve_value, differentiate_samples
from fracver.numerics.glcalc import gl_derivative
from fracver.numerics.operators import (
    abc_derivative,
    abc_derivative_byparts,
    cf_derivative,
    cf_derivative_byparts,
    rl_derivative,
    rl_integral,
)
from fracver.numerics.specfun import gamma, mittag_leffler_array
from fracver.schemas.glcalc import ExtensionKind
from fracver.schemas.grid import Grid
from fracver.schemas.kernel import CFExp, PrabhakarK
from fracver.testfunctions import COS, POLY3, SIN

GL_ALPHA = 0.5


def _gl_caputo_error(N: int) -> float:
    grid = Grid(T=1.0, N=N)
    exact = 6.0 / gamma(3.5) * grid.nodes ** 2.5
    return float(np.max(np.abs(gl_derivative(GL_ALPHA, POLY3, grid, ExtensionKind.TAYLOR).values - exact)))


@registry.claim(
    "A-GL-Caputo",
    paper_ref="Appendix A, GL limit of the Taylor-corrected extension equals Caputo",
    anchor="one also has",
    tags=["Appendix A"],
    metric="max |GL(f − f(0)) − D_C f| pour f = 1 + t³, α=0.5, N=1024 ; ordre empirique dans [0.8, 1.2]",
    tolerance=2e-2,
)
def gl_caputo() -> Measurement:
    errors = [_gl_caputo_error(N) for N in (256, 512, 1024)]
    order = math.log2(errors[0] / errors[2]) / 2.0
    return Measurement(errors[-1], guard=0.8 <= order <= 1.2, note=f"ordre empirique {order:.3f}")


@registry.claim(
    "A-GL-RL",
    paper_ref="Appendix A, GL limit of the zero extension equals Riemann-Liouville",
    anchor="states that if",
    tags=["Appendix A"],
    metric="max_{t≥0.1} |GL(f prolongée par 0) − D_RL f| pour f = 1 + t³, α=0.5, N=1024",
    tolerance=2e-2,
)
def gl_riemann_liouville() -> Measurement:
    grid = Grid(T=1.0, N=1024)
    gl = gl_derivative(GL_ALPHA, POLY3, grid, ExtensionKind.ZERO).values
    rl = rl_derivative(GL_ALPHA, POLY3, grid).values
    mask = grid.nodes >= 0.1
    return Measurement(float(np.max(np.abs(gl[mask] - rl[mask]))))


BYPARTS_GRID = Grid(T=1.0, N=2048)
BYPARTS_ALPHA = 0.5


def _interior_max(values: np.ndarray) -> float:
    return float(np.max(np.abs(values[1:-1])))


@registry.claim(
    "B-proof-CF",
    paper_ref="Appendix B, proof of Proposition 3.1",
    anchor="Integration by parts allows us to evaluate the first integral (A)",
    tags=["Appendix B"],
    metric="max des écarts (A) quadrature/par parties, (B) quadrature/forme convolée, (A)+(B) − (f − e^(−Wt) f(0)) ; f = cos, α=0.5, N=2048",
    tolerance=1e-6,
)
def proof_cf() -> Measurement:
    alpha, grid = BYPARTS_ALPHA, BYPARTS_GRID
    kernel = CFExp(alpha=alpha)
    a, b = 1 - alpha, alpha
    t = grid.nodes
    part_a = a * cf_derivative(alpha, COS, grid, scheme="trapezoid").values
    part_a_byparts = a * cf_derivative_byparts(alpha, COS, grid).values
    # D_CF[∫_0^t cos] = D_CF[sin]
    part_b = b * cf_derivative(alpha, SIN, grid, scheme="trapezoid").values
    history = convolve_value(kernel, COS.sample(grid), grid, cell_values=COS(grid.midpoints)).values
    part_b_closed = kernel.W * a * history
    total = np.cos(t) - np.exp(-kernel.W * t)
    gaps = [part_a - part_a_byparts, part_b - part_b_closed, part_a + part_b - total]
    return Measurement(max(_interior_max(g) for g in gaps))


@registry.claim(
    "B-proof-ABC",
    paper_ref="Appendix B, proof of Proposition 3.2",
    anchor="Integration by parts yields",
    tags=["Appendix B"],
    metric="max des écarts (C) quadrature/par parties, (D) quadrature/forme de Prabhakar, (C)+(D) − (f − E_α(−W t^α) f(0)) ; f = cos, α=0.5, N=4096",
    tolerance=1e-4,
)
def proof_abc() -> Measurement:
    alpha = BYPARTS_ALPHA
    # Erreur de la première cellule en O(h) pour (D) : grille plus fine
    grid = Grid(T=1.0, N=4096)
    W = alpha / (1 - alpha)
    c, d = 1 - alpha, alpha
    t = grid.nodes
    part_c = c * abc_derivative(alpha, COS, grid).values
    part_c_byparts = c * abc_derivative_byparts(alpha, COS, grid).values
    fractional = differentiate_samples(rl_integral(alpha, COS, grid))
    part_d = d * abc_derivative(alpha, fractional, grid).values
    relaxation = PrabhakarK(alpha=alpha, beta=alpha, gamma_p=1.0, lam=-W)
    part_d_closed = W * convolve_value(relaxation, COS.sample(grid), grid, cell_values=COS(grid.midpoints)).values
    total = np.cos(t) - mittag_leffler_array(alpha, 1.0, -W * t ** alpha)
    gaps = [part_c - part_c_byparts, part_d - part_d_closed, part_c + part_d - total]
    return Measurement(max(_interior_max(g) for g in gaps))


@registry.claim(
    "S6.1-byparts-CF",
    paper_ref="§6.1, CF derivative after integration by parts",
    anchor="Integration by parts of",
    tags=["§6.1"],
    metric="max intérieur |D_CF cos (quadrature trapèze) − forme par parties|, α=0.5, N=2048",
    tolerance=1e-6,
)
def byparts_cf() -> Measurement:
    numeric = cf_derivative(BYPARTS_ALPHA, COS, BYPARTS_GRID, scheme="trapezoid")
    return Measurement(_interior_max(numeric.values - cf_derivative_byparts(BYPARTS_ALPHA, COS, BYPARTS_GRID).values))


@registry.claim(
    "S6.1-byparts-ABC",
    paper_ref="§6.1, ABC derivative after integration by parts",
    anchor="Integration by parts of",
    tags=["§6.1"],
    metric="max intérieur |D_ABC cos (quadrature) − forme par parties|, α=0.5, N=2048",
    tolerance=1e-4,
)
def byparts_abc() -> Measurement:
    numeric = abc_derivative(BYPARTS_ALPHA, COS, BYPARTS_GRID)
    return Measurement(_interior_max(numeric.values - abc_derivative_byparts(BYPARTS_ALPHA, COS, BYPARTS_GRID).values))
