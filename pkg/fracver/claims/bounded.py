"""Opérateurs à noyau borné : inverses à gauche défectueux, propriété zéro-zéro, Laplace"""
import numpy as np

from fracver.claims.registry import Measurement, registry
from fracver.numerics.convquad import differentiate_samples, kernel_at_zero
from fracver.numerics.diagnostics import final_value_check, jpsi_tilde_residual, psi_hat_probe
from fracver.numerics.fde import residual_check, solve_pseudo
from fracver.numerics.operators import (
    ab_integral,
    abc_derivative,
    abc_power_closed_form,
    caputo_derivative,
    cf_derivative,
    cf_integral,
)
from fracver.numerics.specfun import gamma, mittag_leffler_array, ml_laplace
from fracver.schemas.claim import Direction
from fracver.schemas.fde import FDEProblem
from fracver.schemas.grid import Grid, SampledFunction
from fracver.schemas.kernel import ABML, CFExp
from fracver.schemas.operator import OperatorKind
from fracver.testfunctions import COS, power

GRID = Grid(T=1.0, N=2048)


def _interior_max(values: np.ndarray) -> float:
    return float(np.max(np.abs(values[1:-1])))


@registry.claim(
    "P3.1-CF-left-inverse-defect",
    paper_ref="§3.1 Proposition 3.1",
    anchor="The CF derivative and the CF integral satisfy the relation",
    tags=["§3", "§3.1"],
    metric="max intérieur |D_CF[I_CF cos] − cos + e^(−W t)|, α=0.4, M=1, N=2048, poids trapèze",
    tolerance=1e-4,
)
def cf_left_inverse_defect() -> Measurement:
    alpha = 0.4
    W = alpha / (1 - alpha)
    t = GRID.nodes
    composed = cf_derivative(alpha, cf_integral(alpha, COS, GRID), GRID, scheme="trapezoid")
    return Measurement(_interior_max(composed.values - np.cos(t) + np.exp(-W * t)))


@registry.claim(
    "P3.2-ABC-left-inverse-defect",
    paper_ref="§3.1 Proposition 3.2",
    anchor="The ABC derivative and the AB integral satisfy the relation",
    tags=["§3", "§3.1"],
    metric="max intérieur |D_ABC[I_AB cos] − cos + E_α(−W t^α)|, α=0.5, B=1, N=2048",
    tolerance=1e-3,
)
def abc_left_inverse_defect() -> Measurement:
    alpha = 0.5
    W = alpha / (1 - alpha)
    t = GRID.nodes
    integral = differentiate_samples(ab_integral(alpha, COS, GRID))
    composed = abc_derivative(alpha, integral, GRID)
    expected = np.cos(t) - mittag_leffler_array(alpha, 1.0, -W * t ** alpha)
    return Measurement(_interior_max(composed.values - expected))


@registry.claim(
    "RI-CF",
    paper_ref="§3.1, I_CF[D_CF f] = f − f(0)",
    anchor="the differential operator is the right-inverse of the integral operator",
    tags=["§3", "§3.1"],
    metric="max |I_CF[D_CF cos] − (cos − 1)|, α=0.5, N=2048",
    tolerance=1e-4,
)
def cf_right_inverse() -> Measurement:
    alpha = 0.5
    recovered = cf_integral(alpha, cf_derivative(alpha, COS, GRID), GRID)
    return Measurement(float(np.max(np.abs(recovered.values - (np.cos(GRID.nodes) - 1.0)))))


@registry.claim(
    "RI-AB",
    paper_ref="§3.1, I_AB[D_ABC f] = f − f(0)",
    anchor="Here again I_AB[D_ABC f(t)] = f(t) − f(0)",
    tags=["§3", "§3.1"],
    metric="max |I_AB[D_ABC cos] − (cos − 1)|, α=0.5, N=2048",
    tolerance=1e-3,
)
def ab_right_inverse() -> Measurement:
    alpha = 0.5
    recovered = ab_integral(alpha, abc_derivative(alpha, COS, GRID), GRID)
    return Measurement(float(np.max(np.abs(recovered.values - (np.cos(GRID.nodes) - 1.0)))))


ZERO_GRID = Grid(T=1e-3, N=512)


@registry.claim(
    "T3.3-zero-zero",
    paper_ref="§3.2 Theorem 3.3 and Remark 3.1",
    anchor="the derivative at 0 is always 0",
    tags=["§3", "§3.2"],
    metric="max(|D_CF cos|, |D_ABC cos|, |D_C t^0.5 − Γ(1.5)|) à t=1e−3 ; décroissance d'un facteur 2 quand t est divisé par 2",
    tolerance=1e-2,
)
def zero_zero() -> Measurement:
    alpha = 0.5
    half = ZERO_GRID.N // 2
    bounded = [cf_derivative(alpha, COS, ZERO_GRID), abc_derivative(alpha, COS, ZERO_GRID)]
    at_t = [abs(float(r.values[-1])) for r in bounded]
    halves = [abs(float(r.values[half])) <= 0.5 * abs(float(r.values[-1])) for r in bounded]
    root = SampledFunction(grid=ZERO_GRID, values=np.sqrt(ZERO_GRID.nodes))
    caputo = caputo_derivative(alpha, differentiate_samples(root), ZERO_GRID)
    # Contre-exemple de Caputo : la valeur ne tend pas vers 0
    persistence = abs(float(caputo.values[-1]) - gamma(1.5))
    return Measurement(max(at_t + [persistence]), guard=all(halves),
                       note=f"D_CF={at_t[0]:.3e}, D_ABC={at_t[1]:.3e}")


@registry.claim(
    "ABC-power-closed-form",
    paper_ref="§3.2, D_ABC t^γ in closed form",
    anchor="taking the power function f(t)=t^γ for constant γ>0",
    tags=["§3", "§3.2"],
    metric="max |D_ABC t^γ (quadrature) − forme close|, γ ∈ {1, 1.5, 2}, α=0.5, N=2048",
    tolerance=1e-4,
)
def abc_power_closed_form_check() -> Measurement:
    alpha = 0.5
    t = GRID.nodes
    worst = 0.0
    for gamma_exp in (1.0, 1.5, 2.0):
        numeric = abc_derivative(alpha, power(gamma_exp), GRID)
        exact = abc_power_closed_form(alpha, gamma_exp, t)
        worst = max(worst, float(np.max(np.abs(numeric.values - exact))))
    return Measurement(worst)


LAPLACE_KERNELS = (CFExp(alpha=0.5), ABML(alpha=0.5))
# s·φ̂(s) − φ(0) ~ s^(−α) pour ABML : il faut s ≫ 1e4 pour atteindre 1e−3
FINAL_VALUE_POINTS = {"cf": 1e4, "abc": 1e8}
PSI_HAT_POINTS = [1e2, 1e3, 1e4]


def _phi_hat_closed_form(k, s: np.ndarray) -> np.ndarray:
    """φ̂ analytique : CF = (M/(1−α))·E_1, ABC = (B/(1−α))·E_α"""
    if isinstance(k, CFExp):
        return k.M / (1 - k.alpha) * ml_laplace(1.0, 1.0, k.W, s)
    return k.B / (1 - k.alpha) * ml_laplace(k.alpha, 1.0, k.W, s)


@registry.claim(
    "S3.3-final-value",
    paper_ref="§3.3, final value theorem lim s·φ̂(s) = φ(0)",
    anchor="the final value theorem for the LT and H1 yields",
    tags=["§3", "§3.3"],
    metric="max |s·φ̂(s) − φ(0)| pour CF (s=1e4) et ABC (s=1e8), α=0.5",
    tolerance=1e-3,
)
def final_value() -> Measurement:
    gaps = [abs(final_value_check(k, FINAL_VALUE_POINTS[k.kind]) - kernel_at_zero(k)) for k in LAPLACE_KERNELS]
    return Measurement(max(gaps))


@registry.claim(
    "S3.3-psi-hat-limit",
    paper_ref="§3.3, lim ψ̂(s) = 1/φ(0) ≠ 0",
    anchor="cannot be the LT of any function",
    tags=["§3", "§3.3"],
    metric="min φ(0)·ψ̂(1e4) pour CF et ABC ; |ψ̂ − 1/φ(0)| décroissant sur s ∈ {1e2, 1e3, 1e4}",
    tolerance=0.9,
    direction=Direction.LOWER,
)
def psi_hat_limit() -> Measurement:
    values = []
    consistent = True
    for k in LAPLACE_KERNELS:
        probe = psi_hat_probe(k, PSI_HAT_POINTS)
        star = np.abs(probe.psi_hat_star)
        consistent = consistent and bool(np.all(np.diff(star) < 0))
        # la quadrature doit retrouver la forme close
        exact = _phi_hat_closed_form(k, probe.s_values)
        consistent = consistent and bool(np.allclose(probe.phi_hat, exact, rtol=1e-6, atol=0.0))
        values.append(float(probe.psi_hat[-1]) * kernel_at_zero(k))
    return Measurement(min(values), guard=consistent)


@registry.claim(
    "T3.4-identity",
    paper_ref="§3.3 Theorem 3.4",
    anchor="D_φ is not necessarily the left inverse of J̃_ψ",
    tags=["§3", "§3.3"],
    metric="max intérieur |D_φ[J̃_ψ cos] − (cos − (φ/φ(0))·cos(0) − φ·lim J_ψ* cos)| pour CF et ABC, N=2048",
    tolerance=1e-3,
)
def jpsi_tilde_identity() -> Measurement:
    results = [jpsi_tilde_residual(k, COS, GRID) for k in LAPLACE_KERNELS]
    first = max(abs(r[1]) for r in results)
    return Measurement(max(r[0] for r in results), note=f"|J_ψ* cos(t_1)| ≤ {first:.2e}")


def _one(t: float, y: float) -> float:
    return 1.0


def _sin_times_y(t: float, y: float) -> float:
    return float(np.sin(t)) * y


def _fde_defect(kind: OperatorKind) -> Measurement:
    alpha = 0.5
    forced = FDEProblem(kind=kind, alpha=alpha, g=_one, y0=0.0, grid=GRID)
    report = residual_check(forced, solve_pseudo(forced))
    relative = float(np.max(report.relative_mismatch))
    # g(0, y0) = 1 : le défaut ne disparaît pas quand la grille est raffinée
    persistent = True
    for N in (256, 2048):
        coarse = forced.model_copy(update={"grid": Grid(T=1.0, N=N)})
        residual = residual_check(coarse, solve_pseudo(coarse)).residual.values
        persistent = persistent and float(np.max(np.abs(residual[1:6]))) >= 0.05
    compatible = FDEProblem(kind=kind, alpha=alpha, g=_sin_times_y, y0=1.0, grid=GRID)
    clean = float(np.max(np.abs(residual_check(compatible, solve_pseudo(compatible)).residual.values)))
    return Measurement(relative, guard=persistent and clean <= 5e-3,
                       note=f"résidu avec g(0, y0) = 0 : {clean:.2e}")


@registry.claim(
    "FDE-defect-CF",
    paper_ref="§3.1, defect of the CF pseudo-solution",
    anchor="we see immediately that",
    tags=["§3", "§3.1"],
    metric="max intérieur |résidu/défaut prédit − 1|, g ≡ 1, y0 = 0, α=0.5, N=2048",
    tolerance=1e-2,
)
def fde_defect_cf() -> Measurement:
    return _fde_defect(OperatorKind.CF_DERIVATIVE)


@registry.claim(
    "FDE-defect-ABC",
    paper_ref="§3.1, defect of the AB pseudo-solution",
    anchor="that is not a solution of the equation since",
    tags=["§3", "§3.1"],
    metric="max intérieur |résidu/défaut prédit − 1|, g ≡ 1, y0 = 0, α=0.5, N=2048",
    tolerance=1e-2,
)
def fde_defect_abc() -> Measurement:
    return _fde_defect(OperatorKind.ABC_DERIVATIVE)
