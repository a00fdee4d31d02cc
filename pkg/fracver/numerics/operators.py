"""
Opérateurs fractionnaires nommés, tous construits sur convquad.

Ordres restreints à (0, 1) (m = 1) ; la normalisation M(α) / B(α) vaut 1 par
défaut et se passe à chaque appel.
"""
import logging
from typing import Optional, Tuple

import numpy as np

from fracver.core.errors import DomainError
from fracver.numerics.convquad import (
    convolve_derivative,
    convolve_value,
    differentiate_samples,
)
from fracver.numerics.specfun import gamma, mittag_leffler_array
from fracver.schemas.grid import AnalyticFunction, FunctionInput, Grid, SampledFunction
from fracver.schemas.kernel import ABML, CFExp, KernelSpec, PowerLaw, PrabhakarK
from fracver.schemas.operator import OperatorKind

logger = logging.getLogger(__name__)

NUMERIC_DERIVATIVE_WARNING = "dérivée estimée par différences finies (précision O(h²))"


def _check_order(alpha: float, name: str, allow_one: bool = False) -> None:
    upper_ok = alpha <= 1 if allow_one else alpha < 1
    if not (alpha > 0 and upper_ok):
        bound = "(0, 1]" if allow_one else "(0, 1)"
        raise DomainError(f"{name} : l'ordre doit être dans {bound}", alpha=alpha)


def prepare_input(f: FunctionInput, grid: Grid, need_derivative: bool = False
                  ) -> Tuple[SampledFunction, Optional[np.ndarray], Optional[np.ndarray]]:
    """Échantillonne l'entrée ; renvoie (échantillons, valeurs aux milieux, pentes aux milieux)"""
    if isinstance(f, AnalyticFunction):
        sampled = f.sample(grid)
        mids = grid.midpoints
        cell_values = f(mids)
        cell_slopes = f.derivative(mids) if f.df is not None else None
    else:
        if f.grid != grid:
            raise DomainError("la fonction échantillonnée n'est pas sur la grille demandée",
                              T=f.grid.T, N=f.grid.N)
        sampled, cell_values, cell_slopes = f, None, None
    if need_derivative and sampled.deriv_values is None:
        logger.warning("%s", NUMERIC_DERIVATIVE_WARNING)
        sampled = differentiate_samples(sampled)
        sampled = sampled.model_copy(update={"warnings": sampled.warnings + [NUMERIC_DERIVATIVE_WARNING]})
    return sampled, cell_values, cell_slopes


def initial_value(f: FunctionInput) -> float:
    if isinstance(f, AnalyticFunction):
        return float(f(np.array([0.0]))[0])
    return float(f.values[0])


def _value_transform(k: KernelSpec, f: FunctionInput, grid: Grid, scheme: str = "rectangle") -> SampledFunction:
    sampled, cell_values, _ = prepare_input(f, grid)
    return convolve_value(k, sampled, grid, cell_values=cell_values, scheme=scheme)


def _derivative_transform(k: KernelSpec, f: FunctionInput, grid: Grid, scheme: str = "rectangle") -> SampledFunction:
    sampled, _, cell_slopes = prepare_input(f, grid, need_derivative=True)
    return convolve_derivative(k, sampled, grid, cell_slopes=cell_slopes, scheme=scheme)


def rl_integral(alpha: float, f: FunctionInput, grid: Grid) -> SampledFunction:
    """Intégrale de Riemann-Liouville J^α"""
    _check_order(alpha, "rl_integral", allow_one=True)
    return _value_transform(PowerLaw(mu=alpha), f, grid)


def caputo_derivative(alpha: float, f: FunctionInput, grid: Grid) -> SampledFunction:
    """Dérivée de Caputo : noyau t^(−α)/Γ(1−α) contre f′"""
    _check_order(alpha, "caputo_derivative")
    return _derivative_transform(PowerLaw(mu=1.0 - alpha), f, grid)


def rl_derivative(alpha: float, f: FunctionInput, grid: Grid) -> SampledFunction:
    """Dérivée de Riemann-Liouville via D_RL f = D_C f + f(0)·t^(−α)/Γ(1−α)"""
    _check_order(alpha, "rl_derivative")
    caputo = caputo_derivative(alpha, f, grid)
    f0 = initial_value(f)
    t = grid.nodes
    values = caputo.values.copy()
    values[1:] += f0 * t[1:] ** (-alpha) / gamma(1.0 - alpha)
    unbounded = f0 != 0.0
    values[0] = np.inf * np.sign(f0) if unbounded else 0.0
    return caputo.model_copy(update={"values": values, "unbounded_at_zero": unbounded})


def cf_derivative(alpha: float, f: FunctionInput, grid: Grid, M: float = 1.0,
                  scheme: str = "rectangle") -> SampledFunction:
    """Opérateur de Caputo-Fabrizio (noyau exponentiel borné)"""
    _check_order(alpha, "cf_derivative")
    return _derivative_transform(CFExp(alpha=alpha, M=M), f, grid, scheme)


def abc_derivative(alpha: float, f: FunctionInput, grid: Grid, B: float = 1.0) -> SampledFunction:
    """Opérateur d'Atangana-Baleanu au sens de Caputo (noyau Mittag-Leffler borné)"""
    _check_order(alpha, "abc_derivative")
    return _derivative_transform(ABML(alpha=alpha, B=B), f, grid)


def _node_derivative(f: FunctionInput, grid: Grid) -> Optional[np.ndarray]:
    if isinstance(f, AnalyticFunction):
        return f.derivative(grid.nodes) if f.df is not None else None
    return f.deriv_values


def cf_integral(alpha: float, f: FunctionInput, grid: Grid, M: float = 1.0) -> SampledFunction:
    """I_CF f = ((1−α)/M)·f + (α/M)·∫_0^t f"""
    _check_order(alpha, "cf_integral")
    sampled, cell_values, _ = prepare_input(f, grid)
    running = convolve_value(PowerLaw(mu=1.0), sampled, grid, cell_values=cell_values)
    values = (1 - alpha) / M * sampled.values + alpha / M * running.values
    deriv = _node_derivative(f, grid)
    if deriv is not None:
        # (I_CF f)′ = ((1−α)/M)·f′ + (α/M)·f
        deriv = (1 - alpha) / M * deriv + alpha / M * sampled.values
    return SampledFunction(grid=grid, values=values, deriv_values=deriv, warnings=list(sampled.warnings))


def ab_integral(alpha: float, f: FunctionInput, grid: Grid, B: float = 1.0) -> SampledFunction:
    """I_AB f = ((1−α)/B)·f + (α/B)·J^α f"""
    _check_order(alpha, "ab_integral")
    sampled, _, _ = prepare_input(f, grid)
    fractional = rl_integral(alpha, f, grid)
    values = (1 - alpha) / B * sampled.values + alpha / B * fractional.values
    return SampledFunction(grid=grid, values=values, warnings=list(sampled.warnings))


def generic_dphi(k: KernelSpec, f: FunctionInput, grid: Grid, scheme: str = "rectangle") -> SampledFunction:
    """D_φ f = ∫_0^t φ(t − τ) f′(τ) dτ, normalisation incluse dans φ"""
    return _derivative_transform(k, f, grid, scheme)


def _check_prabhakar(alpha: float, beta: float) -> None:
    if not (alpha > 0 and beta > 0):
        raise DomainError("Prabhakar : α et β doivent être > 0", alpha=alpha, beta=beta)


def prabhakar_integral(alpha: float, beta: float, gamma_p: float, lam: float,
                       f: FunctionInput, grid: Grid) -> SampledFunction:
    """Intégrale de Prabhakar, noyau s^(β−1)·E^γ_{α,β}(λ s^α)"""
    _check_prabhakar(alpha, beta)
    return _value_transform(PrabhakarK(alpha=alpha, beta=beta, gamma_p=gamma_p, lam=lam), f, grid)


def prabhakar_derivative(alpha: float, beta: float, gamma_p: float, lam: float,
                         f: FunctionInput, grid: Grid) -> SampledFunction:
    """Dérivée de Prabhakar (type Caputo), noyau s^(−β)·E^(−γ)_{α,1−β}(λ s^α) contre f′"""
    _check_prabhakar(alpha, beta)
    _check_order(beta, "prabhakar_derivative")
    kernel = PrabhakarK(alpha=alpha, beta=1.0 - beta, gamma_p=-gamma_p, lam=lam)
    return _derivative_transform(kernel, f, grid)


def cf_derivative_byparts(alpha: float, f: FunctionInput, grid: Grid, M: float = 1.0) -> SampledFunction:
    """(M/(1−α))[f − e^(−Wt) f(0)] − W·∫ (M/(1−α)) e^(−W(t−τ)) f(τ) dτ ; sans f′"""
    _check_order(alpha, "cf_derivative_byparts")
    kernel = CFExp(alpha=alpha, M=M)
    sampled, cell_values, _ = prepare_input(f, grid)
    history = convolve_value(kernel, sampled, grid, cell_values=cell_values)
    t = grid.nodes
    amplitude = M / (1 - alpha)
    values = amplitude * (sampled.values - np.exp(-kernel.W * t) * sampled.values[0]) - kernel.W * history.values
    values[0] = 0.0
    return SampledFunction(grid=grid, values=values, limit_at_zero=True, warnings=list(sampled.warnings))


def abc_derivative_byparts(alpha: float, f: FunctionInput, grid: Grid, B: float = 1.0) -> SampledFunction:
    """(B/(1−α))[f − E_α(−W t^α) f(0) − W ∫ (t−τ)^(α−1) E_{α,α}(−W(t−τ)^α) f(τ) dτ]"""
    _check_order(alpha, "abc_derivative_byparts")
    W = alpha / (1 - alpha)
    sampled, cell_values, _ = prepare_input(f, grid)
    history = convolve_value(PrabhakarK(alpha=alpha, beta=alpha, gamma_p=1.0, lam=-W),
                             sampled, grid, cell_values=cell_values)
    t = grid.nodes
    relaxation = mittag_leffler_array(alpha, 1.0, -W * t ** alpha)
    values = B / (1 - alpha) * (sampled.values - relaxation * sampled.values[0] - W * history.values)
    values[0] = 0.0
    return SampledFunction(grid=grid, values=values, limit_at_zero=True, warnings=list(sampled.warnings))


def abc_power_closed_form(alpha: float, gamma_exp: float, t, B: float = 1.0) -> np.ndarray:
    """D_ABC t^γ = (B/(1−α))·Γ(γ+1)·t^γ·E_{α,γ+1}(−W t^α)"""
    _check_order(alpha, "abc_power_closed_form")
    t = np.asarray(t, dtype=float)
    W = alpha / (1 - alpha)
    return B / (1 - alpha) * gamma(gamma_exp + 1.0) * t ** gamma_exp * mittag_leffler_array(
        alpha, gamma_exp + 1.0, -W * t ** alpha
    )


def _require_alpha(kind: OperatorKind, alpha: Optional[float]) -> float:
    if alpha is None:
        raise DomainError(f"{kind.value} exige un ordre α")
    return alpha


def _require_kernel(kind: OperatorKind, kernel: Optional[KernelSpec], expected=None) -> KernelSpec:
    if kernel is None or (expected is not None and not isinstance(kernel, expected)):
        raise DomainError(f"{kind.value} exige un noyau" + (f" {expected.__name__}" if expected else ""))
    return kernel


def apply_operator(kind: OperatorKind, f: FunctionInput, grid: Grid, alpha: Optional[float] = None,
                   kernel: Optional[KernelSpec] = None, M: float = 1.0, B: float = 1.0,
                   scheme: str = "rectangle") -> SampledFunction:
    """Applique l'opérateur nommé ; Grünwald-Letnikov passe par glcalc"""
    if kind == OperatorKind.RL_INTEGRAL:
        return rl_integral(_require_alpha(kind, alpha), f, grid)
    if kind == OperatorKind.RL_DERIVATIVE:
        return rl_derivative(_require_alpha(kind, alpha), f, grid)
    if kind == OperatorKind.CAPUTO_DERIVATIVE:
        return caputo_derivative(_require_alpha(kind, alpha), f, grid)
    if kind == OperatorKind.CF_DERIVATIVE:
        return cf_derivative(_require_alpha(kind, alpha), f, grid, M=M, scheme=scheme)
    if kind == OperatorKind.ABC_DERIVATIVE:
        return abc_derivative(_require_alpha(kind, alpha), f, grid, B=B)
    if kind == OperatorKind.CF_INTEGRAL:
        return cf_integral(_require_alpha(kind, alpha), f, grid, M=M)
    if kind == OperatorKind.AB_INTEGRAL:
        return ab_integral(_require_alpha(kind, alpha), f, grid, B=B)
    if kind == OperatorKind.CF_DERIVATIVE_BYPARTS:
        return cf_derivative_byparts(_require_alpha(kind, alpha), f, grid, M=M)
    if kind == OperatorKind.ABC_DERIVATIVE_BYPARTS:
        return abc_derivative_byparts(_require_alpha(kind, alpha), f, grid, B=B)
    if kind == OperatorKind.GENERIC_DPHI:
        return generic_dphi(_require_kernel(kind, kernel), f, grid, scheme)
    if kind in (OperatorKind.PRABHAKAR_INTEGRAL, OperatorKind.PRABHAKAR_DERIVATIVE):
        k = _require_kernel(kind, kernel, PrabhakarK)
        op = prabhakar_integral if kind == OperatorKind.PRABHAKAR_INTEGRAL else prabhakar_derivative
        return op(k.alpha, k.beta, k.gamma_p, k.lam, f, grid)
    raise DomainError(f"opérateur non géré ici : {kind.value}")
