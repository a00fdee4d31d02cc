"""
Problèmes de Cauchy D y = g(t, y), y(0) = y0.

Tous les solveurs passent par la même marche de Volterra

    y_n = y0 + a·g(t_n, y_n) + b·Σ_m c[m]·ḡ_{n−m}

où c sont les poids produit-rectangle d'un noyau et ḡ la moyenne de g sur
chaque cellule. Le terme courant est implicite ; chaque pas est résolu par
itération de point fixe. La réduction ABC → Caputo utilise le produit trapèze.
"""
import logging
import math
from typing import Callable, Optional

import numpy as np

from fracver.core.errors import (
    ConstraintViolationError,
    DegenerateSystemError,
    DomainError,
    MissingDerivativeError,
    NonConvergenceError,
)
from fracver.numerics.convquad import (
    differentiate_samples,
    kernel_at_zero,
    kernel_value,
    pi_rectangle_weights,
    pi_trapezoid_weights,
)
from fracver.numerics.diagnostics import construct_jpsi_star, sonine_pair_for
from fracver.numerics.operators import abc_derivative, cf_derivative, generic_dphi
from fracver.numerics.specfun import mittag_leffler_array
from fracver.schemas.fde import FDEProblem, ResidualReport
from fracver.schemas.grid import SampledFunction
from fracver.schemas.kernel import KernelSpec, PowerLaw
from fracver.schemas.operator import OperatorKind

logger = logging.getLogger(__name__)

FIXED_POINT_TOLERANCE = 1e-12
FIXED_POINT_MAX_ITER = 50
CONSTRAINT_TOLERANCE = 1e-12
DEGENERACY_TOLERANCE = 1e-10


def _fixed_point(update: Callable[[float], float], start: float, step: int) -> tuple:
    """Itère v ← update(v) ; renvoie (valeur, nombre d'itérations)"""
    current = start
    gap = math.inf
    for iteration in range(1, FIXED_POINT_MAX_ITER + 1):
        candidate = update(current)
        gap = abs(candidate - current)
        if not math.isfinite(candidate):
            raise NonConvergenceError("itéré non fini (explosion de type Lipschitz)", step=step, gap=gap)
        if gap <= FIXED_POINT_TOLERANCE * max(1.0, abs(candidate)):
            return candidate, iteration
        current = candidate
    raise NonConvergenceError("le point fixe n'a pas convergé", step=step, gap=gap)


def _march(p: FDEProblem, a: float, b: float, kernel: KernelSpec, shift: float = 0.0,
           scheme: str = "rectangle") -> SampledFunction:
    """y = y0 + shift + a·g(t, y) + b·(k ∗ g(·, y))

    `scheme="trapezoid"` interpole g linéairement sur chaque cellule au lieu
    d'en prendre la moyenne (noyaux CFExp et PowerLaw seulement).
    """
    grid = p.grid
    t = grid.nodes
    if scheme == "trapezoid":
        table = pi_trapezoid_weights(kernel, grid)
        left, right = table.left, table.right
    else:
        c = pi_rectangle_weights(kernel, grid).increments
        left = right = 0.5 * c
    base = p.y0 + shift
    y = np.empty(grid.N + 1)
    g_values = np.empty(grid.N + 1)

    if a != 0.0:
        y[0], iterations = _fixed_point(lambda v: base + a * p.g(0.0, v), p.y0, step=0)
    else:
        y[0], iterations = base, 0
    g_values[0] = p.g(0.0, y[0])
    implicit = a + b * right[1]

    for n in range(1, grid.N + 1):
        # g_{n−m} pondéré par left[m], g_{n−m+1} par right[m] ; seul g_n est inconnu
        known = base + b * (left[n:0:-1] @ g_values[:n] + right[n:1:-1] @ g_values[1:n])
        t_n = float(t[n])
        y[n], count = _fixed_point(lambda v: known + implicit * p.g(t_n, v), y[n - 1], step=n)
        g_values[n] = p.g(t_n, y[n])
        iterations += count

    logger.debug("marche de Volterra %s : %d itérations de point fixe sur %d pas",
                 p.kind.value, iterations, grid.N)
    return SampledFunction(grid=grid, values=y)


def _require_kind(p: FDEProblem, *kinds: OperatorKind) -> None:
    if p.kind not in kinds:
        raise DomainError("type d'opérateur inattendu pour ce solveur",
                          kind=p.kind.value, expected=[k.value for k in kinds])


def solve_caputo(p: FDEProblem) -> SampledFunction:
    """Forme de Volterra y = y0 + J^α g(·, y)"""
    _require_kind(p, OperatorKind.CAPUTO_DERIVATIVE)
    return _march(p, 0.0, 1.0, PowerLaw(mu=p.alpha))


def solve_pseudo(p: FDEProblem) -> SampledFunction:
    """Pseudo-solution y = y0 + I_CF g (ou I_AB g)

    Ne résout l'équation de départ que si g(0, y0) = 0.
    """
    _require_kind(p, OperatorKind.CF_DERIVATIVE, OperatorKind.ABC_DERIVATIVE)
    if p.kind == OperatorKind.CF_DERIVATIVE:
        return _march(p, (1 - p.alpha) / p.M, p.alpha / p.M, PowerLaw(mu=1.0))
    return _march(p, (1 - p.alpha) / p.B, p.alpha / p.B, PowerLaw(mu=p.alpha))


def solve_generic(p: FDEProblem) -> SampledFunction:
    """D_φ y = g pour un noyau quelconque

    Noyaux CF/ABC : y = y0 + J̃_ψ g (pseudo-solution). Noyaux singuliers de
    Sonine : y = y0 + J_ψ g avec ψ le partenaire de φ.
    """
    _require_kind(p, OperatorKind.GENERIC_DPHI)
    if p.kernel.is_bounded:
        constant, psi_star = construct_jpsi_star(p.kernel)
        return _march(p, constant, 1.0, psi_star)
    return _march(p, 0.0, 1.0, sonine_pair_for(p.kernel))


def _integral_kernel(p: FDEProblem) -> Optional[KernelSpec]:
    """Noyau ψ tel que y − y0 = J_ψ g, ou None (noyaux bornés)"""
    if p.kind == OperatorKind.CAPUTO_DERIVATIVE:
        return PowerLaw(mu=p.alpha)
    if p.kind == OperatorKind.GENERIC_DPHI and not p.kernel.is_bounded:
        return sonine_pair_for(p.kernel)
    return None


def _discrete_derivative(psi: KernelSpec, y: SampledFunction) -> np.ndarray:
    """Inverse exact de l'intégrale produit-rectangle de la marche

    Résout Σ_j c[n−j]·d_j = y_n − y0 (n = 1..N) par substitution avant :
    d_j est la moyenne de D y sur la cellule j, rapportée au nœud t_{j+1}.
    """
    table = pi_rectangle_weights(psi, y.grid)
    rise = y.values - y.values[0]
    d = np.zeros(y.grid.N + 1)
    for n in range(1, y.grid.N + 1):
        w = table.row(n)
        d[n] = (rise[n] - w[:-1] @ d[1:n]) / w[-1]
    return d


def _apply(p: FDEProblem, y: SampledFunction) -> SampledFunction:
    y = differentiate_samples(y) if y.deriv_values is None else y
    if p.kind == OperatorKind.CF_DERIVATIVE:
        return cf_derivative(p.alpha, y, p.grid, M=p.M)
    if p.kind == OperatorKind.ABC_DERIVATIVE:
        return abc_derivative(p.alpha, y, p.grid, B=p.B)
    return generic_dphi(p.kernel, y, p.grid)


def _rhs_on_grid(g, t: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.array([g(float(ti), float(yi)) for ti, yi in zip(t, y)])


def _predicted_defect(p: FDEProblem, g0: float) -> np.ndarray:
    t = p.grid.nodes
    if p.kind == OperatorKind.CF_DERIVATIVE:
        W = p.alpha / (1 - p.alpha)
        return -np.exp(-W * t) * g0
    if p.kind == OperatorKind.ABC_DERIVATIVE:
        W = p.alpha / (1 - p.alpha)
        return -mittag_leffler_array(p.alpha, 1.0, -W * t ** p.alpha) * g0
    if p.kind == OperatorKind.GENERIC_DPHI and p.kernel.is_bounded:
        return -kernel_value(p.kernel, t) / kernel_at_zero(p.kernel) * g0
    return np.zeros_like(t)


def residual_check(p: FDEProblem, y: SampledFunction) -> ResidualReport:
    """Résidu D y − g(t, y) et défaut prédit ; g(0, ·) est pris en y(0)

    Noyaux singuliers (Caputo, partenaire de Sonine) : D y est la dérivée
    discrète de la marche et le résidu compare les moyennes par cellule de
    D y et de g. Noyaux bornés : opérateur appliqué aux pentes de y.
    """
    if y.grid != p.grid:
        raise DomainError("y n'est pas défini sur la grille du problème", T=y.grid.T, N=y.grid.N)
    t = p.grid.nodes
    rhs = _rhs_on_grid(p.g, t, y.values)
    psi = _integral_kernel(p)
    if psi is not None:
        residual = _discrete_derivative(psi, y)
        residual[1:] -= 0.5 * (rhs[:-1] + rhs[1:])
    else:
        residual = _apply(p, y).values - rhs
    predicted = _predicted_defect(p, float(p.g(0.0, float(y.values[0]))))
    interior = slice(1, p.grid.N)
    mismatch = float(np.max(np.abs(residual[interior] - predicted[interior]))) if p.grid.N > 1 else 0.0
    return ResidualReport(
        residual=SampledFunction(grid=p.grid, values=residual, limit_at_zero=True),
        predicted_defect=SampledFunction(grid=p.grid, values=predicted),
        max_mismatch=mismatch,
    )


def _check_zero_constraint(p: FDEProblem) -> None:
    g0 = p.initial_rhs()
    if abs(g0) > CONSTRAINT_TOLERANCE:
        raise ConstraintViolationError("la réduction exige g(0, y0) = 0", g0=g0)


def reduce_cf_to_integer(p: FDEProblem) -> SampledFunction:
    """EDO d'ordre entier y′(1 − a·g_y) = a·g_t + b·g, a = (1−α)/M, b = α/M ; RK4"""
    _require_kind(p, OperatorKind.CF_DERIVATIVE)
    _check_zero_constraint(p)
    if p.g_t is None or p.g_y is None:
        raise MissingDerivativeError("la réduction CF exige g_t et g_y")
    a = (1 - p.alpha) / p.M
    b = p.alpha / p.M

    def slope(t: float, v: float) -> float:
        factor = 1.0 - a * p.g_y(t, v)
        if abs(factor) < DEGENERACY_TOLERANCE:
            raise DegenerateSystemError("facteur implicite 1 − a·g_y nul", t=t, y=v)
        return (a * p.g_t(t, v) + b * p.g(t, v)) / factor

    grid = p.grid
    h = grid.h
    t = grid.nodes
    y = np.empty(grid.N + 1)
    y[0] = p.y0
    for n in range(grid.N):
        tn, yn = float(t[n]), float(y[n])
        k1 = slope(tn, yn)
        k2 = slope(tn + 0.5 * h, yn + 0.5 * h * k1)
        k3 = slope(tn + 0.5 * h, yn + 0.5 * h * k2)
        k4 = slope(tn + h, yn + h * k3)
        y[n + 1] = yn + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0
    return SampledFunction(grid=grid, values=y)


def reduce_abc_to_caputo(p: FDEProblem) -> SampledFunction:
    """y = y0 + ((1−α)/B)(g − g(0, y0)) + (α/B)·J^α g"""
    _require_kind(p, OperatorKind.ABC_DERIVATIVE)
    _check_zero_constraint(p)
    a = (1 - p.alpha) / p.B
    return _march(p, a, p.alpha / p.B, PowerLaw(mu=p.alpha), shift=-a * p.initial_rhs(), scheme="trapezoid")


def solve(p: FDEProblem) -> SampledFunction:
    if p.kind == OperatorKind.CAPUTO_DERIVATIVE:
        return solve_caputo(p)
    if p.kind == OperatorKind.GENERIC_DPHI:
        return solve_generic(p)
    return solve_pseudo(p)
