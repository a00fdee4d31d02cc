"""
Diffusion fractionnaire en temps sur [0, 1], méthode des lignes.

Espace : différences centrées d'ordre 2. Temps : l'inconnue de chaque niveau
est la pente v_n = (u_n − u_{n−1})/h ; l'opérateur temporel vaut

    D u(t_n) ≈ c[1]·v_n + Σ_{m≥2} c[m]·v_{n−m+1}

(historique explicite, cellule courante implicite avec la diffusion).
Noyau singulier : système tridiagonal résolu exactement. Noyau borné :
moindres carrés régularisés par la pente (la solution doit rester
absolument continue en temps) et trajectoire des résidus rapportée.
"""
import logging
from typing import Optional, Tuple

import numpy as np
from scipy import linalg

from fracver.numerics.convquad import kernel_at_zero, pi_rectangle_weights
from fracver.numerics.specfun import mittag_leffler_array
from fracver.schemas.grid import Grid
from fracver.schemas.heat import HeatProblem, HeatSolution

logger = logging.getLogger(__name__)

SLICE_TOLERANCE = 1e-6
# Erreur de Δ_h sur une donnée C⁴ : O(Δx²)
SLICE_DISCRETIZATION_FACTOR = 100.0

UNSATISFIABLE_NOTE = "équation non satisfiable : noyau borné et Δv0 + f(·, 0) ≠ 0"
INCOMPATIBLE_NOTE = "données initiales et de bord incompatibles aux coins"


def _boundary_term(p: HeatProblem, t: float) -> np.ndarray:
    """Contribution des valeurs de Dirichlet à Δ_h aux deux nœuds extrêmes"""
    term = np.zeros(p.x_nodes)
    term[0] += p.g_left(t)
    term[-1] += p.g_right(t)
    return term / p.dx ** 2


def _laplacian(p: HeatProblem, u: np.ndarray) -> np.ndarray:
    """Δ_h sur les nœuds intérieurs, bords homogènes"""
    padded = np.concatenate(([0.0], u, [0.0]))
    return (padded[:-2] - 2.0 * padded[1:-1] + padded[2:]) / p.dx ** 2


def initial_slice_residual(p: HeatProblem) -> float:
    """max_x |Δ_h v0 + f(x, 0)| ; nul pour tout noyau borné admettant une solution"""
    x_full = np.linspace(0.0, 1.0, p.x_nodes + 2)
    v = np.asarray(p.v0(x_full), dtype=float) * np.ones_like(x_full)
    second = (v[:-2] - 2.0 * v[1:-1] + v[2:]) / p.dx ** 2
    forcing = np.asarray(p.forcing(p.x, 0.0), dtype=float) * np.ones(p.x_nodes)
    return float(np.max(np.abs(second + forcing)))


def _slope_operator(p: HeatProblem, c1: float) -> Tuple[float, float]:
    """A = c1·I − h·Δ_h : (diagonale, hors-diagonale)"""
    h = p.grid.h
    return c1 + 2.0 * h / p.dx ** 2, -h / p.dx ** 2


def _tridiagonal_solve(diag: float, off: float, rhs: np.ndarray) -> np.ndarray:
    n = rhs.size
    bands = np.zeros((3, n))
    bands[0, 1:] = off
    bands[1, :] = diag
    bands[2, :-1] = off
    return linalg.solve_banded((1, 1), bands, rhs)


def _ridge_solve(diag: float, off: float, weight: float, rhs: np.ndarray) -> np.ndarray:
    """argmin ‖A v − rhs‖² + weight²‖v‖², A tridiagonale symétrique"""
    n = rhs.size
    neighbours = np.full(n, 2.0)
    neighbours[[0, -1]] = 1.0
    # A·rhs
    padded = np.concatenate(([0.0], rhs, [0.0]))
    projected = diag * rhs + off * (padded[:-2] + padded[2:])
    bands = np.zeros((5, n))
    bands[0, 2:] = off ** 2
    bands[1, 1:] = 2.0 * diag * off
    bands[2, :] = diag ** 2 + neighbours * off ** 2 + weight ** 2
    bands[3, :-1] = 2.0 * diag * off
    bands[4, :-2] = off ** 2
    return linalg.solve_banded((2, 2), bands, projected)


def _apply_slope_operator(diag: float, off: float, v: np.ndarray) -> np.ndarray:
    padded = np.concatenate(([0.0], v, [0.0]))
    return diag * v + off * (padded[:-2] + padded[2:])


def _march(p: HeatProblem, levels: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """Renvoie (champ, résidus par niveau) pour les `levels` premiers niveaux"""
    grid = p.grid
    levels = grid.N if levels is None else min(levels, grid.N)
    h = grid.h
    t = grid.nodes
    c = pi_rectangle_weights(p.kernel, grid).increments
    diag, off = _slope_operator(p, c[1])
    bounded = p.kernel.is_bounded
    # Échelle naturelle du noyau : φ(0)·T
    weight = kernel_at_zero(p.kernel) * grid.T if bounded else 0.0

    field = np.empty((levels + 1, p.x_nodes))
    field[0] = np.asarray(p.v0(p.x), dtype=float) * np.ones(p.x_nodes)
    slopes = np.empty((levels + 1, p.x_nodes))
    residuals = np.empty(levels)

    for n in range(1, levels + 1):
        history = c[n:1:-1] @ slopes[1:n] if n > 1 else np.zeros(p.x_nodes)
        forcing = np.asarray(p.forcing(p.x, float(t[n])), dtype=float) * np.ones(p.x_nodes)
        # résidu = A v + b
        b = history - _laplacian(p, field[n - 1]) - _boundary_term(p, float(t[n])) - forcing
        if bounded:
            v = _ridge_solve(diag, off, weight, -b)
        else:
            v = _tridiagonal_solve(diag, off, -b)
        slopes[n] = v
        field[n] = field[n - 1] + h * v
        residuals[n - 1] = np.max(np.abs(_apply_slope_operator(diag, off, v) + b))
    return field, residuals


def solve_heat(p: HeatProblem) -> HeatSolution:
    """Champ espace-temps complet et diagnostic de satisfiabilité"""
    slice_residual = initial_slice_residual(p)
    annotations = []
    if not p.compatible:
        annotations.append(INCOMPATIBLE_NOTE)
    satisfiable = True
    if p.kernel.is_bounded:
        threshold = SLICE_TOLERANCE + SLICE_DISCRETIZATION_FACTOR * p.dx ** 2
        satisfiable = slice_residual <= threshold
        if not satisfiable:
            logger.warning("%s (résidu initial %.4g)", UNSATISFIABLE_NOTE, slice_residual)
            annotations.append(UNSATISFIABLE_NOTE)
    field, residuals = _march(p)
    logger.debug("chaleur %s : %d niveaux, %d nœuds", p.kernel.kind, p.grid.N, p.x_nodes)
    return HeatSolution(
        grid=p.grid,
        x=p.x,
        field=field,
        per_level_residuals=residuals,
        initial_slice_residual=slice_residual,
        satisfiable=satisfiable,
        annotations=annotations,
    )


def first_level_residual(p: HeatProblem, N: int) -> float:
    """Résidu de l'EDP au premier niveau de temps sur la grille (T, N)"""
    _, residuals = _march(p.with_grid(Grid(T=p.grid.T, N=N)), levels=1)
    return float(residuals[0])


def separation_oracle(alpha: float, x, t) -> np.ndarray:
    """sin(πx)·E_α(−π² t^α), solution exacte pour v0 = sin(πx), f = 0, bords nuls"""
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    decay = mittag_leffler_array(alpha, 1.0, -np.pi ** 2 * t ** alpha)
    return np.multiply.outer(decay, np.sin(np.pi * x))
