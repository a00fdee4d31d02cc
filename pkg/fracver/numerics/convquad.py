"""
Quadrature de convolution par produit sur grille uniforme.

∫_0^{t_n} k(t_n − τ) u(τ) dτ ≈ Σ_{j<n} w[n][j] · u_j, où w[n][j] intègre
exactement le noyau sur la cellule [t_j, t_{j+1}] et u_j est la moyenne de u
sur la cellule (point milieu analytique ou moyenne des nœuds).
"""
import csv
import logging
import threading
from pathlib import Path
from typing import Optional

import numpy as np
from cachetools import LRUCache

from fracver.core.config import settings
from fracver.core.errors import (
    DomainError,
    GridTooSmallError,
    MissingDerivativeError,
    SingularityError,
    UnsupportedKernelError,
)
from fracver.numerics.specfun import gamma, mittag_leffler_array, prabhakar_ml_array
from fracver.schemas.grid import Grid, SampledFunction
from fracver.schemas.kernel import ABML, CFExp, KernelSpec, PowerLaw, PrabhakarK, Tabulated, WeightTable

logger = logging.getLogger(__name__)

_GAUSS_NODES, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(4)

_weight_cache: LRUCache = LRUCache(maxsize=settings.WEIGHT_CACHE_SIZE)
_weight_lock = threading.Lock()


def is_bounded(k: KernelSpec) -> bool:
    return k.is_bounded


def kernel_value(k: KernelSpec, s):
    """Valeur ponctuelle du noyau (scalaire ou tableau)"""
    s_arr = np.asarray(s, dtype=float)
    if np.any(s_arr < 0):
        raise DomainError("le noyau n'est défini que pour s >= 0", kernel=k.kind)
    if np.any(s_arr == 0) and not k.is_bounded:
        raise SingularityError("noyau non borné évalué en s = 0", kernel=k.kind)

    if isinstance(k, PowerLaw):
        with np.errstate(divide="ignore"):
            out = k.scale * np.where(s_arr == 0, 1.0 if k.mu == 1 else 0.0,
                                     s_arr ** (k.mu - 1.0)) / gamma(k.mu)
    elif isinstance(k, CFExp):
        out = k.M / (1 - k.alpha) * np.exp(-k.W * s_arr)
    elif isinstance(k, ABML):
        out = k.B / (1 - k.alpha) * mittag_leffler_array(k.alpha, 1.0, -k.W * s_arr ** k.alpha)
    elif isinstance(k, PrabhakarK):
        out = s_arr ** (k.beta - 1.0) * prabhakar_ml_array(k.alpha, k.beta, k.gamma_p, k.lam * s_arr ** k.alpha)
    else:
        grid_s = k.samples.nodes
        if np.any(s_arr > grid_s[-1] * (1 + 1e-12)):
            raise DomainError("s au-delà de la plage tabulée", s_max=float(grid_s[-1]))
        out = np.interp(s_arr, grid_s, k.samples.values)
    return float(out) if np.ndim(s) == 0 else out


def kernel_at_zero(k: KernelSpec) -> float:
    """φ(0) d'un noyau borné"""
    return float(kernel_value(k, 0.0))


def kernel_antiderivative(k: KernelSpec, s) -> np.ndarray:
    """∫_0^s k(r) dr, exacte pour les noyaux analytiques"""
    s = np.asarray(s, dtype=float)
    if isinstance(k, PowerLaw):
        return k.scale * s ** k.mu / gamma(k.mu + 1.0)
    if isinstance(k, CFExp):
        return -(k.M / k.alpha) * np.expm1(-k.W * s)
    if isinstance(k, ABML):
        return k.B / (1 - k.alpha) * s * mittag_leffler_array(k.alpha, 2.0, -k.W * s ** k.alpha)
    if isinstance(k, PrabhakarK):
        return s ** k.beta * prabhakar_ml_array(k.alpha, k.beta + 1.0, k.gamma_p, k.lam * s ** k.alpha)
    # Tabulé : Gauss sur les cellules de la table
    nodes = k.samples.nodes
    cells = _gauss_cells(k, nodes[:-1], nodes[1:])
    cumulative = np.concatenate(([0.0], np.cumsum(cells)))
    return np.interp(s, nodes, cumulative)


def _gauss_cells(k: Tabulated, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Gauss à 4 points sur chaque cellule [a_i, b_i]"""
    half = 0.5 * (b - a)
    centre = 0.5 * (b + a)
    points = centre[:, None] + half[:, None] * _GAUSS_NODES[None, :]
    values = np.interp(points, k.samples.nodes, k.samples.values)
    return half * (values @ _GAUSS_WEIGHTS)


def _rectangle_increments(k: KernelSpec, grid: Grid) -> np.ndarray:
    h = grid.h
    m = np.arange(grid.N + 1, dtype=float)
    if isinstance(k, PowerLaw):
        c = k.scale * (m ** k.mu - np.maximum(m - 1.0, 0.0) ** k.mu) * h ** k.mu / gamma(k.mu + 1.0)
    elif isinstance(k, CFExp):
        c = (k.M / k.alpha) * np.exp(-k.W * (m - 1.0) * h) * (-np.expm1(-k.W * h))
    elif isinstance(k, Tabulated):
        if k.samples.nodes[-1] < grid.T * (1 - 1e-12):
            raise DomainError("le noyau tabulé ne couvre pas [0, T]", T=grid.T)
        c = np.concatenate(([0.0], _gauss_cells(k, (m[1:] - 1.0) * h, m[1:] * h)))
    else:
        primitive = kernel_antiderivative(k, m * h)
        c = np.concatenate(([0.0], np.diff(primitive)))
    c[0] = 0.0
    return c


def _trapezoid_moments(k: KernelSpec, grid: Grid):
    """Poids (gauche, droite) du produit trapèze ; moments exacts"""
    h = grid.h
    m = np.arange(1, grid.N + 1, dtype=float)
    if isinstance(k, CFExp):
        W = k.W
        amplitude = k.M / (1 - k.alpha) * np.exp(-W * (m - 1.0) * h)
        zeroth = -np.expm1(-W * h) / W
        first = (1.0 - np.exp(-W * h) * (1.0 + W * h)) / W ** 2
        left = amplitude * first / h
        total = amplitude * zeroth
    elif isinstance(k, PowerLaw):
        mu = k.mu
        # ∫_0^s r·k(r) dr = scale·μ·s^(μ+1)/Γ(μ+2)
        moment = k.scale * mu * (m * h) ** (mu + 1.0) / gamma(mu + 2.0)
        moment_prev = k.scale * mu * ((m - 1.0) * h) ** (mu + 1.0) / gamma(mu + 2.0)
        total = k.scale * (m ** mu - (m - 1.0) ** mu) * h ** mu / gamma(mu + 1.0)
        left = (moment - moment_prev - (m - 1.0) * h * total) / h
    else:
        raise UnsupportedKernelError("produit trapèze disponible pour CFExp et PowerLaw", kernel=k.kind)
    right = total - left
    pad = np.zeros(1)
    return np.concatenate((pad, total)), np.concatenate((pad, left)), np.concatenate((pad, right))


def pi_rectangle_weights(k: KernelSpec, grid: Grid) -> WeightTable:
    """Table w[n][j] = ∫_{t_j}^{t_{j+1}} k(t_n − τ) dτ (mise en cache)"""
    return _cached_table(k, grid, "rectangle")


def pi_trapezoid_weights(k: KernelSpec, grid: Grid) -> WeightTable:
    return _cached_table(k, grid, "trapezoid")


def _cached_table(k: KernelSpec, grid: Grid, scheme: str) -> WeightTable:
    key = (k.model_dump_json(), grid.T, grid.N, scheme)
    with _weight_lock:
        table = _weight_cache.get(key)
    if table is not None:
        return table
    logger.debug("poids %s calculés pour %s (N=%d)", scheme, k.kind, grid.N)
    if scheme == "rectangle":
        table = WeightTable(grid=grid, increments=_rectangle_increments(k, grid))
    else:
        total, left, right = _trapezoid_moments(k, grid)
        table = WeightTable(grid=grid, scheme="trapezoid", increments=total, left=left, right=right)
    for array in (table.increments, table.left, table.right):
        if array is not None:
            array.setflags(write=False)
    with _weight_lock:
        _weight_cache[key] = table
    return table


def _causal_convolution(c: np.ndarray, u: np.ndarray, size: int) -> np.ndarray:
    """out[n] = Σ_{m=1}^{n} c[m]·u[n−m]"""
    return np.convolve(c, u)[:size]


def convolve_value(k: KernelSpec, f: SampledFunction, grid: Grid,
                   cell_values: Optional[np.ndarray] = None,
                   scheme: str = "rectangle") -> SampledFunction:
    """∫_0^t k(t − τ) f(τ) dτ sur la grille ; valeur limite 0 en t_0"""
    size = grid.N + 1
    if scheme == "trapezoid":
        table = pi_trapezoid_weights(k, grid)
        out = (_causal_convolution(table.left, f.values[:-1], size)
               + _causal_convolution(table.right, f.values[1:], size))
    else:
        table = pi_rectangle_weights(k, grid)
        if cell_values is None:
            cell_values = 0.5 * (f.values[:-1] + f.values[1:])
        out = _causal_convolution(table.increments, cell_values, size)
    out[0] = 0.0
    return SampledFunction(grid=grid, values=out, limit_at_zero=True, warnings=list(f.warnings))


def convolve_derivative(k: KernelSpec, f: SampledFunction, grid: Grid,
                        cell_slopes: Optional[np.ndarray] = None,
                        scheme: str = "rectangle") -> SampledFunction:
    """∫_0^t k(t − τ) f′(τ) dτ sur la grille ; valeur limite 0 en t_0

    Rectangle : pente par cellule = moyenne des dérivées fournies aux deux
    nœuds, ou (y_{j+1} − y_j)/h si ces dérivées sont elles-mêmes numériques.
    """
    if f.deriv_values is None:
        raise MissingDerivativeError("convolve_derivative exige des valeurs de dérivée", kernel=k.kind)
    size = grid.N + 1
    if scheme == "trapezoid":
        table = pi_trapezoid_weights(k, grid)
        d = f.deriv_values
        out = (_causal_convolution(table.left, d[:-1], size)
               + _causal_convolution(table.right, d[1:], size))
    else:
        table = pi_rectangle_weights(k, grid)
        if cell_slopes is None and f.numeric_derivative:
            cell_slopes = np.diff(f.values) / grid.h
        elif cell_slopes is None:
            cell_slopes = 0.5 * (f.deriv_values[:-1] + f.deriv_values[1:])
        out = _causal_convolution(table.increments, cell_slopes, size)
    out[0] = 0.0
    return SampledFunction(grid=grid, values=out, limit_at_zero=True, warnings=list(f.warnings))


def differentiate_samples(f: SampledFunction) -> SampledFunction:
    """Dérivée par différences centrées d'ordre 2 (décentrées d'ordre 2 aux bords)"""
    if f.grid.N < 2:
        raise GridTooSmallError("differentiate_samples exige N >= 2", N=f.grid.N)
    deriv = np.gradient(f.values, f.grid.h, edge_order=2)
    return f.with_derivative(deriv, numeric=True)


def read_samples_csv(path: Path) -> SampledFunction:
    """Lit un CSV `t,value[,deriv]` sur grille uniforme partant de 0"""
    with open(path, newline="") as handle:
        rows = list(csv.DictReader(handle))
    if len(rows) < 2:
        raise GridTooSmallError("au moins deux lignes sont nécessaires", path=str(path))
    t = np.array([float(r["t"]) for r in rows])
    values = np.array([float(r["value"]) for r in rows])
    grid = Grid(T=float(t[-1]), N=len(t) - 1)
    if abs(t[0]) > 1e-12 or not np.allclose(t, grid.nodes, rtol=0, atol=1e-9 * max(grid.T, 1.0)):
        raise DomainError("le CSV doit être échantillonné sur une grille uniforme de [0, T]", path=str(path))
    deriv = None
    if "deriv" in rows[0] and rows[0]["deriv"] not in (None, ""):
        deriv = np.array([float(r["deriv"]) for r in rows])
    return SampledFunction(grid=grid, values=values, deriv_values=deriv)
