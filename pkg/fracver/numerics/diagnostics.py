"""
Diagnostics : équation de Sonine et transformées de Laplace des noyaux.

Rendent observables l'impossibilité d'un noyau borné dans une paire de Sonine
et la construction de l'opérateur J̃_ψ associé aux noyaux CF et ABC.
"""
import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import special

from fracver.core.errors import (
    DomainError,
    NotApplicableError,
    QuadratureError,
    UnsupportedKernelError,
)
from fracver.numerics.convquad import (
    convolve_value,
    differentiate_samples,
    kernel_antiderivative,
    kernel_at_zero,
    kernel_value,
)
from fracver.numerics.operators import generic_dphi, initial_value, prepare_input
from fracver.schemas.diagnostics import LaplaceProbe, SonineClassification, SonineReport
from fracver.schemas.grid import FunctionInput, Grid, SampledFunction
from fracver.schemas.kernel import ABML, CFExp, KernelSpec, PowerLaw, PrabhakarK, Tabulated

logger = logging.getLogger(__name__)

SONINE_TOLERANCE = 1e-6
SONINE_CELLS = 4096
SONINE_GRADING = 2.0
FINAL_VALUE_S = 1e4

_PANEL_NODES, _PANEL_WEIGHTS = np.polynomial.legendre.leggauss(16)


# --- Sonine -----------------------------------------------------------------

def _sonine_integral(phi: KernelSpec, psi: KernelSpec, gap: float, cells: int) -> float:
    """∫_0^δ φ(δ − τ)ψ(τ) dτ ; chaque moitié intègre exactement le facteur singulier

    Maillage gradué vers l'extrémité singulière, l'autre facteur est pris au
    milieu de chaque cellule.
    """
    half = cells // 2
    edges = 0.5 * gap * np.linspace(0.0, 1.0, half + 1) ** SONINE_GRADING
    mids = 0.5 * (edges[:-1] + edges[1:])
    near_zero = kernel_value(phi, gap - mids) * np.diff(kernel_antiderivative(psi, edges))
    near_gap = kernel_value(psi, gap - mids) * np.diff(kernel_antiderivative(phi, edges))
    return math.fsum(near_zero) + math.fsum(near_gap)


def _fit_exponent(gaps: np.ndarray, integrals: np.ndarray) -> Optional[float]:
    """Pente log-log sur la moitié des écarts la plus proche de 0"""
    tail = max(2, gaps.size // 2)
    x, y = gaps[-tail:], integrals[-tail:]
    if x.size < 2 or np.any(y <= 0):
        return None
    slope, _ = np.polyfit(np.log(x), np.log(y), 1)
    return float(slope)


def sonine_check(phi: KernelSpec, psi: KernelSpec, gaps: Sequence[float],
                 tolerance: float = SONINE_TOLERANCE, cells: int = SONINE_CELLS) -> SonineReport:
    """Teste φ∗ψ ≡ 1 sur des écarts t − s décroissants"""
    gaps = np.sort(np.asarray(gaps, dtype=float))[::-1]
    if gaps.size == 0 or np.any(gaps <= 0):
        raise DomainError("les écarts doivent être > 0", gaps=gaps.tolist())
    integrals = np.array([_sonine_integral(phi, psi, float(g), max(cells, 256)) for g in gaps])
    if not np.all(np.isfinite(integrals)):
        raise QuadratureError("intégrale de Sonine non finie", phi=phi.kind, psi=psi.kind)
    if np.all(np.abs(integrals - 1.0) <= tolerance):
        return SonineReport(gaps=gaps, integrals=integrals, classification=SonineClassification.SONINE_PAIR)
    return SonineReport(
        gaps=gaps,
        integrals=integrals,
        classification=SonineClassification.DEFECTIVE_AT_ZERO,
        decay_exponent=_fit_exponent(gaps, integrals),
    )


def sonine_pair_for(k: KernelSpec) -> KernelSpec:
    """Partenaire de Sonine des noyaux singuliers connus"""
    if isinstance(k, PowerLaw) and k.mu < 1:
        return PowerLaw(mu=1.0 - k.mu, scale=1.0 / k.scale)
    if isinstance(k, PrabhakarK) and k.beta < 1:
        return PrabhakarK(alpha=k.alpha, beta=1.0 - k.beta, gamma_p=-k.gamma_p, lam=k.lam)
    raise UnsupportedKernelError("aucun partenaire de Sonine pour ce noyau", kernel=k.kind)


# --- Laplace ----------------------------------------------------------------

def _panel_edges(T: float, s: float) -> np.ndarray:
    geometric = T * 2.0 ** -np.arange(60)
    uniform = np.linspace(0.0, T, int(min(max(math.ceil(s * T / 4.0), 1), 4000)) + 1)
    return np.unique(np.concatenate(([0.0], geometric, uniform)))


def laplace_transform_numeric(k: KernelSpec, s: float, T: float) -> float:
    """∫_0^T e^(−st) k(t) dt (noyau prolongé par 0 au-delà de T)"""
    if s <= 0:
        raise DomainError("la transformée de Laplace exige s > 0", s=s)
    if T <= 0:
        raise DomainError("l'horizon T doit être > 0", T=T)
    if isinstance(k, CFExp):
        rate = s + k.W
        return k.M / (1 - k.alpha) / rate * -math.expm1(-rate * T)
    if isinstance(k, PowerLaw):
        return k.scale * s ** -k.mu * float(special.gammainc(k.mu, s * T))
    if isinstance(k, Tabulated):
        T = min(T, float(k.samples.nodes[-1]))
    edges = _panel_edges(T, s)
    a, b = edges[:-1], edges[1:]
    half = 0.5 * (b - a)
    points = (0.5 * (a + b))[:, None] + half[:, None] * _PANEL_NODES[None, :]
    values = kernel_value(k, points.ravel()).reshape(points.shape) * np.exp(-s * points)
    total = math.fsum((half[:, None] * values * _PANEL_WEIGHTS[None, :]).ravel())
    if not math.isfinite(total):
        raise QuadratureError("transformée de Laplace non finie", kernel=k.kind, s=s)
    return total


def _truncation_horizon(s: float) -> float:
    # e^(−sT) négligeable devant 1e−8 pour les noyaux bornés usuels
    return 40.0 / s


def final_value_check(k: KernelSpec, s: float = FINAL_VALUE_S) -> float:
    """s·φ̂(s) pour s grand ; tend vers φ(0) quand φ est borné"""
    if not k.is_bounded:
        raise NotApplicableError("le théorème de la valeur finale exige un noyau borné", kernel=k.kind)
    return s * laplace_transform_numeric(k, s, _truncation_horizon(s))


def psi_hat_probe(k: KernelSpec, s_values: Sequence[float], T: Optional[float] = None) -> LaplaceProbe:
    """Sonde ψ̂(s) = 1/(s·φ̂(s)) ; ψ̂* seulement pour les noyaux bornés"""
    s_values = np.asarray(s_values, dtype=float)
    phi_hat = np.array([
        laplace_transform_numeric(k, float(s), T if T is not None else _truncation_horizon(float(s)))
        for s in s_values
    ])
    psi_hat = 1.0 / (s_values * phi_hat)
    star = psi_hat - 1.0 / kernel_at_zero(k) if k.is_bounded else None
    return LaplaceProbe(s_values=s_values, phi_hat=phi_hat, psi_hat=psi_hat, psi_hat_star=star)


# --- J̃_ψ ---------------------------------------------------------------------

def construct_jpsi_star(k: KernelSpec) -> Tuple[float, PowerLaw]:
    """J̃_ψ u = u/φ(0) + ψ*∗u, forme close pour CFExp et ABML"""
    if isinstance(k, CFExp):
        return (1 - k.alpha) / k.M, PowerLaw(mu=1.0, scale=k.alpha / k.M)
    if isinstance(k, ABML):
        return (1 - k.alpha) / k.B, PowerLaw(mu=k.alpha, scale=k.alpha / k.B)
    raise UnsupportedKernelError("J̃_ψ n'est construit que pour CFExp et ABML", kernel=k.kind)


def apply_jpsi_tilde(k: KernelSpec, f: FunctionInput, grid: Grid) -> Tuple[SampledFunction, SampledFunction]:
    """Renvoie (J̃_ψ f, J_{ψ*} f)"""
    constant, psi_star = construct_jpsi_star(k)
    sampled, cell_values, _ = prepare_input(f, grid)
    history = convolve_value(psi_star, sampled, grid, cell_values=cell_values)
    values = constant * sampled.values + history.values
    return SampledFunction(grid=grid, values=values, warnings=list(sampled.warnings)), history


def jpsi_tilde_residual(k: KernelSpec, f: FunctionInput, grid: Grid) -> Tuple[float, float]:
    """max|D_φ[J̃_ψ f] − (f − (φ/φ(0))·f(0))| sur les nœuds intérieurs

    Le terme φ·lim J_{ψ*}f de l'identité est nul pour f bornée. Renvoie
    (résidu, J_{ψ*} f(t_1)) ; la seconde valeur tend vers cette limite nulle
    quand la grille est raffinée.
    """
    tilde, history = apply_jpsi_tilde(k, f, grid)
    composed = generic_dphi(k, differentiate_samples(tilde), grid)
    phi = kernel_value(k, grid.nodes)
    phi0 = kernel_at_zero(k)
    sampled, _, _ = prepare_input(f, grid)
    predicted = sampled.values - phi / phi0 * initial_value(f)
    interior = slice(1, grid.N)
    return float(np.max(np.abs(composed.values[interior] - predicted[interior]))), float(history.values[1])
