"""
Fonctions spéciales réelles : Gamma, Mittag-Leffler à un, deux et trois paramètres.

Chemins d'évaluation de E_{α,β}(z) :
- série de définition, sommation compensée (math.fsum), pour z >= 0 et pour
  |z| <= series_radius tant que les termes restent modérés ;
- pour 0 < α < 1 et z ≤ −asymptotic_radius : développement asymptotique ;
- pour 0 < α < 1 et z < 0 avec annulation : représentation intégrale réelle
  (valable pour |arg z| > απ), β ramené sous 1 + α par récurrence ;
- sinon : série en précision étendue (mpmath).
"""
import logging
import math
from typing import Optional

import mpmath
import numpy as np
from scipy import integrate, special

from fracver.core.errors import DomainError, NonConvergenceError, PoleError
from fracver.schemas.specfun import DEFAULT_POLICY, MLPolicy

logger = logging.getLogger(__name__)

# Au-delà de ce terme maximal, la série en double perd trop de chiffres
_CANCELLATION_LIMIT = math.log(1e2)
_MAX_PEAK_TERMS = 100_000
_ROW_CHUNK = 512


def _is_pole(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gamma(x: float) -> float:
    """Γ(x) ; PoleError aux entiers négatifs ou nuls."""
    if _is_pole(x):
        raise PoleError("Gamma n'est pas définie aux entiers négatifs ou nuls", x=x)
    return float(special.gamma(x))


def rgamma(x: float) -> float:
    """1/Γ(x), nulle aux pôles de Γ."""
    if _is_pole(x):
        return 0.0
    return float(special.rgamma(x))


def ab_normalization(alpha: float) -> float:
    """Normalisation alternative B(α) = 1 − α + α/Γ(α)"""
    return 1.0 - alpha + alpha / gamma(alpha)


def ml_laplace(alpha: float, beta: float, lam: float, s):
    """Transformée de Laplace de t^(β−1)·E_{α,β}(−λ t^α) : s^(α−β)/(s^α + λ)"""
    s = np.asarray(s, dtype=float)
    return s ** (alpha - beta) / (s ** alpha + lam)


def _check_alpha(alpha: float) -> None:
    if not alpha > 0:
        raise DomainError("Mittag-Leffler : α doit être > 0", alpha=alpha)


# --- Série : termes en échelle logarithmique -------------------------------

def _pochhammer_ratio(gamma_p: float, n_terms: int):
    """(γ)_k / k! par récurrence, rendu en (log|.|, signe)"""
    k = np.arange(1, n_terms, dtype=float)
    ratios = (gamma_p + k - 1.0) / k
    with np.errstate(divide="ignore"):
        log_abs = np.concatenate(([0.0], np.cumsum(np.log(np.abs(ratios)))))
    sign = np.concatenate(([1.0], np.cumprod(np.sign(ratios))))
    return log_abs, sign


def _log_coefficients(alpha: float, beta: float, n_terms: int, gamma_p: Optional[float]):
    """log|c_k/Γ(αk+β)| et signe des coefficients, k = 0..n−1"""
    args = alpha * np.arange(n_terms, dtype=float) + beta
    poles = (args <= 0) & (args == np.floor(args))
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = -special.gammaln(args)
    sign = np.where(args > 0, 1.0, special.gammasgn(args))
    logs[poles] = -np.inf
    sign[poles] = 0.0
    if gamma_p is not None:
        poch_log, poch_sign = _pochhammer_ratio(gamma_p, n_terms)
        logs = logs + poch_log
        sign = sign * poch_sign
    return logs, sign


def _peak_cap(alpha: float, x: float) -> int:
    return int(3.0 * x ** (1.0 / alpha) / alpha) + 64


def _log_terms(alpha, beta, x, n_terms, gamma_p=None) -> np.ndarray:
    logs, _ = _log_coefficients(alpha, beta, n_terms, gamma_p)
    if x == 0:
        return np.where(np.arange(n_terms) == 0, logs, -np.inf)
    return logs + np.arange(n_terms) * math.log(x)


def _term_count(alpha, beta, x, policy: MLPolicy, gamma_p=None, floor: Optional[int] = None) -> int:
    """Nombre de termes nécessaires pour |z| = x (série décroissante après le pic)"""
    cap = max(floor or policy.max_terms, _peak_cap(alpha, x))
    logs = _log_terms(alpha, beta, x, cap, gamma_p)
    peak = int(np.argmax(logs))
    threshold = math.log(policy.series_tol) + max(float(logs[peak]), 0.0) - 5.0
    small = logs[peak:] < threshold
    if small.size >= 4:
        window = np.lib.stride_tricks.sliding_window_view(small, 4).all(axis=1)
        if window.any():
            return peak + int(np.argmax(window)) + 4
    raise NonConvergenceError(
        "série de Mittag-Leffler non convergée", alpha=alpha, beta=beta, x=x, terms=cap
    )


def _series_safe(alpha, beta, z, gamma_p=None) -> bool:
    """Vrai si la série en double précision n'annule pas de chiffres significatifs"""
    if z >= 0:
        return True
    x = -z
    if _peak_cap(alpha, x) > _MAX_PEAK_TERMS:
        return False
    return float(np.max(_log_terms(alpha, beta, x, _peak_cap(alpha, x), gamma_p))) <= _CANCELLATION_LIMIT


def _use_series(alpha, beta, z, policy: MLPolicy, gamma_p=None) -> bool:
    """Série directe : z >= 0, ou |z| <= series_radius sans annulation"""
    if z >= 0:
        return True
    return -z <= policy.series_radius and _series_safe(alpha, beta, z, gamma_p)


def _series_rows(alpha, beta, z: np.ndarray, n_terms: int, gamma_p=None) -> np.ndarray:
    """Série sur un vecteur de z (z != 0), sommation compensée ligne par ligne"""
    logs, sign = _log_coefficients(alpha, beta, n_terms, gamma_p)
    k = np.arange(n_terms)
    out = np.empty(z.size)
    for start in range(0, z.size, _ROW_CHUNK):
        chunk = z[start:start + _ROW_CHUNK]
        log_z = np.log(np.abs(chunk))[:, None]
        parity = np.where(chunk[:, None] < 0, np.where(k % 2 == 0, 1.0, -1.0), 1.0)
        with np.errstate(over="ignore", invalid="ignore"):
            terms = sign * parity * np.exp(logs + k * log_z)
        out[start:start + chunk.size] = [math.fsum(row) for row in terms]
    return out


def _ml_series(alpha, beta, z, policy, gamma_p=None) -> float:
    n_terms = _term_count(alpha, beta, abs(z), policy, gamma_p)
    return float(_series_rows(alpha, beta, np.array([z]), n_terms, gamma_p)[0])


# --- Autres chemins ---------------------------------------------------------

def _ml_asymptotic(alpha, beta, z, policy) -> float:
    """−Σ_{k≥1} z^(−k)/Γ(β−αk), tronquée au plus petit terme"""
    terms = []
    previous = math.inf
    for k in range(1, policy.asymptotic_terms + 1):
        term = -(z ** -k) * rgamma(beta - alpha * k)
        if term == 0.0:
            continue
        if abs(term) > previous:
            break
        terms.append(term)
        previous = abs(term)
    return math.fsum(terms)


def _kernel_integral(alpha, beta, z) -> float:
    """E_{α,β}(z) = ∫_0^∞ K(χ) dχ pour 0 < α < 1, β < 1 + α, z < 0"""
    p = (1.0 - beta) / alpha
    s1 = math.sin(math.pi * (1.0 - beta))
    s2 = math.sin(math.pi * (1.0 - beta + alpha))
    c = math.cos(alpha * math.pi)
    scale = 1.0 / (alpha * math.pi)

    def smooth(chi):
        return scale * math.exp(-chi ** (1.0 / alpha)) * (chi * s1 - z * s2) / (chi * chi - 2.0 * chi * z * c + z * z)

    def full(chi):
        return chi ** p * smooth(chi)

    opts = dict(epsabs=1e-15, epsrel=1e-13, limit=200)
    if p < 0:
        head, _ = integrate.quad(smooth, 0.0, 1.0, weight="alg", wvar=(p, 0.0), **opts)
    else:
        head, _ = integrate.quad(full, 0.0, 1.0, **opts)
    # Dénominateur minimal en χ = z·cos(απ) quand α > 1/2
    bend = max(z * c, 0.0)
    edges = sorted({1.0, max(bend, 1.0), 2.0 * bend + 2.0})
    body = sum(integrate.quad(full, a, b, **opts)[0] for a, b in zip(edges[:-1], edges[1:]))
    tail, _ = integrate.quad(full, edges[-1], np.inf, **opts)
    return head + body + tail


def _ml_negative_integral(alpha, beta, z) -> float:
    # E_{α,β}(z) = (E_{α,β−α}(z) − 1/Γ(β−α)) / z
    if beta < 1.0 + alpha:
        return _kernel_integral(alpha, beta, z)
    return (_ml_negative_integral(alpha, beta - alpha, z) - rgamma(beta - alpha)) / z


def _ml_exp_recurrence(beta: int, z: float) -> float:
    value = math.exp(z)
    for n in range(1, beta):
        value = (value - rgamma(n)) / z
    return value


def _ml_extended(alpha, beta, z, policy, gamma_p=None) -> float:
    """Série en précision étendue (mpmath), plafond de termes relevé"""
    x = abs(z)
    cap = max(policy.midrange_max_terms, _peak_cap(alpha, x))
    peak_log = float(np.max(_log_terms(alpha, beta, x, min(cap, _MAX_PEAK_TERMS), gamma_p)))
    digits = int(max(peak_log, 0.0) / math.log(10.0)) + 30
    with mpmath.workdps(digits):
        zz = mpmath.mpf(z)
        a = mpmath.mpf(alpha)
        tol = mpmath.mpf(policy.series_tol) * mpmath.mpf("1e-3")
        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        coeff = mpmath.mpf(1)
        quiet = 0
        for k in range(cap):
            if k > 0:
                power *= zz
                if gamma_p is not None:
                    coeff *= (mpmath.mpf(gamma_p) + k - 1) / k
            term = coeff * power * mpmath.rgamma(a * k + beta)
            total += term
            quiet = quiet + 1 if abs(term) < tol else 0
            if quiet >= 4 and k > 4:
                return float(total)
    raise NonConvergenceError(
        "série étendue de Mittag-Leffler non convergée", alpha=alpha, beta=beta, z=z, terms=cap
    )


# --- API publique -----------------------------------------------------------

def mittag_leffler(alpha: float, beta: float, z: float, policy: MLPolicy = DEFAULT_POLICY) -> float:
    """E_{α,β}(z) pour z réel"""
    _check_alpha(alpha)
    z = float(z)
    if z == 0.0:
        return rgamma(beta)
    if alpha == 1.0 and beta == 1.0:
        return math.exp(z)
    if z < 0 and alpha < 1.0:
        if z <= -policy.asymptotic_radius:
            logger.debug("E_{%s,%s}(%s) : développement asymptotique", alpha, beta, z)
            return _ml_asymptotic(alpha, beta, z, policy)
        if not _use_series(alpha, beta, z, policy):
            logger.debug("E_{%s,%s}(%s) : représentation intégrale", alpha, beta, z)
            return _ml_negative_integral(alpha, beta, z)
    elif not _use_series(alpha, beta, z, policy):
        if alpha == 1.0 and float(beta).is_integer() and beta >= 1:
            return _ml_exp_recurrence(int(beta), z)
        logger.debug("E_{%s,%s}(%s) : série en précision étendue", alpha, beta, z)
        return _ml_extended(alpha, beta, z, policy)
    return _ml_series(alpha, beta, z, policy)


def prabhakar_ml(alpha: float, beta: float, gamma_p: float, z: float,
                 policy: MLPolicy = DEFAULT_POLICY) -> float:
    """E^γ_{α,β}(z) = Σ (γ)_k z^k / (k! Γ(αk+β))"""
    _check_alpha(alpha)
    z = float(z)
    if gamma_p == 0.0 or z == 0.0:
        return rgamma(beta)
    if gamma_p == 1.0:
        return mittag_leffler(alpha, beta, z, policy)
    if _use_series(alpha, beta, z, policy, gamma_p):
        return _ml_series(alpha, beta, z, policy, gamma_p)
    logger.debug("E^%s_{%s,%s}(%s) : série en précision étendue", gamma_p, alpha, beta, z)
    return _ml_extended(alpha, beta, z, policy, gamma_p)


def _array_eval(alpha, beta, z, policy, gamma_p, scalar) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    flat = z.ravel()
    out = np.full(flat.shape, rgamma(beta))
    nonzero = flat != 0.0
    if not nonzero.any():
        return out.reshape(z.shape)
    values = flat[nonzero]
    lowest = float(values.min())
    if _use_series(alpha, beta, min(lowest, 0.0), policy, gamma_p):
        n_terms = _term_count(alpha, beta, float(np.abs(values).max()), policy, gamma_p)
        out[nonzero] = _series_rows(alpha, beta, values, n_terms, gamma_p)
    else:
        out[nonzero] = [scalar(v) for v in values]
    return out.reshape(z.shape)


def mittag_leffler_array(alpha: float, beta: float, z, policy: MLPolicy = DEFAULT_POLICY) -> np.ndarray:
    """Version vectorisée de mittag_leffler (tables de noyaux)"""
    _check_alpha(alpha)
    if alpha == 1.0 and beta == 1.0:
        return np.exp(np.asarray(z, dtype=float))
    return _array_eval(alpha, beta, z, policy, None,
                       lambda v: mittag_leffler(alpha, beta, v, policy))


def prabhakar_ml_array(alpha: float, beta: float, gamma_p: float, z,
                       policy: MLPolicy = DEFAULT_POLICY) -> np.ndarray:
    _check_alpha(alpha)
    if gamma_p == 0.0:
        return np.full(np.shape(z), rgamma(beta))
    if gamma_p == 1.0:
        return mittag_leffler_array(alpha, beta, z, policy)
    return _array_eval(alpha, beta, z, policy, gamma_p,
                       lambda v: prabhakar_ml(alpha, beta, gamma_p, v, policy))
