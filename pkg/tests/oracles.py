"""Références en précision étendue"""
import mpmath


def ml_series_oracle(alpha: float, beta: float, z: float, gamma_p: float = 1.0) -> float:
    """Série de E^γ_{α,β}(z) sommée avec mpmath (200 chiffres)"""
    peak = abs(z) ** (1.0 / alpha) / alpha
    with mpmath.workdps(200):
        a, b, g, x = (mpmath.mpf(v) for v in (alpha, beta, gamma_p, z))
        total = mpmath.mpf(0)
        k = 0
        while True:
            term = mpmath.rf(g, k) * x ** k * mpmath.rgamma(a * k + b) / mpmath.factorial(k)
            total += term
            if k > peak + 20 and abs(term) < mpmath.mpf(10) ** -60 * max(1, abs(total)):
                return float(total)
            k += 1
