"""Fonctions de test nommées et sélecteurs (noyaux, seconds membres, données initiales) de la CLI"""
import math
from pathlib import Path
from typing import Callable, Tuple

import numpy as np

from fracver.core.errors import DomainError
from fracver.numerics.convquad import read_samples_csv
from fracver.schemas.fde import RightHandSide
from fracver.schemas.grid import AnalyticFunction, FunctionInput
from fracver.schemas.kernel import ABML, CFExp, KernelSpec, PowerLaw, PrabhakarK, Tabulated


def constant(c: float = 1.0) -> AnalyticFunction:
    return AnalyticFunction(name=f"const:{c}", f=lambda t: np.full_like(t, c), df=np.zeros_like)


def power(gamma_exp: float) -> AnalyticFunction:
    """t^γ, γ >= 0"""
    if gamma_exp < 0:
        raise DomainError("power:γ exige γ >= 0", gamma=gamma_exp)
    if gamma_exp == 0:
        return constant(1.0)
    return AnalyticFunction(
        name=f"power:{gamma_exp}",
        f=lambda t: t ** gamma_exp,
        df=lambda t: gamma_exp * t ** (gamma_exp - 1.0),
    )


COS = AnalyticFunction(name="cos", f=np.cos, df=lambda t: -np.sin(t))
SIN = AnalyticFunction(name="sin", f=np.sin, df=np.cos)
EXP = AnalyticFunction(name="exp", f=np.exp, df=np.exp)
LINEAR = AnalyticFunction(name="linear", f=lambda t: t, df=np.ones_like)
POLY3 = AnalyticFunction(name="poly3", f=lambda t: 1.0 + t ** 3, df=lambda t: 3.0 * t ** 2)

_NAMED = {"cos": COS, "sin": SIN, "exp": EXP, "linear": LINEAR, "poly3": POLY3}


def _numbers(selector: str, parts, minimum: int, maximum: int):
    if not minimum <= len(parts) <= maximum:
        raise DomainError(f"sélecteur mal formé : {selector!r}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise DomainError(f"paramètre non numérique dans {selector!r}") from None


def named_function(selector: str) -> FunctionInput:
    """const[:c], linear, power:γ, cos, sin, exp, poly3 ou csv:CHEMIN"""
    head, _, rest = selector.partition(":")
    if head in _NAMED and not rest:
        return _NAMED[head]
    if head == "const":
        values = _numbers(selector, rest.split(":") if rest else [], 0, 1)
        return constant(values[0] if values else 1.0)
    if head == "power":
        (gamma_exp,) = _numbers(selector, rest.split(":"), 1, 1)
        return power(gamma_exp)
    if head == "csv" and rest:
        return read_samples_csv(Path(rest))
    raise DomainError(f"fonction inconnue : {selector!r}",
                      expected="const[:c], linear, power:γ, cos, sin, exp, poly3, csv:CHEMIN")


def parse_kernel(selector: str) -> KernelSpec:
    """power:μ, cf:α[:M], abc:α[:B], prabhakar:α:β:γ:λ ou csv:CHEMIN"""
    head, _, rest = selector.partition(":")
    parts = rest.split(":") if rest else []
    if head == "power":
        (mu,) = _numbers(selector, parts, 1, 1)
        return PowerLaw(mu=mu)
    if head == "cf":
        values = _numbers(selector, parts, 1, 2)
        return CFExp(alpha=values[0], M=values[1] if len(values) > 1 else 1.0)
    if head == "abc":
        values = _numbers(selector, parts, 1, 2)
        return ABML(alpha=values[0], B=values[1] if len(values) > 1 else 1.0)
    if head == "prabhakar":
        alpha, beta, gamma_p, lam = _numbers(selector, parts, 4, 4)
        return PrabhakarK(alpha=alpha, beta=beta, gamma_p=gamma_p, lam=lam)
    if head == "csv" and rest:
        return Tabulated(samples=read_samples_csv(Path(rest)))
    raise DomainError(f"noyau inconnu : {selector!r}",
                      expected="power:μ, cf:α[:M], abc:α[:B], prabhakar:α:β:γ:λ, csv:CHEMIN")


# Seconds membres g(t, y) de la commande `solve`, avec g_t et g_y
_RHS_NAMES = "const[:c], decay:λ, sin-y, cos"


def named_rhs(selector: str) -> Tuple[RightHandSide, RightHandSide, RightHandSide]:
    """const[:c] (g = c), decay:λ (g = −λ y), sin-y (g = sin(t)·y) ou cos (g = cos t)"""
    head, _, rest = selector.partition(":")
    if head == "const":
        values = _numbers(selector, rest.split(":") if rest else [], 0, 1)
        c = values[0] if values else 1.0
        return (lambda t, y: c), (lambda t, y: 0.0), (lambda t, y: 0.0)
    if head == "decay":
        (lam,) = _numbers(selector, rest.split(":"), 1, 1)
        return (lambda t, y: -lam * y), (lambda t, y: 0.0), (lambda t, y: -lam)
    if head == "sin-y" and not rest:
        return (lambda t, y: math.sin(t) * y), (lambda t, y: math.cos(t) * y), (lambda t, y: math.sin(t))
    if head == "cos" and not rest:
        return (lambda t, y: math.cos(t)), (lambda t, y: -math.sin(t)), (lambda t, y: 0.0)
    raise DomainError(f"second membre inconnu : {selector!r}", expected=_RHS_NAMES)


def named_profile(selector: str) -> Callable:
    """Donnée initiale v0(x) sur [0, 1] : sin[:c] (c·sin(πx)), bump (x(1 − x)) ou zero"""
    head, _, rest = selector.partition(":")
    if head == "sin":
        values = _numbers(selector, rest.split(":") if rest else [], 0, 1)
        c = values[0] if values else 1.0
        return lambda x: c * np.sin(np.pi * np.asarray(x, dtype=float))
    if head == "bump" and not rest:
        return lambda x: np.asarray(x, dtype=float) * (1.0 - np.asarray(x, dtype=float))
    if head == "zero" and not rest:
        return lambda x: np.zeros_like(np.asarray(x, dtype=float))
    raise DomainError(f"donnée initiale inconnue : {selector!r}", expected="sin[:c], bump, zero")
