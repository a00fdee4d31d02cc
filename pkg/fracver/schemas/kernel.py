"""Schémas Pydantic pour les noyaux de convolution"""
from typing import Annotated, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from fracver.schemas.common import FloatArray
from fracver.schemas.grid import Grid, SampledFunction


class PowerLaw(BaseModel):
    """scale · s^(μ−1)/Γ(μ) ; singulier en 0 si μ < 1"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["power"] = "power"
    mu: float = Field(..., gt=0)
    scale: float = Field(1.0, description="Facteur multiplicatif (ψ* de J̃_ψ)")

    @property
    def is_bounded(self) -> bool:
        return self.mu >= 1


class CFExp(BaseModel):
    """Noyau Caputo-Fabrizio (M/(1−α))·exp(−W s)"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["cf"] = "cf"
    alpha: float = Field(..., gt=0, lt=1)
    M: float = Field(1.0, gt=0)

    @property
    def W(self) -> float:
        return self.alpha / (1 - self.alpha)

    @property
    def is_bounded(self) -> bool:
        return True


class ABML(BaseModel):
    """Noyau Atangana-Baleanu (B/(1−α))·E_α(−W s^α)"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["abc"] = "abc"
    alpha: float = Field(..., gt=0, lt=1)
    B: float = Field(1.0, gt=0)

    @property
    def W(self) -> float:
        return self.alpha / (1 - self.alpha)

    @property
    def is_bounded(self) -> bool:
        return True


class PrabhakarK(BaseModel):
    """Noyau de Prabhakar s^(β−1)·E^γ_{α,β}(λ s^α)"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["prabhakar"] = "prabhakar"
    alpha: float = Field(..., gt=0)
    beta: float = Field(..., gt=0)
    gamma_p: float = 0.0
    lam: float = 0.0

    @property
    def is_bounded(self) -> bool:
        # Toujours traité comme singulier, même pour β >= 1
        return False


class Tabulated(BaseModel):
    """Noyau échantillonné par l'utilisateur, interpolé linéairement"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["tabulated"] = "tabulated"
    samples: SampledFunction

    @property
    def is_bounded(self) -> bool:
        return True


KernelSpec = Annotated[
    Union[PowerLaw, CFExp, ABML, PrabhakarK, Tabulated],
    Field(discriminator="kind"),
]


class WeightTable(BaseModel):
    """Poids de quadrature produit, invariants par translation : w[n][j] = c[n−j]

    Schéma rectangle : c[m] = ∫ sur la cellule m du noyau. Schéma trapèze :
    left[m] (nœud t_j) et right[m] (nœud t_{j+1}), avec left + right = c.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    grid: Grid
    scheme: Literal["rectangle", "trapezoid"] = "rectangle"
    increments: FloatArray
    left: Optional[FloatArray] = None
    right: Optional[FloatArray] = None

    def row(self, n: int) -> np.ndarray:
        """w[n][j] pour j = 0..n−1"""
        return self.increments[n:0:-1].copy()
