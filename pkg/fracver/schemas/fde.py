"""Schémas des problèmes de Cauchy fractionnaires"""
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from fracver.schemas.grid import Grid, SampledFunction
from fracver.schemas.kernel import KernelSpec
from fracver.schemas.operator import OperatorKind

# g(t, y) -> réel ; g_t et g_y sont les dérivées partielles
RightHandSide = Callable[[float, float], float]

SOLVABLE_KINDS = (
    OperatorKind.CAPUTO_DERIVATIVE,
    OperatorKind.CF_DERIVATIVE,
    OperatorKind.ABC_DERIVATIVE,
    OperatorKind.GENERIC_DPHI,
)


class FDEProblem(BaseModel):
    """D y = g(t, y), y(0) = y0 sur une grille uniforme"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: OperatorKind
    alpha: float = Field(..., gt=0, lt=1)
    kernel: Optional[KernelSpec] = None
    g: RightHandSide
    g_t: Optional[RightHandSide] = None
    g_y: Optional[RightHandSide] = None
    y0: float = 0.0
    grid: Grid
    M: float = Field(1.0, gt=0)
    B: float = Field(1.0, gt=0)

    @model_validator(mode="after")
    def _check_kind(self):
        if self.kind not in SOLVABLE_KINDS:
            raise ValueError(f"opérateur non supporté pour une EDF : {self.kind.value}")
        if self.kind == OperatorKind.GENERIC_DPHI and self.kernel is None:
            raise ValueError("kind=dphi exige un noyau")
        return self

    def initial_rhs(self) -> float:
        return float(self.g(0.0, self.y0))


class ResidualReport(BaseModel):
    """Résidu D y − g(t, y) comparé au défaut prédit en forme close"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    residual: SampledFunction
    predicted_defect: SampledFunction
    max_mismatch: float

    @property
    def relative_mismatch(self) -> np.ndarray:
        """|résidu/défaut − 1| aux nœuds intérieurs où le défaut est non nul"""
        interior = slice(1, self.residual.grid.N)
        predicted = self.predicted_defect.values[interior]
        residual = self.residual.values[interior]
        mask = predicted != 0
        return np.abs(residual[mask] / predicted[mask] - 1.0)
