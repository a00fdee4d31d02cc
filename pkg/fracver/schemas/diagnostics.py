"""Schémas des diagnostics Sonine et Laplace"""
from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from fracver.schemas.common import FloatArray


class SonineClassification(str, Enum):
    SONINE_PAIR = "SoninePair"
    DEFECTIVE_AT_ZERO = "DefectiveAtZero"


class SonineReport(BaseModel):
    """Intégrales ∫_s^t φ(t−τ)ψ(τ−s)dτ pour des écarts t − s décroissants"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    gaps: FloatArray
    integrals: FloatArray
    classification: SonineClassification
    decay_exponent: Optional[float] = None

    @model_validator(mode="after")
    def _check_gaps(self):
        if np.any(np.diff(self.gaps) >= 0):
            raise ValueError("les écarts doivent décroître strictement")
        if self.gaps.shape != self.integrals.shape:
            raise ValueError("une intégrale par écart")
        return self


class LaplaceProbe(BaseModel):
    """φ̂(s), ψ̂(s) = 1/(s·φ̂(s)) et ψ̂*(s) = ψ̂(s) − 1/φ(0) aux abscisses sondées"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    s_values: FloatArray
    phi_hat: FloatArray
    psi_hat: FloatArray
    psi_hat_star: Optional[FloatArray] = None
