"""Schémas Grünwald-Letnikov"""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from fracver.schemas.common import FloatArray


class ExtensionKind(str, Enum):
    """Prolongement de f avant différences : f_R (par zéro) ou f_C (f − f(0))"""
    ZERO = "zero"
    TAYLOR = "taylor"


class GLWeights(BaseModel):
    """Coefficients ω_0..ω_N d'ordre α"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alpha: float = Field(..., gt=0, le=1)
    omega: FloatArray
