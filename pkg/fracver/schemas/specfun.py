"""Schéma de la politique d'évaluation Mittag-Leffler"""
from pydantic import BaseModel, ConfigDict, Field, model_validator

from fracver.core.config import settings


class MLPolicy(BaseModel):
    """Contrôle de l'évaluation de E_{α,β} et E^γ_{α,β}"""
    model_config = ConfigDict(frozen=True)

    series_radius: float = Field(settings.ML_SERIES_RADIUS, gt=0)
    asymptotic_radius: float = Field(settings.ML_ASYMPTOTIC_RADIUS, gt=0)
    series_tol: float = Field(1e-15, gt=0)
    max_terms: int = Field(settings.ML_MAX_TERMS, ge=1)
    asymptotic_terms: int = Field(30, ge=1)
    # Plafond de termes dans la zone intermédiaire
    midrange_max_terms: int = Field(2000, ge=1)

    @model_validator(mode="after")
    def _check_radii(self):
        if self.series_radius >= self.asymptotic_radius:
            raise ValueError("series_radius doit être < asymptotic_radius")
        return self


DEFAULT_POLICY = MLPolicy()
