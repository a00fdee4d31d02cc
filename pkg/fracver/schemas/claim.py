"""Schémas Pydantic du harnais de vérification"""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class Direction(str, Enum):
    """upper : défaut ≤ tolérance ; lower : persistance ≥ seuil"""
    UPPER = "upper"
    LOWER = "lower"


class ClaimInfo(BaseModel):
    """Entrée du registre, sans la fonction de mesure"""
    id: str
    paper_ref: str
    anchor: str
    tags: List[str]
    metric: str
    tolerance: float
    direction: Direction = Direction.UPPER


class ClaimReport(BaseModel):
    """Résultat d'une vérification"""
    model_config = ConfigDict(populate_by_name=True)

    id: str
    paper_ref: str
    metric: str
    value: float
    tolerance: float
    direction: Direction
    passed: bool = Field(..., alias="pass")
    runtime_ms: int = Field(..., ge=0)
    note: Optional[str] = None


class ClaimSummary(BaseModel):
    total: int
    passed: int
    failed: int
    runtime_ms: int
