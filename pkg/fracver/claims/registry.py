"""
Registre des vérifications.

Chaque vérification est une fonction sans argument qui renvoie une `Measurement`
et qui s'enregistre par décorateur, à la manière des routes d'un routeur.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from fracver.schemas.claim import ClaimInfo, Direction


@dataclass
class Measurement:
    """Valeur mesurée ; `guard` à False force l'échec (condition annexe violée)"""
    value: float
    guard: bool = True
    note: Optional[str] = None


@dataclass
class Claim:
    info: ClaimInfo
    check: Callable[[], Measurement]


@dataclass
class ClaimRegistry:
    claims: Dict[str, Claim] = field(default_factory=dict)

    def claim(self, id: str, *, paper_ref: str, anchor: str, tags: List[str], metric: str,
              tolerance: float, direction: Direction = Direction.UPPER):
        """Décorateur d'enregistrement"""
        def register(check: Callable[[], Measurement]) -> Callable[[], Measurement]:
            if id in self.claims:
                raise ValueError(f"vérification déjà enregistrée : {id}")
            info = ClaimInfo(id=id, paper_ref=paper_ref, anchor=anchor, tags=tags,
                             metric=metric, tolerance=tolerance, direction=direction)
            self.claims[id] = Claim(info=info, check=check)
            return check
        return register

    def get(self, id: str) -> Optional[Claim]:
        return self.claims.get(id)

    def ids(self, tag: Optional[str] = None) -> List[str]:
        return sorted(i for i, c in self.claims.items() if tag is None or tag in c.info.tags)


registry = ClaimRegistry()
