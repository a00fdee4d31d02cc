"""Configuration de la bibliothèque et de la CLI"""
import os
from dotenv import load_dotenv

from fracver.core.errors import ConfigurationError

# Charger les variables d'environnement
load_dotenv()

# Taille de grille par défaut selon FRACVER_PRECISION
PRECISION_STEPS = {
    "fast": 512,
    "default": 2048,
    "thorough": 8192,
}


class Settings:
    """Configuration de fracver"""

    # Précision (nombre de pas N des grilles par défaut)
    PRECISION: str = os.getenv("FRACVER_PRECISION", "default").strip().lower()

    # Logs
    LOG_LEVEL: str = os.getenv("FRACVER_LOG_LEVEL", "WARNING").upper()

    # Politique Mittag-Leffler
    ML_SERIES_RADIUS: float = float(os.getenv("FRACVER_ML_SERIES_RADIUS", "10.0"))
    ML_ASYMPTOTIC_RADIUS: float = float(os.getenv("FRACVER_ML_ASYMPTOTIC_RADIUS", "50.0"))
    ML_MAX_TERMS: int = int(os.getenv("FRACVER_ML_MAX_TERMS", "500"))

    # Cache des tables de poids
    WEIGHT_CACHE_SIZE: int = int(os.getenv("FRACVER_WEIGHT_CACHE_SIZE", "64"))

    # Harnais de vérification
    CLAIM_WORKERS: int = int(os.getenv("FRACVER_CLAIM_WORKERS", "1"))

    def __init__(self) -> None:
        if self.PRECISION not in PRECISION_STEPS:
            raise ConfigurationError(
                f"FRACVER_PRECISION inconnu : {self.PRECISION!r} "
                f"(attendu : {', '.join(PRECISION_STEPS)})"
            )
        if self.CLAIM_WORKERS < 1:
            raise ConfigurationError("FRACVER_CLAIM_WORKERS doit être >= 1")

    @property
    def default_steps(self) -> int:
        """N associé au niveau de précision courant"""
        return PRECISION_STEPS[self.PRECISION]


settings = Settings()
