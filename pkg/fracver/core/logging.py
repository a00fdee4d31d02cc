"""Mise en place des logs (rich)"""
import logging

from rich.console import Console
from rich.logging import RichHandler

from fracver.core.config import settings

# Console partagée pour les sorties utilisateur de la CLI
console = Console()
err_console = Console(stderr=True)


def setup_logging(verbose: bool = False) -> None:
    """Installe un RichHandler sur le logger `fracver` (une seule fois)."""
    logger = logging.getLogger("fracver")
    level = logging.DEBUG if verbose else getattr(logging, settings.LOG_LEVEL, logging.WARNING)
    logger.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=err_console, show_path=False, rich_tracebacks=True)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
    logger.propagate = False
