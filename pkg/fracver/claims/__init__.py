"""Harnais de vérification : l'import enregistre toutes les familles"""
from fracver.claims import appendix, bounded, foundations, heat, reductions  # noqa: F401
from fracver.claims.registry import registry
from fracver.claims.runner import lint_registry, run_all, run_claim, summarize

__all__ = ["registry", "run_claim", "run_all", "summarize", "lint_registry"]
