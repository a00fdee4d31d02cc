"""Utilitaires de base (configuration, erreurs, logs)"""
