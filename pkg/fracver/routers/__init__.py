"""Sous-commandes de la CLI"""
