"""Noyau numérique : fonctions spéciales, quadrature, opérateurs, solveurs"""
