"""fracver : calcul fractionnaire numérique et vérification des identités des dérivées à noyau borné"""
__version__ = "1.0.0"
