"""Schémas Pydantic de fracver"""
