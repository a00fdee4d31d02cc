"""Schémas des opérateurs fractionnaires"""
from enum import Enum


class OperatorKind(str, Enum):
    """Opérateurs nommés ; chacun correspond à une seule règle de noyau"""
    RL_INTEGRAL = "rl-integral"
    RL_DERIVATIVE = "rl"
    CAPUTO_DERIVATIVE = "caputo"
    CF_DERIVATIVE = "cf"
    ABC_DERIVATIVE = "abc"
    CF_INTEGRAL = "cf-integral"
    AB_INTEGRAL = "ab-integral"
    GENERIC_DPHI = "dphi"
    PRABHAKAR_INTEGRAL = "prabhakar-integral"
    PRABHAKAR_DERIVATIVE = "prabhakar"
    CF_DERIVATIVE_BYPARTS = "cf-byparts"
    ABC_DERIVATIVE_BYPARTS = "abc-byparts"
    GRUNWALD_LETNIKOV = "gl"
