"""Types partagés : tableaux numpy dans les schémas Pydantic"""
from typing import Annotated

import numpy as np
from pydantic import BeforeValidator, PlainSerializer


def _as_float_array(value) -> np.ndarray:
    array = np.asarray(value, dtype=float)
    if array.ndim == 0:
        raise ValueError("un tableau est attendu, pas un scalaire")
    return array


# Tableau de réels ; sérialisé en liste pour le JSON
FloatArray = Annotated[
    np.ndarray,
    BeforeValidator(_as_float_array),
    PlainSerializer(lambda a: a.tolist(), return_type=list),
]
