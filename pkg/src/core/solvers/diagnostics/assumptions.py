"""
Verificaciones en tiempo de ejecución de la hipótesis A2 y del radio R.

Para v convexa, si c₃·d/√n ≤ 1 y c₄(R₀)·d²/n ≤ 1, el lado izquierdo de A2
se cumple con c₀ = R₀/4. El teorema principal pide además
R ≥ max(R₀, 4c₀, 4) y R·c₀ − 2 log R ≥ 10; la forma usada en el lema
de los restos es R·c₀ − 2 log R ≥ 6 + 2k con k = 1.
"""

import math
from typing import Optional

from ...domain.errors import ArgumentError
from ...domain.report import A2LeftCheck, RadiusCheck

THEOREM_MARGIN = 10.0
LEMMA_MARGIN = 6.0 + 2.0 * 1


def check_a2_left(c3_val: float, c4_val: float, R0: float, d: int, n: float) -> A2LeftCheck:
    """
    Devuelve c₀ = R₀/4 si ambas condiciones se cumplen (desigualdades inclusivas).

    El llamador garantiza la convexidad de v.
    """
    if R0 <= 0 or d < 1 or n <= 0:
        raise ArgumentError("Se requieren R₀ > 0, d ≥ 1 y n > 0")
    violated = []
    if c3_val * d / math.sqrt(n) > 1.0:
        violated.append("c3 condition")
    if c4_val * d * d / n > 1.0:
        violated.append("c4 condition")
    if violated:
        return A2LeftCheck(c0=None, reason=" and ".join(violated))
    return A2LeftCheck(c0=R0 / 4.0, reason=None)


def radius_conditions(R: float, c0: Optional[float], R0: float) -> RadiusCheck:
    """Condiciones sobre R; sin c₀ ninguna puede verificarse."""
    if R <= 0:
        raise ArgumentError(f"R debe ser positivo, se recibió {R}")
    if c0 is None:
        return RadiusCheck(admissible=False, theorem_form=False, lemma_form=False)
    margin = R * c0 - 2.0 * math.log(R)
    return RadiusCheck(
        admissible=R >= max(R0, 4.0 * c0, 4.0),
        theorem_form=margin >= THEOREM_MARGIN,
        lemma_form=margin >= LEMMA_MARGIN,
    )
