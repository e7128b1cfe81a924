"""Named field/exponent settings for the four worked examples."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .galois import FieldParams


@dataclass(frozen=True)
class Preset:
    name: str
    params: FieldParams
    family: str          # "inverse-apn" or "dobbertin"
    i: int | None = None  # Dobbertin block parameter, m = 5i


PRESETS = {
    "ex1": Preset("ex1", FieldParams(3, 1, 2, (2, 2, 1)), "inverse-apn"),
    "ex2": Preset("ex2", FieldParams(3, 1, 3, (1, 2, 0, 1)), "inverse-apn"),
    "ex3": Preset("ex3", FieldParams(2, 1, 5, (1, 0, 1, 0, 0, 1)), "dobbertin", 1),
    "ex4": Preset("ex4", FieldParams(2, 1, 10, (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1)),
                  "dobbertin", 2),
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise ParameterError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
