"""Built-in codes with their generators written out literally."""

from __future__ import annotations

from functools import lru_cache

from .errors import UnknownCodeError
from .stabilizer import StabilizerCode, distance, logical_operators, validate_generators

GENERATORS: dict[str, tuple[str, ...]] = {
    "bit_flip": ("ZZI", "IZZ"),
    "phase_flip": ("XXI", "IXX"),
    "shor9": (
        "ZZIIIIIII",
        "IZZIIIIII",
        "IIIZZIIII",
        "IIIIZZIII",
        "IIIIIIZZI",
        "IIIIIIIZZ",
        "XXXXXXIII",
        "IIIXXXXXX",
    ),
    "steane7": (
        "IIIXXXX",
        "IXXIIXX",
        "XIXIXIX",
        "IIIZZZZ",
        "IZZIIZZ",
        "ZIZIZIZ",
    ),
    "five_qubit": ("XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"),
}

# Distance search cap per code; every catalog code has d <= 3.
_DISTANCE_CAP = 4


def catalog_names() -> list[str]:
    return list(GENERATORS)


@lru_cache(maxsize=None)
def catalog(name: str) -> StabilizerCode:
    """Fully analysed catalog code (logical pairs and distance filled in)."""
    try:
        gens = GENERATORS[name]
    except KeyError:
        raise UnknownCodeError(
            f"unknown code {name!r}; valid names: {', '.join(GENERATORS)}"
        ) from None
    code = validate_generators(gens, name=name)
    return StabilizerCode(
        code.n,
        code.k,
        code.generators,
        tuple(logical_operators(code)),
        name,
        distance(code, _DISTANCE_CAP),
    )
