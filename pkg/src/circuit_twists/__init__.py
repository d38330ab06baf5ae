"""Cycle relations among Dehn twists about circuits, decided with Garside normal forms."""

from .errors import (
    AlphabetError,
    CircuitTwistsError,
    DiagramError,
    GarsideError,
    SpecError,
    SubstitutionError,
    SurfaceError,
)
from .words import Alphabet, Letter, Relation, Word, parse_word, reduce

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetError",
    "CircuitTwistsError",
    "DiagramError",
    "GarsideError",
    "Letter",
    "Relation",
    "SpecError",
    "SubstitutionError",
    "SurfaceError",
    "Word",
    "parse_word",
    "reduce",
]
