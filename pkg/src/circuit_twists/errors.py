"""Exception types shared across the package."""


class CircuitTwistsError(Exception):
    """Base class for every error raised by this package."""


class AlphabetError(CircuitTwistsError, ValueError):
    """A letter or word does not belong to the alphabet it was used with."""


class SubstitutionError(CircuitTwistsError, KeyError):
    """A substitution was asked to map a generator it has no image for."""

    def __init__(self, symbol: str):
        super().__init__(symbol)
        self.symbol = symbol

    def __str__(self) -> str:
        return f"no image given for generator {self.symbol!r}"


class DiagramError(CircuitTwistsError, ValueError):
    """Invalid diagram kind or weight data."""


class GarsideError(CircuitTwistsError, RuntimeError):
    """Internal failure of the Garside machinery (a broken convention or a safety limit)."""


class SurfaceError(CircuitTwistsError, ValueError):
    """Invalid circuit surface construction or attachment."""


class SpecError(CircuitTwistsError, ValueError):
    """Malformed surface or diagram specification; ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.message = message
