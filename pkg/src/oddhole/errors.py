class OddHoleError(Exception):
    """Base class for every error raised by the odd hole library."""


class GraphFormatError(OddHoleError, ValueError):
    """Malformed graph input: bad line, self-loop, duplicate edge or out-of-range id."""


class InvalidVertexError(OddHoleError, ValueError):
    pass


class SizeGuardError(OddHoleError, RuntimeError):
    """An exponential or high-degree search refused an input above its vertex bound."""

    def __init__(self, what, n, bound):
        super().__init__(f"{what} refused: graph has {n} vertices, bound is {bound}")
        self.what = what
        self.n = n
        self.bound = bound


class InstanceParameterError(OddHoleError, ValueError):
    pass


class WitnessSchemaError(OddHoleError, ValueError):
    pass


class ConfigError(OddHoleError, ValueError):
    """A size guard or other setting outside its allowed range."""
