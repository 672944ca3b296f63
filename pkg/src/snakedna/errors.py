"""Exception types shared across the package."""


class SnakeDnaError(Exception):
    """Base class for all errors raised by this package."""


class MalformedHeaderError(SnakeDnaError, ValueError):
    """PGM stream does not start with a valid P5 header."""


class UnsupportedMaxvalError(SnakeDnaError, ValueError):
    """PGM maxval is not 255 (only 8-bit grayscale is supported)."""


class TruncatedPayloadError(SnakeDnaError, ValueError):
    """PGM payload holds fewer pixel bytes than the header declares."""


class DimensionMismatchError(SnakeDnaError, ValueError):
    """Pixel data length does not equal width * height."""


class InvalidKeyError(SnakeDnaError, ValueError):
    """Cipher key violates an invariant; the message names the offending field."""


class DegenerateStreamError(SnakeDnaError, ValueError):
    """A logistic trajectory hit exactly 0.0 or 1.0 and collapsed to a fixed point."""


class DrawCountMismatchError(SnakeDnaError, ValueError):
    """Shuffle was given a draw sequence whose length is not len(seq) - 1."""


class TraceLengthMismatchError(SnakeDnaError, ValueError):
    """Shuffle trace length does not match the sequence being inverted."""


class LengthMismatchError(SnakeDnaError, ValueError):
    """Symbol sequence length does not equal 4 * width * height."""


class InvalidSBoxError(SnakeDnaError, ValueError):
    """Substitution table is not a bijection on [0, 255]."""


class ZeroVarianceError(SnakeDnaError, ArithmeticError):
    """Correlation is undefined: one margin of the pixel-pair sample is constant."""
