"""
Exception hierarchy shared by the codec, decoders, analysis and simulation layers.
"""


class PolarKitError(Exception):
    """Base exception for the polar toolkit"""
    pass


class CodeConstructionError(PolarKitError, ValueError):
    """Raised for invalid code parameters or malformed reliability sources"""
    pass


class EncodingError(PolarKitError, ValueError):
    """Raised when a vector does not fit the transform or the code"""
    pass


class CrcError(PolarKitError, ValueError):
    """Raised for invalid CRC parameters or too-short checked vectors"""
    pass


class ChannelError(PolarKitError, ValueError):
    """Raised for invalid channel parameters"""
    pass


class DecoderConfigError(PolarKitError, ValueError):
    """Raised when a decoder configuration violates its invariants"""
    pass


class AnalysisError(PolarKitError):
    """Base exception for pattern enumeration and cost models"""
    pass


class FixtureFormatError(AnalysisError, ValueError):
    """Raised when a pattern-table fixture cannot be parsed"""
    pass


class SimConfigError(PolarKitError, ValueError):
    """Raised when a simulation config document is invalid"""
    pass


class ResultCacheError(PolarKitError):
    """Raised for result-cache storage errors"""
    pass
