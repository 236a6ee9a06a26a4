class DomainError(Exception):
    """Base class for errors caused by invalid inputs to the pipeline.

    Subclasses signal problems the caller can fix, as opposed to internal
    failures. Raise them with ``from e`` to keep the underlying cause.
    """


class ConfigurationError(DomainError):
    """Error raised when a configuration value violates its invariants.

    Raised before any work starts, e.g. an odd window length or a
    delta_sim larger than n_top.
    """


class ShapeError(DomainError):
    """Error raised when array dimensions are incompatible.

    The message names the offending dimensions, e.g. a frame height not
    divisible by the patch height.
    """


class DataError(DomainError):
    """Error raised when input data is missing, empty or inconsistent."""


class CorruptionError(DomainError):
    """Error raised when stored data fails an integrity check.

    Covers bad magic bytes, unknown versions, payload size mismatches and
    code indices outside the codebook range.
    """


class InputParseError(DomainError):
    """Error raised when input data cannot be parsed.

    This error indicates that the provided input data is invalid
    or cannot be parsed into the expected format (e.g. ``--grid 5y5``).
    """


class FormatError(DomainError):
    """Error raised when a portable image file is malformed.

    Attributes:
        reason: The message without the offset suffix.
        offset: Byte offset in the file where parsing failed.
    """

    def __init__(self, message: str, offset: int) -> None:
        """Initialize the format error.

        Args:
            message: The error message.
            offset: Byte offset in the file where parsing failed.
        """
        super().__init__(f"{message} (at byte {offset})")
        self.reason = message
        self.offset = offset
