class UseCaseError(Exception):
    """Base class for exceptions raised by use cases."""


class FramesNotFoundError(UseCaseError):
    """Raised when a frame source holds no readable frames."""


class CodeMapsNotFoundError(UseCaseError):
    """Raised when a code-map source holds no maps."""
