from abc import ABC, abstractmethod

from src.entities.models.frame import Frame


class FrameRepository(ABC):
    """Abstract base class for frame sources and sinks.

    Frames are addressed by their numeric name (the file stem for directory
    storage) and always listed in ascending numeric order.
    """

    @abstractmethod
    def list_names(self) -> list[str]:
        """Frame names in ascending numeric order."""

    @abstractmethod
    def get(self, name: str) -> Frame:
        """Load one frame.

        Raises:
            KeyError: If no frame has this name.
        """

    @abstractmethod
    def add(self, name: str, frame: Frame) -> None:
        """Store a frame under a numeric name, replacing any existing one."""

    def describe(self, name: str) -> str:
        """Human readable location of a frame, used in error messages."""
        return name
