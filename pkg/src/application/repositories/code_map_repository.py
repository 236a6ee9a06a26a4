from abc import ABC, abstractmethod

from src.entities.models.code_index_map import CodeIndexMap


class CodeMapRepository(ABC):
    """Abstract base class for code-index map storage.

    Maps carry the numeric name of the frame they were encoded from.
    """

    @abstractmethod
    def list_names(self) -> list[str]:
        """Map names in ascending numeric order."""

    @abstractmethod
    def get(self, name: str) -> CodeIndexMap:
        """Load one map.

        Raises:
            KeyError: If no map has this name.
        """

    @abstractmethod
    def add(self, name: str, code_map: CodeIndexMap) -> None:
        """Store a map, replacing any existing one with the same name."""

    def describe(self, name: str) -> str:
        """Human readable location of a map, used in error messages."""
        return name
