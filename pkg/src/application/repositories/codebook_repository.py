from abc import ABC, abstractmethod

from src.entities.models.codebook import Codebook


class CodebookRepository(ABC):
    """Abstract base class for a single stored codebook."""

    @abstractmethod
    def load(self) -> Codebook:
        """Load the stored codebook.

        Raises:
            FileNotFoundError: If nothing has been stored yet.
        """

    @abstractmethod
    def save(self, codebook: Codebook) -> None:
        """Store a codebook, replacing the previous one."""
