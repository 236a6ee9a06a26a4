from src.application.repositories.codebook_repository import CodebookRepository
from src.entities.models.codebook import Codebook


class InMemoryCodebookRepository(CodebookRepository):
    def __init__(self, codebook: Codebook | None = None):
        self._codebook = codebook

    def load(self) -> Codebook:
        if self._codebook is None:
            raise FileNotFoundError("No codebook has been stored")
        return self._codebook

    def save(self, codebook: Codebook) -> None:
        self._codebook = codebook
