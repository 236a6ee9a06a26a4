from pathlib import Path

from loguru import logger

from src.application.repositories.codebook_repository import CodebookRepository
from src.entities.models.codebook import Codebook
from src.infrastructure.formats.codebook_format import read_codebook, write_codebook


class FileCodebookRepository(CodebookRepository):
    """A codebook stored as one ``.sdcb`` file."""

    def __init__(self, path: Path):
        self.path = Path(path)

    def load(self) -> Codebook:
        if not self.path.is_file():
            raise FileNotFoundError(f"Codebook file not found: {self.path}")
        codebook = read_codebook(self.path)
        logger.debug(f"Loaded codebook {codebook.n_entries}x{codebook.dim} from {self.path}")
        return codebook

    def save(self, codebook: Codebook) -> None:
        write_codebook(self.path, codebook)
        logger.debug(f"Wrote codebook {codebook.n_entries}x{codebook.dim} to {self.path}")
