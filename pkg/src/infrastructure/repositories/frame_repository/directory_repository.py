from pathlib import Path

from loguru import logger

from src.application.repositories.frame_repository import FrameRepository
from src.entities.models.frame import Frame
from src.infrastructure.formats.pnm import read_frame, write_frame
from src.infrastructure.repositories.numbered_files import scan_numbered_files

FRAME_SUFFIXES = (".pgm", ".ppm")


class DirectoryFrameRepository(FrameRepository):
    """Numbered P5 / P6 frame files in one directory (e.g. ``000042.ppm``)."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self._paths: dict[str, Path] | None = None

    def _index(self) -> dict[str, Path]:
        if self._paths is None:
            self._paths = scan_numbered_files(self.root, FRAME_SUFFIXES)
            logger.debug(f"Found {len(self._paths)} frame files in {self.root}")
        return self._paths

    def list_names(self) -> list[str]:
        return list(self._index())

    def get(self, name: str) -> Frame:
        return read_frame(self._index()[name])

    def add(self, name: str, frame: Frame) -> None:
        suffix = ".pgm" if frame.channels == 1 else ".ppm"
        path = self.root / f"{name}{suffix}"
        write_frame(path, frame)
        self._paths = None

    def describe(self, name: str) -> str:
        path = self._index().get(name)
        return str(path) if path is not None else name
