from loguru import logger

from src.application.repositories.frame_repository import FrameRepository
from src.entities.models.frame import Frame
from src.infrastructure.repositories.numbered_files import numeric_order


class InMemoryFrameRepository(FrameRepository):
    def __init__(self, frames: dict[str, Frame] | None = None):
        self._frames: dict[str, Frame] = dict(frames or {})

    def list_names(self) -> list[str]:
        return numeric_order(list(self._frames))

    def get(self, name: str) -> Frame:
        return self._frames[name]

    def add(self, name: str, frame: Frame) -> None:
        logger.debug(f"Storing frame {name} {frame.shape}")
        self._frames[name] = frame

    def clear(self):
        self._frames.clear()
