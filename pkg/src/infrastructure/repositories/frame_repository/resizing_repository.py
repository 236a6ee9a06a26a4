from src.application.repositories.frame_repository import FrameRepository
from src.entities.models.frame import Frame
from src.infrastructure.formats.resize import resize_pad


class ResizingFrameRepository(FrameRepository):
    """Wraps another frame source and fits every frame to a fixed canvas on read."""

    def __init__(self, inner: FrameRepository, height: int = 600, width: int = 960):
        self._inner = inner
        self.height = height
        self.width = width

    def list_names(self) -> list[str]:
        return self._inner.list_names()

    def get(self, name: str) -> Frame:
        return resize_pad(self._inner.get(name), height=self.height, width=self.width)

    def add(self, name: str, frame: Frame) -> None:
        self._inner.add(name, frame)

    def describe(self, name: str) -> str:
        return self._inner.describe(name)
