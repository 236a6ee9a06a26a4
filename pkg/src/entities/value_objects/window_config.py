from dataclasses import dataclass

from src.entities.exceptions import ConfigurationError


@dataclass(frozen=True)
class WindowConfig:
    """
    Sliding window geometry over a frame sequence.

    :ivar window_len: Window length l in frames (even, >= 2).
    :type window_len: int
    :ivar stride: Offset between consecutive window starts, 1 <= stride <= l.
    :type stride: int
    :ivar skip: Skip factor s; one frame out of every s is paired.
    :type skip: int
    :ivar fps: Frames per second, used for second <-> frame conversion.
    :type fps: float
    """

    window_len: int = 120
    stride: int = 120
    skip: int = 4
    fps: float = 12.0

    def __post_init__(self):
        l = self.window_len  # noqa: E741
        if l < 2 or l % 2:
            raise ConfigurationError(f"window_len must be even and >= 2, got {l}")
        half = l // 2
        if not 1 <= self.skip <= half:
            raise ConfigurationError(
                f"skip must lie in [1, {half}] for window_len {l}, got {self.skip}"
            )
        if half % self.skip:
            raise ConfigurationError(
                f"window_len/2 = {half} must be divisible by skip {self.skip}"
            )
        if not 1 <= self.stride <= l:
            raise ConfigurationError(
                f"stride must lie in [1, {l}], got {self.stride}"
            )
        if not self.fps > 0:
            raise ConfigurationError(f"fps must be positive, got {self.fps}")

    @property
    def half(self) -> int:
        return self.window_len // 2

    @property
    def pairs_per_window(self) -> int:
        return self.half // self.skip

    @classmethod
    def from_seconds(
        cls,
        window_sec: float,
        fps: float,
        skip: int = 4,
        stride: int | None = None,
    ) -> "WindowConfig":
        """Build a config from a window duration; l = round(window_sec * fps).

        A missing stride means non-overlapping windows (stride = l).
        """
        if not fps > 0:
            raise ConfigurationError(f"fps must be positive, got {fps}")
        window_len = round(window_sec * fps)
        return cls(
            window_len=window_len,
            stride=window_len if stride is None else stride,
            skip=skip,
            fps=fps,
        )
