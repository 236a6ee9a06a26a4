from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from src.entities.exceptions import DataError, ShapeError


@dataclass(eq=False)
class Frame:
    """
    A single video frame after normalisation.

    Pixels are stored as a (height, width, channels) float64 array with values
    in [-1, 1], i.e. ``(v / 255 - 0.5) / 0.5`` of the raw 8-bit intensity.

    :ivar pixels: Row-major (height, width, channels) array.
    :type pixels: numpy.ndarray
    """

    pixels: npt.NDArray[np.float64]

    def __post_init__(self):
        pixels = np.asarray(self.pixels, dtype=np.float64)
        if pixels.ndim == 2:  # noqa: PLR2004
            pixels = pixels[:, :, np.newaxis]
        if pixels.ndim != 3 or pixels.shape[2] not in (1, 3):  # noqa: PLR2004
            raise ShapeError(
                f"Frame pixels must be (height, width, 1|3), got {pixels.shape}"
            )
        if pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise ShapeError(f"Frame must be non-empty, got {pixels.shape}")
        if not np.all(np.isfinite(pixels)):
            raise DataError("Frame pixels must be finite")
        self.pixels = pixels

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def channels(self) -> int:
        return int(self.pixels.shape[2])

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.height, self.width, self.channels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Frame):
            return NotImplemented
        return self.shape == other.shape and bool(
            np.array_equal(self.pixels, other.pixels)
        )

    __hash__ = None  # type: ignore[assignment]
