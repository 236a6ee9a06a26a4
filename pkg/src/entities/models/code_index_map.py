from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from src.entities.exceptions import CorruptionError, ShapeError


@dataclass(eq=False)
class CodeIndexMap:
    """
    The quantized representation of one frame: a grid of codebook indices.

    :ivar indices: (height, width) integer array of code indices.
    :type indices: numpy.ndarray
    :ivar n_entries: Size of the codebook the indices point into.
    :type n_entries: int
    """

    indices: npt.NDArray[np.int64]
    n_entries: int

    def __post_init__(self):
        indices = np.asarray(self.indices)
        if indices.ndim != 2 or indices.size == 0:  # noqa: PLR2004
            raise ShapeError(f"Code map must be a non-empty 2-D grid, got {indices.shape}")
        if not np.issubdtype(indices.dtype, np.integer):
            raise CorruptionError(f"Code indices must be integers, got {indices.dtype}")
        indices = indices.astype(np.int64, copy=False)
        if self.n_entries < 1:
            raise CorruptionError(f"n_entries must be >= 1, got {self.n_entries}")
        low, high = int(indices.min()), int(indices.max())
        if low < 0 or high >= self.n_entries:
            raise CorruptionError(
                f"Code index out of range [0, {self.n_entries}): found {low if low < 0 else high}"
            )
        self.indices = indices

    @property
    def height(self) -> int:
        return int(self.indices.shape[0])

    @property
    def width(self) -> int:
        return int(self.indices.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.height, self.width)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CodeIndexMap):
            return NotImplemented
        return (
            self.n_entries == other.n_entries
            and self.shape == other.shape
            and bool(np.array_equal(self.indices, other.indices))
        )

    __hash__ = None  # type: ignore[assignment]
