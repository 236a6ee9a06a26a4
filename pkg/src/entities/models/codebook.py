from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from src.entities.exceptions import ConfigurationError, DataError


@dataclass(eq=False)
class Codebook:
    """
    A learned set of code vectors used to quantize patch features.

    Entries are held as float32 so a codebook survives a round trip through
    its binary file bit-exactly.

    :ivar entries: (n_entries, dim) float32 array, one code vector per row.
    :type entries: numpy.ndarray
    :ivar seed: Seed used at initialisation / training.
    :type seed: int
    """

    entries: npt.NDArray[np.float32]
    seed: int = 0

    def __post_init__(self):
        entries = np.ascontiguousarray(self.entries, dtype=np.float32)
        if entries.ndim != 2:  # noqa: PLR2004
            raise ConfigurationError(
                f"Codebook entries must be 2-D (n_entries, dim), got {entries.shape}"
            )
        if entries.shape[0] < 1 or entries.shape[1] < 1:
            raise ConfigurationError(
                f"Codebook needs n_entries >= 1 and dim >= 1, got {entries.shape}"
            )
        if not np.all(np.isfinite(entries)):
            raise DataError("Codebook entries must be finite")
        if self.seed < 0:
            raise ConfigurationError(f"Codebook seed must be >= 0, got {self.seed}")
        self.entries = entries

    @property
    def n_entries(self) -> int:
        return int(self.entries.shape[0])

    @property
    def dim(self) -> int:
        return int(self.entries.shape[1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Codebook):
            return NotImplemented
        return self.seed == other.seed and bool(
            np.array_equal(self.entries, other.entries)
        )

    __hash__ = None  # type: ignore[assignment]
