from dataclasses import dataclass
from typing import ClassVar

from src.entities.exceptions import ConfigurationError


@dataclass(frozen=True)
class SimilarityParams:
    """
    Parameters of the grid-cell similarity score between two code maps.

    :ivar grid_rows: Number of grid rows the map is cut into.
    :type grid_rows: int
    :ivar grid_cols: Number of grid columns the map is cut into.
    :type grid_cols: int
    :ivar n_top: Number of most frequent codes compared per cell.
    :type n_top: int
    :ivar delta_sim: Minimum top-code overlap for two cells to count as similar.
    :type delta_sim: int
    """

    grid_rows: int = 5
    grid_cols: int = 5
    n_top: int = 5
    delta_sim: int = 2

    PRESETS: ClassVar[dict[str, tuple[int, int, int, int]]] = {
        "standard": (5, 5, 5, 2),
        "extended": (5, 5, 10, 5),
    }

    def __post_init__(self):
        if self.grid_rows < 1 or self.grid_cols < 1:
            raise ConfigurationError(
                f"Grid dims must be >= 1, got {self.grid_rows}x{self.grid_cols}"
            )
        if self.n_top < 1:
            raise ConfigurationError(f"n_top must be >= 1, got {self.n_top}")
        if not 1 <= self.delta_sim <= self.n_top:
            raise ConfigurationError(
                f"delta_sim must lie in [1, n_top={self.n_top}], got {self.delta_sim}"
            )

    @property
    def n_cells(self) -> int:
        return self.grid_rows * self.grid_cols

    @classmethod
    def preset(cls, name: str) -> "SimilarityParams":
        """Build one of the named parameter sets ("standard" or "extended")."""
        try:
            rows, cols, n_top, delta_sim = cls.PRESETS[name]
        except KeyError as e:
            raise ConfigurationError(
                f"Unknown similarity preset '{name}', choose from {sorted(cls.PRESETS)}"
            ) from e
        return cls(grid_rows=rows, grid_cols=cols, n_top=n_top, delta_sim=delta_sim)
