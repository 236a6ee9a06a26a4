from dataclasses import dataclass
from typing import Literal

from src.entities.exceptions import ConfigurationError


@dataclass(frozen=True)
class DetectorConfig:
    """
    K-means settings of the change detector.

    :ivar k: Cluster count, fixed to 2 (changed / not changed).
    :type k: int
    :ivar seed: Seed of the k-means++ initialisation.
    :type seed: int
    :ivar max_iters: Lloyd iteration cap.
    :type max_iters: int
    :ivar rel_tol: Stop when the relative inertia decrease falls below this.
    :type rel_tol: float
    :ivar init: Seeding strategy; only k-means++ is supported.
    :type init: str
    :ivar standardize: z-score the (mean, std) axes before clustering.
    :type standardize: bool
    """

    k: int = 2
    seed: int = 42
    max_iters: int = 300
    rel_tol: float = 1e-6
    init: Literal["k-means++"] = "k-means++"
    standardize: bool = False

    def __post_init__(self):
        if self.k != 2:  # noqa: PLR2004
            raise ConfigurationError(f"k is fixed to 2, got {self.k}")
        if self.max_iters < 1:
            raise ConfigurationError(f"max_iters must be >= 1, got {self.max_iters}")
        if not self.rel_tol > 0:
            raise ConfigurationError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.init != "k-means++":
            raise ConfigurationError(f"Unsupported init '{self.init}'")
