from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from loguru import logger

from src.application.services.similarity import indicator_grid
from src.entities.models.code_index_map import CodeIndexMap
from src.entities.value_objects.similarity_params import SimilarityParams


@dataclass(frozen=True)
class ScorePairInput:
    map_a: CodeIndexMap
    map_b: CodeIndexMap
    params: SimilarityParams


@dataclass(frozen=True)
class ScorePairOutput:
    score: float
    grid: npt.NDArray[np.int8]


class ScorePairUseCase:
    """Similarity score of two code maps together with its per-cell indicators."""

    def __call__(self, input_data: ScorePairInput) -> ScorePairOutput:
        grid = indicator_grid(input_data.map_a, input_data.map_b, input_data.params)
        score = int(grid.sum()) / input_data.params.n_cells
        logger.debug(f"Pair score {score:.4f} over {input_data.params.n_cells} cells")
        return ScorePairOutput(score=score, grid=grid)
