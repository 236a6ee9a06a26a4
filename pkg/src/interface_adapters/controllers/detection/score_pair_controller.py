from collections.abc import Callable
from pathlib import Path

from loguru import logger

from src.application.use_cases.detection.score_pair import ScorePairInput, ScorePairUseCase
from src.application.use_cases.exceptions import UseCaseError
from src.drivers.cli.schemas.command_schemas import ScorePairRequest
from src.drivers.cli.schemas.report_schemas import ScorePairResponse
from src.entities.exceptions import DomainError
from src.entities.models.code_index_map import CodeIndexMap
from src.entities.value_objects.similarity_params import SimilarityParams
from src.interface_adapters.presenters.detection_presenter import DetectionPresenter

CodeMapReader = Callable[[Path], CodeIndexMap]


class ScorePairController:
    def __init__(self, score_pair_use_case: ScorePairUseCase, map_reader: CodeMapReader):
        self._score_pair_use_case = score_pair_use_case
        self._map_reader = map_reader

    def score(self, request: ScorePairRequest) -> ScorePairResponse:
        try:
            params = SimilarityParams(
                grid_rows=request.grid_rows,
                grid_cols=request.grid_cols,
                n_top=request.n_top,
                delta_sim=request.delta_sim,
            )
            input_dto = ScorePairInput(
                map_a=self._map_reader(request.map_a),
                map_b=self._map_reader(request.map_b),
                params=params,
            )
            return DetectionPresenter.present_score(self._score_pair_use_case(input_dto))
        except (DomainError, FileNotFoundError) as e:
            logger.warning(f"Cannot score {request.map_a} against {request.map_b}: {e}")
            raise
        except UseCaseError as e:
            logger.warning(f"Use case error scoring map pair: {e}")
            raise
        except Exception as e:
            logger.exception(f"Unexpected internal error scoring map pair: {e}")
            raise UseCaseError("An unexpected internal error occurred.") from e
