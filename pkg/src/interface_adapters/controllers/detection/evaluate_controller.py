from collections.abc import Callable
from pathlib import Path

from loguru import logger

from src.application.use_cases.detection.evaluate_predictions import (
    EvaluatePredictionsInput,
    EvaluatePredictionsUseCase,
)
from src.application.use_cases.exceptions import UseCaseError
from src.drivers.cli.schemas.command_schemas import EvaluateRequest
from src.drivers.cli.schemas.prediction_schemas import PredictionDocument
from src.drivers.cli.schemas.report_schemas import ReportResponse
from src.entities.exceptions import DomainError
from src.entities.value_objects.scene_label import SceneLabel
from src.interface_adapters.presenters.report_presenter import ReportPresenter

GroundTruthReader = Callable[[Path], list[SceneLabel]]


class EvaluateController:
    def __init__(
        self,
        evaluate_use_case: EvaluatePredictionsUseCase,
        ground_truth_reader: GroundTruthReader,
    ):
        self._evaluate_use_case = evaluate_use_case
        self._ground_truth_reader = ground_truth_reader

    def evaluate(self, request: EvaluateRequest) -> ReportResponse:
        """Handles the request to score a prediction file against annotations."""
        try:
            if not request.pred.is_file():
                raise FileNotFoundError(f"Prediction file not found: {request.pred}")
            if not request.gt.is_file():
                raise FileNotFoundError(f"Ground-truth file not found: {request.gt}")
            prediction = PredictionDocument.from_json_file(request.pred)
            input_dto = EvaluatePredictionsInput(
                ground_truth=self._ground_truth_reader(request.gt),
                predicted=prediction.frame_labels(),
            )
            return ReportPresenter.present_report(self._evaluate_use_case(input_dto))
        except (DomainError, FileNotFoundError) as e:
            logger.warning(f"Cannot evaluate {request.pred} against {request.gt}: {e}")
            raise
        except UseCaseError as e:
            logger.warning(f"Use case error evaluating predictions: {e}")
            raise
        except Exception as e:
            logger.exception(f"Unexpected internal error evaluating predictions: {e}")
            raise UseCaseError("An unexpected internal error occurred.") from e
