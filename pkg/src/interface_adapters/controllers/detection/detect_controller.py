from collections.abc import Callable, Sequence
from pathlib import Path

from loguru import logger

from src.application.use_cases.detection.detect_scene_changes import (
    DetectSceneChangesInput,
    DetectSceneChangesUseCase,
)
from src.application.use_cases.exceptions import UseCaseError
from src.drivers.cli.schemas.command_schemas import DetectRequest
from src.drivers.cli.schemas.prediction_schemas import PredictionDocument
from src.entities.exceptions import DomainError
from src.entities.models.window import WindowLabel
from src.interface_adapters.presenters.detection_presenter import DetectionPresenter

PlotWriter = Callable[[Path, Sequence[WindowLabel]], None]


class DetectController:
    def __init__(
        self,
        detect_use_case: DetectSceneChangesUseCase,
        plot_writer: PlotWriter,
    ):
        self._detect_use_case = detect_use_case
        self._plot_writer = plot_writer

    def detect(self, request: DetectRequest) -> tuple[PredictionDocument, str]:
        """Handles a detection run.

        Returns:
            The prediction document and a one-line summary of window labels.
        """
        try:
            config = request.config.to_entities()
            input_dto = DetectSceneChangesInput(
                window=config.window,
                similarity=config.similarity,
                detector=config.detector,
            )
            output_dto = self._detect_use_case(input_dto)
            if request.plot_csv is not None:
                self._plot_writer(request.plot_csv, output_dto.windows)
                logger.info(f"Wrote window plot data to {request.plot_csv}")
            document = DetectionPresenter.present_prediction(output_dto, request.config)
            return document, DetectionPresenter.present_summary(output_dto)
        except (DomainError, FileNotFoundError) as e:
            logger.warning(f"Cannot detect scene changes in {request.maps}: {e}")
            raise
        except UseCaseError as e:
            logger.warning(f"Use case error detecting scene changes: {e}")
            raise
        except Exception as e:
            logger.exception(f"Unexpected internal error detecting scene changes: {e}")
            raise UseCaseError("An unexpected internal error occurred.") from e
