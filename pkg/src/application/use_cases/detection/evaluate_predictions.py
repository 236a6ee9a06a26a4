from dataclasses import dataclass

from loguru import logger

from src.application.services.evaluation import report
from src.entities.models.classification_report import ClassificationReport
from src.entities.value_objects.scene_label import SceneLabel


@dataclass(frozen=True)
class EvaluatePredictionsInput:
    ground_truth: list[SceneLabel]
    predicted: list[SceneLabel]


@dataclass(frozen=True)
class EvaluatePredictionsOutput:
    report: ClassificationReport


class EvaluatePredictionsUseCase:
    """Per-frame classification report of predicted against annotated labels."""

    def __call__(self, input_data: EvaluatePredictionsInput) -> EvaluatePredictionsOutput:
        result = report(input_data.ground_truth, input_data.predicted)
        logger.info(f"Evaluated {result.total} frames: accuracy {result.accuracy:.4f}")
        if result.zero_division:
            logger.warning("Some precision or recall values are undefined and reported as 0")
        return EvaluatePredictionsOutput(report=result)
