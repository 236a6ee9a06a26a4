from collections import Counter
from dataclasses import dataclass

import numpy as np
from loguru import logger

from src.application.repositories.code_map_repository import CodeMapRepository
from src.application.services.detector import (
    KMeansResult,
    frames_from_windows,
    kmeans_fit,
    label_windows,
    name_clusters,
    standardize,
)
from src.application.services.windowing import enumerate_windows, score_windows
from src.application.use_cases.loading import load_code_maps, map_names
from src.entities.exceptions import DataError
from src.entities.models.window import WindowLabel
from src.entities.value_objects.detector_config import DetectorConfig
from src.entities.value_objects.scene_label import SceneLabel
from src.entities.value_objects.similarity_params import SimilarityParams
from src.entities.value_objects.window_config import WindowConfig


@dataclass(frozen=True)
class DetectSceneChangesInput:
    window: WindowConfig
    similarity: SimilarityParams
    detector: DetectorConfig


@dataclass(frozen=True)
class DetectSceneChangesOutput:
    map_names: list[str]
    windows: list[WindowLabel]
    frame_labels: list[SceneLabel]
    fit: KMeansResult
    naming: dict[int, SceneLabel]

    @property
    def n_frames(self) -> int:
        return len(self.frame_labels)

    def window_counts(self) -> dict[SceneLabel, int]:
        counts = Counter(window.label for window in self.windows)
        return {label: counts.get(label, 0) for label in SceneLabel}


class DetectSceneChangesUseCase:
    """Label every window and frame of a code-map sequence as changed or not.

    Window frame indices are positions in the numerically ordered map list.
    One k-means fit covers all windows of the invocation.
    """

    def __init__(self, code_map_repository: CodeMapRepository, threads: int = 1) -> None:
        self._code_map_repository = code_map_repository
        self._threads = max(1, threads)

    def __call__(self, input_data: DetectSceneChangesInput) -> DetectSceneChangesOutput:
        names = map_names(self._code_map_repository)
        maps = load_code_maps(self._code_map_repository)
        spans = enumerate_windows(len(maps), input_data.window)
        if not spans:
            raise DataError(
                f"No complete windows: {len(maps)} code maps but a window needs "
                f"{input_data.window.window_len}"
            )
        logger.info(
            f"Scoring {len(spans)} windows over {len(maps)} code maps of {maps[0].shape}"
        )
        scores = score_windows(
            maps, spans, input_data.window, input_data.similarity, threads=self._threads
        )
        points = np.array([(score.mean, score.std) for score in scores], dtype=np.float64)
        if input_data.detector.standardize:
            points = standardize(points)
        fit = kmeans_fit(points, input_data.detector)
        naming = name_clusters(fit.centroids)
        windows = label_windows(scores, fit, naming)
        frame_labels = frames_from_windows(windows, len(maps), input_data.window)

        output = DetectSceneChangesOutput(
            map_names=names,
            windows=windows,
            frame_labels=frame_labels,
            fit=fit,
            naming=naming,
        )
        summary = ", ".join(f"{label}={n}" for label, n in output.window_counts().items())
        logger.info(f"Labelled {len(windows)} windows: {summary}")
        return output
