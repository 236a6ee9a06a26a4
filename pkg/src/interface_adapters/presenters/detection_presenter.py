from datetime import UTC, datetime

import numpy as np
import numpy.typing as npt

from src import __version__
from src.application.services.detector import run_length_encode
from src.application.use_cases.detection.detect_scene_changes import DetectSceneChangesOutput
from src.application.use_cases.detection.score_pair import ScorePairOutput
from src.drivers.cli.schemas.pipeline_schemas import PipelineConfigSchema
from src.drivers.cli.schemas.prediction_schemas import (
    ClusterSummary,
    PredictionDocument,
    SegmentRecord,
    WindowRecord,
)
from src.drivers.cli.schemas.report_schemas import ScorePairResponse
from src.entities.value_objects.scene_label import SceneLabel

TOOL_NAME = "scene-change"


class DetectionPresenter:
    """Converts detection outputs into documents and console text."""

    @staticmethod
    def present_prediction(
        output: DetectSceneChangesOutput,
        config: PipelineConfigSchema,
        created_at: datetime | None = None,
    ) -> PredictionDocument:
        return PredictionDocument(
            tool=TOOL_NAME,
            version=__version__,
            created_at=created_at or datetime.now(UTC),
            seed=config.seed,
            config=config,
            n_frames=output.n_frames,
            frame_names=output.map_names,
            windows=[
                WindowRecord(
                    start=window.span.start,
                    end=window.span.end,
                    mean=window.score.mean,
                    std=window.score.std,
                    cluster=window.cluster_id,
                    label=window.label,
                    distance_to_centroid=window.distance_to_centroid,
                )
                for window in sorted(output.windows, key=lambda w: w.span.start)
            ],
            segments=[
                SegmentRecord(start=start, end=end, label=label)
                for start, end, label in run_length_encode(output.frame_labels)
            ],
            clusters=ClusterSummary(
                centroids=output.fit.centroids.tolist(),
                labels={str(cluster): label for cluster, label in sorted(output.naming.items())},
                degenerate=output.fit.degenerate,
                n_iter=output.fit.n_iter,
                inertia=output.fit.inertia_trace[-1],
            ),
        )

    @staticmethod
    def present_summary(output: DetectSceneChangesOutput) -> str:
        counts = output.window_counts()
        parts = ", ".join(f"{counts[label]} {label.display_name}" for label in SceneLabel)
        line = f"{len(output.windows)} windows over {output.n_frames} frames: {parts}"
        if output.fit.degenerate:
            line += " (degenerate clustering: all windows identical)"
        return line

    @staticmethod
    def present_score(output: ScorePairOutput) -> ScorePairResponse:
        return ScorePairResponse(
            score=output.score,
            grid=output.grid.astype(int).tolist(),
            n_cells=int(output.grid.size),
        )

    @staticmethod
    def render_grid(grid: npt.NDArray[np.int8] | list[list[int]]) -> str:
        return "\n".join(" ".join(str(int(v)) for v in row) for row in np.asarray(grid))
