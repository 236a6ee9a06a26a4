from datetime import UTC, datetime

import numpy as np
import pytest

from src.application.use_cases.detection.detect_scene_changes import (
    DetectSceneChangesInput,
    DetectSceneChangesOutput,
    DetectSceneChangesUseCase,
)
from src.application.use_cases.detection.score_pair import ScorePairOutput
from src.drivers.cli.schemas.pipeline_schemas import PipelineConfigSchema
from src.entities.value_objects.detector_config import DetectorConfig
from src.entities.value_objects.similarity_params import SimilarityParams
from src.entities.value_objects.window_config import WindowConfig
from src.infrastructure.repositories.code_map_repository.in_memory_repository import (
    InMemoryCodeMapRepository,
)
from src.interface_adapters.presenters.detection_presenter import DetectionPresenter
from tests.utils.entity_factories import C, N, constant_map, static_then_changing_maps

CREATED = datetime(2024, 5, 1, 12, 0, tzinfo=UTC)


def run_detection(maps) -> DetectSceneChangesOutput:
    repository = InMemoryCodeMapRepository({f"{i:06d}": m for i, m in enumerate(maps)})
    return DetectSceneChangesUseCase(repository)(
        DetectSceneChangesInput(
            window=WindowConfig(), similarity=SimilarityParams(), detector=DetectorConfig()
        )
    )


@pytest.fixture(scope="module")
def detection() -> DetectSceneChangesOutput:
    return run_detection(static_then_changing_maps(240, 250))


def test_prediction_document(detection):
    document = DetectionPresenter.present_prediction(detection, PipelineConfigSchema(), created_at=CREATED)

    assert document.tool == "scene-change"
    assert document.created_at == CREATED
    assert document.seed == 42
    assert document.n_frames == 490
    assert document.frame_names[-1] == "000489"
    assert [(w.start, w.end, w.label) for w in document.windows] == [
        (0, 120, N),
        (120, 240, N),
        (240, 360, C),
        (360, 480, C),
    ]
    assert [(s.start, s.end, s.label) for s in document.segments] == [(0, 240, N), (240, 490, C)]
    assert document.frame_labels() == detection.frame_labels
    assert sorted(document.clusters.labels.values()) == [C, N]
    assert not document.clusters.degenerate


def test_prediction_document_json_is_stable(detection):
    first = DetectionPresenter.present_prediction(detection, PipelineConfigSchema(), created_at=CREATED)
    second = DetectionPresenter.present_prediction(detection, PipelineConfigSchema(), created_at=CREATED)

    assert first.to_json() == second.to_json()


def test_summary_counts_windows(detection):
    assert DetectionPresenter.present_summary(detection) == (
        "4 windows over 490 frames: 2 changed, 2 not changed"
    )


def test_summary_flags_a_degenerate_fit():
    output = run_detection([constant_map(10, 10, 0)] * 240)

    summary = DetectionPresenter.present_summary(output)

    assert summary.startswith("2 windows over 240 frames: 0 changed, 2 not changed")
    assert "degenerate" in summary


def test_score_and_grid_rendering():
    grid = np.array([[1, 0], [0, 1]], dtype=np.int8)

    response = DetectionPresenter.present_score(ScorePairOutput(score=0.5, grid=grid))

    assert response.grid == [[1, 0], [0, 1]]
    assert response.n_cells == 4
    assert DetectionPresenter.render_grid(response.grid) == "1 0\n0 1"
