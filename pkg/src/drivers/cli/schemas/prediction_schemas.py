import json
from datetime import datetime
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic import ValidationError as PydanticValidationError

from src.drivers.cli.schemas.pipeline_schemas import PipelineConfigSchema
from src.entities.exceptions import InputParseError
from src.entities.value_objects.scene_label import SceneLabel


class WindowRecord(BaseModel):
    start: int
    end: int
    mean: float
    std: float
    cluster: int
    label: SceneLabel
    distance_to_centroid: float


class SegmentRecord(BaseModel):
    start: int
    end: int = Field(description="Exclusive end frame.")
    label: SceneLabel


class ClusterSummary(BaseModel):
    centroids: list[list[float]]
    labels: dict[str, SceneLabel] = Field(description="Cluster id -> scene label.")
    degenerate: bool
    n_iter: int
    inertia: float


class PredictionDocument(BaseModel):
    """Output of a detection run.

    Windows are sorted by start and the run-length segments cover every frame
    exactly once. ``created_at`` is the only field that differs between two
    identical runs.
    """

    model_config = ConfigDict(extra="forbid")

    tool: str
    version: str
    created_at: datetime
    seed: int
    config: PipelineConfigSchema
    n_frames: int
    frame_names: list[str]
    windows: list[WindowRecord]
    segments: list[SegmentRecord]
    clusters: ClusterSummary

    @model_validator(mode="after")
    def check_coverage(self) -> "PredictionDocument":
        starts = [window.start for window in self.windows]
        if starts != sorted(starts):
            raise ValueError("windows must be sorted by start")
        position = 0
        for segment in self.segments:
            if segment.start != position or segment.end <= segment.start:
                raise ValueError(f"segment {segment.start}-{segment.end} breaks the frame cover")
            position = segment.end
        if position != self.n_frames:
            raise ValueError(f"segments cover {position} frames, expected {self.n_frames}")
        return self

    def frame_labels(self) -> list[SceneLabel]:
        labels: list[SceneLabel] = []
        for segment in self.segments:
            labels.extend([segment.label] * (segment.end - segment.start))
        return labels

    @classmethod
    def from_json_file(cls, path: Path) -> "PredictionDocument":
        try:
            return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))
        except PydanticValidationError as e:
            raise InputParseError(f"Prediction file {path} is invalid: {e}") from e

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2) + "\n"
