import json

from pydantic import BaseModel, Field

from src.entities.value_objects.scene_label import SceneLabel


class ClassMetricsResponse(BaseModel):
    precision: float
    recall: float
    f1: float
    support: int
    precision_undefined: bool = False
    recall_undefined: bool = False


class AverageMetricsResponse(BaseModel):
    precision: float
    recall: float
    f1: float
    support: int


class ConfusionMatrixResponse(BaseModel):
    labels: list[SceneLabel] = Field(description="Row (ground truth) and column (prediction) order.")
    counts: list[list[int]]


class ReportResponse(BaseModel):
    """Per-frame classification report, serialised as JSON."""

    per_class: dict[SceneLabel, ClassMetricsResponse]
    accuracy: float
    macro_avg: AverageMetricsResponse
    weighted_avg: AverageMetricsResponse
    confusion: ConfusionMatrixResponse
    zero_division: bool
    n_frames: int
    table: str = Field(description="The report as an aligned text table.")

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2) + "\n"


class ScorePairResponse(BaseModel):
    score: float
    grid: list[list[int]]
    n_cells: int


class TrainCodebookResponse(BaseModel):
    out: str
    n_entries: int
    dim: int
    n_frames: int
    n_vectors: int
    distortion_trace: list[float]
    converged: bool
    reseeded: int
    used_entries: int
    perplexity: float


class EncodeFramesResponse(BaseModel):
    out_dir: str
    n_maps: int
    map_shape: tuple[int, int]
    used_entries: int
    perplexity: float


class CodebookLossResponse(BaseModel):
    n_frames: int
    reconstruction: float
    vq: float
    total: float


class ImportMapsResponse(BaseModel):
    out_dir: str
    n_maps: int
    map_shape: tuple[int, int]
    n_entries: int
