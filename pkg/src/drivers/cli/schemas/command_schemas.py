from pathlib import Path

from pydantic import BaseModel, Field

from src.drivers.cli.schemas.pipeline_schemas import PipelineConfigSchema

# === Request Schemas ===


class TrainCodebookRequest(BaseModel):
    """Request for training a codebook from a frame directory."""

    frames: Path
    out: Path
    patch_height: int = 4
    patch_width: int = 4
    codebook_size: int = Field(default=512, examples=[512])
    seed: int = 42
    max_iters: int = 100
    resize: bool = False


class EncodeFramesRequest(BaseModel):
    frames: Path
    codebook: Path
    out_dir: Path
    patch_height: int = 4
    patch_width: int = 4
    resize: bool = False


class CodebookLossRequest(BaseModel):
    frames: Path
    codebook: Path
    patch_height: int = 4
    patch_width: int = 4
    beta: float = 0.25
    resize: bool = False


class DetectRequest(BaseModel):
    """Request for a detection run; ``config`` is the fully resolved configuration."""

    maps: Path
    out: Path
    config: PipelineConfigSchema
    plot_csv: Path | None = None


class EvaluateRequest(BaseModel):
    pred: Path
    gt: Path
    report: Path | None = None


class ScorePairRequest(BaseModel):
    map_a: Path
    map_b: Path
    grid_rows: int = 5
    grid_cols: int = 5
    n_top: int = 5
    delta_sim: int = 2


class ImportMapsRequest(BaseModel):
    source: Path
    out_dir: Path
    n_entries: int = Field(gt=0, examples=[512])
