import json
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as PydanticValidationError

from src.entities.exceptions import ConfigurationError
from src.entities.value_objects.detector_config import DetectorConfig
from src.entities.value_objects.loss_config import LossConfig
from src.entities.value_objects.pipeline_config import PipelineConfig
from src.entities.value_objects.similarity_params import SimilarityParams
from src.entities.value_objects.window_config import WindowConfig


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class EncoderSection(_Section):
    patch_height: int = Field(default=4, examples=[4])
    patch_width: int = Field(default=4, examples=[4])
    codebook_size: int = Field(default=512, examples=[512])
    max_iters: int = Field(default=100, examples=[100])


class LossSection(_Section):
    beta: float = Field(default=0.25, description="Commitment weight.")


class SimilaritySection(_Section):
    grid_rows: int = 5
    grid_cols: int = 5
    n_top: int = 5
    delta_sim: int = 2


class WindowSection(_Section):
    window_len: int = Field(default=120, description="Window length in frames.")
    stride: int = Field(default=120, description="Frames between window starts.")
    skip: int = Field(default=4, description="Pair one frame out of every `skip`.")
    fps: float = 12.0


class DetectorSection(_Section):
    k: int = 2
    max_iters: int = 300
    rel_tol: float = 1e-6
    init: Literal["k-means++"] = "k-means++"
    standardize: bool = False


class PathsSection(_Section):
    frames: str | None = None
    codebook: str | None = None
    maps: str | None = None
    out: str | None = None


class PipelineConfigSchema(_Section):
    """JSON document holding every parameter of a pipeline run.

    It is loaded with ``--config``, overridden by command-line flags and
    echoed unchanged into the prediction document.
    """

    encoder: EncoderSection = Field(default_factory=EncoderSection)
    loss: LossSection = Field(default_factory=LossSection)
    similarity: SimilaritySection = Field(default_factory=SimilaritySection)
    window: WindowSection = Field(default_factory=WindowSection)
    detector: DetectorSection = Field(default_factory=DetectorSection)
    paths: PathsSection = Field(default_factory=PathsSection)
    seed: int = Field(default=42, ge=0)

    def to_entities(self) -> PipelineConfig:
        """Build the validated domain configuration.

        Raises:
            ConfigurationError: If any section violates its invariants.
        """
        return PipelineConfig(
            patch_height=self.encoder.patch_height,
            patch_width=self.encoder.patch_width,
            codebook_size=self.encoder.codebook_size,
            codebook_max_iters=self.encoder.max_iters,
            loss=LossConfig(beta=self.loss.beta),
            similarity=SimilarityParams(**self.similarity.model_dump()),
            window=WindowConfig(**self.window.model_dump()),
            detector=DetectorConfig(seed=self.seed, **self.detector.model_dump()),
        )

    @classmethod
    def from_json_file(cls, path: Path) -> "PipelineConfigSchema":
        """Load a config document.

        Raises:
            FileNotFoundError: If the file does not exist.
            ConfigurationError: If it is not valid JSON or has unknown or mistyped keys.
        """
        try:
            return cls.model_validate(json.loads(Path(path).read_text(encoding="utf-8")))
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Config {path} is not valid JSON: {e}") from e
        except PydanticValidationError as e:
            raise ConfigurationError(f"Config {path} is invalid: {e}") from e

    def with_overrides(self, **sections: dict[str, object]) -> "PipelineConfigSchema":
        """Copy with the non-None values of each named section replaced.

        ``seed`` may be passed as ``seed={"value": 7}``.
        """
        data = self.model_dump()
        for section, values in sections.items():
            present = {key: value for key, value in values.items() if value is not None}
            if section == "seed":
                if "value" in present:
                    data["seed"] = present["value"]
                continue
            data[section].update(present)
        try:
            return type(self).model_validate(data)
        except PydanticValidationError as e:
            raise ConfigurationError(f"Invalid configuration value: {e}") from e
