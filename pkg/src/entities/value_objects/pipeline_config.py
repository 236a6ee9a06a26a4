from dataclasses import dataclass, field

from src.entities.exceptions import ConfigurationError
from src.entities.value_objects.detector_config import DetectorConfig
from src.entities.value_objects.encoder_config import EncoderConfig
from src.entities.value_objects.loss_config import LossConfig
from src.entities.value_objects.similarity_params import SimilarityParams
from src.entities.value_objects.window_config import WindowConfig


@dataclass(frozen=True)
class PipelineConfig:
    """
    Every validated parameter of one pipeline run.

    :ivar patch_height: Encoder patch height.
    :ivar patch_width: Encoder patch width.
    :ivar codebook_size: Number of codebook entries to train.
    :ivar codebook_max_iters: Lloyd iteration cap of codebook training.
    :ivar loss: Quantization objective weighting.
    :ivar similarity: Grid-cell similarity parameters.
    :ivar window: Window geometry.
    :ivar detector: K-means settings; its seed is the run seed.
    """

    patch_height: int = 4
    patch_width: int = 4
    codebook_size: int = 512
    codebook_max_iters: int = 100
    loss: LossConfig = field(default_factory=LossConfig)
    similarity: SimilarityParams = field(default_factory=SimilarityParams)
    window: WindowConfig = field(default_factory=WindowConfig)
    detector: DetectorConfig = field(default_factory=DetectorConfig)

    def __post_init__(self):
        EncoderConfig(patch_height=self.patch_height, patch_width=self.patch_width)
        if self.codebook_size < 2:  # noqa: PLR2004
            raise ConfigurationError(f"codebook_size must be >= 2, got {self.codebook_size}")
        if self.codebook_max_iters < 1:
            raise ConfigurationError(
                f"Codebook max_iters must be >= 1, got {self.codebook_max_iters}"
            )

    @property
    def seed(self) -> int:
        return self.detector.seed
