from dataclasses import dataclass

from loguru import logger

from src.application.repositories.codebook_repository import CodebookRepository
from src.application.repositories.frame_repository import FrameRepository
from src.application.services.quantizer import LossBreakdown, codebook_loss
from src.application.use_cases.loading import load_frames
from src.entities.exceptions import ShapeError
from src.entities.value_objects.encoder_config import EncoderConfig
from src.entities.value_objects.loss_config import LossConfig


@dataclass(frozen=True)
class EvaluateCodebookLossInput:
    patch_height: int = 4
    patch_width: int = 4
    beta: float = 0.25


@dataclass(frozen=True)
class EvaluateCodebookLossOutput:
    loss: LossBreakdown
    n_frames: int


class EvaluateCodebookLossUseCase:
    """Evaluate the reconstruction and quantization objective of a stored codebook."""

    def __init__(
        self,
        frame_repository: FrameRepository,
        codebook_repository: CodebookRepository,
    ) -> None:
        self._frame_repository = frame_repository
        self._codebook_repository = codebook_repository

    def __call__(self, input_data: EvaluateCodebookLossInput) -> EvaluateCodebookLossOutput:
        loss_cfg = LossConfig(beta=input_data.beta)
        codebook = self._codebook_repository.load()
        frames = load_frames(self._frame_repository)
        cfg = EncoderConfig(
            patch_height=input_data.patch_height,
            patch_width=input_data.patch_width,
            channels=frames[0].channels,
        )
        if codebook.dim != cfg.feature_dim:
            raise ShapeError(
                f"Codebook dim {codebook.dim} does not match patch dim {cfg.feature_dim}"
            )
        loss = codebook_loss(frames, codebook, cfg, loss_cfg)
        logger.info(
            f"Codebook loss over {len(frames)} frames: reconstruction {loss.reconstruction:.6g}, "
            f"vq {loss.vq:.6g}, total {loss.total:.6g}"
        )
        return EvaluateCodebookLossOutput(loss=loss, n_frames=len(frames))
