from dataclasses import dataclass

import numpy as np
from loguru import logger

from src.application.repositories.codebook_repository import CodebookRepository
from src.application.repositories.frame_repository import FrameRepository
from src.application.services.quantizer import (
    CodebookUsage,
    codebook_usage,
    encode_frame,
    extract_features,
    train_codebook,
)
from src.application.use_cases.loading import load_frames
from src.entities.models.codebook import Codebook
from src.entities.value_objects.encoder_config import EncoderConfig


@dataclass(frozen=True)
class TrainCodebookInput:
    patch_height: int = 4
    patch_width: int = 4
    n_entries: int = 512
    seed: int = 42
    max_iters: int = 100
    rel_tol: float = 1e-6


@dataclass(frozen=True)
class TrainCodebookOutput:
    codebook: Codebook
    distortion_trace: list[float]
    converged: bool
    reseeded: int
    n_frames: int
    n_vectors: int
    usage: CodebookUsage


class TrainCodebookUseCase:
    """Learn a patch codebook from a frame source and store it.

    Every non-overlapping patch of every frame is one training vector. The
    frames' channel count fixes the codebook dimension.
    """

    def __init__(
        self,
        frame_repository: FrameRepository,
        codebook_repository: CodebookRepository,
    ) -> None:
        self._frame_repository = frame_repository
        self._codebook_repository = codebook_repository

    def __call__(self, input_data: TrainCodebookInput) -> TrainCodebookOutput:
        frames = load_frames(self._frame_repository)
        cfg = EncoderConfig(
            patch_height=input_data.patch_height,
            patch_width=input_data.patch_width,
            channels=frames[0].channels,
        )
        logger.info(
            f"Training a {input_data.n_entries}-entry codebook on {len(frames)} frames "
            f"of {frames[0].shape} with {cfg.patch_height}x{cfg.patch_width} patches"
        )
        vectors = np.concatenate(
            [extract_features(frame, cfg).reshape(-1, cfg.feature_dim) for frame in frames]
        )
        result = train_codebook(
            vectors,
            n_entries=input_data.n_entries,
            seed=input_data.seed,
            max_iters=input_data.max_iters,
            rel_tol=input_data.rel_tol,
        )
        self._codebook_repository.save(result.codebook)
        usage = codebook_usage(
            (encode_frame(frame, result.codebook, cfg) for frame in frames),
            result.codebook.n_entries,
        )
        logger.info(
            f"Codebook uses {usage.used_entries}/{result.codebook.n_entries} entries, "
            f"perplexity {usage.perplexity:.3f}"
        )
        return TrainCodebookOutput(
            codebook=result.codebook,
            distortion_trace=result.distortion_trace,
            converged=result.converged,
            reseeded=result.reseeded,
            n_frames=len(frames),
            n_vectors=int(vectors.shape[0]),
            usage=usage,
        )
