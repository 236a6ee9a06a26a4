"""Projection of frames onto code-index maps through a patch codebook.

Frames are cut into non-overlapping patches, every patch is replaced by the
index of its nearest codebook entry, and a codebook is learned by Lloyd
iteration over patch vectors. The losses are evaluated as raw sums of squares.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from loguru import logger

from src.application.services.clustering import lloyd, nearest_entries, update_centroids
from src.entities.exceptions import (
    ConfigurationError,
    CorruptionError,
    DataError,
    ShapeError,
)
from src.entities.models.code_index_map import CodeIndexMap
from src.entities.models.codebook import Codebook
from src.entities.models.frame import Frame
from src.entities.value_objects.encoder_config import EncoderConfig
from src.entities.value_objects.loss_config import LossConfig

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True)
class TrainingResult:
    """A trained codebook and its per-iteration distortion trace."""

    codebook: Codebook
    distortion_trace: list[float]
    converged: bool
    reseeded: int


@dataclass(frozen=True)
class LossBreakdown:
    reconstruction: float
    vq: float

    @property
    def total(self) -> float:
        return self.reconstruction + self.vq


@dataclass(frozen=True)
class CodebookUsage:
    counts: npt.NDArray[np.int64]
    perplexity: float

    @property
    def used_entries(self) -> int:
        return int(np.count_nonzero(self.counts))


def _uniform_entries(n_entries: int, dim: int, seed: int) -> npt.NDArray[np.float32]:
    """Draw i.i.d. components on the open interval (-1/N_e, +1/N_e)."""
    bound = np.float32(1.0 / n_entries)
    rng = np.random.default_rng(seed)
    values = rng.uniform(-bound, bound, size=(n_entries, dim)).astype(np.float32)
    # float32 rounding may land exactly on a bound
    low = np.nextafter(-bound, np.float32(0))
    high = np.nextafter(bound, np.float32(0))
    return np.clip(values, low, high)


def init_codebook(n_entries: int, dim: int, seed: int) -> Codebook:
    """Create a codebook with components uniform on (-1/N_e, +1/N_e).

    Args:
        n_entries: Number of entries N_e, at least 2.
        dim: Entry dimension D, at least 1.
        seed: Non-negative seed; equal seeds give bit-identical codebooks.

    Raises:
        ConfigurationError: If a size or the seed is out of range.
    """
    if n_entries < 2:  # noqa: PLR2004
        raise ConfigurationError(f"n_entries must be >= 2, got {n_entries}")
    if dim < 1:
        raise ConfigurationError(f"dim must be >= 1, got {dim}")
    if seed < 0:
        raise ConfigurationError(f"seed must be >= 0, got {seed}")
    return Codebook(entries=_uniform_entries(n_entries, dim, seed), seed=seed)


def extract_features(frame: Frame, cfg: EncoderConfig) -> FloatArray:
    """Cut a frame into non-overlapping patches.

    Returns:
        (H / patch_h, W / patch_w, patch_h * patch_w * channels) array; each
        vector is its patch flattened in (row, col, channel) order.

    Raises:
        ShapeError: If a frame dimension is not divisible by the patch size.
    """
    ph, pw = cfg.patch_height, cfg.patch_width
    h, w, c = frame.shape
    if h % ph or w % pw:
        raise ShapeError(
            f"Frame {h}x{w} (height x width) is not divisible by patch {ph}x{pw}"
        )
    rows, cols = h // ph, w // pw
    patches = frame.pixels.reshape(rows, ph, cols, pw, c).transpose(0, 2, 1, 3, 4)
    return np.ascontiguousarray(patches.reshape(rows, cols, ph * pw * c))


def quantize(features: npt.ArrayLike, codebook: Codebook) -> CodeIndexMap:
    """Replace every feature vector by the index of its nearest entry.

    Args:
        features: (rows, cols, D) feature grid as returned by extract_features.
        codebook: Codebook of dimension D.

    Raises:
        ShapeError: If the feature dimension differs from the codebook's.
    """
    grid = np.asarray(features, dtype=np.float64)
    if grid.ndim != 3:  # noqa: PLR2004
        raise ShapeError(f"Features must be a (rows, cols, dim) grid, got {grid.shape}")
    rows, cols, dim = grid.shape
    if dim != codebook.dim:
        raise ShapeError(
            f"Feature dim {dim} does not match codebook dim {codebook.dim}"
        )
    indices, _ = nearest_entries(grid.reshape(rows * cols, dim), codebook.entries)
    return CodeIndexMap(indices=indices.reshape(rows, cols), n_entries=codebook.n_entries)


def encode_frame(frame: Frame, codebook: Codebook, cfg: EncoderConfig) -> CodeIndexMap:
    return quantize(extract_features(frame, cfg), codebook)


def reconstruct(code_map: CodeIndexMap, codebook: Codebook, cfg: EncoderConfig) -> Frame:
    """Tile the selected codebook entries back into a frame.

    Raises:
        CorruptionError: If the map was encoded for a larger codebook; its own
            indices are already bounded by its n_entries.
        ShapeError: If the codebook dim does not match the patch geometry.
    """
    if code_map.n_entries > codebook.n_entries:
        raise CorruptionError(
            f"Code map was encoded for {code_map.n_entries} entries "
            f"but the codebook has {codebook.n_entries}"
        )
    if codebook.dim != cfg.feature_dim:
        raise ShapeError(
            f"Codebook dim {codebook.dim} does not match patch dim {cfg.feature_dim}"
        )
    ph, pw, c = cfg.patch_height, cfg.patch_width, cfg.channels
    rows, cols = code_map.shape
    patches = codebook.entries.astype(np.float64)[code_map.indices]
    pixels = patches.reshape(rows, cols, ph, pw, c).transpose(0, 2, 1, 3, 4)
    return Frame(pixels=pixels.reshape(rows * ph, cols * pw, c))


def _require_same_shape(a: npt.NDArray[np.float64], b: npt.NDArray[np.float64], what: str) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"{what} shapes differ: {a.shape} vs {b.shape}")


def reconstruction_loss(x: Frame, x_hat: Frame) -> float:
    """Sum of squared differences ‖x − x̂‖₂² over all components."""
    _require_same_shape(x.pixels, x_hat.pixels, "Frame")
    return float(np.sum((x.pixels - x_hat.pixels) ** 2))


def vq_loss(encoder_out: npt.ArrayLike, selected_codes: npt.ArrayLike, cfg: LossConfig) -> float:
    """Codebook term plus β-weighted commitment term, evaluated as values.

    The stop-gradient only affects differentiation, so both terms share the
    value ‖E(x) − e‖₂² and the loss equals (1 + β)·‖E(x) − e‖₂².
    """
    e_x = np.asarray(encoder_out, dtype=np.float64)
    e = np.asarray(selected_codes, dtype=np.float64)
    _require_same_shape(e_x, e, "Encoder output and code")
    codebook_term = float(np.sum((e_x - e) ** 2))
    commitment_term = float(np.sum((e - e_x) ** 2))
    return codebook_term + cfg.beta * commitment_term


def total_loss(
    x: Frame,
    x_hat: Frame,
    encoder_out: npt.ArrayLike,
    selected_codes: npt.ArrayLike,
    cfg: LossConfig,
) -> float:
    return reconstruction_loss(x, x_hat) + vq_loss(encoder_out, selected_codes, cfg)


def codebook_loss(
    frames: Iterable[Frame],
    codebook: Codebook,
    cfg: EncoderConfig,
    loss_cfg: LossConfig,
) -> LossBreakdown:
    """Evaluate the full objective of a codebook over a set of frames."""
    reconstruction = 0.0
    vq = 0.0
    for frame in frames:
        features = extract_features(frame, cfg)
        code_map = quantize(features, codebook)
        selected = codebook.entries.astype(np.float64)[code_map.indices]
        reconstruction += reconstruction_loss(frame, reconstruct(code_map, codebook, cfg))
        vq += vq_loss(features, selected, loss_cfg)
    return LossBreakdown(reconstruction=reconstruction, vq=vq)


def codebook_usage(maps: Iterable[CodeIndexMap], n_entries: int) -> CodebookUsage:
    """Code usage histogram and its perplexity exp(−Σ p log p)."""
    counts = np.zeros(n_entries, dtype=np.int64)
    for code_map in maps:
        counts += np.bincount(code_map.indices.ravel(), minlength=n_entries)[:n_entries]
    total = counts.sum()
    if total == 0:
        return CodebookUsage(counts=counts, perplexity=0.0)
    p = counts[counts > 0] / total
    return CodebookUsage(counts=counts, perplexity=float(np.exp(-np.sum(p * np.log(p)))))


def train_codebook(
    patch_vectors: npt.ArrayLike | Sequence[Sequence[float]],
    n_entries: int,
    seed: int,
    max_iters: int = 100,
    rel_tol: float = 1e-6,
) -> TrainingResult:
    """Learn a codebook by Lloyd iteration over patch vectors.

    Training starts from the uniform initial codebook; one assignment and
    centroid update (with empty-cluster reseeding) moves it into the data
    range, then up to ``max_iters`` Lloyd iterations follow. Because codes
    live in patch-pixel space, the distortion is the reconstruction loss.

    Raises:
        DataError: If no vectors are given.
        ConfigurationError: If n_entries, max_iters or rel_tol are invalid.
    """
    data = np.asarray(patch_vectors, dtype=np.float64)
    if data.size == 0:
        raise DataError("Cannot train a codebook on an empty set of patch vectors")
    if data.ndim != 2:  # noqa: PLR2004
        raise ShapeError(f"Patch vectors must be (n, dim), got {data.shape}")
    if n_entries < 1:
        raise ConfigurationError(f"n_entries must be >= 1, got {n_entries}")
    if max_iters < 1:
        raise ConfigurationError(f"max_iters must be >= 1, got {max_iters}")
    if not rel_tol > 0:
        raise ConfigurationError(f"rel_tol must be > 0, got {rel_tol}")
    if seed < 0:
        raise ConfigurationError(f"seed must be >= 0, got {seed}")
    distinct = np.unique(data, axis=0).shape[0]
    if distinct < n_entries:
        logger.warning(
            f"Only {distinct} distinct vectors for {n_entries} entries; "
            "some entries will duplicate"
        )

    initial = _uniform_entries(n_entries, data.shape[1], seed).astype(np.float64)
    first_assignment, _ = nearest_entries(data, initial)
    centroids, reseeded = update_centroids(data, first_assignment, initial)
    result = lloyd(data, centroids, max_iters, rel_tol)
    logger.info(
        f"Trained codebook of {n_entries} entries on {data.shape[0]} vectors: "
        f"{len(result.trace)} iterations, final distortion {result.trace[-1]:.6g}"
    )
    return TrainingResult(
        codebook=Codebook(entries=result.centroids.astype(np.float32), seed=seed),
        distortion_trace=result.trace,
        converged=result.converged,
        reseeded=reseeded + result.reseeded,
    )
