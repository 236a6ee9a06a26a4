"""Two-cluster k-means over window (mean, std) points and label projection.

The cluster with the higher mean similarity is the not-changed scene. Window
labels are spread back to frames so predictions can be compared with
per-frame annotations.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from loguru import logger

from src.application.services.clustering import kmeans_plusplus, lloyd, nearest_entries
from src.entities.exceptions import DataError
from src.entities.models.window import WindowLabel, WindowScore
from src.entities.value_objects.detector_config import DetectorConfig
from src.entities.value_objects.scene_label import SceneLabel
from src.entities.value_objects.window_config import WindowConfig

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True)
class KMeansResult:
    """
    A fitted k-means model.

    :ivar centroids: (k, 2) centroids; their assignment produced the last inertia.
    :ivar assignments: Cluster index of every point.
    :ivar distances: Euclidean distance of every point to its centroid.
    :ivar inertia_trace: Sum of squared distances after every assignment step.
    :ivar degenerate: Set when all points coincide and the centroid is duplicated.
    :ivar converged: Whether a stopping rule fired before max_iters.
    """

    centroids: FloatArray
    assignments: npt.NDArray[np.int64]
    distances: FloatArray
    inertia_trace: list[float]
    degenerate: bool
    converged: bool

    @property
    def n_iter(self) -> int:
        return len(self.inertia_trace)


def _as_points(points: npt.ArrayLike) -> FloatArray:
    data = np.asarray(points, dtype=np.float64)
    if data.ndim != 2:  # noqa: PLR2004
        raise DataError(f"Points must be an (n, dim) array, got shape {data.shape}")
    return data


def standardize(points: npt.ArrayLike) -> FloatArray:
    """z-score every axis; an axis with zero spread is only centred."""
    data = _as_points(points)
    spread = data.std(axis=0)
    spread[spread == 0] = 1.0
    return (data - data.mean(axis=0)) / spread


def kmeans_fit(points: npt.ArrayLike, cfg: DetectorConfig) -> KMeansResult:
    """Fit k-means from seeded k-means++ initialisation.

    Raises:
        DataError: If fewer than two points are given.
    """
    data = _as_points(points)
    n = data.shape[0]
    if n < 2:  # noqa: PLR2004
        raise DataError(f"K-means needs at least 2 points, got {n}")

    if np.unique(data, axis=0).shape[0] < 2:  # noqa: PLR2004
        logger.warning(
            f"All {n} points are identical; returning a degenerate fit with a duplicated centroid"
        )
        return KMeansResult(
            centroids=np.repeat(data[:1], cfg.k, axis=0),
            assignments=np.zeros(n, dtype=np.int64),
            distances=np.zeros(n, dtype=np.float64),
            inertia_trace=[0.0],
            degenerate=True,
            converged=True,
        )

    rng = np.random.default_rng(cfg.seed)
    seeds = kmeans_plusplus(data, cfg.k, rng)
    result = lloyd(data, seeds, cfg.max_iters, cfg.rel_tol)
    _, sq_distances = nearest_entries(data, result.centroids)
    logger.debug(
        f"K-means on {n} points: {len(result.trace)} iterations, "
        f"inertia {result.trace[-1]:.6g}"
    )
    return KMeansResult(
        centroids=result.centroids,
        assignments=result.assignments,
        distances=np.sqrt(sq_distances),
        inertia_trace=result.trace,
        degenerate=False,
        converged=result.converged,
    )


def name_clusters(centroids: npt.ArrayLike) -> dict[int, SceneLabel]:
    """Name the two clusters by centroid value.

    Higher mean coordinate is not_changed; equal means fall back to the lower
    std, and fully equal centroids to the lower cluster index.
    """
    c = np.asarray(centroids, dtype=np.float64)
    if c.shape[0] != 2:  # noqa: PLR2004
        raise DataError(f"Expected 2 centroids, got {c.shape[0]}")
    (mean_0, std_0), (mean_1, std_1) = c[0, :2], c[1, :2]
    if mean_0 != mean_1:
        static = 0 if mean_0 > mean_1 else 1
    elif std_0 != std_1:
        static = 0 if std_0 < std_1 else 1
    else:
        static = 0
    return {static: SceneLabel.not_changed, 1 - static: SceneLabel.changed}


def label_windows(
    scores: Sequence[WindowScore],
    fit: KMeansResult,
    naming: dict[int, SceneLabel],
) -> list[WindowLabel]:
    if len(scores) != fit.assignments.shape[0]:
        raise DataError(
            f"{len(scores)} window scores but {fit.assignments.shape[0]} cluster assignments"
        )
    return [
        WindowLabel(
            score=score,
            label=naming[int(cluster)],
            cluster_id=int(cluster),
            distance_to_centroid=float(distance),
        )
        for score, cluster, distance in zip(scores, fit.assignments, fit.distances, strict=True)
    ]


def frames_from_windows(
    window_labels: Sequence[WindowLabel],
    n_frames: int,
    cfg: WindowConfig,
) -> list[SceneLabel]:
    """Project window labels onto frames.

    Overlapping windows vote, ties go to changed. Frames past the last window
    inherit its label; without any window every frame is changed.
    """
    if not window_labels:
        return [SceneLabel.changed] * n_frames
    changed_votes = np.zeros(n_frames, dtype=np.int64)
    static_votes = np.zeros(n_frames, dtype=np.int64)
    for window in window_labels:
        if len(window.span) != cfg.window_len:
            raise DataError(
                f"Window {window.span} has length {len(window.span)}, expected {cfg.window_len}"
            )
        votes = changed_votes if window.label is SceneLabel.changed else static_votes
        votes[window.span.start : window.span.end] += 1

    labels = [
        SceneLabel.not_changed if static > changed else SceneLabel.changed
        for changed, static in zip(changed_votes, static_votes, strict=True)
    ]
    last = max(window_labels, key=lambda w: w.span.start)
    for i in range(last.span.end, n_frames):
        labels[i] = last.label
    return labels


def run_length_encode(frame_labels: Sequence[SceneLabel]) -> list[tuple[int, int, SceneLabel]]:
    """Collapse a label sequence into (start, end_exclusive, label) runs."""
    runs: list[tuple[int, int, SceneLabel]] = []
    start = 0
    for i in range(1, len(frame_labels) + 1):
        if i == len(frame_labels) or frame_labels[i] != frame_labels[start]:
            runs.append((start, i, frame_labels[start]))
            start = i
    return runs
