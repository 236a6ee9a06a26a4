"""Lloyd iteration shared by codebook training and the change detector."""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from loguru import logger
from scipy.spatial.distance import cdist

FloatArray = npt.NDArray[np.float64]
IndexArray = npt.NDArray[np.int64]

# Caps the number of distances held in memory per block.
_DISTANCE_BLOCK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class LloydResult:
    """Outcome of a Lloyd run.

    ``centroids`` are the ones whose assignment produced ``trace[-1]``.
    """

    centroids: FloatArray
    assignments: IndexArray
    trace: list[float]
    converged: bool
    reseeded: int


def nearest_entries(vectors: FloatArray, entries: npt.ArrayLike) -> tuple[IndexArray, FloatArray]:
    """Nearest entry and its squared Euclidean distance for every row.

    Ties resolve to the lowest entry index.
    """
    table = np.asarray(entries, dtype=np.float64)
    n = vectors.shape[0]
    indices = np.empty(n, dtype=np.int64)
    distances = np.empty(n, dtype=np.float64)
    block = max(1, _DISTANCE_BLOCK_ELEMENTS // table.shape[0])
    for start in range(0, n, block):
        chunk = cdist(vectors[start : start + block], table, metric="sqeuclidean")
        best = np.argmin(chunk, axis=1)
        indices[start : start + block] = best
        distances[start : start + block] = chunk[np.arange(chunk.shape[0]), best]
    return indices, distances


def update_centroids(
    data: FloatArray,
    assignments: IndexArray,
    centroids: FloatArray,
) -> tuple[FloatArray, int]:
    """Move each centroid to its cluster mean and reseed empty ones.

    An empty centroid is placed on the point currently farthest from its own
    (updated) centroid; each reseed takes a distinct point. Cluster sums are
    accumulated in point index order.

    Returns:
        (updated centroids, number of reseeded clusters)
    """
    k = centroids.shape[0]
    counts = np.bincount(assignments, minlength=k)
    sums = np.zeros_like(centroids)
    np.add.at(sums, assignments, data)
    updated = centroids.copy()
    filled = counts > 0
    updated[filled] = sums[filled] / counts[filled, np.newaxis]
    empty = np.flatnonzero(~filled)
    if empty.size:
        residual = np.sum((data - updated[assignments]) ** 2, axis=1)
        farthest = np.argsort(-residual, kind="stable")
        for slot, point in zip(empty, _distinct_first(data, farthest, empty.size), strict=False):
            updated[slot] = data[point]
        logger.debug(f"Reseeded {empty.size} empty cluster(s)")
    return updated, int(empty.size)


def _distinct_first(data: FloatArray, order: IndexArray, wanted: int) -> list[int]:
    """First ``wanted`` points of ``order`` with pairwise distinct vectors.

    Falls back to repeated vectors, still in ``order``, when the data holds
    fewer distinct vectors than requested.
    """
    chosen: list[int] = []
    seen: set[bytes] = set()
    for point in order:
        key = data[point].tobytes()
        if key not in seen:
            seen.add(key)
            chosen.append(int(point))
            if len(chosen) == wanted:
                return chosen
    taken = set(chosen)
    chosen.extend(int(p) for p in order if int(p) not in taken)
    return chosen[:wanted]


def lloyd(
    data: FloatArray,
    centroids: FloatArray,
    max_iters: int,
    rel_tol: float,
) -> LloydResult:
    """Alternate nearest-centroid assignment and centroid update.

    Stops on an assignment fixpoint, when the relative decrease of the
    distortion drops below ``rel_tol``, or after ``max_iters`` assignments.
    The distortion trace is non-increasing.
    """
    trace: list[float] = []
    reseeded = 0
    converged = False
    previous: IndexArray | None = None
    assignments = np.zeros(data.shape[0], dtype=np.int64)
    for iteration in range(max_iters):
        assignments, distances = nearest_entries(data, centroids)
        distortion = float(np.sum(distances))
        trace.append(distortion)
        logger.debug(f"Lloyd iteration {iteration}: distortion={distortion:.6g}")
        if previous is not None and np.array_equal(previous, assignments):
            converged = True
            break
        if len(trace) > 1:
            before = trace[-2]
            if before == 0 or (before - distortion) / before < rel_tol:
                converged = True
                break
        if iteration == max_iters - 1:
            break
        centroids, n_empty = update_centroids(data, assignments, centroids)
        reseeded += n_empty
        previous = assignments
    return LloydResult(
        centroids=centroids,
        assignments=assignments,
        trace=trace,
        converged=converged,
        reseeded=reseeded,
    )


def kmeans_plusplus(data: FloatArray, k: int, rng: np.random.Generator) -> FloatArray:
    """k-means++ seeding: each next centroid is drawn with probability
    proportional to its squared distance from the centroids chosen so far.

    The caller guarantees at least two distinct points.
    """
    n = data.shape[0]
    centroids = np.empty((k, data.shape[1]), dtype=np.float64)
    centroids[0] = data[rng.integers(0, n)]
    for i in range(1, k):
        _, dist_sq = nearest_entries(data, centroids[:i])
        probs = dist_sq / dist_sq.sum()
        centroids[i] = data[rng.choice(n, p=probs)]
    return centroids
