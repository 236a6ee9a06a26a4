"""Sliding windows over a frame sequence and their similarity statistics."""

from collections.abc import Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from loguru import logger

from src.application.services.similarity import map_similarity
from src.entities.exceptions import DataError
from src.entities.models.code_index_map import CodeIndexMap
from src.entities.models.window import WindowScore, WindowSpan
from src.entities.value_objects.similarity_params import SimilarityParams
from src.entities.value_objects.window_config import WindowConfig

# Position-indexed code maps: a list in frame order or a {frame index: map} dict.
CodeMapLookup = Sequence[CodeIndexMap] | Mapping[int, CodeIndexMap]


def enumerate_windows(n_frames: int, cfg: WindowConfig) -> list[WindowSpan]:
    """Full windows [k·stride, k·stride + l) that fit inside the sequence.

    A trailing partial window is dropped with a warning.
    """
    if n_frames < 0:
        raise DataError(f"n_frames must be >= 0, got {n_frames}")
    spans = [
        WindowSpan(start=start, end=start + cfg.window_len)
        for start in range(0, n_frames - cfg.window_len + 1, cfg.stride)
    ]
    covered = spans[-1].end if spans else 0
    if covered < n_frames:
        logger.warning(
            f"Dropping {n_frames - covered} trailing frame(s) not covered by a full "
            f"window of {cfg.window_len}"
        )
    return spans


def window_pairs(span: WindowSpan, cfg: WindowConfig) -> list[tuple[int, int]]:
    """Pair each retained frame of the first half with the frame l/2 later.

    Retained frames are the first of every block of ``skip`` frames.
    """
    if len(span) != cfg.window_len:
        raise DataError(f"Window {span} has length {len(span)}, expected {cfg.window_len}")
    return [
        (span.start + j * cfg.skip, span.start + j * cfg.skip + cfg.half)
        for j in range(cfg.pairs_per_window)
    ]


def _lookup(maps: CodeMapLookup, frame_index: int) -> CodeIndexMap:
    try:
        return maps[frame_index]
    except (IndexError, KeyError) as e:
        raise DataError(f"No code map available for frame {frame_index}") from e


def score_window(
    maps: CodeMapLookup,
    span: WindowSpan,
    cfg: WindowConfig,
    params: SimilarityParams,
) -> WindowScore:
    """Mean and population standard deviation of the window's pair scores.

    Raises:
        DataError: If a paired frame has no code map.
    """
    scores = [
        map_similarity(_lookup(maps, i), _lookup(maps, j), params)
        for i, j in window_pairs(span, cfg)
    ]
    values = np.asarray(scores, dtype=np.float64)
    return WindowScore(
        span=span,
        mean=float(values.mean()),
        std=float(values.std(ddof=0)),
        pair_scores=tuple(scores),
    )


def score_windows(
    maps: CodeMapLookup,
    spans: Sequence[WindowSpan],
    cfg: WindowConfig,
    params: SimilarityParams,
    threads: int = 1,
) -> list[WindowScore]:
    """Score every window, optionally on a thread pool.

    The result is ordered by window start whatever the thread count.
    """
    ordered = sorted(spans)
    if threads <= 1 or len(ordered) <= 1:
        return [score_window(maps, span, cfg, params) for span in ordered]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda span: score_window(maps, span, cfg, params), ordered))
