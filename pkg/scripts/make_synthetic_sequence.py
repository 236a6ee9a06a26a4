#!/usr/bin/env python
"""Write a synthetic clip (a still mosaic, then a bright square sliding over it) with its labels.

Usage: python scripts/make_synthetic_sequence.py OUT_DIR [N_STATIC] [N_CHANGING]

OUT_DIR receives ``frames/`` (numbered PGM files) and ``gt.csv`` in the
segment layout accepted by ``scene-change evaluate``.
"""

import sys
from pathlib import Path

import numpy as np
from loguru import logger

# Add src to path to allow importing project modules
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.entities.models.frame import Frame  # noqa: E402
from src.entities.value_objects.scene_label import SceneLabel  # noqa: E402
from src.infrastructure.formats.ground_truth import write_ground_truth  # noqa: E402
from src.infrastructure.formats.pnm import write_frame  # noqa: E402

logger.remove()
logger.add(sys.stderr, level="INFO")

HEIGHT, WIDTH, BLOCK, LEVELS = 80, 120, 4, 16
SQUARE, PERIOD = 48, 24


def _mosaic(rng: np.random.Generator) -> np.ndarray:
    step = 255 // (LEVELS - 1)
    levels = rng.integers(0, LEVELS, size=(HEIGHT // BLOCK, WIDTH // BLOCK)) * step
    return np.kron(levels, np.ones((BLOCK, BLOCK), dtype=np.int64))


def _frame(raw: np.ndarray) -> Frame:
    return Frame(pixels=(raw / 255 - 0.5) / 0.5)


def _with_square(raw: np.ndarray, k: int) -> Frame:
    framed = raw.copy()
    left = (WIDTH - SQUARE) // PERIOD * (k % PERIOD)
    framed[HEIGHT // 5 : HEIGHT // 5 + SQUARE, left : left + SQUARE] = 255
    return _frame(framed)


def make_sequence(out_dir: Path, n_static: int = 120, n_changing: int = 240, seed: int = 42) -> None:
    rng = np.random.default_rng(seed)
    mosaic = _mosaic(rng)
    frames = [_frame(mosaic)] * n_static + [_with_square(mosaic, k) for k in range(n_changing)]
    for i, frame in enumerate(frames):
        write_frame(out_dir / "frames" / f"{i:06d}.pgm", frame)
    labels = [SceneLabel.not_changed] * n_static + [SceneLabel.changed] * n_changing
    write_ground_truth(out_dir / "gt.csv", labels)
    logger.success(f"Wrote {len(frames)} frames of {HEIGHT}x{WIDTH} and gt.csv to {out_dir}")


if __name__ == "__main__":
    if len(sys.argv) < 2:  # noqa: PLR2004
        print(__doc__)
        sys.exit(1)
    counts = [int(value) for value in sys.argv[2:4]]
    make_sequence(Path(sys.argv[1]), *counts)
