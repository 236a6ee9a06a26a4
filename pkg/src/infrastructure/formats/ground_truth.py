"""Per-frame ground-truth annotations.

Two CSV layouts are accepted:

- ``frame_index,label``: one row per frame, every index from 0 to n-1 once;
- ``start_frame,end_frame_exclusive,label``: contiguous segments from frame 0.
"""

import csv
from pathlib import Path

from loguru import logger

from src.application.services.detector import run_length_encode
from src.entities.exceptions import DataError, InputParseError
from src.entities.value_objects.scene_label import SceneLabel

FRAME_HEADER = ["frame_index", "label"]
SEGMENT_HEADER = ["start_frame", "end_frame_exclusive", "label"]


def _parse_label(raw: str, line: int) -> SceneLabel:
    try:
        return SceneLabel(raw.strip())
    except ValueError as e:
        raise InputParseError(
            f"Line {line}: unknown label '{raw}', expected one of {[str(x) for x in SceneLabel]}"
        ) from e


def _parse_int(raw: str, line: int, column: str) -> int:
    try:
        return int(raw.strip())
    except ValueError as e:
        raise InputParseError(f"Line {line}: {column} '{raw}' is not an integer") from e


def _from_frame_rows(rows: list[list[str]]) -> list[SceneLabel]:
    by_index: dict[int, SceneLabel] = {}
    for line, row in enumerate(rows, start=2):
        if len(row) != len(FRAME_HEADER):
            raise InputParseError(f"Line {line}: expected 2 columns, got {len(row)}")
        index = _parse_int(row[0], line, "frame_index")
        if index in by_index:
            raise DataError(f"Line {line}: frame {index} is annotated twice")
        by_index[index] = _parse_label(row[1], line)
    missing = set(range(len(by_index))) - by_index.keys()
    if missing:
        raise DataError(f"Frame annotations are not contiguous from 0; missing frame {min(missing)}")
    return [by_index[i] for i in range(len(by_index))]


def _from_segment_rows(rows: list[list[str]]) -> list[SceneLabel]:
    labels: list[SceneLabel] = []
    for line, row in enumerate(rows, start=2):
        if len(row) != len(SEGMENT_HEADER):
            raise InputParseError(f"Line {line}: expected 3 columns, got {len(row)}")
        start = _parse_int(row[0], line, "start_frame")
        end = _parse_int(row[1], line, "end_frame_exclusive")
        if start != len(labels):
            raise DataError(
                f"Line {line}: segment starts at {start} but the previous one ended at {len(labels)}"
            )
        if end <= start:
            raise DataError(f"Line {line}: empty or reversed segment [{start}, {end})")
        labels.extend([_parse_label(row[2], line)] * (end - start))
    return labels


def read_ground_truth(path: Path, n_frames: int | None = None) -> list[SceneLabel]:
    """Load per-frame labels from either CSV layout.

    Raises:
        InputParseError: On an unknown header, label or a non-integer index.
        DataError: On gaps, overlaps, or a frame count other than ``n_frames``.
    """
    with Path(path).open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = [cell.strip() for cell in next(reader, [])]
        rows = [row for row in reader if row and any(cell.strip() for cell in row)]

    if header == FRAME_HEADER:
        labels = _from_frame_rows(rows)
    elif header == SEGMENT_HEADER:
        labels = _from_segment_rows(rows)
    else:
        raise InputParseError(
            f"Unrecognised ground-truth header {header}; expected "
            f"{','.join(FRAME_HEADER)} or {','.join(SEGMENT_HEADER)}"
        )
    if not labels:
        raise DataError(f"Ground truth {path} holds no annotations")
    if n_frames is not None and len(labels) != n_frames:
        raise DataError(f"Ground truth covers {len(labels)} frames, expected {n_frames}")
    logger.debug(f"Loaded {len(labels)} ground-truth labels from {path}")
    return labels


def write_ground_truth(path: Path, labels: list[SceneLabel]) -> None:
    """Write labels in the segment layout."""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with Path(path).open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SEGMENT_HEADER)
        for start, end, label in run_length_encode(labels):
            writer.writerow([start, end, str(label)])
