import csv
import io
from collections.abc import Sequence
from pathlib import Path

from src.entities.models.window import WindowLabel
from src.infrastructure.formats.atomic import atomic_write_text

PLOT_HEADER = ["window_start", "mean", "std", "label"]


def write_plot_csv(path: Path, windows: Sequence[WindowLabel]) -> None:
    """Write one ``window_start,mean,std,label`` row per window, by start."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(PLOT_HEADER)
    for window in sorted(windows, key=lambda w: w.span.start):
        writer.writerow(
            [window.span.start, repr(window.score.mean), repr(window.score.std), str(window.label)]
        )
    atomic_write_text(Path(path), buffer.getvalue())
