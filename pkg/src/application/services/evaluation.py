"""Per-frame classification metrics for changed / not-changed predictions."""

from collections.abc import Sequence

import numpy as np
from sklearn.metrics import confusion_matrix, precision_recall_fscore_support
from tabulate import tabulate

from src.entities.exceptions import DataError
from src.entities.models.classification_report import (
    CLASS_ORDER,
    AverageMetrics,
    ClassificationReport,
    ClassMetrics,
    ConfusionMatrix,
)
from src.entities.value_objects.scene_label import SceneLabel

_LABELS = [label.value for label in CLASS_ORDER]


def _check_lengths(gt: Sequence[SceneLabel], pred: Sequence[SceneLabel]) -> None:
    if len(gt) != len(pred):
        raise DataError(
            f"Ground truth has {len(gt)} frames but the prediction has {len(pred)}"
        )
    if not gt:
        raise DataError("Cannot evaluate an empty label sequence")


def confusion(gt: Sequence[SceneLabel], pred: Sequence[SceneLabel]) -> ConfusionMatrix:
    """2×2 counts with ground truth on rows and predictions on columns.

    Raises:
        DataError: If the sequences are empty or differ in length.
    """
    _check_lengths(gt, pred)
    matrix = confusion_matrix(
        [str(label) for label in gt], [str(label) for label in pred], labels=_LABELS
    )
    (a, b), (c, d) = matrix.tolist()
    return ConfusionMatrix(counts=((int(a), int(b)), (int(c), int(d))))


def _average(per_class: dict[SceneLabel, ClassMetrics], weights: Sequence[float]) -> tuple[float, float, float]:
    metrics = [per_class[label] for label in CLASS_ORDER]
    return (
        float(np.average([m.precision for m in metrics], weights=weights)),
        float(np.average([m.recall for m in metrics], weights=weights)),
        float(np.average([m.f1 for m in metrics], weights=weights)),
    )


def report(gt: Sequence[SceneLabel], pred: Sequence[SceneLabel]) -> ClassificationReport:
    """Precision, recall, F1, accuracy and averages for both classes.

    An undefined precision or recall (zero denominator) is reported as 0 and
    flagged on the class and on the report.
    """
    matrix = confusion(gt, pred)
    precision, recall, f1, support = precision_recall_fscore_support(
        [str(label) for label in gt],
        [str(label) for label in pred],
        labels=_LABELS,
        zero_division=0,
    )
    per_class: dict[SceneLabel, ClassMetrics] = {}
    for i, label in enumerate(CLASS_ORDER):
        tp = matrix.true_positives(label)
        per_class[label] = ClassMetrics(
            precision=float(precision[i]),
            recall=float(recall[i]),
            f1=float(f1[i]),
            support=int(support[i]),
            precision_undefined=tp + matrix.false_positives(label) == 0,
            recall_undefined=tp + matrix.false_negatives(label) == 0,
        )

    total = matrix.total
    supports = [per_class[label].support for label in CLASS_ORDER]
    macro = _average(per_class, [1.0, 1.0])
    weighted = _average(per_class, supports)
    accuracy = sum(matrix.true_positives(label) for label in CLASS_ORDER) / total
    return ClassificationReport(
        per_class=per_class,
        accuracy=accuracy,
        macro_avg=AverageMetrics(*macro, support=total),
        weighted_avg=AverageMetrics(*weighted, support=total),
        confusion=matrix,
        zero_division=any(
            m.precision_undefined or m.recall_undefined for m in per_class.values()
        ),
    )


def render_table(result: ClassificationReport, digits: int = 2) -> str:
    """Aligned text table: one row per class, then accuracy and the averages."""
    rows: list[list[object]] = [
        [label.display_name, m.precision, m.recall, m.f1, m.support]
        for label, m in ((label, result.per_class[label]) for label in CLASS_ORDER)
    ]
    rows.append(["accuracy", None, None, result.accuracy, result.total])
    for name, avg in (("macro avg", result.macro_avg), ("weighted avg", result.weighted_avg)):
        rows.append([name, avg.precision, avg.recall, avg.f1, avg.support])
    table = tabulate(
        rows,
        headers=["", "precision", "recall", "f1-score", "support"],
        floatfmt=f".{digits}f",
        missingval="",
    )
    (a, b), (c, d) = result.confusion.counts
    matrix = tabulate(
        [["gt changed", a, b], ["gt not changed", c, d]],
        headers=["", "pred changed", "pred not changed"],
    )
    return f"{table}\n\n{matrix}"
