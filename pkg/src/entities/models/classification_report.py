from dataclasses import dataclass, field

from src.entities.value_objects.scene_label import SceneLabel

# Row / column order of the confusion matrix and the report.
CLASS_ORDER: tuple[SceneLabel, SceneLabel] = (SceneLabel.changed, SceneLabel.not_changed)


@dataclass(frozen=True)
class ConfusionMatrix:
    """
    2×2 frame counts; rows are ground truth, columns are predictions, both in
    ``CLASS_ORDER`` (changed first).

    :ivar counts: ((gt C → pred C, gt C → pred N), (gt N → pred C, gt N → pred N)).
    :type counts: tuple[tuple[int, int], tuple[int, int]]
    """

    counts: tuple[tuple[int, int], tuple[int, int]]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def true_positives(self, label: SceneLabel) -> int:
        i = CLASS_ORDER.index(label)
        return self.counts[i][i]

    def false_positives(self, label: SceneLabel) -> int:
        i = CLASS_ORDER.index(label)
        return self.counts[1 - i][i]

    def false_negatives(self, label: SceneLabel) -> int:
        i = CLASS_ORDER.index(label)
        return self.counts[i][1 - i]

    def support(self, label: SceneLabel) -> int:
        i = CLASS_ORDER.index(label)
        return sum(self.counts[i])

    def transposed(self) -> "ConfusionMatrix":
        (a, b), (c, d) = self.counts
        return ConfusionMatrix(counts=((a, c), (b, d)))


@dataclass(frozen=True)
class ClassMetrics:
    """Precision / recall / F1 of one class, with zero-division flags."""

    precision: float
    recall: float
    f1: float
    support: int
    precision_undefined: bool = False
    recall_undefined: bool = False


@dataclass(frozen=True)
class AverageMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class ClassificationReport:
    """
    Per-class metrics, accuracy and averages in the classic report layout.

    :ivar per_class: Metrics keyed by scene label.
    :type per_class: dict[SceneLabel, ClassMetrics]
    :ivar accuracy: Fraction of frames labelled correctly.
    :type accuracy: float
    :ivar macro_avg: Unweighted mean of the class metrics.
    :type macro_avg: AverageMetrics
    :ivar weighted_avg: Support-weighted mean of the class metrics.
    :type weighted_avg: AverageMetrics
    :ivar confusion: The matrix every metric was derived from.
    :type confusion: ConfusionMatrix
    """

    per_class: dict[SceneLabel, ClassMetrics]
    accuracy: float
    macro_avg: AverageMetrics
    weighted_avg: AverageMetrics
    confusion: ConfusionMatrix
    zero_division: bool = field(default=False)

    @property
    def total(self) -> int:
        return self.confusion.total
