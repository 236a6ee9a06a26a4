import pytest

from src.application.services.evaluation import confusion, render_table, report
from src.entities.exceptions import DataError
from tests.utils.entity_factories import C, N

GT = [C, C, N, N]
PRED = [C, N, N, N]


class TestConfusion:
    def test_perfect_changed_prediction(self):
        matrix = confusion([C] * 5, [C] * 5)

        assert matrix.counts == ((5, 0), (0, 0))
        assert matrix.true_positives(C) == 5

    def test_hand_counted_matrix(self):
        matrix = confusion(GT, PRED)

        assert matrix.true_positives(C) == 1
        assert matrix.false_negatives(C) == 1
        assert matrix.false_positives(C) == 0
        assert matrix.true_positives(N) == 2
        assert matrix.counts == ((1, 1), (0, 2))

    def test_length_mismatch_is_rejected(self):
        with pytest.raises(DataError, match="4 frames but the prediction has 3"):
            confusion(GT, PRED[:3])

    def test_empty_input_is_rejected(self):
        with pytest.raises(DataError):
            confusion([], [])


class TestReport:
    def test_hand_computed_metrics(self):
        result = report(GT, PRED)

        changed, static = result.per_class[C], result.per_class[N]
        assert changed.precision == pytest.approx(1.0)
        assert changed.recall == pytest.approx(0.5)
        assert changed.f1 == pytest.approx(2 / 3)
        assert static.precision == pytest.approx(2 / 3)
        assert static.recall == pytest.approx(1.0)
        assert static.f1 == pytest.approx(0.8)
        assert result.accuracy == pytest.approx(0.75)
        assert changed.support == 2
        assert static.support == 2

    def test_weighted_recall_equals_accuracy(self):
        result = report(GT, PRED)

        assert abs(result.weighted_avg.recall - result.accuracy) <= 1e-12

    def test_macro_average_is_unweighted(self):
        result = report([C, C, C, N], [C, C, N, N])

        assert result.macro_avg.recall == pytest.approx((2 / 3 + 1.0) / 2)
        assert result.macro_avg.support == 4

    def test_perfect_prediction_scores_one(self):
        result = report(GT, GT)

        for metrics in result.per_class.values():
            assert (metrics.precision, metrics.recall, metrics.f1) == (1.0, 1.0, 1.0)
        assert result.accuracy == 1.0
        assert not result.zero_division

    def test_undefined_precision_is_zero_and_flagged(self):
        result = report([C, C, N, N], [N, N, N, N])

        changed = result.per_class[C]
        assert changed.precision == 0.0
        assert changed.precision_undefined
        assert not changed.recall_undefined
        assert result.zero_division

    def test_absent_class_flags_recall(self):
        result = report([C, C], [C, C])

        assert result.per_class[N].recall_undefined
        assert result.per_class[N].support == 0


def test_render_table_has_report_layout():
    table = render_table(report(GT, PRED))

    lines = table.splitlines()
    assert "precision" in lines[0]
    assert "f1-score" in lines[0]
    assert any(line.startswith("changed") and "1.00" in line and "0.50" in line for line in lines)
    assert any(line.startswith("not changed") and "0.67" in line for line in lines)
    assert any(line.startswith("accuracy") and "0.75" in line for line in lines)
    assert any(line.startswith("weighted avg") for line in lines)
    assert "pred not changed" in table
