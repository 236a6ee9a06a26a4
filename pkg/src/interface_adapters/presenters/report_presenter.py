from src.application.services.evaluation import render_table
from src.application.use_cases.detection.evaluate_predictions import EvaluatePredictionsOutput
from src.drivers.cli.schemas.report_schemas import (
    AverageMetricsResponse,
    ClassMetricsResponse,
    ConfusionMatrixResponse,
    ReportResponse,
)
from src.entities.models.classification_report import CLASS_ORDER, AverageMetrics


class ReportPresenter:
    """Presenter for converting a classification report to its JSON and text forms."""

    @staticmethod
    def _average(avg: AverageMetrics) -> AverageMetricsResponse:
        return AverageMetricsResponse(
            precision=avg.precision, recall=avg.recall, f1=avg.f1, support=avg.support
        )

    @staticmethod
    def present_report(output: EvaluatePredictionsOutput) -> ReportResponse:
        report = output.report
        return ReportResponse(
            per_class={
                label: ClassMetricsResponse(
                    precision=m.precision,
                    recall=m.recall,
                    f1=m.f1,
                    support=m.support,
                    precision_undefined=m.precision_undefined,
                    recall_undefined=m.recall_undefined,
                )
                for label, m in ((label, report.per_class[label]) for label in CLASS_ORDER)
            },
            accuracy=report.accuracy,
            macro_avg=ReportPresenter._average(report.macro_avg),
            weighted_avg=ReportPresenter._average(report.weighted_avg),
            confusion=ConfusionMatrixResponse(
                labels=list(CLASS_ORDER),
                counts=[list(row) for row in report.confusion.counts],
            ),
            zero_division=report.zero_division,
            n_frames=report.total,
            table=render_table(report),
        )
