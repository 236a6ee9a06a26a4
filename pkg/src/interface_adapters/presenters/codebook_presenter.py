from pathlib import Path

from src.application.use_cases.codebook.encode_frames import EncodeFramesOutput
from src.application.use_cases.codebook.evaluate_codebook_loss import EvaluateCodebookLossOutput
from src.application.use_cases.codebook.import_code_maps import ImportCodeMapsOutput
from src.application.use_cases.codebook.train_codebook import TrainCodebookOutput
from src.drivers.cli.schemas.report_schemas import (
    CodebookLossResponse,
    EncodeFramesResponse,
    ImportMapsResponse,
    TrainCodebookResponse,
)


class CodebookPresenter:
    """Presenter for the codebook training, encoding and import commands."""

    @staticmethod
    def present_training(output: TrainCodebookOutput, out: Path) -> TrainCodebookResponse:
        return TrainCodebookResponse(
            out=str(out),
            n_entries=output.codebook.n_entries,
            dim=output.codebook.dim,
            n_frames=output.n_frames,
            n_vectors=output.n_vectors,
            distortion_trace=output.distortion_trace,
            converged=output.converged,
            reseeded=output.reseeded,
            used_entries=output.usage.used_entries,
            perplexity=output.usage.perplexity,
        )

    @staticmethod
    def render_training(response: TrainCodebookResponse) -> str:
        lines = [
            f"iteration {i}: distortion {value:.6f}"
            for i, value in enumerate(response.distortion_trace)
        ]
        lines.append(
            f"codebook {response.n_entries}x{response.dim} written to {response.out} "
            f"({response.used_entries} entries used, perplexity {response.perplexity:.3f})"
        )
        return "\n".join(lines)

    @staticmethod
    def present_encoding(output: EncodeFramesOutput, out_dir: Path) -> EncodeFramesResponse:
        return EncodeFramesResponse(
            out_dir=str(out_dir),
            n_maps=len(output.names),
            map_shape=output.map_shape,
            used_entries=output.usage.used_entries,
            perplexity=output.usage.perplexity,
        )

    @staticmethod
    def present_loss(output: EvaluateCodebookLossOutput) -> CodebookLossResponse:
        return CodebookLossResponse(
            n_frames=output.n_frames,
            reconstruction=output.loss.reconstruction,
            vq=output.loss.vq,
            total=output.loss.total,
        )

    @staticmethod
    def present_import(output: ImportCodeMapsOutput, out_dir: Path) -> ImportMapsResponse:
        return ImportMapsResponse(
            out_dir=str(out_dir),
            n_maps=len(output.names),
            map_shape=output.map_shape,
            n_entries=output.n_entries,
        )
