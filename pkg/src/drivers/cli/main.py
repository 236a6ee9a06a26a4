"""Command line interface of the scene change detector.

Results go to stdout, logs to stderr. Exit codes: 0 success, 1 internal
error, 2 user or input error.
"""

import re
from pathlib import Path
from typing import Annotated

import typer

from src import __version__
from src.config.logger import setup_app_logger
from src.drivers.cli.dependencies import (
    get_codebook_loss_controller,
    get_detect_controller,
    get_encode_frames_controller,
    get_evaluate_controller,
    get_import_maps_controller,
    get_score_pair_controller,
    get_train_codebook_controller,
)
from src.drivers.cli.exception_handlers import handle_cli_errors
from src.drivers.cli.schemas.command_schemas import (
    CodebookLossRequest,
    DetectRequest,
    EncodeFramesRequest,
    EvaluateRequest,
    ImportMapsRequest,
    ScorePairRequest,
    TrainCodebookRequest,
)
from src.drivers.cli.schemas.pipeline_schemas import PipelineConfigSchema
from src.entities.exceptions import InputParseError
from src.entities.value_objects.similarity_params import SimilarityParams
from src.entities.value_objects.window_config import WindowConfig
from src.infrastructure.formats.atomic import atomic_write_text
from src.interface_adapters.presenters.codebook_presenter import CodebookPresenter
from src.interface_adapters.presenters.detection_presenter import DetectionPresenter

app = typer.Typer(
    name="scene-change",
    help="Unsupervised dynamic scene change detection over code-index maps.",
    no_args_is_help=True,
    add_completion=False,
)

_DIMS = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")


def parse_dims(value: str, option: str) -> tuple[int, int]:
    """Parse ``ROWSxCOLS`` (e.g. ``4x4``) into two positive integers."""
    match = _DIMS.match(value)
    if match is None:
        raise InputParseError(f"{option} expects ROWSxCOLS such as 5x5, got '{value}'")
    rows, cols = int(match.group(1)), int(match.group(2))
    if rows < 1 or cols < 1:
        raise InputParseError(f"{option} dimensions must be positive, got '{value}'")
    return rows, cols


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def main(
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Log at DEBUG level.")] = False,
    version: Annotated[
        bool,
        typer.Option("--version", callback=_version_callback, is_eager=True, help="Print the version."),
    ] = False,
) -> None:
    setup_app_logger(verbose=verbose)


@app.command("train-codebook")
@handle_cli_errors
def train_codebook(
    frames: Annotated[Path, typer.Option("--frames", help="Directory of numbered PGM/PPM frames.")],
    out: Annotated[Path, typer.Option("--out", help="Codebook file to write (.sdcb).")],
    patch: Annotated[str, typer.Option("--patch", help="Patch size HxW.")] = "4x4",
    codebook_size: Annotated[int, typer.Option("--codebook-size", help="Number of entries.")] = 512,
    seed: Annotated[int, typer.Option("--seed", min=0)] = 42,
    max_iters: Annotated[int, typer.Option("--max-iters", min=1)] = 100,
    resize: Annotated[bool, typer.Option("--resize", help="Fit frames to 960x600 first.")] = False,
) -> None:
    """Learn a patch codebook by Lloyd iteration and print its distortion trace."""
    patch_height, patch_width = parse_dims(patch, "--patch")
    request = TrainCodebookRequest(
        frames=frames,
        out=out,
        patch_height=patch_height,
        patch_width=patch_width,
        codebook_size=codebook_size,
        seed=seed,
        max_iters=max_iters,
        resize=resize,
    )
    response = get_train_codebook_controller(frames, out, resize).train(request)
    typer.echo(CodebookPresenter.render_training(response))


@app.command("encode")
@handle_cli_errors
def encode(
    frames: Annotated[Path, typer.Option("--frames", help="Directory of numbered PGM/PPM frames.")],
    codebook: Annotated[Path, typer.Option("--codebook", help="Codebook file (.sdcb).")],
    out_dir: Annotated[Path, typer.Option("--out-dir", help="Directory for the .sdcm maps.")],
    patch: Annotated[str, typer.Option("--patch", help="Patch size HxW.")] = "4x4",
    resize: Annotated[bool, typer.Option("--resize", help="Fit frames to 960x600 first.")] = False,
) -> None:
    """Quantize every frame into a code-index map with the same numeric name."""
    patch_height, patch_width = parse_dims(patch, "--patch")
    request = EncodeFramesRequest(
        frames=frames,
        codebook=codebook,
        out_dir=out_dir,
        patch_height=patch_height,
        patch_width=patch_width,
        resize=resize,
    )
    response = get_encode_frames_controller(frames, codebook, out_dir, resize).encode(request)
    height, width = response.map_shape
    typer.echo(
        f"encoded {response.n_maps} frames into {height}x{width} maps in {response.out_dir} "
        f"({response.used_entries} entries used, perplexity {response.perplexity:.3f})"
    )


@app.command("loss")
@handle_cli_errors
def loss(
    frames: Annotated[Path, typer.Option("--frames", help="Directory of numbered PGM/PPM frames.")],
    codebook: Annotated[Path, typer.Option("--codebook", help="Codebook file (.sdcb).")],
    patch: Annotated[str, typer.Option("--patch", help="Patch size HxW.")] = "4x4",
    beta: Annotated[float, typer.Option("--beta", min=0.0, help="Commitment weight.")] = 0.25,
    resize: Annotated[bool, typer.Option("--resize", help="Fit frames to 960x600 first.")] = False,
) -> None:
    """Print the reconstruction, quantization and total loss of a codebook."""
    patch_height, patch_width = parse_dims(patch, "--patch")
    request = CodebookLossRequest(
        frames=frames,
        codebook=codebook,
        patch_height=patch_height,
        patch_width=patch_width,
        beta=beta,
        resize=resize,
    )
    response = get_codebook_loss_controller(frames, codebook, resize).evaluate(request)
    typer.echo(response.model_dump_json(indent=2))


@app.command("import-maps")
@handle_cli_errors
def import_maps(
    source: Annotated[Path, typer.Option("--source", help="Directory of numbered .npy maps.")],
    n_entries: Annotated[int, typer.Option("--n-entries", min=1, help="Codebook size of the maps.")],
    out_dir: Annotated[Path, typer.Option("--out-dir", help="Directory for the .sdcm maps.")],
) -> None:
    """Convert externally produced 2-D integer arrays into code-map files."""
    request = ImportMapsRequest(source=source, out_dir=out_dir, n_entries=n_entries)
    response = get_import_maps_controller(source, out_dir, n_entries).import_maps(request)
    height, width = response.map_shape
    typer.echo(f"imported {response.n_maps} maps of {height}x{width} into {response.out_dir}")


def resolve_detect_config(
    config: Path | None,
    window_sec: float | None,
    window_frames: int | None,
    stride_frames: int | None,
    fps: float | None,
    skip: int | None,
    grid: str | None,
    n_top: int | None,
    delta_sim: int | None,
    preset: str | None,
    seed: int | None,
    standardize: bool | None,
    maps: Path,
    out: Path,
) -> PipelineConfigSchema:
    """Merge a config file (or the defaults) with command-line overrides.

    A preset replaces the similarity section before individual flags apply.
    Changing the window length without a stride keeps windows non-overlapping.
    Overriding only the frame rate keeps the window duration, not its length.
    """
    base = PipelineConfigSchema.from_json_file(config) if config else PipelineConfigSchema()
    similarity: dict[str, object] = {}
    if preset is not None:
        params = SimilarityParams.preset(preset)
        similarity.update(
            grid_rows=params.grid_rows,
            grid_cols=params.grid_cols,
            n_top=params.n_top,
            delta_sim=params.delta_sim,
        )
    if grid is not None:
        similarity["grid_rows"], similarity["grid_cols"] = parse_dims(grid, "--grid")
    if n_top is not None:
        similarity["n_top"] = n_top
    if delta_sim is not None:
        similarity["delta_sim"] = delta_sim

    window_len: int | None = None
    stride = stride_frames
    if window_frames is not None:
        window_len = window_frames
        stride = window_len if stride is None else stride
    elif window_sec is not None or fps is not None:
        seconds = window_sec if window_sec is not None else base.window.window_len / base.window.fps
        window = WindowConfig.from_seconds(
            seconds,
            fps=fps if fps is not None else base.window.fps,
            skip=skip if skip is not None else base.window.skip,
            stride=stride_frames,
        )
        window_len, stride = window.window_len, window.stride

    return base.with_overrides(
        similarity=similarity,
        window={"window_len": window_len, "stride": stride, "skip": skip, "fps": fps},
        detector={"standardize": standardize},
        paths={"maps": str(maps), "out": str(out)},
        seed={"value": seed},
    )


@app.command("detect")
@handle_cli_errors
def detect(
    maps: Annotated[Path, typer.Option("--maps", help="Directory of numbered .sdcm maps.")],
    out: Annotated[Path, typer.Option("--out", help="Prediction JSON to write.")],
    window_sec: Annotated[
        float | None, typer.Option("--window-sec", help="Window duration in seconds [default: 10].")
    ] = None,
    window_frames: Annotated[
        int | None, typer.Option("--window-frames", help="Window length in frames (overrides --window-sec).")
    ] = None,
    stride_frames: Annotated[
        int | None, typer.Option("--stride-frames", help="Frames between window starts [default: window length].")
    ] = None,
    fps: Annotated[float | None, typer.Option("--fps", help="Frame rate [default: 12].")] = None,
    skip: Annotated[int | None, typer.Option("--skip", help="Skip factor s [default: 4].")] = None,
    grid: Annotated[str | None, typer.Option("--grid", help="Grid ROWSxCOLS [default: 5x5].")] = None,
    n_top: Annotated[int | None, typer.Option("--n-top", help="Top codes per cell [default: 5].")] = None,
    delta_sim: Annotated[
        int | None, typer.Option("--delta-sim", help="Minimum top-code overlap [default: 2].")
    ] = None,
    preset: Annotated[
        str | None, typer.Option("--preset", help="Similarity preset: standard or extended.")
    ] = None,
    seed: Annotated[int | None, typer.Option("--seed", min=0, help="K-means seed [default: 42].")] = None,
    standardize: Annotated[
        bool | None, typer.Option("--standardize/--raw", help="z-score (mean, std) before clustering.")
    ] = None,
    config: Annotated[Path | None, typer.Option("--config", help="Pipeline config JSON.")] = None,
    emit_plot_csv: Annotated[
        Path | None, typer.Option("--emit-plot-csv", help="Also write window_start,mean,std,label CSV.")
    ] = None,
) -> None:
    """Cluster window similarity statistics and label windows and frames."""
    resolved = resolve_detect_config(
        config=config,
        window_sec=window_sec,
        window_frames=window_frames,
        stride_frames=stride_frames,
        fps=fps,
        skip=skip,
        grid=grid,
        n_top=n_top,
        delta_sim=delta_sim,
        preset=preset,
        seed=seed,
        standardize=standardize,
        maps=maps,
        out=out,
    )
    request = DetectRequest(maps=maps, out=out, config=resolved, plot_csv=emit_plot_csv)
    document, summary = get_detect_controller(maps).detect(request)
    atomic_write_text(out, document.to_json())
    typer.echo(summary)


@app.command("evaluate")
@handle_cli_errors
def evaluate(
    pred: Annotated[Path, typer.Option("--pred", help="Prediction JSON from detect.")],
    gt: Annotated[Path, typer.Option("--gt", help="Ground-truth CSV.")],
    report: Annotated[Path | None, typer.Option("--report", help="Report JSON to write.")] = None,
) -> None:
    """Per-frame precision, recall and F1 of a prediction against annotations."""
    request = EvaluateRequest(pred=pred, gt=gt, report=report)
    response = get_evaluate_controller().evaluate(request)
    if report is not None:
        atomic_write_text(report, response.to_json())
    typer.echo(response.table)


@app.command("score-pair")
@handle_cli_errors
def score_pair(
    map_a: Annotated[Path, typer.Option("--map-a", help="First code map (.sdcm).")],
    map_b: Annotated[Path, typer.Option("--map-b", help="Second code map (.sdcm).")],
    grid: Annotated[str, typer.Option("--grid", help="Grid ROWSxCOLS.")] = "5x5",
    n_top: Annotated[int, typer.Option("--n-top")] = 5,
    delta_sim: Annotated[int, typer.Option("--delta-sim")] = 2,
) -> None:
    """Print the similarity score of two maps and its per-cell indicator grid."""
    grid_rows, grid_cols = parse_dims(grid, "--grid")
    request = ScorePairRequest(
        map_a=map_a,
        map_b=map_b,
        grid_rows=grid_rows,
        grid_cols=grid_cols,
        n_top=n_top,
        delta_sim=delta_sim,
    )
    response = get_score_pair_controller().score(request)
    typer.echo(f"score: {response.score:.4f}")
    typer.echo(DetectionPresenter.render_grid(response.grid))


if __name__ == "__main__":
    app()
