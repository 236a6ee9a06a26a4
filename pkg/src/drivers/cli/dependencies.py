"""Factories wiring repositories, use cases and controllers for each command."""

from pathlib import Path

from loguru import logger

from src.application.repositories.code_map_repository import CodeMapRepository
from src.application.repositories.frame_repository import FrameRepository
from src.application.use_cases.codebook.encode_frames import EncodeFramesUseCase
from src.application.use_cases.codebook.evaluate_codebook_loss import (
    EvaluateCodebookLossUseCase,
)
from src.application.use_cases.codebook.import_code_maps import ImportCodeMapsUseCase
from src.application.use_cases.codebook.train_codebook import TrainCodebookUseCase
from src.application.use_cases.detection.detect_scene_changes import (
    DetectSceneChangesUseCase,
)
from src.application.use_cases.detection.evaluate_predictions import (
    EvaluatePredictionsUseCase,
)
from src.application.use_cases.detection.score_pair import ScorePairUseCase
from src.config.settings import get_settings
from src.infrastructure.formats.code_map_format import read_code_map
from src.infrastructure.formats.ground_truth import read_ground_truth
from src.infrastructure.formats.plot_csv import write_plot_csv
from src.infrastructure.repositories.code_map_repository.directory_repository import (
    DirectoryCodeMapRepository,
)
from src.infrastructure.repositories.code_map_repository.numpy_repository import (
    NumpyCodeMapRepository,
)
from src.infrastructure.repositories.codebook_repository.file_repository import (
    FileCodebookRepository,
)
from src.infrastructure.repositories.frame_repository.directory_repository import (
    DirectoryFrameRepository,
)
from src.infrastructure.repositories.frame_repository.resizing_repository import (
    ResizingFrameRepository,
)
from src.interface_adapters.controllers.codebook.codebook_loss_controller import (
    CodebookLossController,
)
from src.interface_adapters.controllers.codebook.encode_frames_controller import (
    EncodeFramesController,
)
from src.interface_adapters.controllers.codebook.import_maps_controller import (
    ImportMapsController,
)
from src.interface_adapters.controllers.codebook.train_codebook_controller import (
    TrainCodebookController,
)
from src.interface_adapters.controllers.detection.detect_controller import DetectController
from src.interface_adapters.controllers.detection.evaluate_controller import (
    EvaluateController,
)
from src.interface_adapters.controllers.detection.score_pair_controller import (
    ScorePairController,
)


## ############################# ##
## REPOSITORIES
## ############################# ##


def get_frame_repository(frames: Path, resize: bool = False) -> FrameRepository:
    """Frame source for a directory, optionally fitted to the 960x600 canvas."""
    repository: FrameRepository = DirectoryFrameRepository(frames)
    if resize:
        logger.debug("Frames are resized and padded to 960x600 on read")
        repository = ResizingFrameRepository(repository)
    return repository


def get_code_map_repository(maps: Path) -> CodeMapRepository:
    return DirectoryCodeMapRepository(maps)


def get_threads() -> int:
    return get_settings().threads


## ############################# ##
## CONTROLLERS
## ############################# ##


def get_train_codebook_controller(
    frames: Path, out: Path, resize: bool = False
) -> TrainCodebookController:
    use_case = TrainCodebookUseCase(
        frame_repository=get_frame_repository(frames, resize),
        codebook_repository=FileCodebookRepository(out),
    )
    return TrainCodebookController(use_case)


def get_encode_frames_controller(
    frames: Path, codebook: Path, out_dir: Path, resize: bool = False
) -> EncodeFramesController:
    use_case = EncodeFramesUseCase(
        frame_repository=get_frame_repository(frames, resize),
        codebook_repository=FileCodebookRepository(codebook),
        code_map_repository=get_code_map_repository(out_dir),
        threads=get_threads(),
    )
    return EncodeFramesController(use_case)


def get_codebook_loss_controller(
    frames: Path, codebook: Path, resize: bool = False
) -> CodebookLossController:
    use_case = EvaluateCodebookLossUseCase(
        frame_repository=get_frame_repository(frames, resize),
        codebook_repository=FileCodebookRepository(codebook),
    )
    return CodebookLossController(use_case)


def get_import_maps_controller(
    source: Path, out_dir: Path, n_entries: int
) -> ImportMapsController:
    use_case = ImportCodeMapsUseCase(
        source=NumpyCodeMapRepository(source, n_entries),
        target=get_code_map_repository(out_dir),
    )
    return ImportMapsController(use_case)


def get_detect_controller(maps: Path) -> DetectController:
    use_case = DetectSceneChangesUseCase(
        code_map_repository=get_code_map_repository(maps), threads=get_threads()
    )
    return DetectController(use_case, plot_writer=write_plot_csv)


def get_evaluate_controller() -> EvaluateController:
    return EvaluateController(
        EvaluatePredictionsUseCase(), ground_truth_reader=read_ground_truth
    )


def get_score_pair_controller() -> ScorePairController:
    return ScorePairController(ScorePairUseCase(), map_reader=read_code_map)
