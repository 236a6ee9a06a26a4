from loguru import logger

from src.application.use_cases.codebook.encode_frames import (
    EncodeFramesInput,
    EncodeFramesUseCase,
)
from src.application.use_cases.exceptions import UseCaseError
from src.drivers.cli.schemas.command_schemas import EncodeFramesRequest
from src.drivers.cli.schemas.report_schemas import EncodeFramesResponse
from src.entities.exceptions import DomainError
from src.interface_adapters.presenters.codebook_presenter import CodebookPresenter


class EncodeFramesController:
    def __init__(self, encode_frames_use_case: EncodeFramesUseCase):
        self._encode_frames_use_case = encode_frames_use_case

    def encode(self, request: EncodeFramesRequest) -> EncodeFramesResponse:
        """Handles the request to encode a frame directory into code maps."""
        try:
            input_dto = EncodeFramesInput(
                patch_height=request.patch_height, patch_width=request.patch_width
            )
            output_dto = self._encode_frames_use_case(input_dto)
            return CodebookPresenter.present_encoding(output_dto, request.out_dir)
        except (DomainError, FileNotFoundError) as e:
            logger.warning(f"Cannot encode frames from {request.frames}: {e}")
            raise
        except UseCaseError as e:
            logger.warning(f"Use case error encoding frames: {e}")
            raise
        except Exception as e:
            logger.exception(f"Unexpected internal error encoding frames: {e}")
            raise UseCaseError("An unexpected internal error occurred.") from e
