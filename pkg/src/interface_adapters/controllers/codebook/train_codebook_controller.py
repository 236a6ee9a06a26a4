from loguru import logger

from src.application.use_cases.codebook.train_codebook import (
    TrainCodebookInput,
    TrainCodebookUseCase,
)
from src.application.use_cases.exceptions import UseCaseError
from src.drivers.cli.schemas.command_schemas import TrainCodebookRequest
from src.drivers.cli.schemas.report_schemas import TrainCodebookResponse
from src.entities.exceptions import DomainError
from src.interface_adapters.presenters.codebook_presenter import CodebookPresenter


class TrainCodebookController:
    def __init__(self, train_codebook_use_case: TrainCodebookUseCase):
        self._train_codebook_use_case = train_codebook_use_case

    def train(self, request: TrainCodebookRequest) -> TrainCodebookResponse:
        """Handles the request to train a codebook from a frame directory."""
        try:
            input_dto = TrainCodebookInput(
                patch_height=request.patch_height,
                patch_width=request.patch_width,
                n_entries=request.codebook_size,
                seed=request.seed,
                max_iters=request.max_iters,
            )
            output_dto = self._train_codebook_use_case(input_dto)
            return CodebookPresenter.present_training(output_dto, request.out)
        except (DomainError, FileNotFoundError) as e:
            logger.warning(f"Cannot train codebook from {request.frames}: {e}")
            raise
        except UseCaseError as e:
            logger.warning(f"Use case error training codebook: {e}")
            raise
        except Exception as e:
            logger.exception(f"Unexpected internal error training codebook: {e}")
            raise UseCaseError("An unexpected internal error occurred.") from e
