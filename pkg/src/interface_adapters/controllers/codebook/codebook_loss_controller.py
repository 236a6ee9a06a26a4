from loguru import logger

from src.application.use_cases.codebook.evaluate_codebook_loss import (
    EvaluateCodebookLossInput,
    EvaluateCodebookLossUseCase,
)
from src.application.use_cases.exceptions import UseCaseError
from src.drivers.cli.schemas.command_schemas import CodebookLossRequest
from src.drivers.cli.schemas.report_schemas import CodebookLossResponse
from src.entities.exceptions import DomainError
from src.interface_adapters.presenters.codebook_presenter import CodebookPresenter


class CodebookLossController:
    def __init__(self, codebook_loss_use_case: EvaluateCodebookLossUseCase):
        self._codebook_loss_use_case = codebook_loss_use_case

    def evaluate(self, request: CodebookLossRequest) -> CodebookLossResponse:
        try:
            input_dto = EvaluateCodebookLossInput(
                patch_height=request.patch_height,
                patch_width=request.patch_width,
                beta=request.beta,
            )
            return CodebookPresenter.present_loss(self._codebook_loss_use_case(input_dto))
        except (DomainError, FileNotFoundError) as e:
            logger.warning(f"Cannot evaluate codebook {request.codebook}: {e}")
            raise
        except UseCaseError as e:
            logger.warning(f"Use case error evaluating codebook loss: {e}")
            raise
        except Exception as e:
            logger.exception(f"Unexpected internal error evaluating codebook loss: {e}")
            raise UseCaseError("An unexpected internal error occurred.") from e
