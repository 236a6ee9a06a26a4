from loguru import logger

from src.application.use_cases.codebook.import_code_maps import ImportCodeMapsUseCase
from src.application.use_cases.exceptions import UseCaseError
from src.drivers.cli.schemas.command_schemas import ImportMapsRequest
from src.drivers.cli.schemas.report_schemas import ImportMapsResponse
from src.entities.exceptions import DomainError
from src.interface_adapters.presenters.codebook_presenter import CodebookPresenter


class ImportMapsController:
    def __init__(self, import_code_maps_use_case: ImportCodeMapsUseCase):
        self._import_code_maps_use_case = import_code_maps_use_case

    def import_maps(self, request: ImportMapsRequest) -> ImportMapsResponse:
        """Handles the request to convert a directory of .npy maps."""
        try:
            output_dto = self._import_code_maps_use_case()
            return CodebookPresenter.present_import(output_dto, request.out_dir)
        except (DomainError, FileNotFoundError) as e:
            logger.warning(f"Cannot import code maps from {request.source}: {e}")
            raise
        except UseCaseError as e:
            logger.warning(f"Use case error importing code maps: {e}")
            raise
        except Exception as e:
            logger.exception(f"Unexpected internal error importing code maps: {e}")
            raise UseCaseError("An unexpected internal error occurred.") from e
