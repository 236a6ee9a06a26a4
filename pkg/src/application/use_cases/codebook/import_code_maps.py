from dataclasses import dataclass

from loguru import logger

from src.application.repositories.code_map_repository import CodeMapRepository
from src.application.use_cases.loading import load_code_maps, map_names


@dataclass(frozen=True)
class ImportCodeMapsOutput:
    names: list[str]
    map_shape: tuple[int, int]
    n_entries: int


class ImportCodeMapsUseCase:
    """Copy externally produced code maps into the native map store.

    All maps are validated (shape, index range) before anything is written.
    """

    def __init__(self, source: CodeMapRepository, target: CodeMapRepository) -> None:
        self._source = source
        self._target = target

    def __call__(self) -> ImportCodeMapsOutput:
        names = map_names(self._source)
        maps = load_code_maps(self._source)
        for name, code_map in zip(names, maps, strict=True):
            self._target.add(name, code_map)
        logger.info(f"Imported {len(maps)} code maps of {maps[0].shape}")
        return ImportCodeMapsOutput(
            names=names, map_shape=maps[0].shape, n_entries=maps[0].n_entries
        )
