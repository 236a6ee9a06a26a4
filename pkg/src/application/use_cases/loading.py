"""Shared loading steps of the use cases, with file-aware error messages."""

from src.application.repositories.code_map_repository import CodeMapRepository
from src.application.repositories.frame_repository import FrameRepository
from src.application.use_cases.exceptions import CodeMapsNotFoundError, FramesNotFoundError
from src.entities.exceptions import DomainError, FormatError, ShapeError
from src.entities.models.code_index_map import CodeIndexMap
from src.entities.models.frame import Frame


def _located(error: DomainError, where: str) -> DomainError:
    if isinstance(error, FormatError):
        return FormatError(f"{where}: {error.reason}", offset=error.offset)
    return type(error)(f"{where}: {error}")


def frame_names(repository: FrameRepository) -> list[str]:
    names = repository.list_names()
    if not names:
        raise FramesNotFoundError("No readable frames found")
    return names


def load_frame(repository: FrameRepository, name: str) -> Frame:
    try:
        return repository.get(name)
    except DomainError as e:
        raise _located(e, repository.describe(name)) from e


def load_frames(repository: FrameRepository) -> list[Frame]:
    """Every frame in numeric order, all of one shape.

    Raises:
        FramesNotFoundError: If the source holds no frames.
        ShapeError: If frame shapes differ; the message names both files.
    """
    names = frame_names(repository)
    frames = [load_frame(repository, name) for name in names]
    for name, frame in zip(names[1:], frames[1:], strict=True):
        if frame.shape != frames[0].shape:
            raise ShapeError(
                f"Frame {repository.describe(name)} has shape {frame.shape} but "
                f"{repository.describe(names[0])} has {frames[0].shape}"
            )
    return frames


def map_names(repository: CodeMapRepository) -> list[str]:
    names = repository.list_names()
    if not names:
        raise CodeMapsNotFoundError("No code maps found")
    return names


def load_code_map(repository: CodeMapRepository, name: str) -> CodeIndexMap:
    try:
        return repository.get(name)
    except DomainError as e:
        raise _located(e, repository.describe(name)) from e


def load_code_maps(repository: CodeMapRepository) -> list[CodeIndexMap]:
    """Every map in numeric order, all of one shape and codebook size.

    Raises:
        CodeMapsNotFoundError: If the source holds no maps.
        ShapeError: If shapes or codebook sizes differ; the message names both files.
    """
    names = map_names(repository)
    maps = [load_code_map(repository, name) for name in names]
    first = maps[0]
    for name, code_map in zip(names[1:], maps[1:], strict=True):
        if code_map.shape != first.shape or code_map.n_entries != first.n_entries:
            raise ShapeError(
                f"Code map {repository.describe(name)} is {code_map.shape} over "
                f"{code_map.n_entries} entries but {repository.describe(names[0])} is "
                f"{first.shape} over {first.n_entries} entries"
            )
    return maps
