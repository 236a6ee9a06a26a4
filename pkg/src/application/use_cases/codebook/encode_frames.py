from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from loguru import logger

from src.application.repositories.code_map_repository import CodeMapRepository
from src.application.repositories.codebook_repository import CodebookRepository
from src.application.repositories.frame_repository import FrameRepository
from src.application.services.quantizer import CodebookUsage, codebook_usage, encode_frame
from src.application.use_cases.loading import frame_names, load_frame
from src.entities.exceptions import ShapeError
from src.entities.models.code_index_map import CodeIndexMap
from src.entities.value_objects.encoder_config import EncoderConfig


@dataclass(frozen=True)
class EncodeFramesInput:
    patch_height: int = 4
    patch_width: int = 4


@dataclass(frozen=True)
class EncodeFramesOutput:
    names: list[str]
    map_shape: tuple[int, int]
    usage: CodebookUsage


class EncodeFramesUseCase:
    """Quantize every frame with a stored codebook, one code map per frame.

    Maps keep the numeric name of their frame. Frames are processed on up to
    ``threads`` workers; the stored maps do not depend on the thread count.
    """

    def __init__(
        self,
        frame_repository: FrameRepository,
        codebook_repository: CodebookRepository,
        code_map_repository: CodeMapRepository,
        threads: int = 1,
    ) -> None:
        self._frame_repository = frame_repository
        self._codebook_repository = codebook_repository
        self._code_map_repository = code_map_repository
        self._threads = max(1, threads)

    def __call__(self, input_data: EncodeFramesInput) -> EncodeFramesOutput:
        codebook = self._codebook_repository.load()
        names = frame_names(self._frame_repository)
        first = load_frame(self._frame_repository, names[0])
        cfg = EncoderConfig(
            patch_height=input_data.patch_height,
            patch_width=input_data.patch_width,
            channels=first.channels,
        )
        if codebook.dim != cfg.feature_dim:
            raise ShapeError(
                f"Codebook dim {codebook.dim} does not match patch dim {cfg.feature_dim} "
                f"({cfg.patch_height}x{cfg.patch_width}x{cfg.channels})"
            )
        logger.info(f"Encoding {len(names)} frames with a {codebook.n_entries}-entry codebook")

        def encode(name: str) -> CodeIndexMap:
            frame = first if name == names[0] else load_frame(self._frame_repository, name)
            if frame.shape != first.shape:
                raise ShapeError(
                    f"Frame {self._frame_repository.describe(name)} has shape {frame.shape} "
                    f"but {self._frame_repository.describe(names[0])} has {first.shape}"
                )
            code_map = encode_frame(frame, codebook, cfg)
            self._code_map_repository.add(name, code_map)
            return code_map

        if self._threads == 1:
            maps = [encode(name) for name in names]
        else:
            with ThreadPoolExecutor(max_workers=self._threads) as pool:
                maps = list(pool.map(encode, names))

        usage = codebook_usage(maps, codebook.n_entries)
        logger.info(
            f"Wrote {len(maps)} code maps of {maps[0].shape}; "
            f"{usage.used_entries}/{codebook.n_entries} entries used, "
            f"perplexity {usage.perplexity:.3f}"
        )
        return EncodeFramesOutput(names=names, map_shape=maps[0].shape, usage=usage)
