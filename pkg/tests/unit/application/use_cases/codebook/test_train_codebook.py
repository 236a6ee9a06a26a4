import numpy as np
import pytest

from src.application.use_cases.codebook.train_codebook import (
    TrainCodebookInput,
    TrainCodebookOutput,
    TrainCodebookUseCase,
)
from src.application.use_cases.exceptions import FramesNotFoundError
from src.entities.exceptions import ShapeError
from src.infrastructure.repositories.codebook_repository.in_memory_repository import (
    InMemoryCodebookRepository,
)
from src.infrastructure.repositories.frame_repository.in_memory_repository import (
    InMemoryFrameRepository,
)
from tests.utils.entity_factories import create_frame


def test_train_codebook_learns_and_stores_both_patch_levels(quadrant_frames):
    """Two distinct patch vectors and two entries give an exact codebook."""
    # Arrange
    target = InMemoryCodebookRepository()
    use_case = TrainCodebookUseCase(frame_repository=quadrant_frames, codebook_repository=target)

    # Act
    result = use_case(TrainCodebookInput(n_entries=2, seed=3))

    # Assert
    assert isinstance(result, TrainCodebookOutput)
    assert target.load() is result.codebook
    assert result.codebook.seed == 3
    assert result.codebook.dim == 16
    learned = sorted(result.codebook.entries.mean(axis=1).tolist())
    np.testing.assert_allclose(learned, [-1.0, 1.0], atol=1e-6)
    assert result.n_frames == 3
    assert result.n_vectors == 12
    assert result.usage.used_entries == 2
    assert result.usage.counts.sum() == 12


def test_train_codebook_is_reproducible(quadrant_frames):
    first = TrainCodebookUseCase(quadrant_frames, InMemoryCodebookRepository())(
        TrainCodebookInput(n_entries=4, seed=11)
    )
    second = TrainCodebookUseCase(quadrant_frames, InMemoryCodebookRepository())(
        TrainCodebookInput(n_entries=4, seed=11)
    )

    assert first.codebook == second.codebook
    assert first.distortion_trace == second.distortion_trace


def test_train_codebook_without_frames():
    use_case = TrainCodebookUseCase(InMemoryFrameRepository(), InMemoryCodebookRepository())

    with pytest.raises(FramesNotFoundError):
        use_case(TrainCodebookInput())


def test_train_codebook_rejects_mixed_frame_shapes():
    frames = InMemoryFrameRepository({"0": create_frame(8, 8), "1": create_frame(8, 12)})
    use_case = TrainCodebookUseCase(frames, InMemoryCodebookRepository())

    with pytest.raises(ShapeError, match="Frame 1 has shape"):
        use_case(TrainCodebookInput(n_entries=2))


def test_train_codebook_rejects_indivisible_frames():
    frames = InMemoryFrameRepository({"0": create_frame(6, 8)})
    use_case = TrainCodebookUseCase(frames, InMemoryCodebookRepository())

    with pytest.raises(ShapeError, match="not divisible"):
        use_case(TrainCodebookInput(n_entries=2))
