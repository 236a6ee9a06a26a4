from unittest.mock import MagicMock

import numpy as np
import pytest

from src.application.repositories.code_map_repository import CodeMapRepository
from src.entities.models.codebook import Codebook
from src.infrastructure.repositories.code_map_repository.in_memory_repository import (
    InMemoryCodeMapRepository,
)
from src.infrastructure.repositories.codebook_repository.in_memory_repository import (
    InMemoryCodebookRepository,
)
from src.infrastructure.repositories.frame_repository.in_memory_repository import (
    InMemoryFrameRepository,
)
from tests.utils.entity_factories import quadrant_frame


@pytest.fixture
def quadrant_frames() -> InMemoryFrameRepository:
    """Provides three quadrant frames named 0, 1 and 2."""
    return InMemoryFrameRepository({str(i): quadrant_frame(i) for i in range(3)})


@pytest.fixture
def two_level_codebook() -> Codebook:
    """Provides a codebook whose entries are the all -1 and all +1 4x4 patches."""
    return Codebook(entries=np.array([[-1.0] * 16, [1.0] * 16], dtype=np.float32), seed=0)


@pytest.fixture
def codebook_repository(two_level_codebook: Codebook) -> InMemoryCodebookRepository:
    return InMemoryCodebookRepository(two_level_codebook)


@pytest.fixture
def zero_codebook_repository() -> InMemoryCodebookRepository:
    """Provides a codebook of two all-zero 4x4 patch entries."""
    return InMemoryCodebookRepository(Codebook(entries=np.zeros((2, 16), dtype=np.float32), seed=0))


@pytest.fixture
def code_map_repository() -> InMemoryCodeMapRepository:
    return InMemoryCodeMapRepository()


@pytest.fixture
def mock_code_map_repository() -> MagicMock:
    """Provides a mocked CodeMapRepository; tests set list_names / get as needed."""
    mock = MagicMock(spec=CodeMapRepository)
    mock.describe.side_effect = lambda name: f"maps/{name}.sdcm"
    return mock
