import pytest

from src.application.use_cases.detection.score_pair import ScorePairInput, ScorePairUseCase
from src.entities.exceptions import ShapeError
from src.entities.value_objects.similarity_params import SimilarityParams
from tests.utils.entity_factories import constant_map, partially_similar_maps


def test_thirteen_similar_cells_score_052():
    map_a, map_b = partially_similar_maps(13)

    result = ScorePairUseCase()(ScorePairInput(map_a=map_a, map_b=map_b, params=SimilarityParams()))

    assert result.score == 0.52
    assert int(result.grid.sum()) == 13
    assert result.grid.shape == (5, 5)


def test_identical_maps():
    map_a, _ = partially_similar_maps(0)

    result = ScorePairUseCase()(ScorePairInput(map_a=map_a, map_b=map_a, params=SimilarityParams()))

    assert result.score == 1.0
    assert result.grid.tolist() == [[1] * 5] * 5


def test_shapes_must_agree():
    with pytest.raises(ShapeError):
        ScorePairUseCase()(
            ScorePairInput(
                map_a=constant_map(10, 10, 0), map_b=constant_map(20, 10, 0), params=SimilarityParams()
            )
        )
