from pathlib import Path

import pytest

from src.application.use_cases.detection.score_pair import ScorePairUseCase
from src.drivers.cli.schemas.command_schemas import ScorePairRequest
from src.entities.exceptions import ConfigurationError
from src.interface_adapters.controllers.detection.score_pair_controller import ScorePairController
from tests.utils.entity_factories import partially_similar_maps


@pytest.fixture
def score_pair_controller() -> ScorePairController:
    map_a, map_b = partially_similar_maps(13)
    maps = {Path("a.sdcm"): map_a, Path("b.sdcm"): map_b}
    return ScorePairController(ScorePairUseCase(), map_reader=maps.__getitem__)


def test_score_pair_controller(score_pair_controller):
    response = score_pair_controller.score(ScorePairRequest(map_a=Path("a.sdcm"), map_b=Path("b.sdcm")))

    assert response.score == 0.52
    assert response.n_cells == 25
    assert sum(map(sum, response.grid)) == 13


def test_score_pair_controller_validates_parameters(score_pair_controller):
    request = ScorePairRequest(map_a=Path("a.sdcm"), map_b=Path("b.sdcm"), n_top=2, delta_sim=3)

    with pytest.raises(ConfigurationError):
        score_pair_controller.score(request)
