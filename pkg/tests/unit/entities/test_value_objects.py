import pytest

from src.entities.exceptions import ConfigurationError
from src.entities.value_objects.detector_config import DetectorConfig
from src.entities.value_objects.encoder_config import EncoderConfig
from src.entities.value_objects.loss_config import LossConfig
from src.entities.value_objects.pipeline_config import PipelineConfig
from src.entities.value_objects.scene_label import SceneLabel
from src.entities.value_objects.similarity_params import SimilarityParams
from src.entities.value_objects.window_config import WindowConfig


class TestWindowConfig:
    def test_defaults_describe_ten_seconds_at_twelve_fps(self):
        cfg = WindowConfig()

        assert (cfg.window_len, cfg.stride, cfg.skip, cfg.fps) == (120, 120, 4, 12.0)
        assert cfg.half == 60
        assert cfg.pairs_per_window == 15

    def test_from_seconds_rounds_to_frames(self):
        cfg = WindowConfig.from_seconds(10, fps=12)

        assert cfg.window_len == 120
        assert cfg.stride == 120

    def test_from_seconds_keeps_an_explicit_stride(self):
        assert WindowConfig.from_seconds(10, fps=12, stride=60).stride == 60

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"window_len": 121, "stride": 121},
            {"window_len": 0, "stride": 1},
            {"window_len": 120, "skip": 0},
            {"window_len": 120, "skip": 7},
            {"window_len": 120, "skip": 61},
            {"window_len": 120, "stride": 0},
            {"window_len": 120, "stride": 121},
            {"window_len": 120, "fps": 0.0},
        ],
    )
    def test_invalid_geometry_is_rejected(self, kwargs):
        with pytest.raises(ConfigurationError):
            WindowConfig(**kwargs)


class TestSimilarityParams:
    def test_presets(self):
        assert SimilarityParams.preset("standard") == SimilarityParams(5, 5, 5, 2)
        assert SimilarityParams.preset("extended") == SimilarityParams(5, 5, 10, 5)

    def test_unknown_preset_is_rejected(self):
        with pytest.raises(ConfigurationError, match="Unknown similarity preset"):
            SimilarityParams.preset("wide")

    @pytest.mark.parametrize(
        "kwargs",
        [{"grid_rows": 0}, {"n_top": 0}, {"delta_sim": 0}, {"n_top": 5, "delta_sim": 6}],
    )
    def test_invalid_parameters_are_rejected(self, kwargs):
        with pytest.raises(ConfigurationError):
            SimilarityParams(**kwargs)

    def test_n_cells(self):
        assert SimilarityParams(grid_rows=3, grid_cols=4, n_top=1, delta_sim=1).n_cells == 12


class TestDetectorConfig:
    def test_k_is_fixed_to_two(self):
        with pytest.raises(ConfigurationError):
            DetectorConfig(k=3)

    @pytest.mark.parametrize("kwargs", [{"max_iters": 0}, {"rel_tol": 0.0}, {"init": "random"}])
    def test_invalid_settings_are_rejected(self, kwargs):
        with pytest.raises(ConfigurationError):
            DetectorConfig(**kwargs)


def test_encoder_feature_dim():
    assert EncoderConfig(patch_height=4, patch_width=4, channels=3).feature_dim == 48
    with pytest.raises(ConfigurationError):
        EncoderConfig(channels=2)


def test_loss_config_rejects_negative_beta():
    with pytest.raises(ConfigurationError):
        LossConfig(beta=-0.1)


def test_pipeline_seed_is_the_detector_seed():
    assert PipelineConfig(detector=DetectorConfig(seed=9)).seed == 9


def test_scene_label_display_names():
    assert SceneLabel.not_changed.display_name == "not changed"
    assert str(SceneLabel.changed) == "changed"
