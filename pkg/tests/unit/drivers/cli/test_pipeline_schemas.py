import json

import pytest

from src.drivers.cli.schemas.pipeline_schemas import PipelineConfigSchema
from src.entities.exceptions import ConfigurationError
from src.entities.value_objects.pipeline_config import PipelineConfig


def test_defaults_build_the_default_pipeline():
    config = PipelineConfigSchema().to_entities()

    assert config == PipelineConfig()
    assert config.seed == 42
    assert config.window.window_len == 120
    assert config.similarity.n_top == 5


def test_seed_reaches_the_detector():
    config = PipelineConfigSchema(seed=7).to_entities()

    assert config.detector.seed == 7


def test_from_json_file_accepts_partial_documents(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"window": {"window_len": 60, "stride": 30}, "seed": 1}))

    schema = PipelineConfigSchema.from_json_file(path)

    assert schema.window.window_len == 60
    assert schema.window.stride == 30
    assert schema.window.skip == 4
    assert schema.seed == 1


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        json.dumps({"window": {"length": 60}}),
        json.dumps({"similarity": {"n_top": "many"}}),
        json.dumps({"seed": -1}),
    ],
)
def test_from_json_file_rejects_bad_documents(tmp_path, text):
    path = tmp_path / "config.json"
    path.write_text(text)

    with pytest.raises(ConfigurationError):
        PipelineConfigSchema.from_json_file(path)


def test_from_json_file_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        PipelineConfigSchema.from_json_file(tmp_path / "absent.json")


def test_with_overrides_skips_none_values():
    base = PipelineConfigSchema()

    result = base.with_overrides(
        window={"window_len": 60, "stride": None},
        similarity={"n_top": None},
        seed={"value": None},
    )

    assert result.window.window_len == 60
    assert result.window.stride == 120
    assert result.similarity.n_top == 5
    assert result.seed == 42
    assert base.window.window_len == 120


def test_with_overrides_sets_the_seed_and_paths():
    result = PipelineConfigSchema().with_overrides(seed={"value": 9}, paths={"maps": "m", "out": "o.json"})

    assert result.seed == 9
    assert result.paths.maps == "m"
    assert result.paths.out == "o.json"


def test_invariants_are_checked_when_building_entities():
    schema = PipelineConfigSchema().with_overrides(window={"window_len": 121})

    with pytest.raises(ConfigurationError, match="window_len must be even"):
        schema.to_entities()


def test_delta_sim_above_n_top_is_rejected():
    schema = PipelineConfigSchema().with_overrides(similarity={"n_top": 2, "delta_sim": 3})

    with pytest.raises(ConfigurationError):
        schema.to_entities()


@pytest.mark.parametrize(
    ("encoder", "message"),
    [
        ({"patch_height": 0}, "Patch dims"),
        ({"patch_width": -3}, "Patch dims"),
        ({"codebook_size": 1}, "codebook_size"),
        ({"max_iters": 0}, "max_iters"),
    ],
)
def test_encoder_section_is_validated(encoder, message):
    schema = PipelineConfigSchema.model_validate({"encoder": encoder})

    with pytest.raises(ConfigurationError, match=message):
        schema.to_entities()
