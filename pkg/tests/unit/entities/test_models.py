import numpy as np
import pytest

from src.entities.exceptions import ConfigurationError, CorruptionError, DataError, ShapeError
from src.entities.models.code_index_map import CodeIndexMap
from src.entities.models.codebook import Codebook
from src.entities.models.frame import Frame
from src.entities.models.window import WindowSpan


class TestFrame:
    def test_grayscale_gets_a_channel_axis(self):
        frame = Frame(pixels=np.zeros((3, 5)))

        assert frame.shape == (3, 5, 1)

    @pytest.mark.parametrize("shape", [(2, 2, 2), (0, 4, 1), (4,)])
    def test_bad_shapes_are_rejected(self, shape):
        with pytest.raises(ShapeError):
            Frame(pixels=np.zeros(shape))

    def test_non_finite_pixels_are_rejected(self):
        with pytest.raises(DataError):
            Frame(pixels=np.array([[np.nan]]))


class TestCodeIndexMap:
    def test_indices_are_stored_as_int64(self):
        code_map = CodeIndexMap(indices=np.array([[1, 2]], dtype=np.uint16), n_entries=4)

        assert code_map.indices.dtype == np.int64
        assert code_map.shape == (1, 2)

    def test_out_of_range_index_is_corruption(self):
        with pytest.raises(CorruptionError, match="600"):
            CodeIndexMap(indices=np.array([[600]]), n_entries=512)

    def test_float_indices_are_corruption(self):
        with pytest.raises(CorruptionError):
            CodeIndexMap(indices=np.array([[0.5]]), n_entries=2)

    def test_empty_map_is_a_shape_error(self):
        with pytest.raises(ShapeError):
            CodeIndexMap(indices=np.zeros((0, 3), dtype=np.int64), n_entries=2)

    def test_equality_compares_contents(self):
        a = CodeIndexMap(indices=np.array([[1, 0]]), n_entries=2)

        assert a == CodeIndexMap(indices=np.array([[1, 0]]), n_entries=2)
        assert a != CodeIndexMap(indices=np.array([[1, 0]]), n_entries=3)


class TestCodebook:
    def test_entries_are_float32(self):
        codebook = Codebook(entries=np.ones((3, 2)), seed=1)

        assert codebook.entries.dtype == np.float32
        assert (codebook.n_entries, codebook.dim) == (3, 2)

    def test_bad_shape_is_a_configuration_error(self):
        with pytest.raises(ConfigurationError):
            Codebook(entries=np.ones(3))

    def test_non_finite_entries_are_rejected(self):
        with pytest.raises(DataError):
            Codebook(entries=np.array([[np.inf]]))


def test_window_span_is_half_open():
    span = WindowSpan(start=10, end=14)

    assert len(span) == 4
    assert 10 in span
    assert 14 not in span
