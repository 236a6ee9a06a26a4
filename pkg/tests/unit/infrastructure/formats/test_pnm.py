import numpy as np
import pytest

from src.entities.exceptions import FormatError
from src.infrastructure.formats.pnm import decode_frame, encode_frame, read_frame, write_frame
from tests.utils.entity_factories import normalize


def test_p5_white_frame_is_all_plus_one():
    frame = decode_frame(b"P5\n2 2\n255\n" + bytes([255] * 4))

    assert frame.shape == (2, 2, 1)
    assert np.all(frame.pixels == 1.0)


def test_p6_pixel_is_normalised_per_channel():
    frame = decode_frame(b"P6 1 1 255\n" + bytes([128, 0, 255]))

    np.testing.assert_allclose(frame.pixels[0, 0], [(128 / 255 - 0.5) / 0.5, -1.0, 1.0])
    assert frame.pixels[0, 0, 0] == pytest.approx(0.00392, abs=1e-5)


def test_comments_in_the_header_are_skipped():
    frame = decode_frame(b"P5\n# made by a camera\n3 1 # width height\n255\n" + bytes([0, 1, 2]))

    assert frame.shape == (1, 3, 1)


def test_rows_are_read_top_to_bottom():
    frame = decode_frame(b"P5 2 2 255\n" + bytes([0, 255, 255, 0]))

    assert frame.pixels[:, :, 0].tolist() == [[-1.0, 1.0], [1.0, -1.0]]


def test_ascii_pixmap_is_unsupported():
    with pytest.raises(FormatError, match="Unsupported image format 'P3'") as info:
        decode_frame(b"P3\n1 1\n255\n0 0 0\n")

    assert info.value.offset == 0


def test_sixteen_bit_maxval_is_unsupported():
    with pytest.raises(FormatError, match="maxval 65535") as info:
        decode_frame(b"P5 1 1 65535\n" + bytes(2))

    assert info.value.offset == 7


def test_truncated_payload_reports_where_data_ends():
    data = b"P5 2 2 255\n" + bytes(3)

    with pytest.raises(FormatError, match="Truncated payload") as info:
        decode_frame(data)

    assert info.value.offset == len(data)


def test_missing_height_is_a_header_error():
    with pytest.raises(FormatError, match="height"):
        decode_frame(b"P5 2")


def test_write_then_read_preserves_8_bit_pixels(tmp_path):
    raw = np.arange(24, dtype=np.uint8).reshape(2, 4, 3) * 10
    frame = decode_frame(b"P6 4 2 255\n" + raw.tobytes())
    path = tmp_path / "000001.ppm"

    write_frame(path, frame)

    assert read_frame(path) == frame
    assert path.read_bytes().endswith(raw.tobytes())


def test_encoding_clips_out_of_range_values():
    from src.entities.models.frame import Frame

    data = encode_frame(Frame(pixels=np.array([[2.0, -3.0]])))

    assert data.endswith(bytes([255, 0]))
    assert data.startswith(b"P5")


def test_normalisation_matches_the_test_helper():
    frame = decode_frame(b"P5 1 1 255\n" + bytes([17]))

    assert frame.pixels[0, 0, 0] == normalize(17)
