import numpy as np
import pytest

from src.entities.exceptions import CorruptionError
from src.infrastructure.formats.codebook_format import (
    HEADER,
    decode_codebook,
    encode_codebook,
    read_codebook,
    write_codebook,
)
from tests.utils.entity_factories import create_codebook


def test_random_codebooks_round_trip_bit_exactly():
    rng = np.random.default_rng(1)
    for _ in range(100):
        entries = rng.normal(size=(int(rng.integers(1, 40)), int(rng.integers(1, 50))))
        codebook = create_codebook(entries, seed=int(rng.integers(0, 2**62)))

        data = encode_codebook(codebook)

        decoded = decode_codebook(data)
        assert decoded.entries.tobytes() == codebook.entries.tobytes()
        assert decoded.seed == codebook.seed
        assert encode_codebook(decoded) == data


def test_payload_is_float32_row_major(tmp_path):
    codebook = create_codebook([[1.0, 2.0], [3.0, 4.0]], seed=42)
    path = tmp_path / "codebook.sdcb"

    write_codebook(path, codebook)

    data = path.read_bytes()
    assert data[:4] == b"SDCB"
    assert len(data) == HEADER.size + 4 * 4
    assert np.frombuffer(data[HEADER.size :], dtype="<f4").tolist() == [1.0, 2.0, 3.0, 4.0]
    assert read_codebook(path) == codebook


@pytest.mark.parametrize(
    ("data", "message"),
    [
        (b"SDCB", "too short"),
        (HEADER.pack(b"SDCM", 1, 1, 1, 0) + bytes(4), "magic"),
        (HEADER.pack(b"SDCB", 9, 1, 1, 0) + bytes(4), "version"),
        (HEADER.pack(b"SDCB", 1, 2, 2, 0) + bytes(4), "payload"),
        (HEADER.pack(b"SDCB", 1, 0, 3, 0), "declares"),
    ],
)
def test_malformed_files_are_corruption(data, message):
    with pytest.raises(CorruptionError, match=message):
        decode_codebook(data)
