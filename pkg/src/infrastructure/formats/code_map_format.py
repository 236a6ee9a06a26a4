"""SDCM code-map files.

Layout (little-endian): magic ``SDCM``, u8 version 1, u32 height, u32 width,
u32 n_entries, then height * width u16 indices in row-major order.
"""

import struct
from pathlib import Path

import numpy as np

from src.entities.exceptions import CorruptionError
from src.entities.models.code_index_map import CodeIndexMap
from src.infrastructure.formats.atomic import atomic_write_bytes

MAGIC = b"SDCM"
VERSION = 1
HEADER = struct.Struct("<4sBIII")
MAX_ENTRIES = 1 << 16
SUFFIX = ".sdcm"


def encode_code_map(code_map: CodeIndexMap) -> bytes:
    if code_map.n_entries > MAX_ENTRIES:
        raise CorruptionError(
            f"n_entries {code_map.n_entries} does not fit u16 indices (max {MAX_ENTRIES})"
        )
    header = HEADER.pack(MAGIC, VERSION, code_map.height, code_map.width, code_map.n_entries)
    return header + code_map.indices.astype("<u2").tobytes(order="C")


def decode_code_map(data: bytes) -> CodeIndexMap:
    """Parse SDCM bytes.

    Raises:
        CorruptionError: On a bad magic or version, a payload size mismatch or
            an index outside [0, n_entries).
    """
    if len(data) < HEADER.size:
        raise CorruptionError(f"Code map file too short for its header: {len(data)} bytes")
    magic, version, height, width, n_entries = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CorruptionError(f"Bad code map magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise CorruptionError(f"Unsupported code map version {version}")
    expected = 2 * height * width
    payload = data[HEADER.size :]
    if len(payload) != expected:
        raise CorruptionError(
            f"Code map payload is {len(payload)} bytes, expected {expected} for {height}x{width}"
        )
    indices = np.frombuffer(payload, dtype="<u2").reshape(height, width)
    return CodeIndexMap(indices=indices.astype(np.int64), n_entries=n_entries)


def write_code_map(path: Path, code_map: CodeIndexMap) -> None:
    atomic_write_bytes(Path(path), encode_code_map(code_map))


def read_code_map(path: Path) -> CodeIndexMap:
    return decode_code_map(Path(path).read_bytes())
