"""SDCB codebook files.

Layout (little-endian): magic ``SDCB``, u8 version 1, u32 n_entries, u32 dim,
u64 seed, then n_entries * dim float32 values in row-major order.
"""

import struct
from pathlib import Path

import numpy as np

from src.entities.exceptions import CorruptionError
from src.entities.models.codebook import Codebook
from src.infrastructure.formats.atomic import atomic_write_bytes

MAGIC = b"SDCB"
VERSION = 1
HEADER = struct.Struct("<4sBIIQ")
SUFFIX = ".sdcb"


def encode_codebook(codebook: Codebook) -> bytes:
    header = HEADER.pack(MAGIC, VERSION, codebook.n_entries, codebook.dim, codebook.seed)
    return header + codebook.entries.astype("<f4").tobytes(order="C")


def decode_codebook(data: bytes) -> Codebook:
    if len(data) < HEADER.size:
        raise CorruptionError(f"Codebook file too short for its header: {len(data)} bytes")
    magic, version, n_entries, dim, seed = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CorruptionError(f"Bad codebook magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise CorruptionError(f"Unsupported codebook version {version}")
    expected = 4 * n_entries * dim
    payload = data[HEADER.size :]
    if len(payload) != expected:
        raise CorruptionError(
            f"Codebook payload is {len(payload)} bytes, expected {expected} "
            f"for {n_entries} entries of dim {dim}"
        )
    if n_entries < 1 or dim < 1:
        raise CorruptionError(f"Codebook header declares {n_entries}x{dim} entries")
    entries = np.frombuffer(payload, dtype="<f4").reshape(n_entries, dim)
    return Codebook(entries=entries.astype(np.float32), seed=seed)


def write_codebook(path: Path, codebook: Codebook) -> None:
    atomic_write_bytes(Path(path), encode_codebook(codebook))


def read_codebook(path: Path) -> Codebook:
    return decode_codebook(Path(path).read_bytes())
