"""Binary portable graymap / pixmap (P5 / P6, maxval 255) frames.

Pixels are normalised with mean 0.5 and std 0.5, so 8-bit intensity v maps to
(v / 255 - 0.5) / 0.5 in [-1, 1].
"""

from pathlib import Path

import numpy as np

from src.entities.exceptions import FormatError
from src.entities.models.frame import Frame
from src.infrastructure.formats.atomic import atomic_write_bytes

_CHANNELS = {b"P5": 1, b"P6": 3}
_WHITESPACE = b" \t\n\r\v\f"
MAXVAL = 255


def _skip_whitespace_and_comments(data: bytes, pos: int) -> int:
    while pos < len(data):
        byte = data[pos : pos + 1]
        if byte == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
        elif byte in _WHITESPACE:
            pos += 1
        else:
            break
    return pos


def _read_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    pos = _skip_whitespace_and_comments(data, pos)
    start = pos
    while pos < len(data) and data[pos : pos + 1].isdigit():
        pos += 1
    if start == pos:
        raise FormatError(f"Expected {what} in header", offset=start)
    return int(data[start:pos]), pos


def decode_frame(data: bytes) -> Frame:
    """Parse the bytes of a P5 / P6 file into a normalised frame.

    Raises:
        FormatError: On an unsupported magic or maxval, a malformed header or
            a truncated payload; the message carries the byte offset.
    """
    magic = data[:2]
    if magic not in _CHANNELS:
        shown = magic.decode("latin-1") or "empty file"
        raise FormatError(f"Unsupported image format '{shown}', expected binary P5 or P6", offset=0)
    channels = _CHANNELS[magic]
    width, pos = _read_int(data, 2, "width")
    height, pos = _read_int(data, pos, "height")
    maxval_offset = _skip_whitespace_and_comments(data, pos)
    maxval, pos = _read_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise FormatError(f"Image must be non-empty, got {width}x{height}", offset=pos)
    if maxval != MAXVAL:
        raise FormatError(f"Unsupported maxval {maxval}, only {MAXVAL} is supported", offset=maxval_offset)
    if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
        raise FormatError("Expected a single whitespace byte after maxval", offset=pos)
    pos += 1

    expected = width * height * channels
    payload = data[pos : pos + expected]
    if len(payload) < expected:
        raise FormatError(
            f"Truncated payload: expected {expected} bytes, found {len(payload)}",
            offset=pos + len(payload),
        )
    raw = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, channels)
    return Frame(pixels=(raw.astype(np.float64) / MAXVAL - 0.5) / 0.5)


def read_frame(path: Path) -> Frame:
    return decode_frame(Path(path).read_bytes())


def encode_frame(frame: Frame) -> bytes:
    """Inverse of decode_frame: denormalise, round and clip to 8 bits."""
    raw = np.clip(np.rint((frame.pixels * 0.5 + 0.5) * MAXVAL), 0, MAXVAL).astype(np.uint8)
    magic = b"P5" if frame.channels == 1 else b"P6"
    header = magic + f"\n{frame.width} {frame.height}\n{MAXVAL}\n".encode("ascii")
    return header + raw.tobytes()


def write_frame(path: Path, frame: Frame) -> None:
    atomic_write_bytes(Path(path), encode_frame(frame))
