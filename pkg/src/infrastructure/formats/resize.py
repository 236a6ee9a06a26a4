import numpy as np

from src.entities.models.frame import Frame

TARGET_HEIGHT = 600
TARGET_WIDTH = 960
TARGET_CHANNELS = 3
PAD_VALUE = 0.0


def _nearest_rows(src: int, dst: int) -> np.ndarray:
    return np.minimum((np.arange(dst) * src) // dst, src - 1)


def resize_pad(
    frame: Frame,
    height: int = TARGET_HEIGHT,
    width: int = TARGET_WIDTH,
    channels: int = TARGET_CHANNELS,
) -> Frame:
    """Fit a frame inside height × width by nearest-neighbour scaling, then pad.

    The aspect ratio is preserved and padding is split evenly between both
    sides (the odd pixel goes to the bottom / right). Padding holds 0.0, the
    normalised mid-gray. Grayscale frames are replicated to three channels.
    """
    h, w, _ = frame.shape
    scale = min(height / h, width / w)
    new_h = min(height, max(1, round(h * scale)))
    new_w = min(width, max(1, round(w * scale)))

    pixels = frame.pixels
    if pixels.shape[2] != channels:
        pixels = np.repeat(pixels[:, :, :1], channels, axis=2)
    scaled = pixels[_nearest_rows(h, new_h)][:, _nearest_rows(w, new_w)]

    out = np.full((height, width, channels), PAD_VALUE, dtype=np.float64)
    top = (height - new_h) // 2
    left = (width - new_w) // 2
    out[top : top + new_h, left : left + new_w] = scaled
    return Frame(pixels=out)
