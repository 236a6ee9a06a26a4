from dataclasses import dataclass

from src.entities.exceptions import ConfigurationError


@dataclass(frozen=True)
class EncoderConfig:
    """
    Patch geometry of the frame encoder.

    Frames are cut into non-overlapping patch_height × patch_width patches and
    every patch, flattened in (row, col, channel) order, is one feature vector.

    :ivar patch_height: Patch height in pixels.
    :type patch_height: int
    :ivar patch_width: Patch width in pixels.
    :type patch_width: int
    :ivar channels: Channel count of the frames being encoded (1 or 3).
    :type channels: int
    """

    patch_height: int = 4
    patch_width: int = 4
    channels: int = 3

    def __post_init__(self):
        if self.patch_height < 1 or self.patch_width < 1:
            raise ConfigurationError(
                f"Patch dims must be >= 1, got {self.patch_height}x{self.patch_width}"
            )
        if self.channels not in (1, 3):
            raise ConfigurationError(f"Channels must be 1 or 3, got {self.channels}")

    @property
    def feature_dim(self) -> int:
        """Length of one flattened patch vector."""
        return self.patch_height * self.patch_width * self.channels
