from dataclasses import dataclass

from src.entities.exceptions import ConfigurationError


@dataclass(frozen=True)
class LossConfig:
    """
    Weighting of the vector quantization objective.

    :ivar beta: Commitment weight applied to the encoder-side term.
    :type beta: float
    """

    beta: float = 0.25

    def __post_init__(self):
        if not self.beta >= 0:
            raise ConfigurationError(f"beta must be >= 0, got {self.beta}")
