"""Test utilities.

Factories for frames, codebooks and code index maps, plus the step logger.
"""

from src.config.logger import log_test_step
from tests.utils.entity_factories import (
    create_code_map,
    create_codebook,
    create_frame,
    make_synthetic_sequence,
)

__all__ = [
    "create_code_map",
    "create_codebook",
    "create_frame",
    "log_test_step",
    "make_synthetic_sequence",
]
