"""Import of code-index maps produced outside this tool as ``.npy`` arrays."""

from pathlib import Path

import numpy as np

from src.entities.exceptions import CorruptionError, ShapeError
from src.entities.models.code_index_map import CodeIndexMap


def load_numpy_map(path: Path, n_entries: int) -> CodeIndexMap:
    """Load one 2-D integer ``.npy`` array as a code map.

    Raises:
        CorruptionError: If the file is not a loadable integer array.
        ShapeError: If the array is not 2-D.
    """
    try:
        array = np.load(Path(path), allow_pickle=False)
    except (OSError, ValueError) as e:
        raise CorruptionError(f"Cannot load {path} as a numpy array: {e}") from e
    if not np.issubdtype(array.dtype, np.integer):
        raise CorruptionError(f"{path}: code indices must be integers, got {array.dtype}")
    try:
        return CodeIndexMap(indices=array, n_entries=n_entries)
    except (CorruptionError, ShapeError) as e:
        raise type(e)(f"{path}: {e}") from e
