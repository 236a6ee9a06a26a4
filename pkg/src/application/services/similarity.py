"""Grid-cell similarity between two code-index maps.

Both maps are cut into the same grid. Two cells are similar when their sets of
most frequent codes share at least ``delta_sim`` codes; the map score is the
fraction of similar cells.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from src.entities.exceptions import ShapeError
from src.entities.models.code_index_map import CodeIndexMap
from src.entities.value_objects.similarity_params import SimilarityParams

CellView = npt.NDArray[np.int64]


@dataclass(frozen=True)
class CellComparison:
    similar: bool
    overlap: int


def partition_grid(code_map: CodeIndexMap, params: SimilarityParams) -> list[CellView]:
    """Split a map into grid_rows × grid_cols equal cells, row-major.

    The cells are views into the map's index array.

    Raises:
        ShapeError: If a map dimension is not divisible by the grid.
    """
    h, w = code_map.shape
    if h % params.grid_rows:
        raise ShapeError(f"Map height {h} is not divisible by {params.grid_rows} grid rows")
    if w % params.grid_cols:
        raise ShapeError(f"Map width {w} is not divisible by {params.grid_cols} grid columns")
    ch, cw = h // params.grid_rows, w // params.grid_cols
    return [
        code_map.indices[r * ch : (r + 1) * ch, c * cw : (c + 1) * cw]
        for r in range(params.grid_rows)
        for c in range(params.grid_cols)
    ]


def cell_top_codes(cell: npt.ArrayLike, n_top: int) -> list[tuple[int, int]]:
    """Most frequent codes of a cell as (code, count), by descending count.

    Equal counts are ordered by ascending code. Cells with fewer distinct
    codes than ``n_top`` return all of them.
    """
    codes, counts = np.unique(np.asarray(cell), return_counts=True)
    # np.unique sorts codes ascending, so a stable sort keeps the tie order
    order = np.argsort(-counts, kind="stable")[:n_top]
    return [(int(codes[i]), int(counts[i])) for i in order]


def _top_code_set(cell: npt.ArrayLike, n_top: int) -> set[int]:
    return {code for code, _ in cell_top_codes(cell, n_top)}


def cell_similar(cell_u: npt.ArrayLike, cell_v: npt.ArrayLike, params: SimilarityParams) -> CellComparison:
    overlap = len(_top_code_set(cell_u, params.n_top) & _top_code_set(cell_v, params.n_top))
    return CellComparison(similar=overlap >= params.delta_sim, overlap=overlap)


def indicator_grid(
    map_u: CodeIndexMap,
    map_v: CodeIndexMap,
    params: SimilarityParams,
) -> npt.NDArray[np.int8]:
    """Per-cell 0/1 similarity indicators, shaped (grid_rows, grid_cols).

    Raises:
        ShapeError: If the maps differ in shape or do not divide into the grid.
    """
    if map_u.shape != map_v.shape:
        raise ShapeError(f"Code map shapes differ: {map_u.shape} vs {map_v.shape}")
    cells_u = partition_grid(map_u, params)
    cells_v = partition_grid(map_v, params)
    flags = [cell_similar(u, v, params).similar for u, v in zip(cells_u, cells_v, strict=True)]
    return np.array(flags, dtype=np.int8).reshape(params.grid_rows, params.grid_cols)


def map_similarity(map_u: CodeIndexMap, map_v: CodeIndexMap, params: SimilarityParams) -> float:
    """Fraction of similar grid cells, a multiple of 1 / n_cells in [0, 1]."""
    grid = indicator_grid(map_u, map_v, params)
    return int(grid.sum()) / params.n_cells
