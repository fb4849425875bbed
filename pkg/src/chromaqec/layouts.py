"""Patch tables for triangular 4.8.8 codes in the union-jack frame.

Each distance d = 2h-1 gets a set of full unit cells plus a fringe of
single triangles (the 2h-1 fringe triangles double as the logical
representative along the all-octagon boundary side).
"""
from __future__ import annotations

Tri = tuple[int, int, str]

# Verified layouts: full cells and fringe triangles per distance.
_PATCHES: dict[int, tuple[list[tuple[int, int]], list[Tri]]] = {
    3: (
        [(0, 0)],
        [(1, 0, "W"), (0, 1, "S"), (0, -1, "N")],
    ),
    5: (
        [(0, 0), (1, 0), (0, 1)],
        [(2, 0, "W"), (1, 1, "S"), (1, 1, "W"), (0, 2, "S"), (-1, 1, "E")],
    ),
}


def patch(distance: int) -> tuple[list[tuple[int, int]], list[Tri]]:
    if distance not in _PATCHES:
        raise NotImplementedError(
            f"no 4.8.8 triangular patch table for distance {distance}")
    cells, extras = _PATCHES[distance]
    return list(cells), list(extras)


def logical(distance: int) -> list[Tri]:
    """Fringe triangles along the octagon-only side; a weight-d logical."""
    return list(patch(distance)[1])
