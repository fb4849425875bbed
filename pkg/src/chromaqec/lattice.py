"""Triangular 4.8.8 color-code lattices.

The lattice is built in a centered-square ("union-jack") frame: each unit
cell (i, j) of the integer grid carries four triangle sites N/S/E/W around
its center, and every triangle is one qubit of the 4.8.8 tiling.  Octagon
checks live on grid vertices (up to eight incident triangles), square
checks on cell centers (four).  A code patch is a set of full cells plus a
fringe of single triangles; faces are exactly the vertices with four or
eight incident patch triangles.

Tiling coordinates for plotting: the triangle (i, j, t) maps to the 4.8.8
vertex at (4i+2, 4j+1) for t=S, (4i+2, 4j+3) for N, (4i+1, 4j+2) for W and
(4i+3, 4j+2) for E; octagon centers sit at (4i, 4j), squares at
(4i+2, 4j+2).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import layouts
from .gf2 import rank

RED, GREEN, BLUE = "red", "green", "blue"


@dataclass(frozen=True)
class Face:
    id: int
    color: str
    qubit_ids: tuple[int, ...]
    center: tuple[int, int]


@dataclass
class ColorCode:
    """A triangular 4.8.8 color code of odd distance d."""

    distance: int
    qubits: list[tuple[int, int]]          # tiling coordinates, row-major
    faces: list[Face]
    check_matrix: np.ndarray               # m x n, uint8
    logical_support: frozenset[int]
    _packed_rows: np.ndarray | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.qubits)

    @property
    def m(self) -> int:
        return len(self.faces)

    def to_json(self) -> str:
        doc = {
            "distance": self.distance,
            "n": self.n,
            "m": self.m,
            "qubits": [list(q) for q in self.qubits],
            "faces": [
                {
                    "id": f.id,
                    "color": f.color,
                    "qubits": list(f.qubit_ids),
                    "center": list(f.center),
                }
                for f in self.faces
            ],
            "logical_support": sorted(self.logical_support),
        }
        return json.dumps(doc, indent=1)


def _triangle_coord(tri: tuple[int, int, str]) -> tuple[int, int]:
    i, j, t = tri
    if t == "S":
        return (4 * i + 2, 4 * j + 1)
    if t == "N":
        return (4 * i + 2, 4 * j + 3)
    if t == "W":
        return (4 * i + 1, 4 * j + 2)
    if t == "E":
        return (4 * i + 3, 4 * j + 2)
    raise ValueError(t)


def _triangle_vertices(tri: tuple[int, int, str]):
    i, j, t = tri
    c = ("c", i, j)
    if t == "S":
        return [("g", i, j), ("g", i + 1, j), c]
    if t == "N":
        return [("g", i, j + 1), ("g", i + 1, j + 1), c]
    if t == "W":
        return [("g", i, j), ("g", i, j + 1), c]
    if t == "E":
        return [("g", i + 1, j), ("g", i + 1, j + 1), c]
    raise ValueError(t)


def _vertex_color(v) -> str:
    kind, i, j = v
    if kind == "c":
        return RED
    return GREEN if (i + j) % 2 == 0 else BLUE


def _vertex_center(v) -> tuple[int, int]:
    kind, i, j = v
    if kind == "c":
        return (4 * i + 2, 4 * j + 2)
    return (4 * i, 4 * j)


def build_code(distance: int) -> ColorCode:
    """Construct the triangular 4.8.8 code of the given odd distance."""
    if distance < 1 or distance % 2 == 0:
        raise ValueError(f"distance must be odd and >= 1, got {distance}")
    if distance == 1:
        return ColorCode(
            distance=1,
            qubits=[(0, 0)],
            faces=[],
            check_matrix=np.zeros((0, 1), dtype=np.uint8),
            logical_support=frozenset({0}),
        )

    cells, extras = layouts.patch(distance)
    tris = [t for c in cells for t in ((c[0], c[1], k) for k in "NSEW")]
    tris += [tuple(t) for t in extras]
    if len(set(tris)) != len(tris):
        raise AssertionError("layout produced duplicate triangles")

    # qubit order: row-major by tiling (y, x)
    coords = {t: _triangle_coord(t) for t in tris}
    order = sorted(tris, key=lambda t: (coords[t][1], coords[t][0]))
    index = {t: k for k, t in enumerate(order)}

    # faces: union-jack vertices with 4 or 8 incident triangles
    incident: dict[tuple, list] = {}
    for t in tris:
        for v in _triangle_vertices(t):
            incident.setdefault(v, []).append(t)
    face_verts = sorted(
        (v for v, ts in incident.items() if len(ts) in (4, 8)),
        key=lambda v: (_vertex_center(v)[1], _vertex_center(v)[0]),
    )
    faces = []
    for k, v in enumerate(face_verts):
        qs = tuple(sorted(index[t] for t in incident[v]))
        faces.append(Face(id=k, color=_vertex_color(v), qubit_ids=qs,
                          center=_vertex_center(v)))

    n, m = len(order), len(faces)
    H = np.zeros((m, n), dtype=np.uint8)
    for f in faces:
        H[f.id, list(f.qubit_ids)] = 1

    support = frozenset(index[tuple(t)] for t in layouts.logical(distance))
    code = ColorCode(
        distance=distance,
        qubits=[coords[t] for t in order],
        faces=faces,
        check_matrix=H,
        logical_support=support,
    )
    _verify(code)
    return code


def _verify(code: ColorCode) -> None:
    """Cheap construction-time sanity checks (full checks live in tests)."""
    d = code.distance
    n_expect = (d + 1) ** 2 // 2 - 1
    m_expect = (d + 1) ** 2 // 4 - 1
    if code.n != n_expect or code.m != m_expect:
        raise AssertionError(
            f"d={d}: built n={code.n}, m={code.m}; expected "
            f"n={n_expect}, m={m_expect}")
    H = code.check_matrix
    weights = H.sum(axis=1)
    if not np.all((weights == 4) | (weights == 8)):
        raise AssertionError(f"d={d}: face weights {sorted(set(weights))}")
    if rank(H) != code.m:
        raise AssertionError(f"d={d}: check matrix not full rank")
    if len(code.logical_support) != d:
        raise AssertionError(f"d={d}: |logical_support| != d")
    sup = np.zeros(code.n, dtype=np.uint8)
    sup[list(code.logical_support)] = 1
    if np.any(syndrome(code, sup)):
        raise AssertionError(f"d={d}: logical support has nonzero syndrome")


def syndrome(code: ColorCode, error: np.ndarray) -> np.ndarray:
    """Per-face parities of an error pattern."""
    error = np.asarray(error, dtype=np.uint8)
    if error.shape != (code.n,):
        raise ValueError(f"error length {error.shape} != n={code.n}")
    return (code.check_matrix @ error) % 2


def logical_failure(code: ColorCode, residual: np.ndarray) -> bool:
    """Whether a zero-syndrome residual acts as the logical flip.

    Valid because n is odd, every stabilizer element has even weight and
    the logical operator is transversal: total parity decides.
    """
    residual = np.asarray(residual, dtype=np.uint8)
    if residual.shape != (code.n,):
        raise ValueError(f"residual length {residual.shape} != n={code.n}")
    if code.m and np.any(syndrome(code, residual)):
        raise ValueError("residual has nonzero syndrome")
    return bool(int(residual.sum()) % 2)
