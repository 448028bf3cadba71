"""Exact integer isometries of the unit square grid.

Cells are the unit squares [i, i+1] x [j, j+1] with x running right and
y running down.  Every isometry handled here is a point operation from
the symmetry group of the square lattice followed by an integer
translation, so cell centres map to cell centres and all arithmetic
stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass

Vec = tuple[int, int]


@dataclass(frozen=True)
class PointOp:
    """One of the eight point symmetries of the square lattice."""

    name: str
    matrix: tuple[Vec, Vec]

    def apply(self, v: Vec) -> Vec:
        (a, b), (c, d) = self.matrix
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    @property
    def delta(self) -> int:
        """+1 for operations that keep the axis directions, -1 for the
        four that exchange them (quarter turns and diagonal mirrors)."""
        return 1 if self.matrix[0][1] == 0 else -1

    @property
    def is_rotation(self) -> bool:
        (a, b), (c, d) = self.matrix
        return a * d - b * c == 1

    def __repr__(self) -> str:
        return f"PointOp({self.name})"


IDENTITY = PointOp("identity", ((1, 0), (0, 1)))
R90 = PointOp("rot90", ((0, -1), (1, 0)))
R180 = PointOp("rot180", ((-1, 0), (0, -1)))
R270 = PointOp("rot270", ((0, 1), (-1, 0)))
MIRROR_X = PointOp("mirror_x", ((1, 0), (0, -1)))      # horizontal axis
MIRROR_Y = PointOp("mirror_y", ((-1, 0), (0, 1)))      # vertical axis
MIRROR_DIAG = PointOp("mirror_diag", ((0, 1), (1, 0)))    # axis x = y
MIRROR_ANTI = PointOp("mirror_anti", ((0, -1), (-1, 0)))  # axis x = -y

POINT_OPS: tuple[PointOp, ...] = (
    IDENTITY, R90, R180, R270, MIRROR_X, MIRROR_Y, MIRROR_DIAG, MIRROR_ANTI,
)

_BY_MATRIX = {op.matrix: op for op in POINT_OPS}
_BY_NAME = {op.name: op for op in POINT_OPS}

# Axis direction of each reflection, as a primitive integer vector.
AXIS_DIR = {
    "mirror_x": (1, 0),
    "mirror_y": (0, 1),
    "mirror_diag": (1, 1),
    "mirror_anti": (1, -1),
}


def op_by_name(name: str) -> PointOp:
    return _BY_NAME[name]


def compose_ops(f: PointOp, g: PointOp) -> PointOp:
    """Matrix product f*g, i.e. apply g first."""
    (a, b), (c, d) = f.matrix
    (p, q), (r, s) = g.matrix
    m = ((a * p + b * r, a * q + b * s), (c * p + d * r, c * q + d * s))
    return _BY_MATRIX[m]


def invert_op(f: PointOp) -> PointOp:
    # the matrices are orthogonal, so the inverse is the transpose
    (a, b), (c, d) = f.matrix
    return _BY_MATRIX[((a, c), (b, d))]


@dataclass(frozen=True)
class GridIsometry:
    """The map x -> op(x) + t with an integer translation part t."""

    op: PointOp
    t: Vec = (0, 0)

    def apply_cell(self, cell: Vec) -> Vec:
        """Image of a grid cell, computed through its centre.

        The centre of cell (i, j) is (2i+1, 2j+1) in doubled
        coordinates; point operations keep both coordinates odd, so the
        result is again a cell centre.
        """
        x, y = self.op.apply((2 * cell[0] + 1, 2 * cell[1] + 1))
        x += 2 * self.t[0]
        y += 2 * self.t[1]
        return ((x - 1) // 2, (y - 1) // 2)

    def apply_point2(self, p2: Vec) -> Vec:
        """Image of a point given in doubled (half-unit) coordinates."""
        x, y = self.op.apply(p2)
        return (x + 2 * self.t[0], y + 2 * self.t[1])


def compose(f: GridIsometry, g: GridIsometry) -> GridIsometry:
    """f after g."""
    tx, ty = f.op.apply(g.t)
    return GridIsometry(compose_ops(f.op, g.op), (tx + f.t[0], ty + f.t[1]))


def invert(f: GridIsometry) -> GridIsometry:
    inv = invert_op(f.op)
    tx, ty = inv.apply(f.t)
    return GridIsometry(inv, (-tx, -ty))
