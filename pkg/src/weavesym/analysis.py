"""Two-colour symmetry analysis of periodic designs.

For a design d, the colour group S collects every grid isometry g that
either preserves colours (d(g(c)) = d(c) for all cells) or exchanges
them.  Each member is also labelled with the physical side of the weave
it keeps or reverses: an operation keeps the side exactly when its
colour behaviour matches its handling of the axis directions, because
turning the fabric over both exchanges warp and weft faces and mirrors
the plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .design import Design
from .isometry import (
    AXIS_DIR,
    GridIsometry,
    IDENTITY,
    POINT_OPS,
    PointOp,
    Vec,
    invert_op,
)
from .lattice import Lattice

PRESERVE = "preserve"
SWAP = "swap"


def side_of(chi: str, delta: int) -> str:
    return "S1" if (chi == PRESERVE) == (delta == 1) else "S2"


def _rotl(row: int, s: int, w: int, mask: int) -> int:
    s %= w
    if s == 0:
        return row
    return ((row << s) | (row >> (w - s))) & mask


def _translation_action(design: Design, a: int, b: int) -> str | None:
    w, h, rows = design.width, design.height, design.rows
    mask = (1 << w) - 1
    first = _rotl(rows[0], a, w, mask) ^ rows[b % h]
    if first == 0:
        kind = PRESERVE
    elif first == mask:
        kind = SWAP
    else:
        return None
    want = 0 if kind == PRESERVE else mask
    for j in range(1, h):
        if _rotl(rows[j], a, w, mask) ^ rows[(j + b) % h] != want:
            return None
    return kind


def translation_lattices(design: Design) -> tuple[Lattice, Vec | None]:
    """Lattice of colour-preserving translations and, if the design has
    colour-exchanging translations, a canonical representative of their
    coset."""
    preserve = [(design.width, 0), (0, design.height)]
    swap = None
    for b in range(design.height):
        for a in range(design.width):
            if a == 0 and b == 0:
                continue
            act = _translation_action(design, a, b)
            if act == PRESERVE:
                preserve.append((a, b))
            elif act == SWAP and swap is None:
                swap = (a, b)
    lat = Lattice.from_vectors(preserve)
    return lat, (lat.reduce(swap) if swap is not None else None)


def color_action(design: Design, iso: GridIsometry) -> str | None:
    """Colour behaviour of one isometry, or None.

    Point operations that exchange the axes are checked over an
    lcm-sized region so that periodicity of the comparison grid is
    guaranteed for any block shape.
    """
    w, h = design.width, design.height
    if iso.op.delta == 1 or w == h:
        rx, ry = w, h
    else:
        rx = ry = lcm(w, h)
    same = diff = True
    for j in range(ry):
        for i in range(rx):
            if design.cell(*iso.apply_cell((i, j))) == design.cell(i, j):
                diff = False
            else:
                same = False
            if not (same or diff):
                return None
    return PRESERVE if same else SWAP


def parallel_coeff(op: PointOp, t: Vec) -> int:
    """k with t + op(t) = k * axis_dir, for a reflection op."""
    u = AXIS_DIR[op.name]
    mt = op.apply(t)
    return (t[0] + mt[0]) // u[0] if u[0] else (t[1] + mt[1]) // u[1]


def axis_offset2(op_name: str, t: Vec) -> int:
    """Position of the reflection axis, in half-units.

    mirror_x: the line y = off/2; mirror_y: x = off/2;
    mirror_diag: x - y = off/2; mirror_anti: x + y = off/2.
    """
    tx, ty = t
    return {
        "mirror_x": ty,
        "mirror_y": tx,
        "mirror_diag": tx - ty,
        "mirror_anti": tx + ty,
    }[op_name]


def locate_element(lat: Lattice, iso: GridIsometry) -> dict:
    """Geometric description of one isometry, as wire-ready data.

    Positions use half-unit integers (twice the plane coordinate), so
    cell centres and cell corners stay exact.  Reflections are reported
    as a true mirror when some translate of the isometry along its axis
    by a vector of `lat` cancels the glide component.
    """
    op, t = iso.op, iso.t
    if op is IDENTITY:
        if t == (0, 0):
            return {"kind": "identity"}
        return {"kind": "translation", "vector": list(t)}
    if op.name == "rot180":
        return {"kind": "rotation2", "center2": [t[0], t[1]]}
    if op.name == "rot90":
        return {"kind": "rotation4", "center2": [t[0] - t[1], t[0] + t[1]]}
    if op.name == "rot270":
        return {"kind": "rotation4", "center2": [t[0] + t[1], t[1] - t[0]]}
    u = AXIS_DIR[op.name]
    m = lat.min_along(u)
    r = parallel_coeff(op, t) % (2 * m)
    base = {"axisDir": list(u), "axisOffset2": axis_offset2(op.name, t)}
    if r == 0:
        return {"kind": "mirror", **base}
    return {"kind": "glide", "glide2": [r * u[0], r * u[1]], **base}


@dataclass(frozen=True)
class GroupElement:
    iso: GridIsometry
    chi: str
    side: str
    element: dict

    def to_json(self) -> dict:
        return {
            "pointOp": self.iso.op.name,
            "t": list(self.iso.t),
            "chi": self.chi,
            "side": self.side,
            "element": self.element,
        }


@dataclass(frozen=True)
class ColorGroupAnalysis:
    design: Design
    lattice: Lattice            # colour-preserving translations
    swap_rep: Vec | None        # coset representative of swap translations
    elements: tuple[GroupElement, ...]

    @property
    def full_lattice(self) -> Lattice:
        """Translation lattice of S, swap translations included."""
        if self.swap_rep is None:
            return self.lattice
        return self.lattice.extended(self.swap_rep)

    @property
    def s2_empty(self) -> bool:
        return all(el.side == "S1" for el in self.elements)

    def side_elements(self, side: str) -> list[GroupElement]:
        return [el for el in self.elements if el.side == side]

    def chi_of(self, iso: GridIsometry) -> str | None:
        """Colour behaviour of an arbitrary isometry, via the computed
        group data."""
        key = (iso.op.name, self.lattice.reduce(iso.t))
        for el in self.elements:
            if (el.iso.op.name, el.iso.t) == key:
                return el.chi
        return None


def _pullback_rows(design: Design, op: PointOp) -> list[int]:
    """Rows of e with e(c) = design(op(c)) on the design block."""
    g = GridIsometry(op)
    rows = []
    for j in range(design.height):
        bits = 0
        for i in range(design.width):
            if design.cell(*g.apply_cell((i, j))):
                bits |= 1 << i
        rows.append(bits)
    return rows


def color_group(design: Design) -> ColorGroupAnalysis:
    """All colour-compatible isometries, one per coset of the
    colour-preserving translation lattice."""
    lat, swap_rep = translation_lattices(design)
    return _build_group(design, lat, swap_rep)


def _build_group(design: Design, lat: Lattice,
                 swap_rep: Vec | None) -> ColorGroupAnalysis:
    elements = [
        GroupElement(GridIsometry(IDENTITY), PRESERVE, "S1", {"kind": "identity"})
    ]
    if swap_rep is not None:
        iso = GridIsometry(IDENTITY, swap_rep)
        elements.append(
            GroupElement(iso, SWAP, side_of(SWAP, 1), locate_element(lat, iso)))
    w, h = design.width, design.height
    mask = (1 << w) - 1
    per_op = 1 if swap_rep is None else 2
    for op in POINT_OPS:
        if op is IDENTITY:
            continue
        # members of the colour group normalise the preserve lattice, so
        # ops that move it can be skipped outright; for the survivors a
        # single-block comparison is sound
        if not all(lat.contains(op.apply(v)) for v in lat.basis):
            continue
        egrid = _pullback_rows(design, op)
        inv = invert_op(op)
        found = 0
        for t in lat.coset_reps():
            sx, sy = inv.apply(t)
            sx %= w
            sy %= h
            first = _rotl(design.rows[0], sx, w, mask) ^ egrid[sy]
            if first == 0:
                chi = PRESERVE
            elif first == mask:
                chi = SWAP
            else:
                continue
            want = 0 if chi == PRESERVE else mask
            if any(
                _rotl(design.rows[j], sx, w, mask) ^ egrid[(j + sy) % h] != want
                for j in range(1, h)
            ):
                continue
            iso = GridIsometry(op, t)
            elements.append(
                GroupElement(iso, chi, side_of(chi, op.delta), locate_element(lat, iso)))
            found += 1
            if found == per_op:
                break
    return ColorGroupAnalysis(design, lat, swap_rep, tuple(elements))
