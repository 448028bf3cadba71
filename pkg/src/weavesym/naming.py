"""Plane-group naming and the pair-to-layer-group table.

A group is named from its translation lattice and one representative
per lattice coset.  Slot 2 of the oriented symbol describes the mirror
family along (1,0), slot 3 the family along (0,1); for groups whose
reflections run diagonally the slots refer to (1,1) and (1,-1)
instead.  Canonical names fold the two slot orders together, since the
two orientations describe the same group type.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from math import gcd

from .analysis import ColorGroupAnalysis, GroupElement, parallel_coeff
from .isometry import AXIS_DIR, Vec, op_by_name
from .lattice import Lattice


def group_records(analysis: ColorGroupAnalysis, lattice: Lattice,
                  side: str | None = None) -> dict[str, list[Vec]]:
    """Coset representatives modulo `lattice`, grouped by point op.

    With side="S1" this describes the side-preserving subgroup over the
    preserve lattice; with the full lattice of S it merges swap-related
    cosets that coincide there.
    """
    reps: dict[str, list[Vec]] = {}
    seen = set()
    for el in analysis.elements:
        if side is not None and el.side != side:
            continue
        t = lattice.reduce(el.iso.t)
        key = (el.iso.op.name, t)
        if key in seen:
            continue
        seen.add(key)
        reps.setdefault(el.iso.op.name, []).append(t)
    return reps


def _family_modulus(lat: Lattice, op) -> tuple[int, int]:
    """Minimal axis translation m and the modulus g0 by which the glide
    coefficient of one coset can change under lattice translates."""
    u = AXIS_DIR[op.name]
    m = lat.min_along(u)
    g0 = 2 * m
    for v in lat.basis:
        g0 = gcd(g0, parallel_coeff(op, v))
    return m, g0


def _family_char(lat: Lattice, reps: dict[str, list[Vec]], op_names) -> str:
    """'m' if some coset of the family admits a true mirror, 'g' if the
    family is present but glide-only, '1' if absent."""
    found = None
    for name in op_names:
        ts = reps.get(name)
        if not ts:
            continue
        op = op_by_name(name)
        _, g0 = _family_modulus(lat, op)
        for t in ts:
            if parallel_coeff(op, t) % g0 == 0:
                return "m"
        found = "g"
    return found or "1"


def _centering_ratio(lat: Lattice, diagonal: bool) -> int:
    if diagonal:
        return (2 * lat.min_along((1, 1)) * lat.min_along((1, -1))) // lat.index
    return (lat.min_along((1, 0)) * lat.min_along((0, 1))) // lat.index


def oriented_plane_symbol(lat: Lattice, reps: dict[str, list[Vec]]) -> str:
    ops = set(reps)
    has4 = "rot90" in ops or "rot270" in ops
    refl = [n for n in AXIS_DIR if n in ops]
    if has4:
        if not refl:
            return "p4"
        axis = _family_char(lat, reps, ("mirror_x", "mirror_y"))
        diag = _family_char(lat, reps, ("mirror_diag", "mirror_anti"))
        # a fourfold lattice is square; pick the orientation in which its
        # conventional cell is primitive
        if _centering_ratio(lat, diagonal=False) == 1:
            return "p4" + axis + diag
        return "p4" + diag + axis
    if refl:
        diagonal = refl[0] in ("mirror_diag", "mirror_anti")
        letter = "c" if _centering_ratio(lat, diagonal) == 2 else "p"
        first, second = (("mirror_diag", "mirror_anti") if diagonal
                         else ("mirror_x", "mirror_y"))
        digit = "2" if "rot180" in ops else "1"
        return (letter + digit
                + _family_char(lat, reps, (first,))
                + _family_char(lat, reps, (second,)))
    if "rot180" in ops:
        return "p211"
    return "p1"


_SLOT_SWAP = {"p11m": "p1m1", "p11g": "p1g1", "c11m": "c1m1", "p2gm": "p2mg"}


def canonical_symbol(symbol: str) -> str:
    return _SLOT_SWAP.get(symbol, symbol)


PLANE_GROUPS = (
    "p1", "p211", "p1m1", "p1g1", "c1m1",
    "p2mm", "p2mg", "p2gg", "c2mm", "p4", "p4mm", "p4gm",
)

POINT_ORDER = {
    "p1": 1, "p211": 2, "p1m1": 2, "p1g1": 2, "c1m1": 2,
    "p2mm": 4, "p2mg": 4, "p2gg": 4, "c2mm": 4, "p4": 4,
    "p4mm": 8, "p4gm": 8,
}

_HAS_ROT2 = {"p211", "p2mm", "p2mg", "p2gg", "c2mm", "p4", "p4mm", "p4gm"}
_HAS_ROT4 = {"p4", "p4mm", "p4gm"}
_HAS_REFL = {"p1m1", "p1g1", "c1m1", "p2mm", "p2mg", "p2gg", "c2mm", "p4mm", "p4gm"}

_PLANE_ALIASES = {
    "p2": "p211", "pm": "p1m1", "pg": "p1g1", "cm": "c1m1",
    "pmm": "p2mm", "pmg": "p2mg", "pgm": "p2gm", "pgg": "p2gg",
    "cmm": "c2mm", "p4m": "p4mm", "p4g": "p4gm",
}


def normalize_plane_name(name: str) -> str:
    name = canonical_symbol(_PLANE_ALIASES.get(name.strip(), name.strip()))
    if name not in PLANE_GROUPS:
        raise ValueError(f"unknown plane-group symbol {name!r}")
    return name


def validate_pair(s: str, s1: str) -> None:
    """Reject pairs that cannot be an index-1-or-2 side split."""
    if s1 == "-":
        return
    order_s, order_s1 = POINT_ORDER[s], POINT_ORDER[s1]
    ok = (
        order_s in (order_s1, 2 * order_s1)
        and (s1 not in _HAS_ROT2 or s in _HAS_ROT2)
        and (s1 not in _HAS_ROT4 or s in _HAS_ROT4)
        and (s1 not in _HAS_REFL or s in _HAS_REFL)
    )
    # when the point order halves, both groups share one lattice, so a
    # centred group only admits centred-lattice subgroups and vice versa
    if ok and order_s == 2 * order_s1 and order_s <= 4:
        if s == "c2mm":
            ok = s1 in ("c1m1", "p211")
        elif s == "c1m1":
            ok = s1 == "p1"
        elif s1 == "c1m1":
            ok = False
    if not ok:
        raise ValueError(
            f"S₁ must be a subgroup of S of index 1 or 2; ({s}, {s1}) is not")


def pair_descriptor(s: str, s1: str, s2_empty: bool) -> str:
    return f"({s}, {'-' if s2_empty else s1})"


@lru_cache(maxsize=1)
def pair_table() -> dict[tuple[str, str], str]:
    """Layer-group symbol for each realisable (S, S1) pair."""
    text = resources.files("weavesym").joinpath("data/pair_table.json").read_text("utf-8")
    data = json.loads(text)
    return {(row["s"], row["s1"]): row["layer"] for row in data["rows"]}


def layer_symbol_for(s: str, s1: str, s2_empty: bool) -> str:
    return pair_table().get((s, "-" if s2_empty else s1), "unassigned")


@lru_cache(maxsize=1)
def layer_aliases() -> dict[str, str]:
    """Accepted spellings of each layer symbol, including plain-ASCII
    forms of the subscript-1 names."""
    out = {}
    for layer in pair_table().values():
        out[layer] = layer
        out[layer.replace("₁", "1")] = layer
    return out


def normalize_layer_name(name: str) -> str:
    try:
        return layer_aliases()[name.strip()]
    except KeyError:
        raise ValueError(f"unknown layer-group symbol {name.strip()!r}") from None


def pair_for_layer(layer: str) -> tuple[str, str]:
    for (s, s1), sym in pair_table().items():
        if sym == layer:
            return s, s1
    raise ValueError(f"no tabulated pair produces layer group {layer!r}")


_LIFT = {
    ("translation", "S1"): "translation",
    ("translation", "S2"): "glide-plane-parallel",
    ("rotation2", "S1"): "axis2-normal",
    ("rotation2", "S2"): "inversion-center",
    ("rotation4", "S1"): "axis4-normal",
    ("rotation4", "S2"): "rotoinversion4-normal",
    ("mirror", "S1"): "mirror-plane-normal",
    ("mirror", "S2"): "axis2-inplane",
    ("glide", "S1"): "glide-plane-normal",
    ("glide", "S2"): "screw2-inplane",
}


def lift_kind(kind: str, side: str) -> str:
    return _LIFT[(kind, side)]


def lift_element(el: GroupElement) -> dict | None:
    """Spatial symmetry the element induces on the physical weave.

    Side-preserving members act the same above and below the plane;
    side-reversing members combine their planar action with turning the
    fabric over.  The identity is not inventoried.
    """
    kind = el.element["kind"]
    if kind == "identity":
        return None
    out = dict(el.element)
    out["kind"] = _LIFT[(kind, el.side)]
    return out
