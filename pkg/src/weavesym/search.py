"""Exhaustive search for designs realising a target symmetry pair.

Candidates are enumerated by growing block area, keeping only designs
whose exact rectangular periods equal the block (smaller patterns were
already seen on their own block) and, per translation class, only a
representative whose first row dominates every row rotation.  Matches
are deduplicated up to grid point operations and translations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import _build_group, translation_lattices
from .classify import Classification, classify_analysis
from .design import Design
from .isometry import POINT_OPS
from .naming import (
    POINT_ORDER,
    normalize_layer_name,
    normalize_plane_name,
    pair_for_layer,
    pair_table,
    validate_pair,
)

# Exhausting all designs of a given area is exponential, so the sweep is
# capped; every tabulated pair is realised well inside this bound.
DEFAULT_MAX_CELLS = 16


@dataclass(frozen=True)
class SearchTarget:
    s: str
    s1: str                  # "-" when S2 must be empty
    layer: str | None = None  # expected layer symbol, when tabulated

    def describe(self) -> str:
        return f"({self.s}, {self.s1})"


def parse_pair_target(text: str) -> SearchTarget:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected 'S,S1' with exactly one comma, got {text!r}")
    s = normalize_plane_name(parts[0])
    s1 = parts[1] if parts[1] == "-" else normalize_plane_name(parts[1])
    validate_pair(s, s1)
    return SearchTarget(s, s1, pair_table().get((s, s1)))


def parse_layer_target(text: str) -> SearchTarget:
    layer = normalize_layer_name(text)
    s, s1 = pair_for_layer(layer)
    return SearchTarget(s, s1, layer)


def _rotl(row: int, s: int, w: int, mask: int) -> int:
    s %= w
    if s == 0:
        return row
    return ((row << s) | (row >> (w - s))) & mask


def _dominant_first_row(rows, w: int, mask: int) -> bool:
    """True when rows[0] is >= every rotation of every row, so that each
    translation class keeps at least one survivor."""
    r0 = rows[0]
    for j, r in enumerate(rows):
        for s in range(w):
            if s == 0 and j == 0:
                continue
            if _rotl(r, s, w, mask) > r0:
                return False
    return True


def _proper_period(rows, w: int, h: int, mask: int) -> bool:
    for p in {w // f for f in _prime_factors(w)}:
        if all(_rotl(r, p, w, mask) == r for r in rows):
            return True
    for q in {h // f for f in _prime_factors(h)}:
        if all(rows[j] == rows[(j + q) % h] for j in range(h)):
            return True
    return False


def _prime_factors(n: int):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def iter_blocks(max_w: int, max_h: int, max_cells: int):
    sizes = [(w * h, w, h)
             for w in range(1, max_w + 1)
             for h in range(1, max_h + 1)
             if w * h <= max_cells]
    for _, w, h in sorted(sizes):
        yield w, h


def iter_candidates(w: int, h: int):
    """All designs on an exact w-by-h block, one per translation class
    at least."""
    mask = (1 << w) - 1
    for bits in range(1 << (w * h)):
        rows = tuple((bits >> (w * j)) & mask for j in range(h))
        if rows[0] == 0 and bits:
            continue
        if not _dominant_first_row(rows, w, mask):
            continue
        if _proper_period(rows, w, h, mask):
            continue
        yield Design(w, h, rows)


def canonical_key(design: Design):
    """Smallest (w, h, rows) over all point-op images and translations;
    equal keys mean the designs are copies of one another."""
    best = None
    for op in POINT_OPS:
        d2 = design.transformed(op)
        w, h = d2.width, d2.height
        mask = (1 << w) - 1
        for dy in range(h):
            rot = d2.rows[dy:] + d2.rows[:dy]
            for dx in range(w):
                cand = (w, h, tuple(_rotl(r, dx, w, mask) for r in rot))
                if best is None or cand < best:
                    best = cand
    return best


def matches(cls: Classification, target: SearchTarget) -> bool:
    if cls.plane_group_s != target.s:
        return False
    s1d = "-" if cls.s2_empty else cls.plane_group_s1
    if s1d != target.s1:
        return False
    return target.layer is None or cls.layer_symbol == target.layer


def search(target: SearchTarget, max_block=(12, 12), limit: int | None = 1,
           max_cells: int = DEFAULT_MAX_CELLS):
    """Designs matching the target, in (area, width, rows) order.

    Returns a list of (design, classification) pairs.  With limit=None
    the whole capped space is swept.
    """
    order_s = POINT_ORDER[target.s]
    if target.s1 == "-":
        swap_required, swap_forbidden = False, True
    else:
        swap_required = order_s == POINT_ORDER[target.s1]
        swap_forbidden = not swap_required
    results = []
    seen = set()
    for w, h in iter_blocks(max_block[0], max_block[1], max_cells):
        for design in iter_candidates(w, h):
            lat, swap_rep = translation_lattices(design)
            if swap_required and swap_rep is None:
                continue
            if swap_forbidden and swap_rep is not None:
                continue
            cls = classify_analysis(_build_group(design, lat, swap_rep))
            if not matches(cls, target):
                continue
            key = canonical_key(design)
            if key in seen:
                continue
            seen.add(key)
            results.append((design, cls))
            if limit is not None and len(results) >= limit:
                return results
    return results
