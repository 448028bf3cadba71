"""Doubly periodic black/white designs and their file format.

A design assigns one of two colours to every grid cell and repeats with
some translational block.  Black (1) marks cells where the weft strand
passes over the warp; white (0) marks warp-over-weft.  Rows are stored
as integers with bit i holding the colour of cell (i, j).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .isometry import GridIsometry, PointOp

BLACK = "#"
WHITE = "."
MAGIC = "weave-design v1"


class DesignFormatError(ValueError):
    """Raised for malformed design files."""


@dataclass(frozen=True)
class Design:
    width: int
    height: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("block dimensions must be positive")
        if len(self.rows) != self.height:
            raise ValueError(f"expected {self.height} rows, got {len(self.rows)}")
        mask = (1 << self.width) - 1
        for j, r in enumerate(self.rows):
            if r < 0 or r & ~mask:
                raise ValueError(f"row {j} has bits outside the block width")

    @classmethod
    def from_strings(cls, lines, black: str = BLACK) -> "Design":
        rows = []
        for line in lines:
            bits = 0
            for i, ch in enumerate(line):
                if ch == black:
                    bits |= 1 << i
            rows.append(bits)
        return cls(len(lines[0]), len(lines), tuple(rows))

    def to_strings(self) -> list[str]:
        return [
            "".join(BLACK if (r >> i) & 1 else WHITE for i in range(self.width))
            for r in self.rows
        ]

    def cell(self, i: int, j: int) -> int:
        """Colour of cell (i, j), extended periodically."""
        return (self.rows[j % self.height] >> (i % self.width)) & 1

    @property
    def black_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    @property
    def is_balanced(self) -> bool:
        return 2 * self.black_count == self.width * self.height

    def complemented(self) -> "Design":
        mask = (1 << self.width) - 1
        return Design(self.width, self.height, tuple(r ^ mask for r in self.rows))

    def tiled(self, nx: int, ny: int) -> "Design":
        """The same pattern declared on an nx-by-ny multiple block."""
        rows = []
        for j in range(self.height * ny):
            r = self.rows[j % self.height]
            bits = 0
            for k in range(nx):
                bits |= r << (k * self.width)
            rows.append(bits)
        return Design(self.width * nx, self.height * ny, tuple(rows))

    def transformed(self, op: PointOp) -> "Design":
        """Pull-back of the design under a point operation.

        The result e satisfies e(c) = self(op(c)).  Operations that
        exchange the axes transpose the block.
        """
        if op.delta == -1:
            w, h = self.height, self.width
        else:
            w, h = self.width, self.height
        g = GridIsometry(op)
        rows = []
        for j in range(h):
            bits = 0
            for i in range(w):
                if self.cell(*g.apply_cell((i, j))):
                    bits |= 1 << i
            rows.append(bits)
        return Design(w, h, tuple(rows))

    def translated(self, dx: int, dy: int) -> "Design":
        """The design shifted so old cell (i, j) lands on (i+dx, j+dy)."""
        w, h = self.width, self.height
        mask = (1 << w) - 1
        dx %= w
        out = []
        for j in range(h):
            r = self.rows[(j - dy) % h]
            out.append(((r << dx) | (r >> (w - dx))) & mask if dx else r)
        return Design(w, h, tuple(out))

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def parse_design(text: str) -> Design:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("//", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise DesignFormatError("empty design file")
    lineno, header = lines[0]
    if header != MAGIC:
        raise DesignFormatError(f"line {lineno}: expected '{MAGIC}' header")
    if len(lines) < 2:
        raise DesignFormatError("missing 'block W H' line")
    lineno, decl = lines[1]
    parts = decl.split()
    if len(parts) != 3 or parts[0] != "block":
        raise DesignFormatError(f"line {lineno}: expected 'block W H'")
    try:
        width, height = int(parts[1]), int(parts[2])
    except ValueError:
        raise DesignFormatError(f"line {lineno}: block dimensions must be integers") from None
    if width < 1 or height < 1:
        raise DesignFormatError(f"line {lineno}: block dimensions must be positive")
    body = lines[2:]
    if len(body) != height:
        raise DesignFormatError(f"expected {height} rows, found {len(body)}")
    rows = []
    for j, (lineno, line) in enumerate(body):
        if len(line) != width:
            raise DesignFormatError(
                f"line {lineno}: row {j} has {len(line)} cells, expected {width}")
        bits = 0
        for i, ch in enumerate(line):
            if ch == BLACK:
                bits |= 1 << i
            elif ch != WHITE:
                raise DesignFormatError(f"line {lineno}: invalid cell {ch!r} in row {j}")
        rows.append(bits)
    return Design(width, height, tuple(rows))


def format_design(design: Design, comment: str | None = None) -> str:
    out = [MAGIC]
    if comment:
        out.extend("// " + line for line in comment.splitlines())
    out.append(f"block {design.width} {design.height}")
    out.extend(design.to_strings())
    return "\n".join(out) + "\n"


def load_design(path: str | os.PathLike) -> Design:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_design(fh.read())


def save_design(design: Design, path: str | os.PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_design(design, comment))
