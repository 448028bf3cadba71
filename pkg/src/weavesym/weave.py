"""Physical weave structures: strands, faces and view rendering.

A structure is an over/under pattern (1 = weft passes over warp)
together with face colours for every strand.  Strands are flat ribbons
that do not twist, so each one shows a fixed face towards the viewer's
side and the other face towards the back.  Face strings hold two
characters, front face then back face, with "B" for black and "W" for
white.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .design import Design, DesignFormatError, parse_design, MAGIC as DESIGN_MAGIC

STRUCTURE_MAGIC = "weave-structure v1"

# classic palettes: a one-sided cloth shows dark warp faces and light
# weft faces in front, with the colours trading places behind; a basket
# mixes strands that are the same colour on both faces
ONESIDED_WARP = "BW"
ONESIDED_WEFT = "WB"
BASKET_WARP = "WW"
BASKET_WEFT = "BB"


def _check_faces(faces, count, label):
    faces = tuple(faces)
    if len(faces) != count:
        raise ValueError(f"expected {count} {label} face entries, got {len(faces)}")
    for f in faces:
        if len(f) != 2 or any(ch not in "BW" for ch in f):
            raise ValueError(f"bad {label} faces {f!r}: want two of B/W")
    return faces


@dataclass(frozen=True)
class WeaveStructure:
    pattern: Design
    warp_faces: tuple[str, ...]   # one entry per warp strand (column)
    weft_faces: tuple[str, ...]   # one entry per weft strand (row)

    def __post_init__(self):
        object.__setattr__(
            self, "warp_faces",
            _check_faces(self.warp_faces, self.pattern.width, "warp"))
        object.__setattr__(
            self, "weft_faces",
            _check_faces(self.weft_faces, self.pattern.height, "weft"))

    @classmethod
    def uniform(cls, pattern: Design, warp: str = ONESIDED_WARP,
                weft: str = ONESIDED_WEFT) -> "WeaveStructure":
        return cls(pattern, (warp,) * pattern.width, (weft,) * pattern.height)

    def render_front(self) -> Design:
        """Colour seen from the front: the front face of whichever
        strand is on top."""
        w, h = self.pattern.width, self.pattern.height
        rows = []
        for j in range(h):
            bits = 0
            for i in range(w):
                face = (self.weft_faces[j] if self.pattern.cell(i, j)
                        else self.warp_faces[i])
                if face[0] == "B":
                    bits |= 1 << i
            rows.append(bits)
        return Design(w, h, tuple(rows))

    def render_back(self) -> Design:
        """Colour seen after turning the fabric over about a vertical
        axis: the back face of the strand underneath, with the x axis
        reversed."""
        w, h = self.pattern.width, self.pattern.height
        rows = []
        for j in range(h):
            bits = 0
            for i in range(w):
                ii = w - 1 - i
                face = (self.warp_faces[ii] if self.pattern.cell(ii, j)
                        else self.weft_faces[j])
                if face[1] == "B":
                    bits |= 1 << i
            rows.append(bits)
        return Design(w, h, tuple(rows))


def gen_twill(over: int, under: int, shift: int = 1,
              rows: int | None = None) -> Design:
    """Over/under twill pattern: weft j covers warps with
    (i - shift*j) mod (over+under) < over."""
    if over < 1 or under < 1:
        raise ValueError("twill needs at least one over and one under")
    p = over + under
    if rows is None:
        rows = 1
        while (shift * rows) % p:
            rows += 1
    out = []
    for j in range(rows):
        bits = 0
        for i in range(p):
            if (i - shift * j) % p < over:
                bits |= 1 << i
        out.append(bits)
    return Design(p, rows, tuple(out))


def striped_faces(count: int, stripe: int, phase: int = 0,
                  first: str = "BW") -> tuple[str, ...]:
    """Face colours for strands laid out in alternating stripes."""
    if stripe < 1:
        raise ValueError("stripe width must be positive")
    second = first[::-1]
    return tuple(
        first if ((k + phase) // stripe) % 2 == 0 else second
        for k in range(count))


def parse_structure(text: str) -> WeaveStructure:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("//", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise DesignFormatError("empty structure file")
    lineno, header = lines[0]
    if header != STRUCTURE_MAGIC:
        raise DesignFormatError(f"line {lineno}: expected '{STRUCTURE_MAGIC}' header")
    warp = weft = None
    design_parts = [DESIGN_MAGIC]
    for lineno, line in lines[1:]:
        if line.startswith("warp "):
            warp = line.split()[1:]
        elif line.startswith("weft "):
            weft = line.split()[1:]
        else:
            design_parts.append(line)
    try:
        pattern = parse_design("\n".join(design_parts))
    except DesignFormatError as exc:
        raise DesignFormatError(f"in structure pattern: {exc}") from None
    if warp is None or weft is None:
        raise DesignFormatError("structure needs 'warp ...' and 'weft ...' lines")
    try:
        return WeaveStructure(pattern, tuple(warp), tuple(weft))
    except ValueError as exc:
        raise DesignFormatError(str(exc)) from None


def format_structure(struct: WeaveStructure) -> str:
    out = [STRUCTURE_MAGIC,
           f"block {struct.pattern.width} {struct.pattern.height}"]
    out.extend(struct.pattern.to_strings())
    out.append("warp " + " ".join(struct.warp_faces))
    out.append("weft " + " ".join(struct.weft_faces))
    return "\n".join(out) + "\n"


def load_structure(path: str | os.PathLike) -> WeaveStructure:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_structure(fh.read())


def save_structure(struct: WeaveStructure, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_structure(struct))
