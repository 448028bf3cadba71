#!/usr/bin/env python3
"""Regenerate the bundled catalog manifest.

Entries are synthetic survey items: for every tabulated symmetry pair a
fixed number of distinct designs is pulled from the exhaustive search,
classified, and frozen into src/weavesym/data/catalog/manifest.json.
The search is deterministic, so reruns reproduce the same manifest.
"""

from __future__ import annotations

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from weavesym.catalog import has_glide
from weavesym.classify import classify
from weavesym.design import Design
from weavesym.search import canonical_key, parse_pair_target, search

OUT = pathlib.Path(__file__).resolve().parents[1] / "src/weavesym/data/catalog/manifest.json"

# reference design: centred group with horizontal mirrors on the
# side-preserving half and vertical mirrors plus half-turns reversing
REFERENCE = Design.from_strings(["#..#", "#.#.", ".##.", "#.#."])

# (pair, number of entries, item types per entry); counts are capped by
# how many distinct designs exist in the searched space
PLAN = [
    ("c2mm,c1m1", 4, ["basket", "basket", "basket", "mat"]),
    ("p2mg,p2gg", 3, ["basket", "basket", "mat"]),
    ("p2mg,p2mg", 6, ["basket"] * 5 + ["hat"]),
    ("p2gg,p1g1", 1, ["basket"]),
    ("c2mm,p2mg", 3, ["basket", "basket", "bag"]),
    ("p2mg,p1g1", 2, ["basket", "basket"]),
    ("c2mm,-", 3, ["basket"] * 3),
    ("c2mm,p211", 3, ["basket", "basket", "fan"]),
    ("p2mg,p211", 2, ["basket", "basket"]),
    ("c1m1,p1", 2, ["basket", "basket"]),
    ("p1g1,p1", 3, ["basket"] * 3),
    ("p211,p1", 4, ["basket", "basket", "hat", "mat"]),
    ("p1m1,p1", 4, ["basket", "basket", "hat", "mat"]),
    ("p1,-", 3, ["basket", "bag", "fan"]),
    ("p1,p1", 1, ["basket"]),
]


def entry_json(eid, name, item_type, design):
    cls = classify(design)
    return {
        "id": eid,
        "name": name,
        "itemType": item_type,
        "design": {
            "width": design.width,
            "height": design.height,
            "rows": design.to_strings(),
        },
        "expectedPair": cls.pair_descriptor,
        "expectedLayer": cls.layer_symbol,
        "hasGlide": has_glide(cls.plane_group_s),
        "synthetic": True,
    }


def main() -> int:
    entries = []
    seen = {canonical_key(REFERENCE)}
    entries.append(entry_json("ref-01", "reference weave", "basket", REFERENCE))
    serial = 0
    for pair_text, count, item_types in PLAN:
        target = parse_pair_target(pair_text)
        need = count - 1 if pair_text == "c2mm,c1m1" else count
        limit = need + 1 if pair_text == "c2mm,c1m1" else need
        found = []
        for design, _ in search(target, max_block=(12, 12), limit=limit):
            key = canonical_key(design)
            if key in seen:
                continue
            seen.add(key)
            found.append(design)
            if len(found) == need:
                break
        if len(found) < need:
            print(f"only {len(found)}/{need} designs for {pair_text}", file=sys.stderr)
            return 1
        offset = count - need
        for k, design in enumerate(found):
            serial += 1
            entries.append(entry_json(
                f"syn-{serial:02d}", f"study {serial:02d}",
                item_types[offset + k], design))
        print(f"{pair_text}: {need} designs", flush=True)
    manifest = {"version": 1, "entries": entries}
    OUT.write_text(json.dumps(manifest, indent=2, ensure_ascii=False) + "\n",
                   encoding="utf-8")
    print(f"wrote {OUT} with {len(entries)} entries")
    return 0


if __name__ == "__main__":
    sys.exit(main())
