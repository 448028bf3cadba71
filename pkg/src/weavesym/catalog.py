"""Bundled design catalog and its verification.

The manifest records, for each catalogued item, the repeating block and
the classification it is expected to produce.  ``verify_catalog`` runs
the full pipeline over every entry and compares; ``catalog_stats``
summarises group frequencies the way a survey table would.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .classify import classify
from .design import Design

MANIFEST_RESOURCE = "data/catalog/manifest.json"


def has_glide(plane_symbol: str) -> bool:
    """Whether the side-preserving-or-not group forces glide reflections.

    True when the symbol contains a g, or is centred (a centred mirror
    class always carries interleaved glides).
    """
    return "g" in plane_symbol or plane_symbol.startswith("c")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    name: str
    item_type: str
    design: Design
    expected_pair: str
    expected_layer: str
    has_glide: bool
    synthetic: bool

    @classmethod
    def from_json(cls, obj: dict) -> "CatalogEntry":
        d = obj["design"]
        design = Design.from_strings(d["rows"])
        if design.width != d["width"] or design.height != d["height"]:
            raise ValueError(f"entry {obj['id']}: design size mismatch")
        return cls(
            id=obj["id"],
            name=obj["name"],
            item_type=obj["itemType"],
            design=design,
            expected_pair=obj["expectedPair"],
            expected_layer=obj["expectedLayer"],
            has_glide=obj["hasGlide"],
            synthetic=obj["synthetic"],
        )


def load_manifest(path=None) -> list[CatalogEntry]:
    """Entries from an explicit manifest file, or the bundled one."""
    if path is None:
        text = resources.files("weavesym").joinpath(MANIFEST_RESOURCE).read_text("utf-8")
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    obj = json.loads(text)
    if obj.get("version") != 1:
        raise ValueError("unsupported manifest version")
    entries = [CatalogEntry.from_json(e) for e in obj["entries"]]
    ids = [e.id for e in entries]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate entry ids in manifest")
    return entries


def verify_entry(entry: CatalogEntry) -> dict:
    cls = classify(entry.design)
    computed_pair = cls.pair_descriptor
    computed_layer = cls.layer_symbol
    computed_glide = has_glide(cls.plane_group_s)
    ok = (computed_pair == entry.expected_pair
          and computed_layer == entry.expected_layer
          and computed_glide == entry.has_glide)
    return {
        "id": entry.id,
        "ok": ok,
        "expectedPair": entry.expected_pair,
        "expectedLayer": entry.expected_layer,
        "computedPair": computed_pair,
        "computedLayer": computed_layer,
        "hasGlide": computed_glide,
        "provisional": cls.provisional,
        "itemType": entry.item_type,
    }


def verify_catalog(entries) -> dict:
    reports = [verify_entry(e) for e in entries]
    return {
        "total": len(reports),
        "failures": [r for r in reports if not r["ok"]],
        "reports": reports,
    }


def catalog_stats(entries) -> dict:
    """Survey-style summary, computed from the pipeline (not the
    stored expectations)."""
    reports = [verify_entry(e) for e in entries]
    layers: dict[str, int] = {}
    types: dict[str, int] = {}
    glide = 0
    fourfold = 0
    for r in reports:
        layers[r["computedLayer"]] = layers.get(r["computedLayer"], 0) + 1
        types[r["itemType"]] = types.get(r["itemType"], 0) + 1
        if r["hasGlide"]:
            glide += 1
        if r["provisional"]:
            fourfold += 1
    basket = types.get("basket", 0)
    return {
        "total": len(reports),
        "basket": basket,
        "nonBasket": len(reports) - basket,
        "itemTypes": dict(sorted(types.items())),
        "layerCounts": dict(sorted(layers.items(), key=lambda kv: (-kv[1], kv[0]))),
        "distinctLayers": len(layers),
        "glide": glide,
        "fourfold": fourfold,
    }
