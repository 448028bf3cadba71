import pytest

from weavesym.classify import classify
from weavesym.design import Design
from weavesym.isometry import MIRROR_DIAG, R90
from weavesym.search import (
    SearchTarget,
    canonical_key,
    iter_blocks,
    iter_candidates,
    parse_layer_target,
    parse_pair_target,
    search,
)


def test_parse_pair_target():
    t = parse_pair_target("p2mg,p2gg")
    assert (t.s, t.s1, t.layer) == ("p2mg", "p2gg", "pbab")
    t = parse_pair_target(" c2mm , - ")
    assert (t.s, t.s1, t.layer) == ("c2mm", "-", "cmm2")
    t = parse_pair_target("pmg,pgg")
    assert (t.s, t.s1) == ("p2mg", "p2gg")
    t = parse_pair_target("p4m,p4g")
    assert (t.s, t.s1, t.layer) == ("p4mm", "p4gm", None)


def test_parse_pair_target_rejects_non_subgroup():
    with pytest.raises(ValueError, match="must be a subgroup of S"):
        parse_pair_target("p1,c2mm")
    with pytest.raises(ValueError, match="must be a subgroup of S"):
        parse_pair_target("c2mm,p1g1")
    with pytest.raises(ValueError):
        parse_pair_target("c2mm")


def test_parse_layer_target():
    t = parse_layer_target("pbab")
    assert (t.s, t.s1, t.layer) == ("p2mg", "p2gg", "pbab")
    t = parse_layer_target("p21/b11")
    assert (t.s, t.s1) == ("p2gg", "p1g1")


def test_iter_blocks_ordered_by_area():
    blocks = list(iter_blocks(4, 4, 8))
    areas = [w * h for w, h in blocks]
    assert areas == sorted(areas)
    assert all(w * h <= 8 for w, h in blocks)
    assert (3, 2) in blocks and (4, 2) in blocks and (3, 3) not in blocks


def test_iter_candidates_skips_translated_copies():
    seen = {d.rows for d in iter_candidates(2, 2)}
    # a single black cell: only the class representative appears
    assert sum(1 for rows in seen
               if sum(r.bit_count() for r in rows) == 1) == 1


def test_canonical_key_identifies_copies():
    d = Design.from_strings(["##..", ".##.", "..##", "#..#"])
    assert canonical_key(d) == canonical_key(d.translated(2, 1))
    assert canonical_key(d) == canonical_key(d.transformed(R90))
    assert canonical_key(d) == canonical_key(d.transformed(MIRROR_DIAG))
    other = Design.from_strings(["##..", "#.#.", "..##", ".#.#"])
    assert canonical_key(d) != canonical_key(other)


def test_search_finds_twill_family():
    results = search(parse_pair_target("p2mg,p2gg"), max_block=(8, 8), limit=1)
    assert len(results) == 1
    design, cls = results[0]
    assert cls.pair_descriptor == "(p2mg, p2gg)"
    assert cls.layer_symbol == "pbab"
    assert classify(design).layer_symbol == "pbab"


def test_search_respects_limit_and_dedups():
    results = search(parse_pair_target("c1m1,p1"), max_block=(8, 8), limit=3)
    assert len(results) == 3
    keys = {canonical_key(d) for d, _ in results}
    assert len(keys) == 3


def test_search_empty_s2_target():
    results = search(parse_pair_target("p1,-"), max_block=(4, 4), limit=2)
    assert len(results) == 2
    for _, cls in results:
        assert cls.s2_empty
        assert cls.plane_group_s == "p1"


def test_search_layer_target():
    results = search(parse_layer_target("p-1"), max_block=(8, 8), limit=1)
    _, cls = results[0]
    assert cls.layer_symbol == "p-1"
    assert cls.pair_descriptor == "(p211, p1)"


def test_search_describe():
    assert SearchTarget("p2mg", "p2gg").describe() == "(p2mg, p2gg)"
