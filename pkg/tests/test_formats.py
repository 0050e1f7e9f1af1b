import json

import pytest

from gainforest.formats import (
    graph_from_json,
    height_from_json,
    load_object,
    object_from_json,
    to_dot,
    to_json,
)
from gainforest.gaingraph import linial
from gainforest.trees import llks_to_coloured


def test_graph_json_round_trip():
    g = linial(4)
    assert graph_from_json(json.loads(json.dumps(to_json(g)))) == g


def test_graph_json_requires_canonical_edges():
    with pytest.raises(ValueError):
        graph_from_json({"vertices": [1, 2], "edges": [{"i": 2, "j": 1, "g": -1}]})


def test_tree_and_coloured_round_trip(fig_llbs):
    assert object_from_json(to_json(fig_llbs)) == fig_llbs
    ct = llks_to_coloured(fig_llbs, 2)
    assert object_from_json(to_json(ct)) == ct


def test_height_json(fig_nbc):
    h = fig_nbc.height
    assert to_json(h) == {"1": 0, "2": 0, "3": 0, "4": 1, "5": 1, "6": 0, "7": 1}
    assert height_from_json(to_json(h)) == h


def test_load_object(tmp_path, fig_llbs):
    p = tmp_path / "t.json"
    p.write_text(json.dumps(to_json(fig_llbs)))
    assert load_object(p) == fig_llbs


def test_dot_output(fig_llbs, fig_nbc):
    dot = to_dot(fig_nbc)
    assert dot.startswith("graph G {") and '4 -- 7 [label="1"]' not in dot and '3 -- 7 [label="1"]' in dot
    tdot = to_dot(fig_llbs)
    assert tdot.startswith("digraph T {") and '4 -> 1 [label="1"]' in tdot
    assert to_dot(fig_llbs) == tdot
    assert "digraph C" in to_dot(llks_to_coloured(fig_llbs, 2))
