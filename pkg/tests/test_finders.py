"""Cross-cutting finder properties: soundness against the oracle, witness validity, relabelling."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import C5

from gallai.certificates import validate_certificate
from gallai.claw import cut_triangle
from gallai.finders import FINDERS, find_gallai
from gallai.generators import random_class_graph
from gallai.oracle import gallai_vertices
from gallai.pattern import ClassLabel, find_induced, in_class

LABELS = list(ClassLabel)


@pytest.fixture(scope="module")
def members(connected_upto):
    return {label: [g for g in connected_upto(7) if in_class(g, label)] for label in LABELS}


@pytest.mark.parametrize("label", LABELS)
def test_sound_and_certified_upto_7(label, members):
    assert members[label]
    for g in members[label]:
        res = FINDERS[label](g)
        assert res.vertex in gallai_vertices(g), (label, g, res)
        assert validate_certificate(g, res.witness), (label, g, res)


@pytest.mark.parametrize("label", LABELS)
def test_fallbacks_fire_only_without_their_trigger(label, members):
    for g in members[label]:
        res = FINDERS[label](g)
        if res.branch in ("MaxDegreeFallback", "NearMaxDegreeFallback", "ExpansionMaxDegree"):
            assert find_induced(g, res.witness.absent_pattern) is None
            assert res.vertex == g.max_degree_vertex()
        if res.branch == "DominatingP2P1":
            assert cut_triangle(g) is None
        if res.branch == "PathOrCycle":
            assert find_induced(g, "triangle") is None
        if res.branch == "OracleFallback":
            assert find_induced(g, "K3+P1") is None and find_induced(g, "triangle") is not None


@pytest.mark.parametrize("label", LABELS)
def test_json_certificate_shape(label, members):
    for g in members[label][:50]:
        out = FINDERS[label](g).to_json()
        assert list(out) == ["vertex", "branch", "certificate"]
        assert "type" in out["certificate"]


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(LABELS), st.integers(2, 14), st.integers(0, 2**32), st.data())
def test_relabelled_members_still_get_a_gallai_vertex(label, n, seed, data):
    g = random_class_graph(label, n, seed)
    assert g is not None
    perm = data.draw(st.permutations(range(n)))
    h = g.relabel(perm)
    res = find_gallai(h, label)
    assert res.vertex in gallai_vertices(h)
    assert validate_certificate(h, res.witness)


def test_find_gallai_accepts_cli_names():
    assert find_gallai(C5, "p5-triangle").vertex == 0
