"""Grading group arithmetic: normal forms, windows, embeddings."""

import pytest
from hypothesis import given, strategies as st

from wplrec.grading import (
    EmbeddingSpec,
    GradingElement,
    HeightWindow,
    WeightSequence,
    cvec,
    element_str,
    embed,
    enumerate_window,
    normalize,
    parse_element,
    preimage,
    torsion_classes,
    xgen,
    zero,
)

P235 = WeightSequence((2, 3, 5))
P232 = WeightSequence((2, 3, 2))


def test_normal_form_carries():
    assert normalize(P235, (2, 0, 0), 0) == GradingElement(P235, (0, 0, 0), 1)
    assert normalize(P235, (0, 4, 0), 0) == GradingElement(P235, (0, 1, 0), 1)


def test_normal_form_negative_coordinate():
    l = normalize(P235, (0, 0, -1), 0)
    assert l == GradingElement(P235, (0, 0, 4), -1)
    # oracle: adding x_3 back must normalize to zero
    assert (l + xgen(P235, 2)).is_zero()


def test_add_relation_and_identity():
    x1 = xgen(P235, 0)
    assert x1 + x1 == cvec(P235)
    l = GradingElement(P235, (1, 2, 4), -2)
    assert l + zero(P235) == l


def test_neg_heights():
    # height(-a) = -height(a) - #nonzero torsion coords
    l = GradingElement(P235, (1, 0, 3), 0)
    assert (-l).height == -2
    assert (l + (-l)).is_zero()


@st.composite
def elements(draw, p=P235):
    tor = tuple(draw(st.integers(-6, 6)) for _ in p)
    h = draw(st.integers(-4, 4))
    return normalize(p, tor, h)


@given(elements(), elements(), elements())
def test_group_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + zero(P235) == a
    assert (a + (-a)).is_zero()
    assert a - b == a + (-b)


@given(elements())
def test_normalize_is_idempotent(l):
    assert normalize(P235, l.torsion, l.height) == l


def test_element_str_roundtrip():
    l = GradingElement(P235, (1, 2, 4), -3)
    assert parse_element(P235, element_str(l)) == l


def test_enumerate_window_counts():
    assert len(enumerate_window(P235, HeightWindow(0, 0))) == 30
    assert len(enumerate_window(WeightSequence((2, 2)), HeightWindow(-1, 1))) == 12


def test_enumerate_window_distinct_and_normalized():
    elems = enumerate_window(P235, HeightWindow(-2, 2))
    assert len(set(elems)) == len(elems)
    for l in elems:
        assert normalize(P235, l.torsion, l.height) == l
    assert len(elems) == 30 * 5


def test_torsion_classes_count():
    assert len(torsion_classes(P235)) == 30


EMB = EmbeddingSpec(P232, P235, 2)


def test_embed_values():
    assert embed(EMB, xgen(P232, 2)) == xgen(P235, 2)
    assert embed(EMB, cvec(P232)) == cvec(P235)


def test_embed_is_not_a_homomorphism():
    x3p = xgen(P232, 2)
    lhs = embed(EMB, x3p + x3p)        # embed(c') = c
    rhs = embed(EMB, x3p) + embed(EMB, x3p)
    assert lhs == cvec(P235)
    assert rhs == GradingElement(P235, (0, 0, 2), 0)
    assert lhs != rhs


def test_preimage_cases():
    assert preimage(EMB, GradingElement(P235, (0, 0, 1), 0)) == xgen(P232, 2)
    assert preimage(EMB, GradingElement(P235, (0, 0, 3), 0)) is None


@given(elements(p=P232))
def test_preimage_after_embed_is_identity(lp):
    assert preimage(EMB, embed(EMB, lp)) == lp


@given(elements(p=P235))
def test_embed_after_preimage_when_defined(l):
    pre = preimage(EMB, l)
    if l.torsion[2] < P232[2]:
        assert pre is not None and embed(EMB, pre) == l
    else:
        assert pre is None


def test_embed_injective_on_window():
    seen = {}
    for lp in enumerate_window(P232, HeightWindow(-2, 2)):
        img = embed(EMB, lp)
        assert img not in seen
        seen[img] = lp


def test_weight_sequence_validation():
    with pytest.raises(ValueError):
        WeightSequence((2, 0, 5))
    with pytest.raises(ValueError):
        WeightSequence(())


def test_window_operations():
    w = HeightWindow(-3, 6)
    assert w.contains(0) and not w.contains(7)
    assert w.shrink(1, 1) == HeightWindow(-2, 5)
    assert w.intersect(HeightWindow(-1, 9)) == HeightWindow(-1, 6)
    with pytest.raises(Exception):
        HeightWindow(2, 1)
