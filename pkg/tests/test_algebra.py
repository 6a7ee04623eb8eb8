"""Coordinate algebra components: monomial bases, actions, relations."""

import random

import pytest

from wplrec.algebra import (
    AlgebraSpec,
    component_basis,
    component_dim,
    core_algebra,
    core_basis,
    default_lambda,
    generator_action,
    normalize_point,
    parse_point,
    point_str,
    power_action,
    spec_with_weights,
)
from wplrec.grading import (
    GradingElement,
    HeightWindow,
    WeightSequence,
    cvec,
    enumerate_window,
    xgen,
    zero,
)
from wplrec.linalg import Matrix, PrimeField, QQ


P = WeightSequence((2, 3, 5))
S = AlgebraSpec(P, default_lambda(QQ, 3), QQ)
W = HeightWindow(-3, 6)


def test_component_basis_at_canonical_degree():
    b = component_basis(S, cvec(P))
    # {v, u}: ordered by ascending u-exponent
    assert b.dim() == 2
    assert b.monomials == (((0, 0, 0), 0, 1), ((0, 0, 0), 1, 0))


def test_component_basis_single_monomial():
    b = component_basis(S, GradingElement(P, (1, 2, 4), 0))
    assert b.dim() == 1
    assert b.monomials == (((1, 2, 4), 0, 0),)


def test_component_dim_negative_height_is_zero():
    assert component_dim(S, GradingElement(P, (0, 0, 0), -1)) == 0


def test_dim_formula_on_window():
    for l in enumerate_window(P, W):
        expect = l.height + 1 if l.height >= 0 else 0
        assert component_dim(S, l) == expect


def test_x1_action_sends_generator_to_v():
    # lambda_1 = [1:0], so x_1^2 = v; in the basis [v, u] of S_c
    m = generator_action(S, "x1", xgen(P, 0))
    assert m == Matrix.from_rows(QQ, [[QQ.one], [QQ.zero]])


def test_u_action_is_column_selection():
    m = generator_action(S, "u", zero(P))
    assert m == Matrix.from_rows(QQ, [[QQ.zero], [QQ.one]])


def test_actions_commute_on_window():
    for l in enumerate_window(P, HeightWindow(-1, 3)):
        for a in S.generator_names():
            for b in S.generator_names():
                da, db = S.generator_degree(a), S.generator_degree(b)
                lhs = generator_action(S, b, l + da).mul(generator_action(S, a, l))
                rhs = generator_action(S, a, l + db).mul(generator_action(S, b, l))
                assert lhs == rhs, (a, b, l)


def test_defining_relations_on_window():
    for l in enumerate_window(P, HeightWindow(-1, 3)):
        for i, p_i in enumerate(P):
            la0, la1 = S.lam[i]
            chain = power_action(S, f"x{i + 1}", p_i, l)
            lin = generator_action(S, "v", l).scale(la0).sub(
                generator_action(S, "u", l).scale(la1))
            assert chain == lin, (i, l)


def test_core_basis_sizes():
    assert len(core_basis(S)) == 30
    assert core_basis(core_algebra(QQ)) == ((0, 0),)


def test_component_basis_is_core_monomial_times_uv():
    for l in enumerate_window(P, HeightWindow(0, 2)):
        b = component_basis(S, l)
        for t, a, c in b.monomials:
            assert t == l.torsion
            assert a + c == l.height
    # u-exponent runs 0..height with b = height - a
    b = component_basis(S, GradingElement(P, (1, 0, 0), 1))
    assert [(a, c) for _, a, c in b.monomials] == [(0, 1), (1, 0)]


def test_distinct_points_required():
    pts = (parse_point(QQ, "[1:0]"), parse_point(QQ, "[1:0]"),
           parse_point(QQ, "[0:1]"))
    with pytest.raises(ValueError):
        AlgebraSpec(P, pts, QQ)


def test_default_lambda_needs_enough_points():
    with pytest.raises(ValueError):
        default_lambda(PrimeField(2), 4)  # P^1(GF(2)) has only 3 points
    pts = default_lambda(PrimeField(2), 3)
    assert len(set(pts)) == 3


def test_point_parse_roundtrip():
    f = QQ
    pt = parse_point(f, "[2:4]")
    assert pt == normalize_point(f, f.of_int(2), f.of_int(4))
    assert parse_point(f, point_str(f, pt)) == pt
    with pytest.raises(ValueError):
        parse_point(f, "2:4")
    with pytest.raises(ValueError):
        parse_point(f, "[0:0]")


def test_spec_with_weights_keeps_field_and_points():
    s2 = spec_with_weights(S, WeightSequence((2, 3, 2)))
    assert s2.field == S.field and s2.lam == S.lam
    assert tuple(s2.weights) == (2, 3, 2)


def test_finite_field_relations():
    f = PrimeField(7)
    s = AlgebraSpec(P, default_lambda(f, 3), f)
    for l in enumerate_window(P, HeightWindow(0, 2)):
        for i, p_i in enumerate(P):
            la0, la1 = s.lam[i]
            chain = power_action(s, f"x{i + 1}", p_i, l)
            lin = generator_action(s, "v", l).scale(la0).sub(
                generator_action(s, "u", l).scale(la1))
            assert chain == lin
