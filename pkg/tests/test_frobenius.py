from fractions import Fraction

import pytest

from groupoid_frobenius import linalg
from groupoid_frobenius.characters import class_frobenius_algebra, push_L, transfer_R, tuple_inclusion
from groupoid_frobenius.frobenius import (DegenerateForm, LinearMap, NotCommAssoc, adjoint_defects,
                                          alpha_element, complete_frobenius, counit_is_unique,
                                          full_report, ground_algebra, group_algebra, identity_map,
                                          interchange_defects, separable_probe, tensor_algebra,
                                          tensor_maps, trace_form, trace_identities, transpose,
                                          truncated_polynomial_algebra, verify_axioms)
from groupoid_frobenius.groupoid import group_groupoid
from groupoid_frobenius.homotopy import commuting_tuple_groupoid
from groupoid_frobenius.scalars import GF, QQ

from support import group, s3

C2_TABLE = [[0, 1], [1, 0]]


def q_c2():
    return group_algebra(C2_TABLE)


def f2_dual_numbers(eps=(1, 1)):
    return truncated_polynomial_algebra(2, list(eps), GF(2))


def test_group_algebra_completion():
    a = q_c2()
    assert a.eta == (1, 0)
    assert a.psi[0] == {(0, 0): 1, (1, 1): 1}
    assert a.psi[1] == {(0, 1): 1, (1, 0): 1}
    assert verify_axioms(a) == []


def test_dual_numbers_over_f2():
    a = f2_dual_numbers()
    assert [[int(x) for x in row] for row in a.gram] == [[1, 1], [1, 0]]
    assert verify_axioms(a) == []
    with pytest.raises(DegenerateForm):
        f2_dual_numbers((1, 0))


def test_noncommutative_data_is_rejected():
    mu = [[{0: 1}, {1: 1}], [{1: 1}, {0: 2}]]
    mu[0][1] = {1: 1}
    mu[1][0] = {0: 1}
    with pytest.raises(NotCommAssoc):
        complete_frobenius(2, mu, [1, 0])


def test_mutated_comultiplication_fails_axioms():
    a = q_c2()
    psi = [dict(d) for d in a.psi]
    psi[1][(1, 0)] = Fraction(2)
    bad = a.with_psi(psi)
    report = verify_axioms(bad)
    assert report
    assert interchange_defects(bad)


def test_one_dimensional_algebra():
    a = ground_algebra()
    assert verify_axioms(a) == []
    assert trace_form(a) == (1,)
    assert alpha_element(a) == (1,)
    probe = separable_probe(a)
    assert probe.theta_nondegenerate and not probe.has_nilpotent


def test_transpose_examples():
    a = q_c2()
    ident = identity_map(a)
    assert transpose(ident).equals(ident)
    f = LinearMap([[1, 2], [3, 5]], a, a)
    assert transpose(transpose(f)).equals(f)


def test_transpose_of_restriction_is_transfer():
    big = s3()
    sub = sorted(next(s for s in big.subgroups() if len(s) == 2))
    small, emb = big.subgroup(sub)
    gs, gb = group_groupoid(small), group_groupoid(big)
    ts, _ = commuting_tuple_groupoid(gs, 2, 1)
    tb, _ = commuting_tuple_groupoid(gb, 2, 1)
    u = tuple_inclusion(gs, ts, gb, tb, emb)
    a_small, a_big = class_frobenius_algebra(ts), class_frobenius_algebra(tb)
    # restriction of class functions has matrix L(u)^T
    restrict = LinearMap(linalg.transpose(push_L(u)), a_big, a_small)
    assert [list(r) for r in transpose(restrict).matrix] == linalg.transpose(transfer_R(u))


def test_trace_forms():
    assert trace_form(q_c2()) == (2, 0)
    assert all(x == 0 for x in trace_form(f2_dual_numbers()))
    assert all(x == 0 for x in trace_form(f2_dual_numbers((0, 1))))


def test_alpha_examples():
    assert alpha_element(q_c2()) == (2, 0)
    t, _ = commuting_tuple_groupoid(group_groupoid(s3()), 3, 1)
    assert alpha_element(class_frobenius_algebra(t)) == (6, 3)


def test_trace_identities():
    assert trace_identities(q_c2()) == []
    a = f2_dual_numbers()
    assert trace_identities(a) == []
    assert all(x == 0 for x in alpha_element(a))


def test_separable_probe():
    probe = separable_probe(q_c2())
    assert probe.theta_nondegenerate and not probe.has_nilpotent
    probe = separable_probe(f2_dual_numbers())
    assert not probe.theta_nondegenerate and probe.has_nilpotent
    assert [[int(x) for x in v] for v in probe.radical_basis] == [[0, 1]]
    # semisimple in characteristic 2 even though theta(1) = 2 = 0 fails there
    probe = separable_probe(group_algebra([[0, 1, 2], [1, 2, 0], [2, 0, 1]], GF(2)))
    assert probe.theta_nondegenerate and not probe.has_nilpotent


def test_adjoints_and_uniqueness():
    for a in (q_c2(), f2_dual_numbers(), ground_algebra(), group_algebra(group("C2xC2").table)):
        assert adjoint_defects(a) == []
        assert counit_is_unique(a)
        assert full_report(a) == []


def test_tensor_transposes():
    a = q_c2()
    ab = tensor_algebra(a, a)
    assert verify_axioms(ab) == []
    f = LinearMap([[1, 1], [0, 3]], a, a)
    g = LinearMap([[2, 0], [1, 1]], a, a)
    left = transpose(tensor_maps(f, g, ab, ab))
    right = tensor_maps(transpose(f), transpose(g), ab, ab)
    assert left.equals(right)


def test_ring_maps_are_module_maps():
    # restriction along C2 ≤ S3 on class functions of the p-loop groupoids
    big = s3()
    sub = sorted(next(s for s in big.subgroups() if len(s) == 2))
    small, emb = big.subgroup(sub)
    gs, gb = group_groupoid(small), group_groupoid(big)
    ts, _ = commuting_tuple_groupoid(gs, 2, 1)
    tb, _ = commuting_tuple_groupoid(gb, 2, 1)
    u = tuple_inclusion(gs, ts, gb, tb, emb)
    a_small, a_big = class_frobenius_algebra(ts), class_frobenius_algebra(tb)
    f = LinearMap(linalg.transpose(push_L(u)), a_big, a_small)
    ft = transpose(f)

    def apply(m, x):
        return dict(enumerate(linalg.matvec([list(r) for r in m.matrix], [x.get(i, 0) for i in range(m.source.dim)])))

    for i in range(a_big.dim):
        for j in range(a_small.dim):
            x, y = a_big.basis(i), a_small.basis(j)
            left = a_big.dense(apply(ft, a_small.multiply(apply(f, x), y)))
            right = a_big.dense(a_big.multiply(x, apply(ft, y)))
            assert left == right


def test_field_tags():
    assert q_c2().field == QQ
    assert f2_dual_numbers().field == GF(2)
