from fractions import Fraction

import pytest

from groupoid_frobenius.characters import (NotHomotopyCartesian, adjointness_defect, ag_groupoid,
                                           brute_force_chi, class_frobenius_algebra, euler_data,
                                           gram_matrix, hkr_transfer_check, mackey_residual,
                                           morava_character_model, push_L, tg_form_check, transfer_R)
from groupoid_frobenius.frobenius import alpha_element, trace_form, verify_axioms
from groupoid_frobenius.groupoid import (GroupoidFunctor, discrete_groupoid, find_natural_iso,
                                         group_hom_functor, identity_functor,
                                         subgroup_inclusion, terminal_groupoid)
from groupoid_frobenius.homotopy import (CommutativeSquare, homotopy_pullback, loop_groupoid,
                                         p_loop_groupoid, square_from_homotopy_pullback,
                                         square_from_pullback, strict_pullback)

from support import diagonal, gg, group, s3


def s3_inclusions():
    g = s3()
    sub = sorted(next(s for s in g.subgroups() if len(s) == 2))
    _, u = subgroup_inclusion(g, sub)
    _, v = subgroup_inclusion(g, sub)
    return u, GroupoidFunctor(v.source, u.target, v.object_map, v.morphism_map)


def as_ints(m):
    return [[int(x) if x.denominator == 1 else x for x in row] for row in m]


def test_gram_matrices():
    assert gram_matrix(gg("S3")) == [[6]]
    lam, _ = loop_groupoid(gg("S3"))
    assert as_ints(gram_matrix(lam)) == [[6, 0, 0], [0, 2, 0], [0, 0, 3]]
    assert as_ints(gram_matrix(discrete_groupoid(3))) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_push_forward():
    s = gg("S3")
    assert push_L(identity_functor(s)) == [[1]]
    lam, pi = loop_groupoid(s)
    assert push_L(pi) == [[1, 1, 1]]
    u, _ = s3_inclusions()
    assert push_L(u) == [[1]]


def test_transfer():
    s = gg("S3")
    assert transfer_R(identity_functor(s)) == [[1]]
    u, _ = s3_inclusions()
    assert transfer_R(u) == [[3]]
    point_in_c2 = GroupoidFunctor(terminal_groupoid(), gg("C2"), (0,), (0,))
    assert transfer_R(point_in_c2) == [[2]]


def test_adjointness():
    u, _ = s3_inclusions()
    lam, pi = loop_groupoid(gg("S3"))
    for f in (u, pi, identity_functor(gg("Q8"))):
        assert all(x == 0 for row in adjointness_defect(f) for x in row)


def test_mackey_examples():
    u, v = s3_inclusions()
    hp = homotopy_pullback(u, v)
    assert mackey_residual(square_from_homotopy_pullback(hp, u, v)) == [[0]]
    s = gg("S3")
    ident = identity_functor(s)
    sq = CommutativeSquare(ident, ident, ident, ident)
    assert mackey_residual(sq) == [[0]]
    with pytest.raises(NotHomotopyCartesian):
        mackey_residual(square_from_pullback(strict_pullback(u, v), u, v))


def test_mackey_on_loop_square():
    g = gg("S3")
    diag = diagonal(g)
    hp = homotopy_pullback(diag, diag)
    residual = mackey_residual(square_from_homotopy_pullback(hp, diag, diag))
    assert all(x == 0 for row in residual for x in row)


def test_class_algebras():
    a = class_frobenius_algebra(terminal_groupoid())
    assert a.dim == 1 and a.eps == (1,)
    a = class_frobenius_algebra(gg("C2"))
    assert a.eps == (Fraction(1, 2),) and alpha_element(a) == (2,)
    a = class_frobenius_algebra(p_loop_groupoid(gg("S3"), 3))
    assert sum(a.eps) == Fraction(1, 2)
    assert verify_axioms(a) == []


def test_character_models():
    m = morava_character_model(group("C2"), 2, 1)
    assert m.algebra.dim == 2 and m.alpha_prime.values == (2, 2)
    m = morava_character_model(s3(), 3, 1)
    assert m.algebra.dim == 2 and m.alpha_prime.values == (6, 3)
    assert m.algebra.eps == (Fraction(1, 6), Fraction(1, 3))
    m = morava_character_model(s3(), 2, 2)
    assert m.algebra.dim == 4 and m.alpha_prime.values == (6, 2, 2, 2)


def test_tg_forms():
    m = morava_character_model(group("C2"), 2, 1)
    assert trace_form(m.algebra) == tuple(2 * e for e in m.algebra.eps)
    assert tg_form_check(m) == []
    assert tg_form_check(morava_character_model(s3(), 3, 1)) == []
    trivial = morava_character_model(group("C1"), 2, 1)
    assert trivial.algebra.dim == 1 and trivial.alpha_prime.values == (1,)
    assert trace_form(trivial.algebra) == trivial.algebra.eps
    assert tg_form_check(trivial) == []


def test_hkr_examples():
    g = s3()
    c2 = sorted(next(s for s in g.subgroups() if len(s) == 2))
    c3 = sorted(next(s for s in g.subgroups() if len(s) == 3))
    assert hkr_transfer_check(g, c2, 2, 1) == []
    assert hkr_transfer_check(g, c3, 3, 1) == []
    assert hkr_transfer_check(g, list(range(6)), 2, 1) == []


def test_euler_examples():
    for p in (2, 3):
        for n in (1, 2):
            d = euler_data(group("C1"), p, n)
            assert d.chi == 1 and d.recursion_ok
    d = euler_data(s3(), 2, 1)
    assert d.chi == Fraction(2, 3) and d.recursion_ok
    d = euler_data(s3(), 2, 2)
    assert d.chi == Fraction(5, 3) and d.recursion_ok
    assert brute_force_chi(s3(), 2, 2) == Fraction(5, 3)


def test_chi_is_counit_of_unit():
    m = morava_character_model(group("D4"), 2, 2)
    assert sum(m.algebra.eps) == euler_data(group("D4"), 2, 2).chi


def test_ag_examples():
    _, alpha = ag_groupoid(gg("C2"), 2)
    assert alpha.values == (2, 2)
    _, alpha = ag_groupoid(gg("S3"), 2)
    assert alpha.values == (6, 2)
    _, alpha = ag_groupoid(gg("S3"), 3)
    assert alpha.values == (6, 3)


def test_push_forward_is_invariant_under_natural_iso():
    g = gg("S3")
    grp = s3()
    ident = identity_functor(g)
    for k in range(6):
        conj = group_hom_functor(g, g, [grp.conj(k, x) for x in range(6)])
        assert find_natural_iso(ident, conj) is not None
        assert push_L(conj) == push_L(ident) and transfer_R(conj) == transfer_R(ident)
