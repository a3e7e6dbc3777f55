from fractions import Fraction

import pytest

from groupoid_frobenius.groupoid import (Groupoid, GroupoidFunctor, coproduct, discrete_groupoid,
                                         find_natural_iso, functor_properties, group_from_permutations,
                                         group_groupoid, group_hom_functor, hom_set, identity_functor,
                                         indiscrete_groupoid, is_isomorphism, pi0, product, skeleton,
                                         connected_split, split_isomorphism, terminal_groupoid,
                                         validate_functor, validate_groupoid, validate_natural_iso,
                                         cardinality, subgroup_inclusion)
from groupoid_frobenius.groups import NotAGroup, FiniteGroup, cyclic, symmetric
from groupoid_frobenius.homotopy import homotopy_pullback, loop_groupoid

from support import gg, s3, small_groupoids


def test_cyclic_two_is_valid():
    g = gg("C2")
    assert g.object_count == 1 and g.morphism_count == 2
    assert validate_groupoid(g) == []


def test_wrong_endpoint_is_reported():
    g = indiscrete_groupoid(2)
    table = dict(g.table)
    # send (0->1 then 1->0) to the identity at 1 instead of 0
    f01 = g.hom(0, 1)[0]
    f10 = g.hom(1, 0)[0]
    table[(f01, f10)] = g.identity_of[1]
    bad = Groupoid(2, g.src, g.dst, g.identity_of, g.inverse_of, table)
    kinds = [line.split(":")[0] for line in validate_groupoid(bad)]
    assert "composition endpoint" in kinds


def test_symmetric_group_from_permutations():
    g = group_from_permutations([[2, 1, 3], [2, 3, 1]])
    assert g.morphism_count == 6
    assert validate_groupoid(g) == []


def test_cayley_table_checks():
    assert group_groupoid([[0, 1], [1, 0]]).morphism_count == 2
    with pytest.raises(NotAGroup):
        FiniteGroup([[0, 1], [1, 1]])
    # a loop that is not associative: identity 0, every element self-inverse
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup, match="associativity"):
        FiniteGroup(table)


def test_discrete_and_indiscrete():
    d = discrete_groupoid(3)
    assert (d.object_count, d.morphism_count) == (3, 3)
    i = indiscrete_groupoid(2)
    assert (i.object_count, i.morphism_count) == (2, 4)
    one_a, one_b = indiscrete_groupoid(1), discrete_groupoid(1)
    assert (one_a.object_count, one_a.morphism_count) == (one_b.object_count, one_b.morphism_count)
    assert validate_groupoid(i) == [] and validate_groupoid(d) == []


def test_products_and_coproducts():
    p, pg, ph = product(gg("C2"), gg("C2"))
    assert (p.object_count, p.morphism_count) == (1, 4)
    assert validate_functor(pg) == [] and validate_functor(ph) == []
    c, inj = coproduct(gg("C2"), gg("C3"))
    assert (c.object_count, c.morphism_count) == (2, 5)
    assert all(validate_functor(f) == [] for f in inj)
    unit, proj, _ = product(s3_groupoid(), terminal_groupoid())
    assert is_isomorphism(proj)


def s3_groupoid():
    return group_groupoid(s3())


def test_pi0_examples():
    t = pi0(s3_groupoid())
    assert (t.class_count, t.aut_order) == (1, (6,))
    t = pi0(indiscrete_groupoid(4))
    assert (t.class_count, t.aut_order) == (1, (1,))
    lam, _ = loop_groupoid(s3_groupoid())
    assert sorted(pi0(lam).aut_order) == [2, 3, 6]


def test_pi0_representatives_are_least():
    for g in small_groupoids().values():
        t = pi0(g)
        for c, r in enumerate(t.representative):
            assert t.class_of[r] == c
            assert r == min(t.members(c))
            assert t.aut_order[c] == len(g.vertex_group(r))


def test_hom_sets():
    assert len(hom_set(gg("C2"), 0, 0)) == 2
    assert hom_set(discrete_groupoid(2), 0, 1) == []
    lam, _ = loop_groupoid(s3_groupoid())
    group = s3()
    e = lam.object_index((0, group.identity))
    transposition = next(x for x in range(6) if group.element_order(x) == 2)
    assert hom_set(lam, e, lam.object_index((0, transposition))) == []


def test_functor_properties_examples():
    flags = functor_properties(identity_functor(s3_groupoid()))
    assert flags.full and flags.faithful and flags.essentially_surjective and flags.equivalence
    group = s3()
    sub = next(s for s in group.subgroups() if len(s) == 2)
    _, inc = subgroup_inclusion(group, sorted(sub))
    flags = functor_properties(inc)
    assert flags.faithful and not flags.full and flags.essentially_surjective and not flags.equivalence
    ind = indiscrete_groupoid(2)
    to_point = GroupoidFunctor(ind, terminal_groupoid(), (0, 0), (0,) * 4)
    assert functor_properties(to_point).equivalence


def test_natural_isos():
    g = s3_groupoid()
    ident = identity_functor(g)
    same = find_natural_iso(ident, ident)
    assert same.component == (g.identity_of[0],)
    group = s3()
    for k in range(6):
        images = [group.conj(k, x) for x in range(6)]
        conj = group_hom_functor(g, g, images)
        iso = find_natural_iso(ident, conj)
        assert iso is not None and validate_natural_iso(iso) == []
    c2 = gg("C2")
    trivial = group_hom_functor(c2, c2, [0, 0])
    assert find_natural_iso(trivial, identity_functor(c2)) is None


def test_skeleton_examples():
    assert skeleton(indiscrete_groupoid(3)).skeletal.object_count == 1
    lam, _ = loop_groupoid(gg("C2"))
    sk = skeleton(lam).skeletal
    assert sk.object_count == 2 and [len(sk.vertex_group(a)) for a in sk.objects] == [2, 2]
    group = s3()
    sub = sorted(next(s for s in group.subgroups() if len(s) == 2))
    _, u = subgroup_inclusion(group, sub)
    v = GroupoidFunctor(u.source, u.target, u.object_map, u.morphism_map)
    hp = homotopy_pullback(u, v)
    sk = skeleton(hp.groupoid).skeletal
    assert sorted(len(sk.vertex_group(a)) for a in sk.objects) == [1, 2]


def test_skeleton_witness_and_inverse():
    for g in small_groupoids().values():
        sk = skeleton(g)
        assert validate_natural_iso(sk.witness) == []
        back = sk.inclusion.then(sk.retraction)
        assert back.same_as(identity_functor(sk.skeletal))
        assert functor_properties(sk.inclusion).equivalence


def test_connected_split_examples():
    (piece,) = connected_split(indiscrete_groupoid(2))
    assert piece.size == 2 and len(piece.vertex_group) == 1
    (piece,) = connected_split(s3_groupoid())
    assert piece.size == 1 and len(piece.vertex_group) == 6
    lam, _ = loop_groupoid(s3_groupoid())
    shapes = sorted((p.size, len(p.vertex_group)) for p in connected_split(lam))
    assert shapes == [(1, 6), (2, 3), (3, 2)]
    iso = split_isomorphism(lam)
    assert validate_functor(iso) == [] and is_isomorphism(iso)


def test_cardinality():
    assert cardinality(s3_groupoid()) == Fraction(1, 6)
    assert cardinality(indiscrete_groupoid(5)) == 1
    assert cardinality(discrete_groupoid(3)) == 3


def test_cyclic_group_orders():
    g = cyclic(6)
    assert sorted(g.element_order(x) for x in range(6)) == [1, 2, 3, 3, 6, 6]
    assert len(symmetric(4).conjugacy_classes()) == 5
