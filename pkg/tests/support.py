"""Shared test data: a small zoo of groups and groupoids, and helpers."""

from __future__ import annotations

from itertools import product as iproduct

from groupoid_frobenius.groupoid import (GroupoidFunctor, compose_functors, coproduct,
                                         group_groupoid, indiscrete_groupoid, product,
                                         validate_functor)
from groupoid_frobenius.groups import (abelian, alternating, cyclic, dihedral, quaternion,
                                       symmetric, trivial_group)
from groupoid_frobenius.homotopy import enumerate_functors


def s3():
    return symmetric(3)


GROUPS = {
    "C1": trivial_group,
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "C4": lambda: cyclic(4),
    "C2xC2": lambda: abelian(2, 2),
    "S3": s3,
    "D4": lambda: dihedral(4),
    "Q8": quaternion,
    "A4": lambda: alternating(4),
}

# groups named in the Frobenius/Euler acceptance items
ACCEPTANCE_GROUPS = ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"]


def group(name: str):
    return GROUPS[name]()


def gg(name: str):
    return group_groupoid(group(name))


def small_groupoids():
    """Groupoids with at most a few objects, built as sums of indiscrete × group."""
    out = {}
    for gname in ["C1", "C2", "C3", "S3"]:
        out[gname] = gg(gname)
    out["ind2"] = indiscrete_groupoid(2)
    out["ind2xC2"] = product(indiscrete_groupoid(2), gg("C2"))[0]
    out["C2+C3"] = coproduct(gg("C2"), gg("C3"))[0]
    out["C2+ind2"] = coproduct(gg("C2"), indiscrete_groupoid(2))[0]
    out["C1+C2"] = coproduct(gg("C1"), gg("C2"))[0]
    return out


def functors_between(g, h, limit: int = 64):
    """Up to ``limit`` functors ``g → h`` in enumeration order."""
    return [GroupoidFunctor(g, h, o, m) for o, m in enumerate_functors(g, h)[:limit]]


def generated_functors(limit_per_pair: int = 4):
    """A deterministic spread of functors between the small groupoids."""
    zoo = small_groupoids()
    names = sorted(zoo)
    out = []
    for a, b in iproduct(names, repeat=2):
        fs = functors_between(zoo[a], zoo[b])
        step = max(1, len(fs) // limit_per_pair)
        out.extend(fs[::step][:limit_per_pair])
    for u in out:
        assert not validate_functor(u)
    return out


def diagonal(g):
    """``ψ: G → G×G`` for a one-object groupoid."""
    square, _, _ = product(g, g)
    n = g.morphism_count
    return GroupoidFunctor(g, square, (0,), [x * n + x for x in g.morphisms])


def then(*functors):
    """Diagrammatic composite ``f1`` then ``f2`` then ..."""
    result = functors[0]
    for f in functors[1:]:
        result = compose_functors(result, f)
    return result
