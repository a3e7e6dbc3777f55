"""Rational class functions on groupoids and their Frobenius structure.

``C(G)`` is the rational vector space on the isomorphism classes of ``G``,
with inner product ``([a], [b]) = |G(a, b)|``.  Its dual, the class functions,
is a Frobenius algebra under pointwise product with counit
``eps(f) = sum f(a) / |G(a)|``.  Push-forward ``L`` and transfer ``R`` are
adjoint with respect to these forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .frobenius import (FrobeniusAlgebra, alpha_element, complete_frobenius, trace_form)
from .groupoid import (Groupoid, GroupoidFunctor, IsoClassTable, SizeCap, build_groupoid,
                       cardinality, group_groupoid, pi0, vertex_group_as_group)
from .groups import FiniteGroup, is_power_of
from .homotopy import (CommutativeSquare, commuting_tuple_groupoid, is_homotopy_cartesian,
                       p_loop_groupoid)
from .scalars import QQ


class NotHomotopyCartesian(ValueError):
    pass


def _as_groupoid(g) -> Groupoid:
    if isinstance(g, Groupoid):
        return g
    return group_groupoid(g)


# ---------------------------------------------------------------- class vectors

@dataclass(frozen=True)
class ClassVector:
    """Element of ``C(G)`` in the basis ``[a]``."""

    base: IsoClassTable
    coords: tuple

    @property
    def primed(self) -> tuple:
        """Coordinates in the basis ``[a]' = [a] / |G(a)|``."""
        return tuple(c * k for c, k in zip(self.coords, self.base.aut_order))


@dataclass(frozen=True)
class ClassFunction:
    base: IsoClassTable
    values: tuple

    def __call__(self, c: int):
        return self.values[c]


# ---------------------------------------------------------------- L and R

def gram_matrix(g: Groupoid) -> list[list[Fraction]]:
    """``([a], [b]) = |G(a, b)|`` on class representatives."""
    t = pi0(g)
    reps = t.representative
    return [[Fraction(len(g.hom(a, b))) for b in reps] for a in reps]


def push_L(u: GroupoidFunctor) -> list[list[Fraction]]:
    """``C(G) → C(H)``, ``[a] ↦ [u(a)]``; rows are classes of ``H``."""
    tg, th = pi0(u.source), pi0(u.target)
    m = linalg.zeros(th.class_count, tg.class_count)
    for c, a in enumerate(tg.representative):
        m[th.class_of[u.obj(a)]][c] = Fraction(1)
    return m


def transfer_R(u: GroupoidFunctor) -> list[list[Fraction]]:
    """``C(H) → C(G)``, ``[b]' ↦ sum over [a] with u(a) ≅ b of [a]'``."""
    tg, th = pi0(u.source), pi0(u.target)
    m = linalg.zeros(tg.class_count, th.class_count)
    for c, a in enumerate(tg.representative):
        d = th.class_of[u.obj(a)]
        m[c][d] = Fraction(th.aut_order[d], tg.aut_order[c])
    return m


def adjointness_defect(u: GroupoidFunctor) -> list[list[Fraction]]:
    """``Gram_G · R(u) − L(u)^T · Gram_H``; zero exactly."""
    left = linalg.matmul(gram_matrix(u.source), transfer_R(u))
    right = linalg.matmul(linalg.transpose(push_L(u)), gram_matrix(u.target))
    return linalg.matsub(left, right)


def mackey_residual(sq: CommutativeSquare, cap: SizeCap | None = None,
                    check_cartesian: bool = True) -> list[list[Fraction]]:
    """``R(u)·L(v) − L(t)·R(s)`` as a matrix ``C(K) → C(G)``.

    The square is ``t: F→G, s: F→K, u: G→H, v: K→H``; it must be
    homotopy-cartesian.
    """
    if check_cartesian and not is_homotopy_cartesian(sq, cap).cartesian:
        raise NotHomotopyCartesian("square is not homotopy-cartesian")
    around = linalg.matmul(transfer_R(sq.u), push_L(sq.v))
    through = linalg.matmul(push_L(sq.t), transfer_R(sq.s))
    return linalg.matsub(around, through)


# ---------------------------------------------------------------- class algebras

def class_frobenius_algebra(k: Groupoid) -> FrobeniusAlgebra:
    """Class functions on ``k`` with indicator basis and ``eps(e_c) = 1/|aut c|``."""
    t = pi0(k)
    n = t.class_count
    mu = [[({i: 1} if i == j else {}) for j in range(n)] for i in range(n)]
    eps = [Fraction(1, a) for a in t.aut_order]
    labels = [k.object_labels[r] for r in t.representative]
    return complete_frobenius(n, mu, eps, QQ, labels)


@dataclass(frozen=True, eq=False)
class CharacterModel:
    group: Groupoid
    p: int
    n: int
    tuples: Groupoid
    classes: IsoClassTable
    algebra: FrobeniusAlgebra
    alpha_prime: ClassFunction


def morava_character_model(g, p: int, n: int, cap: SizeCap | None = None) -> CharacterModel:
    """Class functions on the groupoid of commuting ``n``-tuples of p-elements."""
    g = _as_groupoid(g)
    t, _ = commuting_tuple_groupoid(g, p, n, cap)
    classes = pi0(t)
    algebra = class_frobenius_algebra(t)
    alpha_prime = ClassFunction(classes, tuple(Fraction(a) for a in classes.aut_order))
    if alpha_element(algebra) != alpha_prime.values:
        raise ArithmeticError("alpha differs from the automorphism orders")
    return CharacterModel(g, p, n, t, classes, algebra, alpha_prime)


def tg_form_check(model: CharacterModel) -> list[str]:
    """``eps(x) = theta(x / alpha')`` on every basis vector."""
    theta = trace_form(model.algebra)
    report = []
    for c, (e, a) in enumerate(zip(model.algebra.eps, model.alpha_prime.values)):
        if e != theta[c] / a:
            report.append(f"eps(e{c}) = {e} but theta(e{c}/alpha') = {theta[c] / a}")
    return report


# ---------------------------------------------------------------- transfer formula

def tuple_inclusion(sub: Groupoid, sub_tuples: Groupoid, big: Groupoid, big_tuples: Groupoid,
                    embedding: Sequence[int]) -> GroupoidFunctor:
    """Functor between tuple groupoids induced by a subgroup inclusion."""
    obj = [big_tuples.object_index((0, tuple(embedding[x] for x in tp)))
           for (_, tp) in sub_tuples.object_labels]
    mor = []
    for f in sub_tuples.morphisms:
        s, d, k = sub_tuples.morphism_labels[f]
        mor.append(big_tuples.morphism_index((big_tuples.object_labels[obj[sub_tuples.src[f]]],
                                              big_tuples.object_labels[obj[sub_tuples.dst[f]]],
                                              embedding[k])))
    return GroupoidFunctor(sub_tuples, big_tuples, obj, mor)


def hkr_transfer_check(big: FiniteGroup, sub_elements: Sequence[int], p: int, n: int,
                       cap: SizeCap | None = None) -> list[str]:
    """Compare the dual of ``R(u)`` with the coset-sum formula.

    For each class function ``x`` on ``G``-tuples and each ``H``-tuple ``λ``:
    ``((Ru)^* x)(λ) = (1/|G|) sum over h in H with h⁻¹λh ⊂ G of x([h⁻¹λh])``.
    """
    sub, emb = big.subgroup(sub_elements, "G")
    gg, hh = group_groupoid(sub), group_groupoid(big)
    tg, _ = commuting_tuple_groupoid(gg, p, n, cap)
    th, _ = commuting_tuple_groupoid(hh, p, n, cap)
    u = tuple_inclusion(gg, tg, hh, th, emb)
    r = transfer_R(u)
    cg, ch = pi0(tg), pi0(th)
    back = {x: i for i, x in enumerate(emb)}
    report = []
    for lam_class, rep in enumerate(ch.representative):
        lam = th.object_labels[rep][1]
        brute = [Fraction(0)] * cg.class_count
        for h in range(len(big)):
            hinv = big.inv(h)
            conj = tuple(big.mul(big.mul(hinv, x), h) for x in lam)
            if all(y in back for y in conj):
                obj = tg.object_index((0, tuple(back[y] for y in conj)))
                brute[cg.class_of[obj]] += Fraction(1, len(sub))
        # column of R gives, for the indicator x of class c, x(R[λ])
        formula = [r[c][lam_class] for c in range(cg.class_count)]
        if formula != brute:
            report.append(f"transfer mismatch at H-class {lam_class}: {formula} vs {brute}")
    return report


# ---------------------------------------------------------------- Euler data

@dataclass(frozen=True)
class EulerData:
    chi: Fraction
    recursion_value: Fraction
    recursion_ok: bool


def euler_data(g, p: int, n: int, cap: SizeCap | None = None) -> EulerData:
    """Cardinality of the ``n``-tuple groupoid against ``n−1`` tuples over p-loops."""
    g = _as_groupoid(g)
    t, _ = commuting_tuple_groupoid(g, p, n, cap)
    chi = cardinality(t)
    loops = p_loop_groupoid(g, p)
    smaller, _ = commuting_tuple_groupoid(loops, p, n - 1, cap)
    value = cardinality(smaller)
    return EulerData(chi, value, chi == value)


def brute_force_chi(group: FiniteGroup, p: int, n: int) -> Fraction:
    """``|commuting n-tuples of p-elements| / |G|``."""
    elems = group.p_elements(p)
    tuples = [()]
    for _ in range(n):
        tuples = [tp + (y,) for tp in tuples for y in elems
                  if all(group.mul(x, y) == group.mul(y, x) for x in tp)]
    return Fraction(len(tuples), len(group))


# ---------------------------------------------------------------- abelian subgroups

def ag_groupoid(g, p: int, cap: SizeCap | None = None) -> tuple[Groupoid, ClassFunction]:
    """Pairs ``(a, A)`` with ``A`` an abelian p-subgroup of ``G(a)``.

    ``k: a → b`` sends ``(a, A)`` to ``(b, k A k⁻¹)``.  The class function
    returned is ``alpha'(a, A) = |Z_{G(a)}(A)|``, the centraliser order (not
    the automorphism order, which is the normaliser).
    """
    g = _as_groupoid(g)
    objects = []
    for a in g.objects:
        grp, emb = vertex_group_as_group(g, a)
        for s in grp.subgroups():
            sub, _ = grp.subgroup(sorted(s))
            if sub.is_abelian() and is_power_of(len(s), p):
                objects.append((a, frozenset(emb[x] for x in s)))

    def arrows(x):
        a, sub = x
        for k in g.out_of(a):
            ki = g.inverse(k)
            yield k, (g.dst[k], frozenset(g.then(ki, m, k) for m in sub))

    ag = build_groupoid(objects, arrows, g.compose, lambda x: g.identity(x[0]), g.inverse,
                        name=f"A{g.name}", cap=cap)
    classes = pi0(ag)
    values = []
    for r in classes.representative:
        a, sub = ag.object_labels[r]
        values.append(Fraction(sum(1 for k in g.vertex_group(a)
                                   if all(g.compose(k, m) == g.compose(m, k) for m in sub))))
    return ag, ClassFunction(classes, tuple(values))
