"""Homotopy theory of finite groupoids.

Model-structure predicates, homotopy pullbacks, the two factorisations and
their lifts, coverings versus actions, and the loop-type groupoids
(free loops, p-power loops, commuting tuples, functor groupoids).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Hashable, Mapping, Sequence

from .groupoid import (DEFAULT_CAP, Groupoid, GroupoidFunctor, NaturalIso, SizeCap, SizeGuard,
                       build_groupoid, comparison_morphism, compose_functors, coproduct,
                       full_subgroupoid, functor_properties, identity_functor,
                       is_isomorphism, natural_iso_candidates, pi0, validate_functor,
                       validate_natural_iso)
from .groups import is_power_of


class NoLift(ValueError):
    pass


class NotCovering(ValueError):
    pass


class NotHomotopyCommutative(ValueError):
    pass


# ---------------------------------------------------------------- predicates

@dataclass(frozen=True)
class FunctorClass:
    fibration: bool
    cofibration: bool
    weak_equivalence: bool
    covering: bool
    quasicovering: bool

    @property
    def acyclic_fibration(self) -> bool:
        return self.fibration and self.weak_equivalence

    @property
    def acyclic_cofibration(self) -> bool:
        return self.cofibration and self.weak_equivalence


def is_fibration(u: GroupoidFunctor) -> bool:
    g, h = u.source, u.target
    for a in g.objects:
        images = {u(f) for f in g.out_of(a)}
        if len(images) < len(h.out_of(u.obj(a))):
            return False
    return True


def is_covering(u: GroupoidFunctor) -> bool:
    """Every morphism out of u(a) has exactly one lift out of a."""
    g, h = u.source, u.target
    for a in g.objects:
        outs = g.out_of(a)
        if len(outs) != len(h.out_of(u.obj(a))) or len({u(f) for f in outs}) != len(outs):
            return False
    return True


def classify_functor(u: GroupoidFunctor) -> FunctorClass:
    flags = functor_properties(u)
    return FunctorClass(
        fibration=is_fibration(u),
        cofibration=len(set(u.object_map)) == len(u.object_map),
        weak_equivalence=flags.equivalence,
        covering=is_covering(u),
        quasicovering=flags.faithful,
    )


# ---------------------------------------------------------------- pullbacks

@dataclass(frozen=True, eq=False)
class HomotopyPullback:
    groupoid: Groupoid
    proj_g: GroupoidFunctor
    proj_k: GroupoidFunctor
    phi: NaturalIso  # u∘proj_g ⇒ v∘proj_k

    def __iter__(self):
        return iter((self.groupoid, self.proj_g, self.proj_k, self.phi))


def homotopy_pullback(u: GroupoidFunctor, v: GroupoidFunctor, cap: SizeCap | None = None
                      ) -> HomotopyPullback:
    """Objects ``(a, c, h: u(a)→v(c))``; morphisms ``(r, s)`` making the square commute."""
    cap = cap or DEFAULT_CAP
    g, k, h = u.source, v.source, u.target
    if v.target is not h:
        raise ValueError("homotopy_pullback needs a common target")
    count = sum(len(h.hom(u.obj(a), v.obj(c))) for a in g.objects for c in k.objects)
    if count > cap.objects:
        raise SizeGuard(f"homotopy pullback has {count} objects, cap {cap.objects}")
    objects = [(a, c, m) for a in g.objects for c in k.objects for m in h.hom(u.obj(a), v.obj(c))]

    def arrows(x):
        a, c, m = x
        for r in g.out_of(a):
            ur_inv = h.inverse(u(r))
            for s in k.out_of(c):
                yield (r, s), (g.dst[r], k.dst[s], h.then(ur_inv, m, v(s)))

    big = build_groupoid(objects, arrows,
                         lambda d, e: (g.compose(d[0], e[0]), k.compose(d[1], e[1])),
                         lambda x: (g.identity(x[0]), k.identity(x[1])),
                         lambda d: (g.inverse(d[0]), k.inverse(d[1])),
                         name="hpb", cap=cap)
    data = [big.morphism_data(f) for f in big.morphisms]
    proj_g = GroupoidFunctor(big, g, [x[0] for x in objects], [d[0] for d in data])
    proj_k = GroupoidFunctor(big, k, [x[1] for x in objects], [d[1] for d in data])
    phi = NaturalIso(compose_functors(proj_g, u), compose_functors(proj_k, v),
                     tuple(x[2] for x in objects))
    return HomotopyPullback(big, proj_g, proj_k, phi)


@dataclass(frozen=True, eq=False)
class StrictPullback:
    groupoid: Groupoid
    inclusion: GroupoidFunctor  # into the homotopy pullback
    proj_g: GroupoidFunctor
    proj_k: GroupoidFunctor
    homotopy: HomotopyPullback


def strict_pullback(u: GroupoidFunctor, v: GroupoidFunctor, cap: SizeCap | None = None
                    ) -> StrictPullback:
    hp = homotopy_pullback(u, v, cap)
    big, h = hp.groupoid, u.target
    keep = [i for i, (a, c, m) in enumerate(big.object_labels)
            if u.obj(a) == v.obj(c) and m == h.identity(u.obj(a))]
    sub, incl = full_subgroupoid(big, keep, name="pb")
    return StrictPullback(sub, incl, compose_functors(incl, hp.proj_g),
                          compose_functors(incl, hp.proj_k), hp)


@dataclass(frozen=True, eq=False)
class CommutativeSquare:
    """``t: F→G, s: F→K, u: G→H, v: K→H`` with ``sigma: u∘t ⇒ v∘s`` (or strict)."""

    t: GroupoidFunctor
    s: GroupoidFunctor
    u: GroupoidFunctor
    v: GroupoidFunctor
    sigma: NaturalIso | None = None

    def validate(self) -> list[str]:
        problems = []
        if self.t.source is not self.s.source:
            problems.append("t and s have different sources")
        if self.t.target is not self.u.source or self.s.target is not self.v.source:
            problems.append("legs do not compose")
        if self.u.target is not self.v.target:
            problems.append("u and v have different targets")
        if problems:
            return problems
        ut, vs = compose_functors(self.t, self.u), compose_functors(self.s, self.v)
        if self.sigma is None:
            if not ut.same_as(vs):
                problems.append("square does not commute strictly")
        else:
            problems += validate_natural_iso(NaturalIso(ut, vs, self.sigma.component))
        return problems


@dataclass(frozen=True, eq=False)
class CartesianWitness:
    cartesian: bool
    sigma: NaturalIso | None = None
    sigma_hat: GroupoidFunctor | None = None
    candidates_tried: int = 0

    def __bool__(self):
        return self.cartesian


def comparison_functor(sq: CommutativeSquare, sigma: Sequence[int], hp: HomotopyPullback
                       ) -> GroupoidFunctor:
    """``σ̂: F → L``, ``d ↦ (t d, s d, σ_d)``."""
    f, big = sq.t.source, hp.groupoid
    obj = [big.object_index((sq.t.obj(d), sq.s.obj(d), sigma[d])) for d in f.objects]
    mor = [big.morphism_index((big.object_labels[obj[f.src[m]]], big.object_labels[obj[f.dst[m]]],
                               (sq.t(m), sq.s(m)))) for m in f.morphisms]
    return GroupoidFunctor(f, big, obj, mor)


def is_homotopy_cartesian(sq: CommutativeSquare, cap: SizeCap | None = None,
                          candidate_cap: int = 100_000) -> CartesianWitness:
    """Search every σ: ut ⇒ vs; true iff some σ̂ is an equivalence.

    The square's own 2-cell is tried first. The search gives up with
    ``SizeGuard`` only after ``candidate_cap`` unsuccessful candidates.

    σ is fixed on each component by its value at the representative and
    transported along comparison morphisms, so the search is a product over
    components of the admissible representative values.
    """
    problems = sq.validate()
    if problems:
        raise NotHomotopyCommutative("; ".join(problems))
    ut, vs = compose_functors(sq.t, sq.u), compose_functors(sq.s, sq.v)
    hp = homotopy_pullback(sq.u, sq.v, cap)
    f = sq.t.source
    tried = 0
    if sq.sigma is not None:
        # the square's own 2-cell is the natural first guess
        tried += 1
        comp = list(sq.sigma.component)
        sigma_hat = comparison_functor(sq, comp, hp)
        if functor_properties(sigma_hat).equivalence:
            return CartesianWitness(True, NaturalIso(ut, vs, tuple(comp)), sigma_hat, tried)
    options = natural_iso_candidates(ut, vs)
    total = 1
    for fams in options:
        total *= len(fams)
    for choice in iproduct(*options):
        if tried >= candidate_cap:
            raise SizeGuard(f"{total} candidate transformations exceed cap {candidate_cap}")
        tried += 1
        comp = [0] * f.object_count
        for fam in choice:
            for a, c in fam.items():
                comp[a] = c
        sigma_hat = comparison_functor(sq, comp, hp)
        if functor_properties(sigma_hat).equivalence:
            return CartesianWitness(True, NaturalIso(ut, vs, tuple(comp)), sigma_hat, tried)
    return CartesianWitness(False, None, None, tried)


def square_from_pullback(pb: StrictPullback, u: GroupoidFunctor, v: GroupoidFunctor
                         ) -> CommutativeSquare:
    return CommutativeSquare(pb.proj_g, pb.proj_k, u, v)


def square_from_homotopy_pullback(hp: HomotopyPullback, u: GroupoidFunctor, v: GroupoidFunctor
                                  ) -> CommutativeSquare:
    return CommutativeSquare(hp.proj_g, hp.proj_k, u, v, hp.phi)


# ---------------------------------------------------------------- factorisations

@dataclass(frozen=True, eq=False)
class CoveringFactorization:
    r: GroupoidFunctor  # full and essentially surjective
    p: GroupoidFunctor  # covering


def factorize_covering(u: GroupoidFunctor) -> CoveringFactorization:
    """``u = p∘r`` with ``K`` the classes of triples ``(a, b, h: u(a)→b)``.

    ``(a, b, h) ~ (a', b, h∘u(g)⁻¹)`` for ``g: a→a'``; the fibre of ``p`` over
    ``b`` is the set of components of the comma groupoid ``u↓b``.
    """
    g, h = u.source, u.target
    triples = [(a, h.dst[m], m) for a in g.objects for m in h.out_of(u.obj(a))]
    tindex = {t: i for i, t in enumerate(triples)}
    parent = list(range(len(triples)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (a, b, m) in enumerate(triples):
        for r in g.out_of(a):
            j = tindex[(g.dst[r], b, h.then(h.inverse(u(r)), m))]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    cls = [triples[find(i)] for i in range(len(triples))]
    classes = sorted(set(cls), key=tindex.__getitem__)
    cls_of = dict(zip(triples, cls))

    def arrows(x):
        a, b, m = x
        for k in h.out_of(b):
            yield k, cls_of[(a, h.dst[k], h.then(m, k))]

    big = build_groupoid(classes, arrows, h.compose, lambda x: h.identity(x[1]), h.inverse,
                         name="K")
    p = GroupoidFunctor(big, h, [x[1] for x in classes], [big.morphism_data(f) for f in big.morphisms])
    r_obj = [big.object_index(cls_of[(a, u.obj(a), h.identity(u.obj(a)))]) for a in g.objects]
    r_mor = [big.morphism_index((big.object_labels[r_obj[g.src[f]]],
                                 big.object_labels[r_obj[g.dst[f]]], u(f))) for f in g.morphisms]
    return CoveringFactorization(GroupoidFunctor(g, big, r_obj, r_mor), p)


@dataclass(frozen=True, eq=False)
class ModelFactorization:
    i: GroupoidFunctor  # acyclic cofibration
    p: GroupoidFunctor  # fibration
    j: GroupoidFunctor  # cofibration
    q: GroupoidFunctor  # acyclic fibration
    missed: tuple[int, ...]  # objects of H outside the repletion of u's image


def factorize_model(u: GroupoidFunctor, cap: SizeCap | None = None) -> ModelFactorization:
    """Both factorisations with intermediate objects ``(a, b, k: u(a)→b)``.

    ``K`` is the homotopy pullback of ``u`` and the identity; ``L`` has the
    same objects with ``L(x, y) = H(b, b')``.  The second factorisation goes
    through ``L ∐ L'`` where ``L'`` is the full subgroupoid of ``H`` on objects
    not isomorphic to any ``u(a)``; it is kept even when ``L'`` is empty.
    """
    g, h = u.source, u.target
    hp = homotopy_pullback(u, identity_functor(h), cap)
    kk = hp.groupoid
    i_obj = [kk.object_index((a, u.obj(a), h.identity(u.obj(a)))) for a in g.objects]
    i_mor = [kk.morphism_index((kk.object_labels[i_obj[g.src[f]]], kk.object_labels[i_obj[g.dst[f]]],
                                (f, u(f)))) for f in g.morphisms]
    i = GroupoidFunctor(g, kk, i_obj, i_mor)
    p = hp.proj_k

    objects = list(kk.object_labels)

    def arrows(x):
        for y in objects:
            for m in h.hom(x[1], y[1]):
                yield m, y

    ll = build_groupoid(objects, arrows, h.compose, lambda x: h.identity(x[1]), h.inverse,
                        name="L", cap=cap)
    hc = pi0(h)
    hit = {hc.class_of[u.obj(a)] for a in g.objects}
    missed = tuple(b for b in h.objects if hc.class_of[b] not in hit)
    lprime, lprime_incl = full_subgroupoid(h, missed, name="L'")
    both, (inj_l, inj_lp) = coproduct(ll, lprime)
    q_obj = [0] * both.object_count
    q_mor = [0] * both.morphism_count
    for x in ll.objects:
        q_obj[inj_l.obj(x)] = ll.object_labels[x][1]
    for f in ll.morphisms:
        q_mor[inj_l(f)] = ll.morphism_data(f)
    for x in lprime.objects:
        q_obj[inj_lp.obj(x)] = lprime_incl.obj(x)
    for f in lprime.morphisms:
        q_mor[inj_lp(f)] = lprime_incl(f)
    q = GroupoidFunctor(both, h, q_obj, q_mor)
    j_obj = [inj_l.obj(ll.object_index(kk.object_labels[i_obj[a]])) for a in g.objects]
    j_mor = []
    for f in g.morphisms:
        s, t = ll.object_labels[ll.object_index(kk.object_labels[i_obj[g.src[f]]])], \
            ll.object_labels[ll.object_index(kk.object_labels[i_obj[g.dst[f]]])]
        j_mor.append(inj_l(ll.morphism_index((s, t, u(f)))))
    j = GroupoidFunctor(g, both, j_obj, j_mor)
    return ModelFactorization(i, p, j, q, missed)


# ---------------------------------------------------------------- lifting

def _lift_table(p: GroupoidFunctor) -> dict[tuple[int, int], int]:
    """(object of source, morphism of target) -> least lift."""
    table: dict[tuple[int, int], int] = {}
    for a in p.source.objects:
        for f in p.source.out_of(a):
            table.setdefault((a, p(f)), f)
    return table


def _check_lift(v: GroupoidFunctor, r: GroupoidFunctor, p: GroupoidFunctor,
                u: GroupoidFunctor, w: GroupoidFunctor) -> GroupoidFunctor:
    if validate_functor(v):
        raise NoLift("constructed lift is not a functor")
    if not compose_functors(v, p).same_as(w) or not compose_functors(r, v).same_as(u):
        raise NoLift("constructed lift does not fill the square")
    return v


def lift_square(r: GroupoidFunctor, p: GroupoidFunctor, u: GroupoidFunctor,
                w: GroupoidFunctor) -> GroupoidFunctor:
    """A diagonal ``v: K→G`` with ``p∘v = w`` and ``v∘r = u``.

    Supported pairs: ``r`` an isomorphism against anything; ``r`` full and
    essentially surjective against a covering ``p`` (the lift is unique);
    ``r`` an acyclic cofibration against a fibration; ``r`` a cofibration
    against an acyclic fibration.
    """
    if not compose_functors(u, p).same_as(compose_functors(r, w)):
        raise NoLift("square does not commute")
    if is_isomorphism(r):
        return _lift_through_isomorphism(r, p, u, w)
    rc, pc = classify_functor(r), classify_functor(p)
    rflags = functor_properties(r)
    if rflags.full and rflags.essentially_surjective and pc.covering:
        return _lift_against_covering(r, p, u, w)
    if rc.acyclic_cofibration and pc.fibration:
        return _lift_acyclic_cofibration(r, p, u, w)
    if rc.cofibration and pc.acyclic_fibration:
        return _lift_against_acyclic_fibration(r, p, u, w)
    raise NoLift("no supported lifting pair: need (full+ess. surjective, covering), "
                 "(acyclic cofibration, fibration) or (cofibration, acyclic fibration)")


def _lift_through_isomorphism(r, p, u, w):
    back_obj = [0] * r.target.object_count
    back_mor = [0] * r.target.morphism_count
    for a in r.source.objects:
        back_obj[r.obj(a)] = u.obj(a)
    for f in r.source.morphisms:
        back_mor[r(f)] = u(f)
    return _check_lift(GroupoidFunctor(r.target, u.target, back_obj, back_mor), r, p, u, w)


def _lift_against_covering(r, p, u, w):
    src_l, kk, g = r.source, r.target, p.source
    lifts = _lift_table(p)
    start = [None] * kk.object_count
    for l in src_l.objects:
        x = r.obj(l)
        for y in kk.objects:
            if start[y] is None:
                m = comparison_morphism(kk, x, y)
                if m is not None:
                    start[y] = g.dst[lifts[(u.obj(l), w(m))]]
    if any(s is None for s in start):
        raise NoLift("r is not essentially surjective")
    mor = [lifts[(start[kk.src[f]], w(f))] for f in kk.morphisms]
    return _check_lift(GroupoidFunctor(kk, g, start, mor), r, p, u, w)


def _lift_acyclic_cofibration(r, p, u, w):
    src_l, kk, g, h = r.source, r.target, p.source, p.target
    preimage = {r.obj(l): l for l in src_l.objects}
    rmor = {}
    for f in src_l.morphisms:
        rmor[r(f)] = f
    rho_obj, eta = [], []
    for k in kk.objects:
        if k in preimage:
            rho_obj.append(preimage[k])
            eta.append(kk.identity(k))
            continue
        for l in src_l.objects:
            m = comparison_morphism(kk, k, r.obj(l))
            if m is not None:
                rho_obj.append(l)
                eta.append(m)
                break
    lifts = _lift_table(p)
    zeta = []
    for k in kk.objects:
        if k in preimage:
            zeta.append(g.identity(u.obj(preimage[k])))
        else:
            zeta.append(lifts[(u.obj(rho_obj[k]), h.inverse(w(eta[k])))])
    obj = [g.dst[z] for z in zeta]
    mor = []
    for f in kk.morphisms:
        a, b = kk.src[f], kk.dst[f]
        rho_f = rmor[kk.then(kk.inverse(eta[a]), f, eta[b])]
        mor.append(g.then(g.inverse(zeta[a]), u(rho_f), zeta[b]))
    return _check_lift(GroupoidFunctor(kk, g, obj, mor), r, p, u, w)


def _lift_against_acyclic_fibration(r, p, u, w):
    src_l, kk, g = r.source, r.target, p.source
    obj: list[int | None] = [None] * kk.object_count
    for l in src_l.objects:
        obj[r.obj(l)] = u.obj(l)
    for k in kk.objects:
        if obj[k] is None:
            obj[k] = next(x for x in g.objects if p.obj(x) == w.obj(k))
    mor = []
    for f in kk.morphisms:
        hom = g.hom(obj[kk.src[f]], obj[kk.dst[f]])
        mor.append(next(m for m in hom if p(m) == w(f)))
    return _check_lift(GroupoidFunctor(kk, g, obj, mor), r, p, u, w)


# ---------------------------------------------------------------- coverings and actions

@dataclass(frozen=True, eq=False)
class GroupAction:
    """A functor ``H → Sets``: finite fibres over each object and transport along morphisms."""

    base: Groupoid
    fiber: tuple[tuple[Hashable, ...], ...]
    transport: Mapping[tuple[int, Hashable], Hashable]

    @classmethod
    def from_function(cls, base: Groupoid, fibers: Sequence[Sequence[Hashable]],
                      act: Callable[[int, Hashable], Hashable]) -> "GroupAction":
        fib = tuple(tuple(x) for x in fibers)
        table = {(m, x): act(m, x) for m in base.morphisms for x in fib[base.src[m]]}
        return cls(base, fib, table)

    def __call__(self, m: int, x: Hashable) -> Hashable:
        return self.transport[(m, x)]

    def validate(self) -> list[str]:
        b = self.base
        for m in b.morphisms:
            for x in self.fiber[b.src[m]]:
                if self.transport.get((m, x)) not in self.fiber[b.dst[m]]:
                    return [f"transport of {x!r} along {m} leaves the target fibre"]
        for a in b.objects:
            for x in self.fiber[a]:
                if self.transport[(b.identity(a), x)] != x:
                    return [f"identity at {a} moves {x!r}"]
        for (m, n), mn in b.table.items():
            for x in self.fiber[b.src[m]]:
                if self.transport[(mn, x)] != self.transport[(n, self.transport[(m, x)])]:
                    return [f"composition fails at ({m},{n}) on {x!r}"]
        return []


def covering_from_action(x: GroupAction) -> tuple[Groupoid, GroupoidFunctor]:
    """Objects ``(b, x)`` with ``x ∈ X_b``; a morphism ``h: b→b'`` goes to ``(b', X_h x)``."""
    b = x.base
    objects = [(a, e) for a in b.objects for e in x.fiber[a]]

    def arrows(obj):
        a, e = obj
        for m in b.out_of(a):
            yield m, (b.dst[m], x.transport[(m, e)])

    total = build_groupoid(objects, arrows, b.compose, lambda o: b.identity(o[0]), b.inverse,
                           name="E")
    p = GroupoidFunctor(total, b, [o[0] for o in objects],
                        [total.morphism_data(f) for f in total.morphisms])
    return total, p


def action_from_covering(p: GroupoidFunctor) -> GroupAction:
    """Fibres ``X_b = p⁻¹(b)`` (object indices); transport by unique lifting."""
    if not is_covering(p):
        raise NotCovering("functor is not a covering")
    e, b = p.source, p.target
    fibers = [[] for _ in b.objects]
    for o in e.objects:
        fibers[p.obj(o)].append(o)
    lifts = _lift_table(p)
    table = {(m, o): e.dst[lifts[(o, m)]] for m in b.morphisms for o in fibers[b.src[m]]}
    return GroupAction(b, tuple(tuple(f) for f in fibers), table)


def pullback_of_covering(p: GroupoidFunctor, v: GroupoidFunctor) -> GroupoidFunctor:
    """Strict pullback of ``p`` along ``v``, as a functor onto ``v``'s source."""
    return strict_pullback(p, v).proj_k


# ---------------------------------------------------------------- loop groupoids

def _loops(g: Groupoid, objects) -> Groupoid:
    def arrows(x):
        a, loop = x
        for k in g.out_of(a):
            ki = g.inverse(k)
            yield k, (g.dst[k], tuple(g.then(ki, m, k) for m in loop))

    return build_groupoid(objects, arrows, g.compose, lambda x: g.identity(x[0]), g.inverse,
                          name=f"Λ{g.name}")


def _with_projection(t: Groupoid, g: Groupoid) -> tuple[Groupoid, GroupoidFunctor]:
    return t, GroupoidFunctor(t, g, [x[0] for x in t.object_labels],
                              [t.morphism_data(f) for f in t.morphisms])


def loop_groupoid(g: Groupoid) -> tuple[Groupoid, GroupoidFunctor]:
    """Objects ``(a, u)`` with ``u ∈ G(a)``; ``k: (a,u) → (b, k u k⁻¹)``.

    Object labels are ``(a, u)``; the projection forgets ``u``.
    """
    objects = [(a, (m,)) for a in g.objects for m in g.vertex_group(a)]
    t = _loops(g, objects)
    t.object_labels = tuple((a, loop[0]) for a, loop in t.object_labels)
    t.morphism_labels = tuple(((s[0], s[1][0]), (d[0], d[1][0]), k) for s, d, k in t.morphism_labels)
    return _with_projection(t, g)


def p_loop_groupoid(g: Groupoid, p: int) -> Groupoid:
    """Full subgroupoid of the loop groupoid on loops of p-power order."""
    lg, _ = loop_groupoid(g)
    keep = [i for i, (a, m) in enumerate(lg.object_labels) if is_power_of(g.morphism_order(m), p)]
    return full_subgroupoid(lg, keep, name=f"[Z_{p},{g.name}]")[0]


def _p_loops(g: Groupoid, a: int, p: int) -> list[int]:
    return [m for m in g.vertex_group(a) if is_power_of(g.morphism_order(m), p)]


def commuting_tuple_groupoid(g: Groupoid, p: int, n: int, cap: SizeCap | None = None
                             ) -> tuple[Groupoid, GroupoidFunctor]:
    """Objects ``(a, (u1..un))``: pairwise commuting p-power loops at ``a``."""
    cap = cap or DEFAULT_CAP
    objects = []
    for a in g.objects:
        loops = _p_loops(g, a, p)
        commute = {(x, y) for x in loops for y in loops if g.compose(x, y) == g.compose(y, x)}
        tuples = [()]
        for _ in range(n):
            tuples = [tp + (y,) for tp in tuples for y in loops if all((x, y) in commute for x in tp)]
            if len(objects) + len(tuples) > cap.objects:
                raise SizeGuard(f"commuting tuples exceed cap {cap.objects}")
        objects += [(a, tp) for tp in tuples]
    return _with_projection(_loops(g, objects), g)


# ---------------------------------------------------------------- functor groupoids

def _generators(g: Groupoid, a: int) -> list[int]:
    """Greedy generating set of the vertex group at ``a``."""
    gens: list[int] = []
    span = {g.identity(a)}
    for m in g.vertex_group(a):
        if m in span:
            continue
        gens.append(m)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = g.compose(x, s)
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


def _vertex_homs(g: Groupoid, a: int, h: Groupoid, b: int) -> list[dict[int, int]]:
    """Every homomorphism ``G(a) → H(b)``, as dicts."""
    gens = _generators(g, a)
    out = []
    for images in iproduct(h.vertex_group(b), repeat=len(gens)):
        phi = {g.identity(a): h.identity(b)}
        frontier = [g.identity(a)]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for s, t in zip(gens, images):
                    y, hy = g.compose(x, s), h.compose(phi[x], t)
                    if y in phi:
                        if phi[y] != hy:
                            ok = False
                            break
                    else:
                        phi[y] = hy
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok:
            out.append(phi)
    return out


def enumerate_functors(g: Groupoid, h: Groupoid, cap: SizeCap | None = None
                       ) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All functors ``G → H`` as ``(object_map, morphism_map)``.

    On each component: the image of the representative, a homomorphism on its
    vertex group, and the images of the comparison morphisms ``k_a``.
    """
    cap = cap or DEFAULT_CAP
    classes = pi0(g)
    per_component = []
    for c in range(classes.class_count):
        rep = classes.representative[c]
        members = classes.members(c)
        ks = {a: comparison_morphism(g, rep, a) for a in members}
        choices = []
        for x in h.objects:
            for phi in _vertex_homs(g, rep, h, x):
                others = [a for a in members if a != rep]
                for ims in iproduct(h.out_of(x), repeat=len(others)):
                    fk = dict(zip(others, ims))
                    fk[rep] = h.identity(x)
                    obj = {a: h.dst[fk[a]] for a in members}
                    mor = {}
                    for a in members:
                        for m in g.out_of(a):
                            b = g.dst[m]
                            loop = g.then(ks[a], m, g.inverse(ks[b]))
                            mor[m] = h.then(h.inverse(fk[a]), phi[loop], fk[b])
                    choices.append((obj, mor))
                    if len(choices) > cap.objects:
                        raise SizeGuard(f"functor count exceeds cap {cap.objects}")
        per_component.append(choices)
    total = 1
    for ch in per_component:
        total *= len(ch)
    if total > cap.objects:
        raise SizeGuard(f"{total} functors exceed cap {cap.objects}")
    out = []
    for combo in iproduct(*per_component):
        obj = [0] * g.object_count
        mor = [0] * g.morphism_count
        for o, m in combo:
            for a, x in o.items():
                obj[a] = x
            for f, y in m.items():
                mor[f] = y
        out.append((tuple(obj), tuple(mor)))
    return out


def functor_groupoid(g: Groupoid, h: Groupoid, cap: SizeCap | None = None) -> Groupoid:
    """Functors ``G → H`` and natural isomorphisms between them.

    A morphism out of ``F`` is any family ``θ_a: F(a) → ·``; its target is
    ``F'(m) = θ_b F(m) θ_a⁻¹``.  Morphism data is the component tuple.
    """
    functors = enumerate_functors(g, h, cap)

    def arrows(fun):
        obj, mor = fun
        for theta in iproduct(*(h.out_of(x) for x in obj)):
            new_obj = tuple(h.dst[t] for t in theta)
            new_mor = tuple(h.then(h.inverse(theta[g.src[m]]), mor[m], theta[g.dst[m]])
                            for m in g.morphisms)
            yield theta, (new_obj, new_mor)

    return build_groupoid(functors, arrows,
                          lambda s, t: tuple(h.compose(x, y) for x, y in zip(s, t)),
                          lambda fun: tuple(h.identity(x) for x in fun[0]),
                          lambda s: tuple(h.inverse(x) for x in s),
                          name=f"[{g.name},{h.name}]", cap=cap)


def functor_from_label(g: Groupoid, h: Groupoid, label) -> GroupoidFunctor:
    obj, mor = label
    return GroupoidFunctor(g, h, obj, mor)


def group_homs(g: Groupoid, h: Groupoid) -> list[GroupoidFunctor]:
    """Functors between one-object groupoids, i.e. group homomorphisms."""
    return [functor_from_label(g, h, f) for f in enumerate_functors(g, h)]
