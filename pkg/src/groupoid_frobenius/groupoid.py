"""Finite groupoids, functors and natural isomorphisms.

A groupoid is a flat table: objects ``0..n-1``, morphisms ``0..m-1`` with
``src``/``dst`` arrays, and a composition table ``table[(f, g)] = g∘f``
defined when ``dst(f) == src(g)``.  Hom-sets are derived views.  Values are
never mutated after construction; every operation builds a new groupoid.

Whenever a choice is needed (class representatives, comparison morphisms,
candidate components) the least index wins, so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .groups import FiniteGroup, NotAGroup


class SizeGuard(RuntimeError):
    """A construction would exceed the configured object/morphism cap."""


@dataclass(frozen=True)
class SizeCap:
    objects: int = 50_000
    morphisms: int = 500_000


DEFAULT_CAP = SizeCap()


class Groupoid:
    def __init__(self, object_count: int, src: Sequence[int], dst: Sequence[int],
                 identity_of: Sequence[int], inverse_of: Sequence[int],
                 table: Mapping[tuple[int, int], int],
                 object_labels: Sequence[Hashable] | None = None,
                 morphism_labels: Sequence[Hashable] | None = None,
                 name: str = ""):
        self.object_count = object_count
        self.src = tuple(src)
        self.dst = tuple(dst)
        self.identity_of = tuple(identity_of)
        self.inverse_of = tuple(inverse_of)
        self.table = dict(table)
        self.object_labels = tuple(object_labels) if object_labels is not None else tuple(range(object_count))
        self.morphism_labels = tuple(morphism_labels) if morphism_labels is not None else None
        self.name = name

    @property
    def morphism_count(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.object_count)

    @property
    def morphisms(self) -> range:
        return range(len(self.src))

    def compose(self, f: int, g: int) -> int:
        """``g∘f`` for ``f: a→b``, ``g: b→c``."""
        return self.table[(f, g)]

    def then(self, *fs: int) -> int:
        """Diagrammatic composite: ``then(f, g, h) = h∘g∘f``."""
        out = fs[0]
        for g in fs[1:]:
            out = self.table[(out, g)]
        return out

    def inverse(self, f: int) -> int:
        return self.inverse_of[f]

    def identity(self, a: int) -> int:
        return self.identity_of[a]

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.object_count)]
        for f, a in enumerate(self.src):
            if 0 <= a < self.object_count:
                buckets[a].append(f)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def _hom(self) -> dict[tuple[int, int], tuple[int, ...]]:
        h: dict[tuple[int, int], list[int]] = {}
        for f, (a, b) in enumerate(zip(self.src, self.dst)):
            h.setdefault((a, b), []).append(f)
        return {k: tuple(v) for k, v in h.items()}

    def out_of(self, a: int) -> tuple[int, ...]:
        return self._out[a]

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        return self._hom.get((a, b), ())

    def vertex_group(self, a: int) -> tuple[int, ...]:
        return self.hom(a, a)

    @cached_property
    def _object_index(self) -> dict:
        return {x: i for i, x in enumerate(self.object_labels)}

    @cached_property
    def _morphism_index(self) -> dict:
        return {x: i for i, x in enumerate(self.morphism_labels or ())}

    def object_index(self, label: Hashable) -> int:
        return self._object_index[label]

    def morphism_index(self, label: Hashable) -> int:
        return self._morphism_index[label]

    def morphism_data(self, f: int) -> Hashable:
        """Construction data of a morphism built by :func:`build_groupoid`."""
        return self.morphism_labels[f][2]

    def morphism_order(self, f: int) -> int:
        """Order of an endomorphism, by iterated composition."""
        a = self.src[f]
        if self.dst[f] != a:
            raise ValueError(f"morphism {f} is not an endomorphism")
        ident = self.identity_of[a]
        k, g = 1, f
        while g != ident:
            g = self.table[(g, f)]
            k += 1
        return k

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        return f"Groupoid({label}objects={self.object_count}, morphisms={self.morphism_count})"


def build_groupoid(objects: Sequence[Hashable],
                   arrows: Callable[[Hashable], Iterable[tuple[Hashable, Hashable]]],
                   compose: Callable[[Hashable, Hashable], Hashable],
                   identity: Callable[[Hashable], Hashable],
                   inverse: Callable[[Hashable], Hashable],
                   name: str = "", cap: SizeCap | None = None) -> Groupoid:
    """Assemble a groupoid from labelled data.

    ``arrows(x)`` yields ``(data, target_label)`` for every morphism out of
    object ``x``; ``compose(df, dg)`` is the data of ``g∘f``.  Morphisms are
    keyed by ``(source, target, data)``.
    """
    cap = cap or DEFAULT_CAP
    objects = list(objects)
    if len(objects) > cap.objects:
        raise SizeGuard(f"{name or 'groupoid'}: {len(objects)} objects exceeds cap {cap.objects}")
    index = {x: i for i, x in enumerate(objects)}
    src: list[int] = []
    dst: list[int] = []
    data: list[Hashable] = []
    key: dict[tuple[int, int, Hashable], int] = {}
    for i, x in enumerate(objects):
        for d, y in arrows(x):
            j = index[y]
            k = (i, j, d)
            if k in key:
                continue
            key[k] = len(src)
            src.append(i)
            dst.append(j)
            data.append(d)
            if len(src) > cap.morphisms:
                raise SizeGuard(f"{name or 'groupoid'}: morphisms exceed cap {cap.morphisms}")
    out: list[list[int]] = [[] for _ in objects]
    for f, a in enumerate(src):
        out[a].append(f)
    table = {}
    for f in range(len(src)):
        a, b, df = src[f], dst[f], data[f]
        for g in out[b]:
            table[(f, g)] = key[(a, dst[g], compose(df, data[g]))]
    identity_of = [key[(i, i, identity(x))] for i, x in enumerate(objects)]
    inverse_of = [key[(dst[f], src[f], inverse(data[f]))] for f in range(len(src))]
    return Groupoid(len(objects), src, dst, identity_of, inverse_of, table,
                    objects, [(objects[s], objects[t], d) for s, t, d in zip(src, dst, data)], name)


# ---------------------------------------------------------------- validation

def validate_groupoid(g: Groupoid) -> list[str]:
    """Empty list iff all groupoid axioms hold; else the first violation of each kind."""
    found: dict[str, str] = {}

    def note(kind: str, detail: str):
        found.setdefault(kind, f"{kind}: {detail}")

    n, m = g.object_count, g.morphism_count
    for f in range(m):
        if not (0 <= g.src[f] < n and 0 <= g.dst[f] < n):
            note("index range", f"morphism {f} has endpoint out of range")
    if len(g.identity_of) != n or any(not 0 <= i < m for i in g.identity_of):
        note("index range", "identity_of malformed")
    if len(g.inverse_of) != m or any(not 0 <= i < m for i in g.inverse_of):
        note("index range", "inverse_of malformed")
    for (f, h), r in g.table.items():
        if not (0 <= f < m and 0 <= h < m and 0 <= r < m):
            note("index range", f"table entry ({f},{h})->{r} out of range")
    if found:
        return list(found.values())

    for (f, h), r in g.table.items():
        if g.dst[f] != g.src[h]:
            note("composition endpoint", f"({f},{h}) is tabulated but not composable")
        elif g.src[r] != g.src[f] or g.dst[r] != g.dst[h]:
            note("composition endpoint", f"{h}∘{f} = {r} has wrong endpoints")
    for f in range(m):
        for h in g.out_of(g.dst[f]):
            if (f, h) not in g.table:
                note("composition missing", f"{h}∘{f} undefined")
    for a in range(n):
        e = g.identity_of[a]
        if g.src[e] != a or g.dst[e] != a:
            note("identity", f"identity of {a} is not an endomorphism of {a}")
            continue
        for f in g.out_of(a):
            if g.table.get((e, f)) != f:
                note("identity", f"{f}∘1_{a} != {f}")
        for f in range(m):
            if g.dst[f] == a and g.table.get((f, e)) != f:
                note("identity", f"1_{a}∘{f} != {f}")
    for f in range(m):
        fi = g.inverse_of[f]
        if g.table.get((f, fi)) != g.identity_of[g.src[f]] or g.table.get((fi, f)) != g.identity_of[g.dst[f]]:
            note("inverse", f"inverse_of[{f}] is not a two-sided inverse")
    if "composition endpoint" not in found and "composition missing" not in found:
        for f in range(m):
            for h in g.out_of(g.dst[f]):
                fh = g.table[(f, h)]
                for k in g.out_of(g.dst[h]):
                    if g.table[(fh, k)] != g.table[(f, g.table[(h, k)])]:
                        note("associativity", f"({k}∘{h})∘{f} != {k}∘({h}∘{f})")
                        break
                if "associativity" in found:
                    break
            if "associativity" in found:
                break
    return list(found.values())


# ---------------------------------------------------------------- functors

@dataclass(frozen=True, eq=False)
class GroupoidFunctor:
    source: Groupoid
    target: Groupoid
    object_map: tuple[int, ...]
    morphism_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "object_map", tuple(self.object_map))
        object.__setattr__(self, "morphism_map", tuple(self.morphism_map))

    def __call__(self, f: int) -> int:
        return self.morphism_map[f]

    def obj(self, a: int) -> int:
        return self.object_map[a]

    def then(self, other: "GroupoidFunctor") -> "GroupoidFunctor":
        """``other ∘ self``."""
        return compose_functors(self, other)

    def same_as(self, other: "GroupoidFunctor") -> bool:
        return (self.object_map == other.object_map and self.morphism_map == other.morphism_map)


def identity_functor(g: Groupoid) -> GroupoidFunctor:
    return GroupoidFunctor(g, g, tuple(g.objects), tuple(g.morphisms))


def compose_functors(u: GroupoidFunctor, v: GroupoidFunctor) -> GroupoidFunctor:
    """``v∘u``."""
    return GroupoidFunctor(u.source, v.target,
                           tuple(v.object_map[x] for x in u.object_map),
                           tuple(v.morphism_map[f] for f in u.morphism_map))


def validate_functor(u: GroupoidFunctor) -> list[str]:
    g, h = u.source, u.target
    problems = []
    if len(u.object_map) != g.object_count or len(u.morphism_map) != g.morphism_count:
        return ["functor maps have the wrong length"]
    if any(not 0 <= x < h.object_count for x in u.object_map):
        return ["object image out of range"]
    if any(not 0 <= x < h.morphism_count for x in u.morphism_map):
        return ["morphism image out of range"]
    for f in g.morphisms:
        uf = u.morphism_map[f]
        if h.src[uf] != u.object_map[g.src[f]] or h.dst[uf] != u.object_map[g.dst[f]]:
            problems.append(f"endpoints: morphism {f}")
            break
    for a in g.objects:
        if u.morphism_map[g.identity_of[a]] != h.identity_of[u.object_map[a]]:
            problems.append(f"identity: object {a}")
            break
    if not problems:
        for (f, k), r in g.table.items():
            if u.morphism_map[r] != h.table[(u.morphism_map[f], u.morphism_map[k])]:
                problems.append(f"composition: ({f},{k})")
                break
    return problems


@dataclass(frozen=True)
class FunctorFlags:
    full: bool
    faithful: bool
    essentially_surjective: bool

    @property
    def equivalence(self) -> bool:
        return self.full and self.faithful and self.essentially_surjective


def functor_properties(u: GroupoidFunctor) -> FunctorFlags:
    g, h = u.source, u.target
    full = faithful = True
    for a in g.objects:
        for b in g.objects:
            homs = g.hom(a, b)
            images = {u.morphism_map[f] for f in homs}
            if len(images) != len(homs):
                faithful = False
            if len(images) != len(h.hom(u.object_map[a], u.object_map[b])):
                full = False
            if not (full or faithful):
                break
    ch = pi0(h)
    hit = {ch.class_of[x] for x in u.object_map}
    return FunctorFlags(full, faithful, len(hit) == ch.class_count)


def is_isomorphism(u: GroupoidFunctor) -> bool:
    return (len(set(u.object_map)) == u.target.object_count == u.source.object_count
            and len(set(u.morphism_map)) == u.target.morphism_count == u.source.morphism_count)


@dataclass(frozen=True, eq=False)
class NaturalIso:
    """Components ``component[a]: from_(a) → to(a)`` in the common target."""

    from_: GroupoidFunctor
    to: GroupoidFunctor
    component: tuple[int, ...]


def validate_natural_iso(t: NaturalIso) -> list[str]:
    u, v = t.from_, t.to
    g, h = u.source, u.target
    for a in g.objects:
        c = t.component[a]
        if h.src[c] != u.object_map[a] or h.dst[c] != v.object_map[a]:
            return [f"component at {a} has wrong endpoints"]
    for f in g.morphisms:
        a, b = g.src[f], g.dst[f]
        if h.then(u(f), t.component[b]) != h.then(t.component[a], v(f)):
            return [f"naturality fails at morphism {f}"]
    return []


# ---------------------------------------------------------------- constructions

def group_groupoid(group: FiniteGroup | Sequence[Sequence[int]], name: str | None = None) -> Groupoid:
    """One-object groupoid of a group; morphism i is group element i."""
    if not isinstance(group, FiniteGroup):
        group = FiniteGroup(group)
    n = len(group)
    table = {(f, k): group.table[k][f] for f in range(n) for k in range(n)}
    return Groupoid(1, [0] * n, [0] * n, [group.identity], group.inverses, table,
                    ["*"], list(group.labels), name or group.name)


def group_from_permutations(generators: Sequence[Sequence[int]], one_based: bool = True) -> Groupoid:
    return group_groupoid(FiniteGroup.from_permutations(generators, one_based=one_based))


def discrete_groupoid(n: int) -> Groupoid:
    return Groupoid(n, range(n), range(n), range(n), range(n), {(a, a): a for a in range(n)},
                    name=f"disc{n}")


def indiscrete_groupoid(n: int) -> Groupoid:
    mor = [(a, b) for a in range(n) for b in range(n)]
    idx = {ab: i for i, ab in enumerate(mor)}
    table = {(idx[(a, b)], idx[(b, c)]): idx[(a, c)] for a in range(n) for b in range(n) for c in range(n)}
    return Groupoid(n, [a for a, _ in mor], [b for _, b in mor], [idx[(a, a)] for a in range(n)],
                    [idx[(b, a)] for a, b in mor], table, name=f"ind{n}")


def terminal_groupoid() -> Groupoid:
    return discrete_groupoid(1)


def product(g: Groupoid, h: Groupoid) -> tuple[Groupoid, GroupoidFunctor, GroupoidFunctor]:
    nh, mh = h.object_count, h.morphism_count
    n = g.object_count * nh
    src = [g.src[f] * nh + h.src[k] for f in g.morphisms for k in h.morphisms]
    dst = [g.dst[f] * nh + h.dst[k] for f in g.morphisms for k in h.morphisms]
    ident = [g.identity_of[a] * mh + h.identity_of[b] for a in g.objects for b in h.objects]
    inv = [g.inverse_of[f] * mh + h.inverse_of[k] for f in g.morphisms for k in h.morphisms]
    table = {}
    for (f1, f2), r in g.table.items():
        for (k1, k2), s in h.table.items():
            table[(f1 * mh + k1, f2 * mh + k2)] = r * mh + s
    labels = [(x, y) for x in g.object_labels for y in h.object_labels]
    p = Groupoid(n, src, dst, ident, inv, table, labels, name=f"{g.name}x{h.name}")
    proj_g = GroupoidFunctor(p, g, [a for a in g.objects for _ in h.objects],
                             [f for f in g.morphisms for _ in h.morphisms])
    proj_h = GroupoidFunctor(p, h, [b for _ in g.objects for b in h.objects],
                             [k for _ in g.morphisms for k in h.morphisms])
    return p, proj_g, proj_h


def coproduct(*parts: Groupoid) -> tuple[Groupoid, list[GroupoidFunctor]]:
    src, dst, ident, inv, table, labels = [], [], [], [], {}, []
    obj_off = mor_off = 0
    offsets = []
    for g in parts:
        offsets.append((obj_off, mor_off))
        src += [a + obj_off for a in g.src]
        dst += [a + obj_off for a in g.dst]
        ident += [f + mor_off for f in g.identity_of]
        inv += [f + mor_off for f in g.inverse_of]
        for (f, k), r in g.table.items():
            table[(f + mor_off, k + mor_off)] = r + mor_off
        labels += [(i, x) for i, x in zip([len(offsets) - 1] * g.object_count, g.object_labels)]
        obj_off += g.object_count
        mor_off += g.morphism_count
    c = Groupoid(obj_off, src, dst, ident, inv, table, labels,
                 name="+".join(g.name for g in parts))
    injections = [GroupoidFunctor(g, c, [a + oo for a in g.objects], [f + mo for f in g.morphisms])
                  for g, (oo, mo) in zip(parts, offsets)]
    return c, injections


def full_subgroupoid(g: Groupoid, objects: Iterable[int], name: str = "") -> tuple[Groupoid, GroupoidFunctor]:
    objs = sorted(set(objects))
    pos = {a: i for i, a in enumerate(objs)}
    mors = [f for a in objs for f in g.out_of(a) if g.dst[f] in pos]
    mpos = {f: i for i, f in enumerate(mors)}
    table = {(mpos[f], mpos[k]): mpos[r] for f in mors for k in g.out_of(g.dst[f])
             if k in mpos for r in (g.table[(f, k)],)}
    sub = Groupoid(len(objs), [pos[g.src[f]] for f in mors], [pos[g.dst[f]] for f in mors],
                   [mpos[g.identity_of[a]] for a in objs], [mpos[g.inverse_of[f]] for f in mors],
                   table, [g.object_labels[a] for a in objs],
                   [g.morphism_labels[f] for f in mors] if g.morphism_labels else None,
                   name or g.name)
    return sub, GroupoidFunctor(sub, g, objs, mors)


# ---------------------------------------------------------------- classes

@dataclass(frozen=True)
class IsoClassTable:
    class_count: int
    representative: tuple[int, ...]
    class_of: tuple[int, ...]
    aut_order: tuple[int, ...]

    def members(self, c: int) -> list[int]:
        return [a for a, k in enumerate(self.class_of) if k == c]

    @property
    def sizes(self) -> list[int]:
        counts = [0] * self.class_count
        for k in self.class_of:
            counts[k] += 1
        return counts


def pi0(g: Groupoid) -> IsoClassTable:
    """Connected components by union-find; classes ordered by least member."""
    cached = getattr(g, "_pi0", None)
    if cached is not None:
        return cached
    parent = list(range(g.object_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in zip(g.src, g.dst):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = [find(a) for a in g.objects]
    reps = sorted(set(roots))
    cls = {r: i for i, r in enumerate(reps)}
    table = IsoClassTable(len(reps), tuple(reps), tuple(cls[r] for r in roots),
                          tuple(len(g.vertex_group(r)) for r in reps))
    g._pi0 = table
    return table


def hom_set(g: Groupoid, a: int, b: int) -> list[int]:
    return list(g.hom(a, b))


def comparison_morphism(g: Groupoid, a: int, b: int) -> int | None:
    """Least-index morphism ``a → b``, if any."""
    homs = g.hom(a, b)
    return homs[0] if homs else None


def cardinality(g: Groupoid):
    """Groupoid cardinality: sum over classes of 1/|aut|."""
    from fractions import Fraction
    return sum((Fraction(1, k) for k in pi0(g).aut_order), Fraction(0))


def vertex_group_as_group(g: Groupoid, a: int) -> tuple[FiniteGroup, tuple[int, ...]]:
    """The group ``G(a)`` with identity first, and its element -> morphism embedding."""
    ident = g.identity_of[a]
    mors = (ident,) + tuple(f for f in g.vertex_group(a) if f != ident)
    pos = {f: i for i, f in enumerate(mors)}
    table = [[pos[g.table[(y, x)]] for y in mors] for x in mors]
    labels = [g.morphism_labels[f] for f in mors] if g.morphism_labels else list(mors)
    return FiniteGroup(table, labels, f"{g.name}({a})"), mors


# ---------------------------------------------------------------- natural isos

def _extend_component(u: GroupoidFunctor, v: GroupoidFunctor, members: Sequence[int], rep: int,
                      c: int) -> dict[int, int] | None:
    g, h = u.source, u.target
    comp = {}
    for a in members:
        k = comparison_morphism(g, rep, a)
        comp[a] = h.then(h.inverse(u(k)), c, v(k))
    for a in members:
        for f in g.out_of(a):
            b = g.dst[f]
            if h.then(u(f), comp[b]) != h.then(comp[a], v(f)):
                return None
    return comp


def natural_iso_candidates(u: GroupoidFunctor, v: GroupoidFunctor):
    """Per source component, every admissible component family (in index order)."""
    g, h = u.source, u.target
    classes = pi0(g)
    options = []
    for c in range(classes.class_count):
        rep = classes.representative[c]
        members = classes.members(c)
        fams = []
        for cand in h.hom(u.obj(rep), v.obj(rep)):
            comp = _extend_component(u, v, members, rep, cand)
            if comp is not None:
                fams.append(comp)
        options.append(fams)
    return options


def find_natural_iso(u: GroupoidFunctor, v: GroupoidFunctor) -> NaturalIso | None:
    if u.source is not v.source and u.source.object_count != v.source.object_count:
        raise ValueError("functors have different sources")
    g = u.source
    options = natural_iso_candidates(u, v)
    component = [None] * g.object_count
    for fams in options:
        if not fams:
            return None
        for a, c in fams[0].items():
            component[a] = c
    return NaturalIso(u, v, tuple(component))


def identity_natural_iso(u: GroupoidFunctor) -> NaturalIso:
    return NaturalIso(u, u, tuple(u.target.identity_of[u.obj(a)] for a in u.source.objects))


# ---------------------------------------------------------------- skeleta

@dataclass(frozen=True, eq=False)
class Skeleton:
    skeletal: Groupoid
    inclusion: GroupoidFunctor
    retraction: GroupoidFunctor
    witness: NaturalIso  # identity ⇒ inclusion∘retraction


def skeleton(g: Groupoid) -> Skeleton:
    classes = pi0(g)
    s, incl = full_subgroupoid(g, classes.representative, name=f"sk({g.name})")
    rep_pos = {a: i for i, a in enumerate(incl.object_map)}
    mor_pos = {f: i for i, f in enumerate(incl.morphism_map)}
    kappa = []
    for a in g.objects:
        r = classes.representative[classes.class_of[a]]
        kappa.append(comparison_morphism(g, a, r) if a != r else g.identity_of[a])
    obj_map = [rep_pos[classes.representative[classes.class_of[a]]] for a in g.objects]
    mor_map = [mor_pos[g.then(g.inverse(kappa[g.src[f]]), f, kappa[g.dst[f]])] for f in g.morphisms]
    retraction = GroupoidFunctor(g, s, obj_map, mor_map)
    witness = NaturalIso(identity_functor(g), compose_functors(retraction, incl), tuple(kappa))
    return Skeleton(s, incl, retraction, witness)


@dataclass(frozen=True, eq=False)
class ConnectedPiece:
    """One component, written as ``indiscrete(size) × vertex_group``."""

    size: int
    vertex_group: FiniteGroup
    objects: tuple[int, ...]
    iso: GroupoidFunctor  # indiscrete(size) × group_groupoid(vertex_group) → g


def connected_split(g: Groupoid) -> list[ConnectedPiece]:
    """Split each component as A×H with A indiscrete, via k_a = least morphism rep→a."""
    classes = pi0(g)
    pieces = []
    for c in range(classes.class_count):
        rep = classes.representative[c]
        members = classes.members(c)
        grp, emb = vertex_group_as_group(g, rep)
        a_part = indiscrete_groupoid(len(members))
        prod, _, _ = product(a_part, group_groupoid(grp))
        k = [comparison_morphism(g, rep, a) for a in members]
        obj_map = list(members)
        mor_map = []
        ng = len(grp)
        for f in prod.morphisms:
            pair, h = divmod(f, ng)
            i, j = divmod(pair, len(members))
            mor_map.append(g.then(g.inverse(k[i]), emb[h], k[j]))
        pieces.append(ConnectedPiece(len(members), grp, tuple(members),
                                     GroupoidFunctor(prod, g, obj_map, mor_map)))
    return pieces


def split_isomorphism(g: Groupoid) -> GroupoidFunctor:
    """The recomposed isomorphism ``∐ indiscrete(n_i) × H_i → g``."""
    pieces = connected_split(g)
    c, inj = coproduct(*[p.iso.source for p in pieces])
    obj_map = [0] * c.object_count
    mor_map = [0] * c.morphism_count
    for p, i in zip(pieces, inj):
        for a in p.iso.source.objects:
            obj_map[i.obj(a)] = p.iso.obj(a)
        for f in p.iso.source.morphisms:
            mor_map[i(f)] = p.iso(f)
    return GroupoidFunctor(c, g, obj_map, mor_map)


def group_hom_functor(g: Groupoid, h: Groupoid, images: Sequence[int]) -> GroupoidFunctor:
    """Functor between one-object groupoids given by a homomorphism on morphisms."""
    if g.object_count != 1 or h.object_count != 1:
        raise ValueError("group_hom_functor needs one-object groupoids")
    return GroupoidFunctor(g, h, (0,), tuple(images))


def subgroup_inclusion(group: FiniteGroup, elements: Sequence[int], name: str = "H"
                       ) -> tuple[FiniteGroup, GroupoidFunctor]:
    """Subgroup on ``elements`` and its inclusion as a functor of one-object groupoids."""
    sub, emb = group.subgroup(elements, name)
    return sub, GroupoidFunctor(group_groupoid(sub), group_groupoid(group), (0,), emb)


def is_group_like(g: Groupoid) -> bool:
    return g.object_count == 1


__all__ = [name for name in dir() if not name.startswith("_")] + ["NotAGroup"]
