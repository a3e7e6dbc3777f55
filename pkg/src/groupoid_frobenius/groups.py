"""Finite groups given by Cayley tables.

Elements are the indices ``0..n-1``; ``labels`` keeps whatever the elements
were built from (permutation tuples, residues, pairs).  Index 0 is always
the identity for groups built here, but code never relies on that.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Hashable, Sequence


class NotAGroup(ValueError):
    pass


class FiniteGroup:
    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[Hashable] | None = None,
                 name: str = "G"):
        self.table = tuple(tuple(row) for row in table)
        n = len(self.table)
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        self.name = name
        self._check()
        self.identity = next(e for e in range(n) if all(self.table[e][x] == x for x in range(n)))
        self.inverses = tuple(
            next(y for y in range(n) if self.table[x][y] == self.identity) for x in range(n)
        )
        self._order_cache: dict[int, int] = {}

    def _check(self):
        n = len(self.table)
        if n == 0:
            raise NotAGroup("empty table")
        if any(len(row) != n for row in self.table):
            raise NotAGroup("table is not square")
        if any(not 0 <= x < n for row in self.table for x in row):
            raise NotAGroup("closure fails: entry out of range")
        ids = [e for e in range(n) if all(self.table[e][x] == x == self.table[x][e] for x in range(n))]
        if not ids:
            raise NotAGroup("no identity element")
        e = ids[0]
        for x in range(n):
            if not any(self.table[x][y] == e == self.table[y][x] for y in range(n)):
                raise NotAGroup(f"element {x} has no inverse")
        t = self.table
        for a, b, c in iproduct(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise NotAGroup(f"associativity fails at ({a},{b},{c})")

    @classmethod
    def from_permutations(cls, generators: Sequence[Sequence[int]], degree: int | None = None,
                          one_based: bool = False, name: str = "G") -> "FiniteGroup":
        """Close a set of permutations (image tuples) under composition.

        ``(s*t)(i) = s(t(i))``: the right factor acts first.
        """
        gens = [tuple(x - 1 for x in g) if one_based else tuple(g) for g in generators]
        if degree is None:
            degree = max((len(g) for g in gens), default=0)
        for g in gens:
            if sorted(g) != list(range(len(g))):
                raise NotAGroup(f"{g} is not a permutation")
        gens = [g + tuple(range(len(g), degree)) for g in gens]
        ident = tuple(range(degree))
        elements = [ident]
        seen = {ident: 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = tuple(g[x[i]] for i in range(degree))
                    if y not in seen:
                        seen[y] = len(elements)
                        elements.append(y)
                        nxt.append(y)
            frontier = nxt
        table = [[seen[tuple(a[b[i]] for i in range(degree))] for b in elements] for a in elements]
        return cls(table, elements, name)

    def __len__(self):
        return len(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return self.table[self.table[g][x]][self.inverses[g]]

    def element_order(self, x: int) -> int:
        if x not in self._order_cache:
            k, y = 1, x
            while y != self.identity:
                y = self.table[y][x]
                k += 1
            self._order_cache[x] = k
        return self._order_cache[x]

    def is_abelian(self) -> bool:
        n = len(self)
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def p_elements(self, p: int) -> list[int]:
        return [x for x in range(len(self)) if is_power_of(self.element_order(x), p)]

    def centralizer(self, xs: Sequence[int]) -> list[int]:
        return [g for g in range(len(self)) if all(self.table[g][x] == self.table[x][g] for x in xs)]

    def conjugacy_classes(self) -> list[list[int]]:
        seen: set[int] = set()
        classes = []
        for x in range(len(self)):
            if x in seen:
                continue
            cls_ = sorted({self.conj(g, x) for g in range(len(self))})
            seen.update(cls_)
            classes.append(cls_)
        return classes

    def closure(self, xs: Sequence[int]) -> frozenset[int]:
        sub = {self.identity}
        frontier = [self.identity]
        xs = list(xs)
        while frontier:
            nxt = []
            for a in frontier:
                for x in xs:
                    b = self.table[a][x]
                    if b not in sub:
                        sub.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(sub)

    def subgroups(self) -> list[frozenset[int]]:
        """All subgroups, as joins of cyclic subgroups; sorted by (order, elements)."""
        cyclic = {self.closure([x]) for x in range(len(self))}
        subs = set(cyclic)
        frontier = set(cyclic)
        while frontier:
            nxt = set()
            for a in frontier:
                for c in cyclic:
                    if c <= a:
                        continue
                    j = self.closure(sorted(a | c))
                    if j not in subs:
                        subs.add(j)
                        nxt.add(j)
            frontier = nxt
        return sorted(subs, key=lambda s: (len(s), sorted(s)))

    def subgroup(self, elements: Sequence[int], name: str = "H") -> tuple["FiniteGroup", tuple[int, ...]]:
        """The subgroup on ``elements`` and its embedding (sub index -> self index)."""
        elems = sorted(set(elements), key=lambda x: (x != self.identity, x))
        pos = {x: i for i, x in enumerate(elems)}
        try:
            table = [[pos[self.table[a][b]] for b in elems] for a in elems]
        except KeyError:
            raise NotAGroup("subset is not closed under multiplication") from None
        return FiniteGroup(table, [self.labels[x] for x in elems], name), tuple(elems)

    def is_homomorphism(self, other: "FiniteGroup", images: Sequence[int]) -> bool:
        n = len(self)
        return all(images[self.table[a][b]] == other.table[images[a]][images[b]]
                   for a in range(n) for b in range(n))

    def element_index(self, label: Hashable) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={len(self)})"


def is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], range(n), f"C{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    pairs = [(a, b) for a in range(len(g)) for b in range(len(h))]
    idx = {pr: i for i, pr in enumerate(pairs)}
    table = [[idx[(g.table[a][c], h.table[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    labels = [(g.labels[a], h.labels[b]) for a, b in pairs]
    return FiniteGroup(table, labels, f"{g.name}x{h.name}")


def abelian(*orders: int) -> FiniteGroup:
    grp = cyclic(orders[0])
    for k in orders[1:]:
        grp = direct_product(grp, cyclic(k))
    return grp


def symmetric(n: int) -> FiniteGroup:
    if n < 2:
        return FiniteGroup([[0]], [tuple(range(n))], f"S{n}")
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return FiniteGroup.from_permutations(gens, n, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    # the 3-cycles (0 1 k) generate A_n
    gens = []
    for k in range(2, n):
        g = list(range(n))
        g[0], g[1], g[k] = 1, k, 0
        gens.append(tuple(g))
    if not gens:
        return FiniteGroup([[0]], [tuple(range(n))], f"A{n}")
    return FiniteGroup.from_permutations(gens, n, name=f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n, as permutations of the vertices."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return FiniteGroup.from_permutations([rot, ref], n, name=f"D{n}")


def quaternion() -> FiniteGroup:
    """Q8 as its left regular representation on ±1, ±i, ±j, ±k."""
    # unit quaternions (sign, axis) with axis in 1,i,j,k
    mult_axis = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    elems = [(s, a) for a in range(4) for s in (1, -1)]
    idx = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        s, a = mult_axis[(x[1], y[1])]
        return (x[0] * y[0] * s, a)

    table = [[idx[mul(x, y)] for y in elems] for x in elems]
    names = {0: "1", 1: "i", 2: "j", 3: "k"}
    labels = [("" if s > 0 else "-") + names[a] for s, a in elems]
    return FiniteGroup(table, labels, "Q8")


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], [()], "1")


def abelian_groups_up_to(order: int) -> list[FiniteGroup]:
    """One representative of each isomorphism type of abelian group of order <= ``order``."""
    out = []
    for n in range(1, order + 1):
        for invariants in _invariant_factor_lists(n):
            out.append(abelian(*invariants) if invariants else trivial_group())
    return out


def _invariant_factor_lists(n: int) -> list[list[int]]:
    """Chains d1 | d2 | ... | dk of factors > 1 with product n."""
    out: list[list[int]] = []

    def rec(remaining: int, prev: int, acc: list[int]):
        if remaining == 1:
            out.append(acc)
            return
        for d in range(prev if prev > 1 else 2, remaining + 1):
            if remaining % d == 0 and d % prev == 0:
                rest = remaining // d
                if rest == 1 or rest % d == 0:
                    rec(rest, d, acc + [d])

    rec(n, 1, [])
    return out
