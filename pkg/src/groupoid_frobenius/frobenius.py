"""Commutative Frobenius algebras over QQ or GF(p).

Structure constants are sparse: ``mu[i][j]`` is a dict ``{k: c}`` giving
``e_i e_j = sum c e_k``.  Comultiplications are stored the same way,
``psi[k]`` being a dict ``{(a, b): c}``.  Class-function algebras are
diagonal and polynomial quotients are banded, so every axiom check below
costs roughly the number of nonzero structure constants rather than a
power of the dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from . import linalg
from .linalg import SingularMatrix
from .scalars import QQ


class DegenerateForm(ArithmeticError):
    """The bilinear form ``b(x, y) = eps(x y)`` is singular."""


class NotCommAssoc(ValueError):
    pass


SparseVec = dict
SparseTensor = dict


def _acc(target: dict, key, value):
    v = target.get(key)
    v = value if v is None else v + value
    if v:
        target[key] = v
    else:
        target.pop(key, None)


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


@dataclass(frozen=True, eq=False)
class FrobeniusAlgebra:
    field: object
    dim: int
    labels: tuple
    mu: tuple  # mu[i][j] = {k: c}
    eps: tuple
    gram: tuple  # b(e_i, e_j)
    gram_inverse: tuple
    eta: tuple
    psi: tuple  # psi[k] = {(a, b): c}

    # ---- derived data
    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                ab = a * b
                for k, c in self.mu[i][j].items():
                    _acc(out, k, ab * c)
        return out

    def apply_eps(self, x: dict):
        s = self.field.zero
        for i, a in x.items():
            s = s + a * self.eps[i]
        return s

    def pair(self, x: dict, y: dict):
        """``b(x, y)``."""
        s = self.field.zero
        for i, a in x.items():
            row = self.gram[i]
            for j, b in y.items():
                if row[j]:
                    s = s + a * b * row[j]
        return s

    def comultiply(self, x: dict) -> dict:
        out: dict = {}
        for k, a in x.items():
            for ab, c in self.psi[k].items():
                _acc(out, ab, a * c)
        return out

    def basis(self, i: int) -> dict:
        return {i: self.field.one}

    def unit(self) -> dict:
        return _clean(dict(enumerate(self.eta)))

    def dense(self, x: dict) -> list:
        return [x.get(i, self.field.zero) for i in range(self.dim)]

    @property
    def copairing(self) -> dict:
        """``c = psi(eta)`` in ``A⊗A``."""
        return self.comultiply(self.unit())

    def with_psi(self, psi: Sequence[dict]) -> "FrobeniusAlgebra":
        """Copy with a replaced comultiplication (for defect testing)."""
        return replace(self, psi=tuple(dict(p) for p in psi))

    def with_eps(self, eps: Sequence) -> "FrobeniusAlgebra":
        return complete_frobenius(self.dim, self.mu, eps, self.field, self.labels)


def _normalize_mu(dim: int, mu, field) -> tuple:
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            entry = mu[i][j]
            if isinstance(entry, dict):
                d = {k: field(c) for k, c in entry.items()}
            else:
                d = {k: field(c) for k, c in enumerate(entry)}
            row.append(_clean(d))
        rows.append(tuple(row))
    return tuple(rows)


def _nonzero_cols(mu) -> list[list[int]]:
    return [[j for j, d in enumerate(row) if d] for row in mu]


def commutativity_defects(dim: int, mu) -> list[str]:
    for i in range(dim):
        for j in range(i):
            if mu[i][j] != mu[j][i]:
                return [f"commutativity: e{i}·e{j} != e{j}·e{i}"]
    return []


def associativity_defects(dim: int, mu) -> list[str]:
    cols = _nonzero_cols(mu)
    for i in range(dim):
        for j in range(dim):
            left: dict = {}
            for l, c in mu[i][j].items():
                for k in cols[l]:
                    for r, d in mu[l][k].items():
                        _acc(left, (k, r), c * d)
            right: dict = {}
            for k in cols[j]:
                for l, c in mu[j][k].items():
                    for r, d in mu[i][l].items():
                        _acc(right, (k, r), c * d)
            if left != right:
                return [f"associativity: (e{i}·e{j})·x != e{i}·(e{j}·x)"]
    return []


def complete_frobenius(dim: int, mu, eps: Sequence, field=QQ, labels: Sequence | None = None
                       ) -> FrobeniusAlgebra:
    """Derive the unit and comultiplication from ``(mu, eps)``.

    ``eta`` solves ``b(-, eta) = eps``; ``psi(x) = sum_i x e_i ⊗ e_i^∨`` with
    ``e_i^∨`` the ``b``-dual basis, which is the transpose of ``mu``.
    """
    mu = _normalize_mu(dim, mu, field)
    eps = tuple(field(x) for x in eps)
    defects = commutativity_defects(dim, mu) or associativity_defects(dim, mu)
    if defects:
        raise NotCommAssoc(defects[0])
    gram = [[field.zero] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            s = field.zero
            for k, c in mu[i][j].items():
                if eps[k]:
                    s = s + c * eps[k]
            gram[i][j] = s
    try:
        ginv = linalg.inverse(gram, field)
    except SingularMatrix:
        raise DegenerateForm("b = eps∘mu is singular") from None
    eta = tuple(linalg.matvec(ginv, eps, field))
    # dual basis e_i^∨ = sum_j ginv[j][i] e_j
    dual = [[(j, ginv[j][i]) for j in range(dim) if ginv[j][i]] for i in range(dim)]
    psi = []
    for k in range(dim):
        pk: dict = {}
        for i in range(dim):
            for l, c in mu[k][i].items():
                for j, d in dual[i]:
                    _acc(pk, (l, j), c * d)
        psi.append(pk)
    return FrobeniusAlgebra(field, dim, tuple(labels) if labels is not None else tuple(range(dim)),
                            mu, eps, tuple(tuple(r) for r in gram), tuple(tuple(r) for r in ginv),
                            eta, tuple(psi))


# ---------------------------------------------------------------- axioms

def verify_axioms(a: FrobeniusAlgebra) -> list[str]:
    """Exact check of every Frobenius axiom; empty iff all hold."""
    n = a.dim
    report = []
    report += commutativity_defects(n, a.mu)
    report += associativity_defects(n, a.mu)
    unit = a.unit()
    for j in range(n):
        if a.multiply(unit, a.basis(j)) != a.basis(j):
            report.append(f"unit: eta·e{j} != e{j}")
            break
    for k in range(n):
        left: dict = {}
        right: dict = {}
        for (x, y), c in a.psi[k].items():
            if a.eps[x]:
                _acc(left, y, a.eps[x] * c)
            if a.eps[y]:
                _acc(right, x, a.eps[y] * c)
        if left != a.basis(k) or right != a.basis(k):
            report.append(f"counit: (eps⊗1)psi(e{k}) or (1⊗eps)psi(e{k}) != e{k}")
            break
    for k in range(n):
        left: dict = {}
        right: dict = {}
        for (x, y), c in a.psi[k].items():
            for (u, v), d in a.psi[x].items():
                _acc(left, (u, v, y), c * d)
            for (u, v), d in a.psi[y].items():
                _acc(right, (x, u, v), c * d)
        if left != right:
            report.append(f"coassociativity: fails on e{k}")
            break
    report += interchange_defects(a)
    for i in range(n):
        for j in range(i):
            if a.gram[i][j] != a.gram[j][i]:
                report.append("symmetry: b is not symmetric")
                break
        else:
            continue
        break
    c = a.copairing
    for x in range(n):
        left: dict = {}
        right: dict = {}
        for (u, v), d in c.items():
            if a.gram[x][u]:
                _acc(left, v, a.gram[x][u] * d)
            if a.gram[v][x]:
                _acc(right, u, a.gram[v][x] * d)
        if left != a.basis(x) or right != a.basis(x):
            report.append(f"duality: (b⊗1)(1⊗c) or (1⊗b)(c⊗1) != 1 at e{x}")
            break
    return report


def interchange_defects(a: FrobeniusAlgebra) -> list[str]:
    """``psi∘mu = (mu⊗1)(1⊗psi) = (1⊗mu)(psi⊗1)`` on every pair of basis vectors."""
    n = a.dim
    for i in range(n):
        for j in range(n):
            direct = a.comultiply(a.mu[i][j])
            left: dict = {}
            for (x, y), c in a.psi[j].items():
                for r, d in a.mu[i][x].items():
                    _acc(left, (r, y), c * d)
            right: dict = {}
            for (x, y), c in a.psi[i].items():
                for r, d in a.mu[y][j].items():
                    _acc(right, (x, r), c * d)
            if direct != left or direct != right:
                return [f"interchange: psi(e{i}·e{j}) differs from a module-map expansion"]
    return []


# ---------------------------------------------------------------- adjoints

def adjoint_defects(a: FrobeniusAlgebra) -> list[str]:
    """``eta = eps^t`` and ``psi = mu^t`` with respect to ``b`` and ``b⊗b``."""
    n = a.dim
    report = []
    # b(x, eta) = eps(x)
    for x in range(n):
        if a.pair(a.basis(x), a.unit()) != a.eps[x]:
            report.append(f"eta != eps^t at e{x}")
            break
    gram_nz = [[(y, a.gram[r][y]) for y in range(n) if a.gram[r][y]] for r in range(n)]
    # expected[k][(y, z)] = b(e_k, e_y e_z)
    expected: list[dict] = [dict() for _ in range(n)]
    for y in range(n):
        for z in range(n):
            for l, c in a.mu[y][z].items():
                for k, g in gram_nz[l]:
                    _acc(expected[k], (y, z), c * g)
    for k in range(n):
        got: dict = {}
        for (u, v), c in a.psi[k].items():
            for y, g in gram_nz[u]:
                for z, h in gram_nz[v]:
                    _acc(got, (y, z), c * g * h)
        if got != expected[k]:
            report.append(f"psi != mu^t at e{k}")
            break
    return report


def counit_is_unique(a: FrobeniusAlgebra) -> bool:
    """``eps`` is the only covector ``phi`` with ``(phi⊗1) c = eta``.

    The system is ``C^T phi = eta`` with ``C`` the copairing matrix; it has
    the unique solution ``eps`` exactly when ``C`` is invertible.
    """
    F, n = a.field, a.dim
    cmat = [[F.zero] * n for _ in range(n)]
    for (u, v), d in a.copairing.items():
        cmat[v][u] = d
    try:
        phi = linalg.solve(cmat, list(a.eta), F)
    except SingularMatrix:
        return False
    return tuple(phi) == a.eps


def comultiplication_is_unique(a: FrobeniusAlgebra) -> bool:
    """The defining system ``(B⊗B) vec(psi_k) = vec(M_k)`` has a unique solution.

    ``B⊗B`` is invertible iff ``B`` is, so this is a rank check on ``B``.
    """
    return linalg.rank([list(r) for r in a.gram]) == a.dim


# ---------------------------------------------------------------- linear maps

@dataclass(frozen=True, eq=False)
class LinearMap:
    """``matrix[i][j]`` is the ``e_i`` coefficient of the image of ``e_j``."""

    matrix: tuple
    source: FrobeniusAlgebra
    target: FrobeniusAlgebra

    def __post_init__(self):
        m = tuple(tuple(r) for r in self.matrix)
        object.__setattr__(self, "matrix", m)
        if len(m) != self.target.dim or any(len(r) != self.source.dim for r in m):
            raise ValueError("matrix shape does not match source/target dimensions")

    def then(self, other: "LinearMap") -> "LinearMap":
        """``other ∘ self``."""
        return LinearMap(linalg.matmul([list(r) for r in other.matrix], [list(r) for r in self.matrix],
                                       self.source.field), self.source, other.target)

    def equals(self, other: "LinearMap") -> bool:
        return self.matrix == other.matrix


def identity_map(a: FrobeniusAlgebra) -> LinearMap:
    return LinearMap(linalg.identity(a.dim, a.field), a, a)


def transpose(f: LinearMap) -> LinearMap:
    """The unique ``f^t`` with ``b_Y(f x, y) = b_X(x, f^t y)``."""
    F = f.source.field
    mat = linalg.matmul(linalg.matmul([list(r) for r in f.source.gram_inverse],
                                      linalg.transpose([list(r) for r in f.matrix]), F),
                        [list(r) for r in f.target.gram], F)
    return LinearMap(mat, f.target, f.source)


def ground_algebra(field=QQ) -> FrobeniusAlgebra:
    """The field itself, ``eps = 1``."""
    return complete_frobenius(1, [[{0: 1}]], [1], field)


def eps_map(a: FrobeniusAlgebra) -> LinearMap:
    return LinearMap([list(a.eps)], a, ground_algebra(a.field))


def eta_map(a: FrobeniusAlgebra) -> LinearMap:
    return LinearMap([[x] for x in a.eta], ground_algebra(a.field), a)


def tensor_algebra(a: FrobeniusAlgebra, b: FrobeniusAlgebra) -> FrobeniusAlgebra:
    """``A⊗B`` with basis ``(i, j) -> i * dim_B + j`` and ``eps = eps_A ⊗ eps_B``."""
    n, m = a.dim, b.dim
    mu = [[None] * (n * m) for _ in range(n * m)]
    for i1 in range(n):
        for j1 in range(m):
            for i2 in range(n):
                for j2 in range(m):
                    d: dict = {}
                    for k, c in a.mu[i1][i2].items():
                        for l, e in b.mu[j1][j2].items():
                            _acc(d, k * m + l, c * e)
                    mu[i1 * m + j1][i2 * m + j2] = d
    eps = [x * y for x in a.eps for y in b.eps]
    labels = [(x, y) for x in a.labels for y in b.labels]
    return complete_frobenius(n * m, mu, eps, a.field, labels)


def tensor_maps(f: LinearMap, g: LinearMap, source: FrobeniusAlgebra, target: FrobeniusAlgebra
                ) -> LinearMap:
    return LinearMap(linalg.kron([list(r) for r in f.matrix], [list(r) for r in g.matrix],
                                 f.source.field), source, target)


def multiplication_map(a: FrobeniusAlgebra, x: dict) -> LinearMap:
    """Matrix of ``y ↦ x y``."""
    cols = [a.multiply(x, a.basis(j)) for j in range(a.dim)]
    return LinearMap([[cols[j].get(i, a.field.zero) for j in range(a.dim)] for i in range(a.dim)], a, a)


# ---------------------------------------------------------------- trace form

def trace_form(a: FrobeniusAlgebra) -> tuple:
    """``theta(e_i)`` = trace of multiplication by ``e_i``."""
    F = a.field
    out = []
    for i in range(a.dim):
        s = F.zero
        for j in range(a.dim):
            c = a.mu[i][j].get(j)
            if c:
                s = s + c
        out.append(s)
    return tuple(out)


def alpha_element(a: FrobeniusAlgebra) -> tuple:
    """``alpha = mu(psi(eta(1)))`` as a dense coordinate vector."""
    out: dict = {}
    for (u, v), d in a.copairing.items():
        for k, c in a.mu[u][v].items():
            _acc(out, k, d * c)
    return tuple(a.dense(out))


def trace_identities(a: FrobeniusAlgebra) -> list[str]:
    """``theta = eps∘mu∘psi`` and ``theta(x) = b(alpha, x)`` on every basis vector."""
    theta = trace_form(a)
    alpha = _clean(dict(enumerate(alpha_element(a))))
    report = []
    for k in range(a.dim):
        via_psi = a.field.zero
        for (u, v), c in a.psi[k].items():
            if a.gram[u][v]:
                via_psi = via_psi + c * a.gram[u][v]
        if via_psi != theta[k]:
            report.append(f"theta != eps∘mu∘psi at e{k}")
            break
    for k in range(a.dim):
        if a.pair(alpha, a.basis(k)) != theta[k]:
            report.append(f"theta != b(alpha, -) at e{k}")
            break
    return report


@dataclass(frozen=True)
class SeparableProbe:
    theta_nondegenerate: bool
    has_nilpotent: bool
    radical_basis: tuple  # nilradical, as coordinate vectors


def separable_probe(a: FrobeniusAlgebra) -> SeparableProbe:
    """Nondegeneracy of ``(x, y) ↦ theta(x y)`` and the nilradical.

    In characteristic 0 the kernel of the theta-Gram is exactly the
    nilradical.  In characteristic p the kernel can be larger (theta(1) = dim
    may vanish), so there the radical is computed as the kernel of the
    linear map ``x ↦ x^(p^k)`` with ``p^k >= dim``.
    """
    theta = trace_form(a)
    F, n = a.field, a.dim
    gram = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = F.zero
            for k, c in a.mu[i][j].items():
                if theta[k]:
                    s = s + c * theta[k]
            gram[i][j] = s
    kernel = linalg.nullspace(gram, F)
    if F.characteristic == 0:
        radical = kernel
    else:
        p = F.characteristic
        power = 1
        while power < n:
            power *= p
        cols = []
        for j in range(n):
            x = a.basis(j)
            y = a.basis(j)
            for _ in range(power - 1):
                y = a.multiply(y, x)
            cols.append(a.dense(y))
        radical = linalg.nullspace(linalg.transpose(cols), F)
    return SeparableProbe(not kernel, bool(radical), tuple(tuple(v) for v in radical))


def is_nilpotent(a: FrobeniusAlgebra, x: dict) -> bool:
    power = dict(x)
    for _ in range(a.dim + 1):
        if not power:
            return True
        power = a.multiply(power, x)
    return not power


# ---------------------------------------------------------------- stock algebras

def group_algebra(table: Sequence[Sequence[int]], field=QQ) -> FrobeniusAlgebra:
    """``k[G]`` for an abelian group table, ``eps`` = coefficient of the identity."""
    n = len(table)
    ident = next(e for e in range(n) if all(table[e][x] == x for x in range(n)))
    mu = [[{table[i][j]: 1} for j in range(n)] for i in range(n)]
    eps = [1 if i == ident else 0 for i in range(n)]
    return complete_frobenius(n, mu, eps, field)


def truncated_polynomial_algebra(size: int, eps: Sequence, field=QQ) -> FrobeniusAlgebra:
    """``k[x]/x^size`` with basis ``1, x, ..., x^(size-1)``."""
    mu = [[({i + j: 1} if i + j < size else {}) for j in range(size)] for i in range(size)]
    return complete_frobenius(size, mu, eps, field, [f"x^{i}" for i in range(size)])


def full_report(a: FrobeniusAlgebra) -> list[str]:
    """Every exact check this module knows, concatenated."""
    report = verify_axioms(a) + adjoint_defects(a) + trace_identities(a)
    if not counit_is_unique(a):
        report.append("counit is not the unique solution of (phi⊗1)c = eta")
    if not comultiplication_is_unique(a):
        report.append("comultiplication is not uniquely determined")
    return report
