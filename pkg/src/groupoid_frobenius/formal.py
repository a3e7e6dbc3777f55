"""Formal group laws, residues and the Frobenius form on ``F_p[x]/[p^m](x)``.

Laws are built from a logarithm over QQ (``F = exp(log x + log y)``) and
optionally reduced mod p with a p-integrality check on every coefficient.
The Honda law of height ``n`` has ``log(x) = sum x^(p^(nk)) / p^k`` and mod p
its ``p^m``-series is the monomial ``x^(p^(nm))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .frobenius import FrobeniusAlgebra, truncated_polynomial_algebra
from .groupoid import SizeGuard
from .scalars import GF, QQ
from .series import (InsufficientPrecision, MultiSeries, NotMonomialTimesUnit, PowerSeries,
                     substitute, substitute_many)

# largest quotient size the transfer-element check will build
MAX_QUOTIENT_SIZE = 729


@dataclass(frozen=True, eq=False)
class FormalGroupLaw:
    p: int | None
    prec: int
    field: object
    law: MultiSeries  # F(x, y)
    iota: PowerSeries
    log: PowerSeries | None = None  # over QQ
    log_builder: Callable[[int], PowerSeries] | None = None
    name: str = ""

    def log_to(self, prec: int) -> PowerSeries:
        if self.log_builder is not None:
            return self.log_builder(prec)
        if self.log is not None and self.log.prec >= prec:
            return self.log.truncate(prec)
        raise InsufficientPrecision(f"logarithm not available to precision {prec}")

    @property
    def has_log(self) -> bool:
        return self.log is not None or self.log_builder is not None


def _reduce(series, field):
    return series if field == QQ else series.change_field(field)


def fgl_from_log(log: PowerSeries, p: int | None = None, prec: int | None = None,
                 log_builder: Callable[[int], PowerSeries] | None = None, name: str = ""
                 ) -> FormalGroupLaw:
    """``F(x, y) = exp(log x + log y)`` over QQ, reduced mod ``p`` if given.

    Raises NotPIntegral if some coefficient has a denominator divisible by ``p``.
    """
    prec = log.prec if prec is None else prec
    log = log.truncate(prec)
    if log.coeffs[0] or log.coeffs[1] != 1:
        raise ValueError("logarithm must start x + ...")
    exp = log.revert()
    both = MultiSeries.from_univariate(log, 0, 2) + MultiSeries.from_univariate(log, 1, 2)
    law = substitute(exp, both)
    iota = exp.compose(-log)
    field = QQ if p is None else GF(p)
    return FormalGroupLaw(p, prec, field, _reduce(law, field), _reduce(iota, field), log,
                          log_builder, name)


def honda_log(p: int, n: int, prec: int) -> PowerSeries:
    terms = {}
    k = 0
    while p ** (n * k) < prec:
        terms[p ** (n * k)] = QQ(1) / p ** k
        k += 1
    return PowerSeries.from_terms(terms, prec, QQ)


def honda_fgl(p: int, n: int, prec: int) -> FormalGroupLaw:
    """Honda law of height ``n`` over F_p to total degree ``prec``."""
    if prec < 2:
        raise ValueError("precision must be at least 2")
    return fgl_from_log(honda_log(p, n, prec), p, prec, lambda d: honda_log(p, n, d),
                        name=f"Honda(p={p}, n={n})")


def additive_fgl(prec: int, p: int | None = None) -> FormalGroupLaw:
    return fgl_from_log(PowerSeries.variable(prec), p, prec,
                        lambda d: PowerSeries.variable(d), name="additive")


def multiplicative_log(prec: int) -> PowerSeries:
    """``log(1 + x) = sum (-1)^(k+1) x^k / k``; gives ``F = x + y + xy``."""
    return PowerSeries([0] + [QQ((-1) ** (k + 1)) / k for k in range(1, prec)], prec)


# ---------------------------------------------------------------- checks

def law_defects(f: FormalGroupLaw, prec: int | None = None) -> list[str]:
    """Unit, commutativity, associativity and inverse laws to precision."""
    d = f.prec if prec is None else min(prec, f.prec)
    law = f.law.truncate(d)
    report = []
    x = PowerSeries.variable(d, f.field)
    if law.restrict(0) != x or law.restrict(1) != x:
        report.append("unit: F(x,0) or F(0,y) differs from the variable")
    if law.permute([1, 0]) != law:
        report.append("commutativity: F(x,y) != F(y,x)")
    xs = [MultiSeries.variable(i, 3, d, f.field) for i in range(3)]
    left = substitute_many(law, [substitute_many(law, [xs[0], xs[1]]), xs[2]])
    right = substitute_many(law, [xs[0], substitute_many(law, [xs[1], xs[2]])])
    if left != right:
        report.append("associativity: F(F(x,y),z) != F(x,F(y,z))")
    one = [MultiSeries.variable(0, 1, d, f.field)]
    inv = MultiSeries.from_univariate(f.iota.truncate(d), 0, 1)
    if not substitute_many(law, [one[0], inv]).is_zero():
        report.append("inverse: F(x, iota(x)) != 0")
    return report


# ---------------------------------------------------------------- p-series

def p_series(f: FormalGroupLaw, m: int, prec: int | None = None, prime: int | None = None
             ) -> PowerSeries:
    """``[p^m](x)``; via ``exp(p^m log x)`` when a logarithm is known.

    ``prime`` defaults to the law's own prime; laws over QQ need it given.
    """
    prec = f.prec if prec is None else prec
    prime = f.p if prime is None else prime
    if prime is None:
        raise ValueError("law has no prime attached")
    if f.has_log:
        log = f.log_to(prec)
        exp = log.revert()
        return _reduce(exp.compose(log.scale(prime ** m)), f.field)
    return p_series_by_substitution(f, m, prec, prime)


def n_series(f: FormalGroupLaw, k: int, prec: int | None = None) -> PowerSeries:
    """``[k](x)``, the ``k``-fold formal sum, by repeated substitution into ``F``."""
    prec = f.prec if prec is None else min(prec, f.prec)
    law = f.law.truncate(prec)
    x = MultiSeries.variable(0, 1, prec, f.field)
    total = MultiSeries(1, {}, prec, f.field)
    for _ in range(k):
        total = substitute_many(law, [x, total]) if not total.is_zero() else x
    return total.restrict(0)


def p_series_by_substitution(f: FormalGroupLaw, m: int, prec: int | None = None,
                              prime: int | None = None) -> PowerSeries:
    """``[p]`` as a ``p``-fold formal sum, composed with itself ``m`` times."""
    prec = f.prec if prec is None else min(prec, f.prec)
    once = n_series(f, f.p if prime is None else prime, prec)
    result = PowerSeries.variable(prec, f.field)
    for _ in range(m):
        result = once.compose(result)
    return result


def formal_difference(f: FormalGroupLaw, prec: int | None = None, caps=None) -> MultiSeries:
    """``z = x -_F y = F(x, iota(y))``; computed as ``exp(log x - log y)`` when possible."""
    prec = f.prec if prec is None else prec
    if f.has_log:
        log = f.log_to(prec)
        exp = log.revert()
        diff = (MultiSeries.from_univariate(log, 0, 2, caps=caps)
                - MultiSeries.from_univariate(log, 1, 2, caps=caps))
        return _reduce(substitute(exp, diff), f.field)
    x = MultiSeries.variable(0, 2, prec, f.field, caps)
    iy = MultiSeries.from_univariate(f.iota, 1, 2, prec, caps)
    return substitute_many(f.law.truncate(prec).with_caps(caps), [x, iy])


def formal_difference_by_substitution(f: FormalGroupLaw) -> MultiSeries:
    x = MultiSeries.variable(0, 2, f.prec, f.field)
    iy = MultiSeries.from_univariate(f.iota, 1, 2)
    return substitute_many(f.law, [x, iy])


def invariant_differential(f: FormalGroupLaw, prec: int | None = None) -> PowerSeries:
    """Density ``g`` of the invariant differential ``g(x) dx`` with ``g(0) = 1``.

    Computed as ``1 / (dF/dy)(x, 0)`` and, when a logarithm is present, also as
    ``log'(x)``; the two must agree wherever both are known.
    """
    from_law = f.law.partial(1).restrict(0).inverse()
    if prec is not None and prec <= from_law.prec:
        from_law = from_law.truncate(prec)
    if not f.has_log:
        if prec is not None and prec > from_law.prec:
            raise InsufficientPrecision("law not known to the requested precision")
        return from_law
    target = from_law.prec if prec is None else prec
    from_log = _reduce(f.log_to(target + 1).derivative(), f.field)
    if from_log.truncate(min(target, from_law.prec)) != from_law.truncate(min(target, from_law.prec)):
        raise ArithmeticError("1/F_y(x,0) and log'(x) disagree")
    return from_log


def differential_is_invariant(f: FormalGroupLaw) -> bool:
    """``g(F(x,y)) * dF/dx(x,y) == g(x)`` as bivariate series (true when invariant)."""
    g = invariant_differential(f)
    d = min(g.prec, f.prec - 1)
    g = g.truncate(d)
    law = f.law.truncate(d)
    left = substitute(g, law) * f.law.partial(0).truncate(d)
    return left == MultiSeries.from_univariate(g, 0, 2, d)


# ---------------------------------------------------------------- residues

def residue(numerator: PowerSeries, denominator: PowerSeries):
    """Residue of ``numerator dx / denominator`` at 0.

    The denominator must be ``x^d * unit``; the answer is the coefficient of
    ``x^(d-1)`` in ``numerator * unit^-1``.
    """
    d = denominator.valuation()
    if d is None:
        raise NotMonomialTimesUnit("denominator vanishes to its full precision")
    unit = denominator.shift_down(d)
    if d == 0:
        return numerator.field.zero
    if unit.prec < d or numerator.prec < d:
        raise InsufficientPrecision(f"need numerator and unit to precision {d}")
    quotient = numerator.truncate(d) * unit.truncate(d).inverse()
    return quotient.coeffs[d - 1]


def _bc_size(p: int, n: int, m: int) -> int:
    return p ** (n * m)


def bc_frobenius_form(p: int, n: int, m: int, max_size: int = 10_000) -> tuple:
    """``eps(x^k) = res(x^k g(x) dx / [p^m](x))`` for ``0 <= k < p^(nm)`` over F_p."""
    size = _bc_size(p, n, m)
    if size > max_size:
        raise SizeGuard(f"quotient of size {size} exceeds {max_size}")
    law = honda_fgl(p, n, 2)  # carries the log builder; precision set per call
    denom = p_series(law, m, 2 * size)
    g = invariant_differential_to(law, size)
    out = []
    for k in range(size):
        num = g.shift_up(k).truncate(size)
        out.append(residue(num, denom))
    return tuple(out)


def invariant_differential_to(f: FormalGroupLaw, prec: int) -> PowerSeries:
    """``log'`` reduced mod p to the requested precision (needs a logarithm)."""
    return _reduce(f.log_to(prec + 1).derivative(), f.field)


def expected_form_pattern(p: int, n: int, m: int) -> tuple:
    """Positions where the Frobenius form is 1: ``N-1`` for ``n >= 2``, ``p^m - p^j`` for ``n = 1``."""
    size = _bc_size(p, n, m)
    if n >= 2:
        ones = {size - 1}
    else:
        ones = {p ** m - p ** j for j in range(m + 1)}
    return tuple(1 if k in ones else 0 for k in range(size))


def bc_frobenius_algebra(p: int, n: int, m: int) -> FrobeniusAlgebra:
    size = _bc_size(p, n, m)
    eps = bc_frobenius_form(p, n, m)
    return truncated_polynomial_algebra(size, eps, GF(p))


# ---------------------------------------------------------------- transfer element

class GridModP:
    """Elements of ``F_p[x, y] / (x^N, y^N)`` as ``N×N`` integer arrays."""

    def __init__(self, array: np.ndarray, p: int):
        self.a = np.asarray(array, dtype=np.int64) % p
        self.p = p

    @classmethod
    def from_series(cls, s: MultiSeries, size: int, p: int) -> "GridModP":
        a = np.zeros((size, size), dtype=np.int64)
        for (i, j), c in s.coeffs.items():
            if i < size and j < size:
                a[i, j] = int(c)
        return cls(a, p)

    @classmethod
    def one(cls, size: int, p: int) -> "GridModP":
        a = np.zeros((size, size), dtype=np.int64)
        a[0, 0] = 1
        return cls(a, p)

    def __mul__(self, other: "GridModP") -> "GridModP":
        n = self.a.shape[0]
        out = np.zeros_like(self.a)
        b = other.a
        for i, j in zip(*np.nonzero(self.a)):
            out[i:, j:] += self.a[i, j] * b[:n - i, :n - j]
            if (i + j) % 64 == 0:
                out %= self.p
        return GridModP(out, self.p)

    def __add__(self, other: "GridModP") -> "GridModP":
        return GridModP(self.a + other.a, self.p)

    def scale(self, c: int) -> "GridModP":
        return GridModP(self.a * int(c), self.p)

    def __pow__(self, k: int) -> "GridModP":
        result = GridModP.one(self.a.shape[0], self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result


@dataclass(frozen=True)
class TransferReport:
    ok: bool
    epsilon_applied: tuple  # (eps ⊗ 1)(c) as coefficients of y^j
    size: int
    problems: tuple = ()


def transfer_element(p: int, n: int, m: int, max_size: int = MAX_QUOTIENT_SIZE) -> GridModP:
    """``c = <p^m>(x -_F y)`` in ``F_p[x, y] / (x^N, y^N)``, ``N = p^(nm)``.

    Degrees up to ``2N-2`` survive in the quotient; ``<p^m>`` is computed to
    that degree and ``z`` to the degree those powers need.
    """
    size = _bc_size(p, n, m)
    if size > max_size:
        raise SizeGuard(f"quotient of size {size} exceeds {max_size}")
    top = 2 * size - 2
    law = honda_fgl(p, n, 2)
    bracket = p_series(law, m, top + 2).shift_down(1)  # <p^m>(t), known below t^(top+1)
    low = bracket.valuation()
    if low is None:
        raise ArithmeticError("<p^m> vanishes to precision")
    # z^k with k >= low only needs z below total degree top - low + 2
    z_prec = max(top - low + 2, 2)
    z = formal_difference(law, z_prec, caps=(size, size))
    zg = GridModP.from_series(z, size, p)
    total = GridModP(np.zeros((size, size), dtype=np.int64), p)
    for k in bracket.support():
        if k > top:
            break
        total = total + (zg ** k).scale(int(bracket.coeffs[k]))
    return total


def transfer_element_check(p: int, n: int, m: int, max_size: int = MAX_QUOTIENT_SIZE
                           ) -> TransferReport:
    """``(eps ⊗ 1)(c) = 1`` with ``eps`` the residue Frobenius form."""
    size = _bc_size(p, n, m)
    eps = np.array([int(e) for e in bc_frobenius_form(p, n, m)], dtype=np.int64)
    c = transfer_element(p, n, m, max_size)
    applied = (eps @ c.a) % p
    expected = np.zeros(size, dtype=np.int64)
    expected[0] = 1
    ok = bool(np.array_equal(applied, expected))
    problems = () if ok else ("(eps⊗1)(c) is not the constant 1",)
    return TransferReport(ok, tuple(int(v) for v in applied), size, problems)
