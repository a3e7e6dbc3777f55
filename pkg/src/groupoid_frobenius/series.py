"""Truncated power series in one or several variables over QQ or GF(p).

A univariate :class:`PowerSeries` of precision ``D`` knows its coefficients
of ``x^0 .. x^(D-1)``.  A :class:`MultiSeries` truncates by total degree
(``deg < prec``) and may additionally cap each variable, which models the
quotient by ``x_i^cap``.  Products skip zero coefficients, so the sparse
series that show up for Honda logarithms stay cheap.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

from .scalars import QQ


class NotAUnit(ArithmeticError):
    pass


class NoConstantTermAllowed(ArithmeticError):
    pass


class InsufficientPrecision(ArithmeticError):
    pass


class NotMonomialTimesUnit(ArithmeticError):
    pass


class PowerSeries:
    __slots__ = ("coeffs", "prec", "field")

    def __init__(self, coeffs: Iterable, prec: int | None = None, field=QQ):
        cs = [field(c) for c in coeffs]
        if prec is None:
            prec = len(cs)
        cs = cs[:prec] + [field.zero] * (prec - len(cs))
        self.coeffs = cs
        self.prec = prec
        self.field = field

    # ---- constructors
    @classmethod
    def variable(cls, prec: int, field=QQ) -> "PowerSeries":
        return cls.monomial(1, 1, prec, field)

    @classmethod
    def monomial(cls, k: int, c, prec: int, field=QQ) -> "PowerSeries":
        cs = [0] * prec
        if k < prec:
            cs[k] = c
        return cls(cs, prec, field)

    @classmethod
    def constant(cls, c, prec: int, field=QQ) -> "PowerSeries":
        return cls.monomial(0, c, prec, field)

    @classmethod
    def from_terms(cls, terms: dict, prec: int, field=QQ) -> "PowerSeries":
        cs = [0] * prec
        for k, c in terms.items():
            if k < prec:
                cs[k] = c
        return cls(cs, prec, field)

    # ---- basics
    def __getitem__(self, k: int):
        return self.coeffs[k] if k < self.prec else None

    def __len__(self):
        return self.prec

    def __iter__(self):
        return iter(self.coeffs)

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    def valuation(self) -> int | None:
        return next((k for k, c in enumerate(self.coeffs) if c), None)

    def truncate(self, prec: int) -> "PowerSeries":
        if prec > self.prec:
            raise InsufficientPrecision(f"cannot raise precision {self.prec} to {prec}")
        return PowerSeries(self.coeffs[:prec], prec, self.field)

    def _same(self, other: "PowerSeries") -> int:
        if other.field != self.field:
            raise ValueError(f"mixing {self.field} and {other.field}")
        return min(self.prec, other.prec)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        d = self._same(other)
        return self.coeffs[:d] == other.coeffs[:d]

    __hash__ = None

    def __repr__(self):
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"PowerSeries({' + '.join(terms) or '0'} + O(x^{self.prec}))"

    # ---- arithmetic
    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries.constant(other, self.prec, self.field)
        d = self._same(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs[:d], other.coeffs[:d])], d, self.field)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.prec, self.field)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -self.field(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "PowerSeries":
        c = self.field(c)
        return PowerSeries([c * a for a in self.coeffs], self.prec, self.field)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        d = self._same(other)
        out = [self.field.zero] * d
        b_nz = [(j, b) for j, b in enumerate(other.coeffs[:d]) if b]
        for i, a in enumerate(self.coeffs[:d]):
            if not a:
                continue
            for j, b in b_nz:
                if i + j >= d:
                    break
                out[i + j] = out[i + j] + a * b
        return PowerSeries(out, d, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PowerSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = PowerSeries.constant(1, self.prec, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse of a unit."""
        c0 = self.coeffs[0] if self.prec else self.field.zero
        if not c0:
            raise NotAUnit("constant term is not invertible")
        inv0 = 1 / c0
        out = [self.field.zero] * self.prec
        out[0] = inv0
        nz = [(j, b) for j, b in enumerate(self.coeffs) if b and j > 0]
        for k in range(1, self.prec):
            s = self.field.zero
            for j, b in nz:
                if j > k:
                    break
                if out[k - j]:
                    s = s + b * out[k - j]
            out[k] = -s * inv0
        return PowerSeries(out, self.prec, self.field)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.inverse()
        return self.scale(1 / self.field(other))

    def derivative(self) -> "PowerSeries":
        """Exact derivative; precision drops by one."""
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.prec)], max(self.prec - 1, 0),
                           self.field)

    def hasse(self, j: int) -> "PowerSeries":
        """``j``-th Hasse derivative ``sum C(i, j) a_i x^(i-j)``; defined in any characteristic."""
        return PowerSeries([comb(i, j) * self.coeffs[i] for i in range(j, self.prec)],
                           max(self.prec - j, 0), self.field)

    def shift_down(self, k: int) -> "PowerSeries":
        """Divide by ``x^k``; the dropped coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise NotMonomialTimesUnit(f"series is not divisible by x^{k}")
        return PowerSeries(self.coeffs[k:], self.prec - k, self.field)

    def shift_up(self, k: int) -> "PowerSeries":
        return PowerSeries([self.field.zero] * k + self.coeffs, self.prec + k, self.field)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        d = self._same(inner)
        if inner.coeffs and inner.coeffs[0]:
            raise NoConstantTermAllowed("inner series has a constant term")
        inner = inner.truncate(d)
        result = PowerSeries.constant(0, d, self.field)
        support = [k for k in self.support() if k < d]
        if not support:
            return result
        power = PowerSeries.constant(1, d, self.field)
        done = 0
        for k in support:
            # jump with repeated squaring when far away, else step
            if k - done > 4:
                power = power * inner ** (k - done)
            else:
                for _ in range(k - done):
                    power = power * inner
            done = k
            result = result + power.scale(self.coeffs[k])
        return result

    def revert(self) -> "PowerSeries":
        """Compositional inverse of ``a1 x + a2 x^2 + ...`` with ``a1`` invertible."""
        if self.coeffs and self.coeffs[0]:
            raise NoConstantTermAllowed("series to revert has a constant term")
        if self.prec < 2 or not self.coeffs[1]:
            raise NotAUnit("linear coefficient is not invertible")
        d = self.prec
        if self.field.characteristic == 0:
            # Lagrange: [x^k] g = (1/k) [x^(k-1)] (x / f)^k
            phi = self.shift_down(1).inverse()
            out = [self.field.zero] * d
            power = PowerSeries.constant(1, d - 1, self.field)
            for k in range(1, d):
                power = power * phi
                out[k] = power.coeffs[k - 1] / k
            return PowerSeries(out, d, self.field)
        # fixed point g = (x - (f - a1 x)(g)) / a1, gaining a degree per round
        a1 = self.coeffs[1]
        rest = PowerSeries([self.field.zero, self.field.zero] + self.coeffs[2:], d, self.field)
        x = PowerSeries.variable(d, self.field)
        g = x / a1
        for _ in range(d):
            new = (x - rest.compose(g)) / a1
            if new == g:
                break
            g = new
        return g

    def change_field(self, field) -> "PowerSeries":
        """Reinterpret coefficients in ``field``; Q → F_p checks p-integrality."""
        return PowerSeries(self.coeffs, self.prec, field)


# ---------------------------------------------------------------- several variables

class MultiSeries:
    """Series in ``nvars`` variables: ``coeffs[(e_1..e_n)] = c`` with ``sum e < prec``."""

    __slots__ = ("nvars", "prec", "caps", "field", "coeffs")

    def __init__(self, nvars: int, coeffs: dict, prec: int, field=QQ,
                 caps: Sequence[int] | None = None):
        self.nvars = nvars
        self.prec = prec
        self.caps = tuple(caps) if caps is not None else None
        self.field = field
        out = {}
        for e, c in coeffs.items():
            if sum(e) >= prec or (self.caps and any(a >= b for a, b in zip(e, self.caps))):
                continue
            c = field(c)
            if c:
                out[tuple(e)] = c
        self.coeffs = out

    def _keep(self, e) -> bool:
        return sum(e) < self.prec and not (self.caps and any(a >= b for a, b in zip(e, self.caps)))

    @classmethod
    def variable(cls, i: int, nvars: int, prec: int, field=QQ, caps=None) -> "MultiSeries":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, prec, field, caps)

    @classmethod
    def constant(cls, c, nvars: int, prec: int, field=QQ, caps=None) -> "MultiSeries":
        return cls(nvars, {(0,) * nvars: c}, prec, field, caps)

    @classmethod
    def from_univariate(cls, f: PowerSeries, var: int, nvars: int, prec: int | None = None,
                        caps=None) -> "MultiSeries":
        prec = f.prec if prec is None else prec
        if prec > f.prec:
            raise InsufficientPrecision("univariate series is not known to that degree")
        out = {}
        for k, c in enumerate(f.coeffs[:prec]):
            if c:
                e = [0] * nvars
                e[var] = k
                out[tuple(e)] = c
        return cls(nvars, out, prec, f.field, caps)

    def like(self, coeffs: dict, prec: int | None = None) -> "MultiSeries":
        return MultiSeries(self.nvars, coeffs, self.prec if prec is None else prec, self.field, self.caps)

    def _same(self, other: "MultiSeries") -> int:
        if other.field != self.field or other.nvars != self.nvars:
            raise ValueError("incompatible series")
        return min(self.prec, other.prec)

    def __getitem__(self, e):
        return self.coeffs.get(tuple(e), self.field.zero)

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        d = self._same(other)
        a = {e: c for e, c in self.coeffs.items() if sum(e) < d}
        b = {e: c for e, c in other.coeffs.items() if sum(e) < d}
        return a == b

    __hash__ = None

    def __repr__(self):
        terms = [f"{c}*{e}" for e, c in sorted(self.coeffs.items())]
        return f"MultiSeries({' + '.join(terms) or '0'}, prec={self.prec})"

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            other = MultiSeries.constant(other, self.nvars, self.prec, self.field, self.caps)
        d = self._same(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e)
            out[e] = c if v is None else v + c
        return self.like(out, d)

    __radd__ = __add__

    def __neg__(self):
        return self.like({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiSeries) else -self.field(other))

    def scale(self, c) -> "MultiSeries":
        c = self.field(c)
        return self.like({e: c * v for e, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return self.scale(other)
        d = self._same(other)
        out: dict = {}
        items = list(other.coeffs.items())
        caps = self.caps
        for e, a in self.coeffs.items():
            se = sum(e)
            if se >= d:
                continue
            for f, b in items:
                if se + sum(f) >= d:
                    continue
                g = tuple(x + y for x, y in zip(e, f))
                if caps and any(x >= c for x, c in zip(g, caps)):
                    continue
                v = out.get(g)
                out[g] = a * b if v is None else v + a * b
        return self.like(out, d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiSeries":
        result = MultiSeries.constant(1, self.nvars, self.prec, self.field, self.caps)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def partial(self, i: int) -> "MultiSeries":
        out = {}
        for e, c in self.coeffs.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = e[i] * c
        return self.like(out, self.prec - 1)

    def set_zero(self, i: int) -> "MultiSeries":
        """Substitute 0 for variable ``i`` (the variable stays, with exponent 0)."""
        return self.like({e: c for e, c in self.coeffs.items() if not e[i]})

    def restrict(self, var: int) -> PowerSeries:
        """Univariate series in ``var`` after setting every other variable to 0."""
        out = [0] * self.prec
        for e, c in self.coeffs.items():
            if all(x == 0 for j, x in enumerate(e) if j != var):
                out[e[var]] = c
        return PowerSeries(out, self.prec, self.field)

    def permute(self, perm: Sequence[int]) -> "MultiSeries":
        """New series whose variable ``perm[i]`` is old variable ``i``."""
        out = {}
        for e, c in self.coeffs.items():
            f = [0] * self.nvars
            for i, x in enumerate(e):
                f[perm[i]] = x
            out[tuple(f)] = c
        return MultiSeries(self.nvars, out, self.prec, self.field,
                           None if self.caps is None else [self.caps[perm.index(i)] for i in range(self.nvars)])

    def embed(self, nvars: int, positions: Sequence[int], caps=None) -> "MultiSeries":
        """Same series in a larger ring, old variable ``i`` becoming ``positions[i]``."""
        out = {}
        for e, c in self.coeffs.items():
            f = [0] * nvars
            for i, x in enumerate(e):
                f[positions[i]] = x
            out[tuple(f)] = c
        return MultiSeries(nvars, out, self.prec, self.field, caps)

    def change_field(self, field) -> "MultiSeries":
        return MultiSeries(self.nvars, self.coeffs, self.prec, field, self.caps)

    def with_caps(self, caps) -> "MultiSeries":
        return MultiSeries(self.nvars, self.coeffs, self.prec, self.field, caps)

    def truncate(self, prec: int) -> "MultiSeries":
        if prec > self.prec:
            raise InsufficientPrecision(f"cannot raise precision {self.prec} to {prec}")
        return self.like(self.coeffs, prec)

    def is_zero(self) -> bool:
        return not self.coeffs


def substitute(outer: PowerSeries, inner: MultiSeries) -> MultiSeries:
    """``outer(inner)`` for ``inner`` without constant term.

    Writes ``inner = l + t`` with ``l`` linear and expands
    ``outer(l + t) = sum_j (D^j outer)(l) t^j`` with Hasse derivatives, so
    only powers of the (usually sparse) nonlinear part ``t`` are formed.
    """
    if inner.coeffs.get((0,) * inner.nvars):
        raise NoConstantTermAllowed("inner series has a constant term")
    d = min(outer.prec, inner.prec)
    F = inner.field
    linear = {}
    rest = {}
    for e, c in inner.coeffs.items():
        (linear if sum(e) == 1 else rest)[e] = c
    lin = [linear.get(tuple(1 if j == i else 0 for j in range(inner.nvars)), F.zero)
           for i in range(inner.nvars)]
    t = inner.like(rest, d)
    tv = min((sum(e) for e in rest), default=d)
    result: dict = {}
    tpow = MultiSeries.constant(1, inner.nvars, d, F, inner.caps)
    j = 0
    while j * tv < d:
        h = outer.hasse(j)
        # h(l) expanded multinomially, truncated so that deg + j*tv < d
        hl = _linear_substitution(h, lin, d - j * tv, inner.nvars, F, inner.caps)
        if hl:
            prod = inner.like(hl, d) * tpow if j else inner.like(hl, d)
            for e, c in prod.coeffs.items():
                v = result.get(e)
                result[e] = c if v is None else v + c
        j += 1
        if j * tv >= d:
            break
        tpow = tpow * t
        if tpow.is_zero():
            break
    return inner.like(result, d)


def _linear_substitution(h: PowerSeries, lin: Sequence, limit: int, nvars: int, F, caps) -> dict:
    """Coefficients of ``h(sum lin_i x_i)`` of total degree below ``limit``."""
    out: dict = {}
    active = [i for i, c in enumerate(lin) if c]
    for s in range(min(limit, h.prec)):
        hs = h.coeffs[s]
        if not hs:
            continue
        for e, mult in _compositions(s, active, nvars):
            if caps and any(x >= c for x, c in zip(e, caps)):
                continue
            c = hs * mult
            for i in active:
                if e[i]:
                    c = c * lin[i] ** e[i]
            if c:
                v = out.get(e)
                out[e] = c if v is None else v + c
    return out


def _compositions(s: int, active: Sequence[int], nvars: int):
    """Exponent vectors of total ``s`` supported on ``active``, with multinomial coefficients."""
    if not active:
        if s == 0:
            yield (0,) * nvars, 1
        return
    if len(active) == 1:
        e = [0] * nvars
        e[active[0]] = s
        yield tuple(e), 1
        return
    first, others = active[0], active[1:]
    for k in range(s + 1):
        for e, mult in _compositions(s - k, others, nvars):
            f = list(e)
            f[first] = k
            yield tuple(f), mult * comb(s, k)


def substitute_many(outer: MultiSeries, args: Sequence[MultiSeries]) -> MultiSeries:
    """``outer(args[0], ..., args[k-1])``; every argument must lack a constant term."""
    if len(args) != outer.nvars:
        raise ValueError("wrong number of arguments")
    for a in args:
        if a.coeffs.get((0,) * a.nvars):
            raise NoConstantTermAllowed("argument has a constant term")
    d = min([outer.prec] + [a.prec for a in args])
    base = args[0]
    cache: list[dict[int, MultiSeries]] = [dict() for _ in args]

    def power(i: int, k: int) -> MultiSeries:
        if k not in cache[i]:
            if k == 0:
                cache[i][k] = MultiSeries.constant(1, base.nvars, d, base.field, base.caps)
            else:
                cache[i][k] = power(i, k - 1) * args[i].truncate(d)
        return cache[i][k]

    result = MultiSeries(base.nvars, {}, d, base.field, base.caps)
    for e, c in sorted(outer.coeffs.items()):
        if sum(e) >= d:
            continue
        term = MultiSeries.constant(c, base.nvars, d, base.field, base.caps)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        result = result + term
    return result
