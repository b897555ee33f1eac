"""Exact univariate and sparse multivariate polynomial algebra.

Coefficients are exact scalars (rationals or Q(w) elements).  Univariate
polynomials are dense ascending coefficient tuples; multivariate ones are
sparse maps from exponent tuples.  Only what the verification needs is
here: ring ops, division, gcd, squarefree splitting, resultants, series
evaluation, and reduction modulo a single multivariate divisor.
"""

from __future__ import annotations

import heapq

from .scalars import QQ, ZERO, ONE, scalar_inv
from .series import PuiseuxSeries, ps_div, ps_mul

__all__ = [
    "UniPoly",
    "RationalMap",
    "MultiPoly",
    "squarefree_multiplicities",
    "resultant",
    "rational_roots",
]


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [QQ(c) if isinstance(c, int) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basics ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k <= self.degree else ZERO

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "poly(0)"
        return "poly(" + " + ".join(f"{c}*u^{k}" for k, c in enumerate(self.coeffs) if c) + ")"

    # -- ring ops ---------------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self.coeffs or not other.coeffs:
                return UniPoly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return UniPoly(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if not c:
            return UniPoly()
        return UniPoly([c * x for x in self.coeffs])

    def __pow__(self, n: int):
        out, base, n = UniPoly([ONE]), self, int(n)
        if n < 0:
            raise ValueError("negative polynomial power")
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift_mul_x(self, k: int) -> "UniPoly":
        if not self.coeffs:
            return self
        return UniPoly([ZERO] * k + list(self.coeffs))

    # -- division ---------------------------------------------------------
    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        inv = scalar_inv(other.lc)
        quot = [ZERO] * (dq + 1)
        oc = other.coeffs
        for k in range(dq, -1, -1):
            c = rem[k + len(oc) - 1] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(oc):
                    rem[k + j] = rem[k + j] - c * b
        return UniPoly(quot), UniPoly(rem[: len(oc) - 1])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def divexact(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(scalar_inv(self.lc))

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
            if not b.is_zero():
                b = b.monic()
        return a.monic() if not a.is_zero() else a

    # -- calculus / evaluation ---------------------------------------------
    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def eval_series(self, s: PuiseuxSeries) -> PuiseuxSeries:
        """Horner evaluation at a series with positive valuation or at a unit."""
        out = PuiseuxSeries.zero(s.order_exponent, s.grid)
        for c in reversed(self.coeffs):
            out = ps_mul(out, s)
            if c:
                out = out + PuiseuxSeries.const(c, out.order_exponent, out.grid)
        return out

    def compose(self, other: "UniPoly") -> "UniPoly":
        out = UniPoly()
        for c in reversed(self.coeffs):
            out = out * other + UniPoly([c])
        return out


def _as_poly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    return UniPoly([x])


def poly(*coeffs) -> UniPoly:
    """Polynomial from ascending coefficients given as ints/rationals."""
    return UniPoly([QQ(c) if isinstance(c, (int, str)) else c for c in coeffs])


X = UniPoly([ZERO, ONE])


def squarefree_multiplicities(p: UniPoly):
    """Yun splitting: [(monic squarefree factor, multiplicity)], pairwise coprime."""
    if p.is_zero():
        raise ValueError("squarefree split of the zero polynomial")
    if p.degree == 0:
        return []
    p = p.monic()
    d = p.derivative()
    a = p.gcd(d)
    b = p.divexact(a)
    c = d.divexact(a)
    out = []
    i = 1
    while b.degree > 0:
        d2 = c - b.derivative()
        f = b.gcd(d2)
        if f.degree > 0:
            out.append((f, i))
        b = b.divexact(f)
        c = d2.divexact(f)
        i += 1
    return out


def resultant(p: UniPoly, q: UniPoly):
    """Resultant via the Sylvester determinant (exact Gaussian elimination)."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    m, n = p.degree, q.degree
    if m == 0:
        return p.lc ** n
    if n == 0:
        return q.lc ** m
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([ZERO] * i + pc + [ZERO] * (size - m - 1 - i))
    for i in range(m):
        rows.append([ZERO] * i + qc + [ZERO] * (size - n - 1 - i))
    det = ONE
    for col in range(size):
        piv = None
        for r in range(col, size):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pivval = rows[col][col]
        det = det * pivval
        inv = scalar_inv(pivval)
        for r in range(col + 1, size):
            f = rows[r][col]
            if f:
                f = f * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return det


def rational_roots(p: UniPoly):
    """All rational roots of a rational-coefficient polynomial."""
    if p.is_zero():
        raise ValueError("every rational is a root of 0")
    den = 1
    for c in p.coeffs:
        den = den * QQ(c).denominator // _gcd_int(den, QQ(c).denominator)
    ic = [int(QQ(c) * den) for c in p.coeffs]
    k = 0
    while ic[k] == 0:
        k += 1
    roots = [] if k == 0 else [QQ(0)]
    a0, an = abs(ic[k]), abs(ic[-1])
    for r in _divisors(a0):
        for s in _divisors(an):
            for cand in (QQ(r, s), QQ(-r, s)):
                if cand not in roots and not p(cand):
                    roots.append(cand)
    return sorted(roots)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


class RationalMap:
    """Quotient num/den of exact polynomials, kept coprime with monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly = None, reduce: bool = True):
        den = UniPoly([ONE]) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("rational map with zero denominator")
        if reduce and num and den.degree > 0:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num.divexact(g), den.divexact(g)
        if not den.is_zero() and den.lc != ONE:
            inv = scalar_inv(den.lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            other = RationalMap(_as_poly(other))
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"

    def __add__(self, other):
        other = other if isinstance(other, RationalMap) else RationalMap(_as_poly(other))
        return RationalMap(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalMap(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-(other if isinstance(other, RationalMap) else RationalMap(_as_poly(other))))

    def __mul__(self, other):
        other = other if isinstance(other, RationalMap) else RationalMap(_as_poly(other))
        return RationalMap(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = other if isinstance(other, RationalMap) else RationalMap(_as_poly(other))
        return RationalMap(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int):
        if n < 0:
            return RationalMap(self.den ** (-n), self.num ** (-n))
        return RationalMap(self.num ** n, self.den ** n, reduce=False)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def eval_series(self, s: PuiseuxSeries) -> PuiseuxSeries:
        return ps_div(self.num.eval_series(s), self.den.eval_series(s))

    def compose_rational(self, other: "RationalMap", reduce: bool = True) -> "RationalMap":
        """self(other) by homogeneous evaluation, exact for any degrees."""
        p, q = other.num, other.den
        d = max(self.num.degree, self.den.degree)
        powers_p = [UniPoly([ONE])]
        powers_q = [UniPoly([ONE])]
        for _ in range(d):
            powers_p.append(powers_p[-1] * p)
            powers_q.append(powers_q[-1] * q)

        def lift(f: UniPoly) -> UniPoly:
            out = UniPoly()
            for k in range(f.degree + 1):
                c = f[k]
                if c:
                    out = out + (powers_p[k] * powers_q[d - k]).scale(c)
            return out

        return RationalMap(lift(self.num), lift(self.den), reduce=reduce)


class MultiPoly:
    """Sparse multivariate polynomial: exponent tuple -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for mono, c in (terms or {}).items():
            if c:
                t[tuple(mono)] = c
        self.terms = t

    @staticmethod
    def variable(i: int, nvars: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return MultiPoly({tuple(e): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly(out)

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly(out)

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return MultiPoly()
        return MultiPoly({m: c * x for m, x in self.terms.items()})

    def __pow__(self, n: int):
        nv = self.nvars
        out = MultiPoly({(0,) * nv: ONE}) if nv is not None else MultiPoly({(): ONE})
        base, n = self, int(n)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @property
    def nvars(self):
        for m in self.terms:
            return len(m)
        return None

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def diff(self, i: int) -> "MultiPoly":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                m2 = list(m)
                m2[i] -= 1
                out[tuple(m2)] = c * m[i]
        return MultiPoly(out)

    def eval_series(self, values) -> PuiseuxSeries:
        """Substitute a PuiseuxSeries per variable; exact with order tracking."""
        acc = None
        for m, c in sorted(self.terms.items()):
            term = None
            for i, e in enumerate(m):
                for _ in range(e):
                    term = values[i] if term is None else ps_mul(term, values[i])
            if term is None:
                term = PuiseuxSeries.const(ONE, min(v.order_exponent for v in values))
            term = term.scale(c)
            acc = term if acc is None else acc + term
        if acc is None:
            return PuiseuxSeries.zero(min(v.order_exponent for v in values))
        return acc

    def reduce_mod(self, q: "MultiPoly", var_order=None) -> "MultiPoly":
        """Remainder of long division by the single divisor q.

        Monomials are ordered lexicographically in var_order; the leading
        monomial of q is cancelled wherever it divides a monomial of the
        dividend.  For a single divisor the remainder is 0 exactly when q
        divides the dividend.
        """
        if q.is_zero():
            raise ZeroDivisionError("reduction modulo the zero polynomial")
        nv = q.nvars
        perm = tuple(var_order) if var_order is not None else tuple(range(nv))

        def key(m):
            return tuple(m[i] for i in perm)

        lt = max(q.terms, key=key)
        ltc = q.terms[lt]
        rest = [(m, c) for m, c in q.terms.items() if m != lt]
        work = dict(self.terms)
        heap = [_negkey(key(m)) for m in work]
        heapq.heapify(heap)
        remainder = {}
        while heap:
            nk = heapq.heappop(heap)
            m = _unnegkey(nk, perm)
            if m not in work:
                continue
            c = work.pop(m)
            if all(a >= b for a, b in zip(m, lt)):
                f = c * scalar_inv(ltc)
                shift = tuple(a - b for a, b in zip(m, lt))
                for m2, c2 in rest:
                    mm = tuple(a + b for a, b in zip(m2, shift))
                    s = work.get(mm, ZERO) - f * c2
                    if s:
                        if mm not in work:
                            heapq.heappush(heap, _negkey(key(mm)))
                        work[mm] = s
                    else:
                        work.pop(mm, None)
            else:
                remainder[m] = c
        return MultiPoly(remainder)


def mpoly_reduce_mod(p: MultiPoly, q: MultiPoly, var_order=None) -> MultiPoly:
    """Remainder of p modulo the single multivariate divisor q."""
    return p.reduce_mod(q, var_order)


def _negkey(k):
    return tuple(-x for x in k)


def _unnegkey(nk, perm):
    k = tuple(-x for x in nk)
    m = [0] * len(k)
    for pos, i in enumerate(perm):
        m[i] = k[pos]
    return tuple(m)
