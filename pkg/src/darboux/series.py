"""Truncated Puiseux series over exact scalars.

A series lives on an exponent grid 1/D: it is determined by integers
``lead <= order`` (both in units of 1/D) and a coefficient tuple for the
exponents lead/D, (lead+1)/D, ..., (order-1)/D.  The series is known
*exactly* for every exponent below order/D and unknown beyond; every
operation propagates the tightest provable bound, so a claimed coefficient
is never an artifact of silent precision loss.

Canonical form: coeffs[0] != 0, except for the zero series which carries
an empty tuple and lead == order.
"""

from __future__ import annotations

from math import gcd

from .scalars import QQ, ZERO, ONE, scalar_inv

__all__ = [
    "PuiseuxSeries",
    "ps_mul",
    "ps_div",
    "ps_compose",
    "ps_pow",
    "first_mismatch",
    "PowBaseError",
    "ValuationError",
]


class PowBaseError(ValueError):
    """Fractional power of a series whose unit coefficient is not 1."""


class ValuationError(ValueError):
    """Composition argument without strictly positive valuation."""


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _ceil_div(n, d):
    return -((-n) // d)


class PuiseuxSeries:
    __slots__ = ("grid", "lead", "coeffs", "order")

    def __init__(self, grid: int, lead: int, coeffs, order: int):
        # trusts its inputs; use make() to canonicalize
        self.grid = grid
        self.lead = lead
        self.coeffs = tuple(coeffs)
        self.order = order

    @staticmethod
    def make(grid: int, lead: int, coeffs, order: int) -> "PuiseuxSeries":
        if grid < 1:
            raise ValueError("grid must be a positive integer")
        coeffs = list(coeffs)
        if len(coeffs) != order - lead:
            raise ValueError("coefficient count does not match lead/order")
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            lead += 1
        if not coeffs:
            lead = order
        return PuiseuxSeries(grid, lead, coeffs, order)

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero(order_exp, grid: int = 1) -> "PuiseuxSeries":
        n = _exp_to_grid_floorplus(order_exp, grid)
        return PuiseuxSeries(grid, n, (), n)

    @staticmethod
    def const(c, order_exp, grid: int = 1) -> "PuiseuxSeries":
        if not c:
            return PuiseuxSeries.zero(order_exp, grid)
        n = _exp_to_grid_floorplus(order_exp, grid)
        if n <= 0:
            raise ValueError("order bound must exceed 0 for a constant")
        return PuiseuxSeries.make(grid, 0, [c] + [ZERO] * (n - 1), n)

    @staticmethod
    def monomial(exp, order_exp, coeff=ONE) -> "PuiseuxSeries":
        e = QQ(exp)
        grid = int(e.denominator)
        lead = int(e.numerator)
        n = _exp_to_grid_floorplus(order_exp, grid)
        if n <= lead:
            raise ValueError("order bound must exceed the monomial exponent")
        return PuiseuxSeries.make(grid, lead, [coeff] + [ZERO] * (n - lead - 1), n)

    @staticmethod
    def from_pairs(pairs, order_exp) -> "PuiseuxSeries":
        """Series from (exponent, coefficient) pairs, known below order_exp."""
        pairs = [(QQ(e), c) for e, c in pairs]
        grid = 1
        for e, _ in pairs:
            grid = _lcm(grid, int(e.denominator))
        n = _exp_to_grid_floorplus(order_exp, grid)
        if not pairs:
            return PuiseuxSeries(grid, n, (), n)
        idx = [int(e.numerator) * (grid // int(e.denominator)) for e, _ in pairs]
        lead = min(idx)
        if n <= max(idx):
            raise ValueError("order bound must exceed every listed exponent")
        coeffs = [ZERO] * (n - lead)
        for i, (_, c) in zip(idx, pairs):
            coeffs[i - lead] = coeffs[i - lead] + c
        return PuiseuxSeries.make(grid, lead, coeffs, n)

    # -- basic queries ----------------------------------------------------
    @property
    def lead_exponent(self):
        return QQ(self.lead, self.grid)

    @property
    def order_exponent(self):
        return QQ(self.order, self.grid)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exp):
        e = QQ(exp)
        num = e.numerator * self.grid
        if num % e.denominator:
            return ZERO
        k = num // e.denominator
        if k >= self.order:
            raise ValueError(f"coefficient of exponent {e} is beyond the known order")
        if k < self.lead:
            return ZERO
        return self.coeffs[k - self.lead]

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield QQ(self.lead + i, self.grid), c

    def __repr__(self):
        parts = []
        for e, c in self.terms():
            parts.append(f"{c}*z^{e}")
            if len(parts) == 6:
                parts.append("...")
                break
        body = " + ".join(parts) if parts else "0"
        return f"<series {body} + O(z^{self.order_exponent})>"

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        if self.order_exponent != other.order_exponent:
            return False
        return first_mismatch(self, other) is None

    def __hash__(self):
        return hash((self.order_exponent, tuple(self.terms())))

    # -- grid handling ----------------------------------------------------
    def to_grid(self, grid: int) -> "PuiseuxSeries":
        if grid == self.grid:
            return self
        if grid % self.grid:
            raise ValueError("grid refinement must be a multiple of the old grid")
        f = grid // self.grid
        coeffs = [ZERO] * (len(self.coeffs) * f)
        for i, c in enumerate(self.coeffs):
            coeffs[i * f] = c
        return PuiseuxSeries(grid, self.lead * f, coeffs, self.order * f)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return PuiseuxSeries(self.grid, self.lead, [-c for c in self.coeffs], self.order)

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        g = _lcm(self.grid, other.grid)
        a, b = self.to_grid(g), other.to_grid(g)
        order = min(a.order, b.order)
        if a.is_zero() and b.is_zero():
            return PuiseuxSeries(g, order, (), order)
        lead = min(a.lead if a.coeffs else order, b.lead if b.coeffs else order)
        out = [ZERO] * (order - lead)
        for s in (a, b):
            for i, c in enumerate(s.coeffs):
                k = s.lead + i - lead
                if 0 <= k < len(out):
                    out[k] = out[k] + c
        return PuiseuxSeries.make(g, lead, out, order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PuiseuxSeries":
        if not c:
            return PuiseuxSeries(self.grid, self.order, (), self.order)
        return PuiseuxSeries.make(self.grid, self.lead, [c * x for x in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, PuiseuxSeries):
            return ps_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PuiseuxSeries):
            return ps_div(self, other)
        return self.scale(scalar_inv(other))

    def truncate(self, order_exp) -> "PuiseuxSeries":
        n = _exp_to_grid_floorplus(order_exp, self.grid)
        if n >= self.order:
            return self
        m = max(n, self.lead)
        return PuiseuxSeries.make(self.grid, self.lead, self.coeffs[: m - self.lead], m)

    def derivative(self) -> "PuiseuxSeries":
        g = self.grid
        coeffs = [c * QQ(self.lead + i, g) for i, c in enumerate(self.coeffs)]
        return PuiseuxSeries.make(g, self.lead - g, coeffs, self.order - g)

    def zderivative(self) -> "PuiseuxSeries":
        """Apply z*d/dz (multiplies each coefficient by its exponent)."""
        g = self.grid
        coeffs = [c * QQ(self.lead + i, g) for i, c in enumerate(self.coeffs)]
        return PuiseuxSeries.make(g, self.lead, coeffs, self.order)

    def map_coefficients(self, f) -> "PuiseuxSeries":
        return PuiseuxSeries.make(self.grid, self.lead, [f(c) for c in self.coeffs], self.order)


def _exp_to_grid_floorplus(exp, grid: int) -> int:
    """Smallest grid index n with {exponents < exp} == {indices < n}."""
    e = QQ(exp)
    return _ceil_div(int(e.numerator) * grid, int(e.denominator))


def ps_mul(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    """Exact product; order = min(Na + lead_b, Nb + lead_a)."""
    g = _lcm(a.grid, b.grid)
    a, b = a.to_grid(g), b.to_grid(g)
    la = a.lead if a.coeffs else a.order
    lb = b.lead if b.coeffs else b.order
    order = min(a.order + lb, b.order + la)
    if a.is_zero() or b.is_zero():
        return PuiseuxSeries(g, order, (), order)
    lead = a.lead + b.lead
    n = order - lead
    out = [ZERO] * n
    bc = b.coeffs
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        if i >= n:
            break
        for j in range(min(len(bc), n - i)):
            cb = bc[j]
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return PuiseuxSeries.make(g, lead, out, order)


def _unit_inverse(coeffs, n):
    """Inverse of a unit power series given by coeffs (c0 != 0), to n terms."""
    c0inv = scalar_inv(coeffs[0])
    out = [c0inv] + [ZERO] * (n - 1)
    for k in range(1, n):
        s = ZERO
        for j in range(1, min(k, len(coeffs) - 1) + 1):
            if coeffs[j] and out[k - j]:
                s = s + coeffs[j] * out[k - j]
        out[k] = -c0inv * s
    return out


def ps_div(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    """Exact quotient a/b; b must not be the zero series."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero series")
    g = _lcm(a.grid, b.grid)
    a, b = a.to_grid(g), b.to_grid(g)
    rel = b.order - b.lead
    inv = PuiseuxSeries.make(g, -b.lead, _unit_inverse(b.coeffs, rel), -b.lead + rel)
    return ps_mul(a, inv)


def ps_pow(a: PuiseuxSeries, r) -> PuiseuxSeries:
    """a**r for rational r.

    The unit part of a must have constant coefficient exactly 1; scalar
    radical prefactors are the caller's problem by design.
    """
    r = QQ(r)
    if a.is_zero():
        raise PowBaseError("fractional power of the zero series")
    if a.coeffs[0] != ONE:
        raise PowBaseError(
            f"series power requires unit coefficient 1, got {a.coeffs[0]!r}"
        )
    new_lead = a.lead_exponent * r
    g = _lcm(a.grid, int(new_lead.denominator))
    rel = a.order - a.lead
    u = a.coeffs
    out = [ONE] + [ZERO] * (rel - 1)
    for k in range(1, rel):
        s = ZERO
        for j in range(1, min(k, len(u) - 1) + 1):
            if u[j] and out[k - j]:
                s = s + ((r + 1) * j - k) * u[j] * out[k - j]
        out[k] = s / k
    lead = int(new_lead.numerator) * (g // int(new_lead.denominator))
    f = g // a.grid
    coeffs = [ZERO] * (rel * f)
    for i, c in enumerate(out):
        coeffs[i * f] = c
    return PuiseuxSeries.make(g, lead, coeffs, lead + rel * f)


def ps_compose(a: PuiseuxSeries, b: PuiseuxSeries) -> PuiseuxSeries:
    """a(b) for an integer-grid a and positive-valuation b."""
    if a.grid != 1:
        raise ValuationError("composition requires an integer exponent grid on the outer series")
    if b.is_zero() or b.lead <= 0:
        raise ValuationError("composition argument must have positive valuation")
    vb = b.lead_exponent
    nb = b.order_exponent
    bound = QQ(a.order) * vb
    support = [a.lead + i for i, c in enumerate(a.coeffs) if c and (a.lead + i)]
    if support:
        e0 = min(support)
        bound = min(bound, nb + (e0 - 1) * vb)
    if a.is_zero():
        return PuiseuxSeries.zero(bound, b.grid)
    acc = PuiseuxSeries.zero(bound, b.grid)
    # nonnegative exponents: Horner from the top
    if a.order > 0:
        for k in range(a.order - 1, -1, -1):
            acc = ps_mul(acc, b).truncate(bound)
            idx = k - a.lead
            c = a.coeffs[idx] if 0 <= idx < len(a.coeffs) else ZERO
            if c:
                acc = acc + PuiseuxSeries.const(c, bound, b.grid)
    if a.lead < 0:
        binv = ps_div(PuiseuxSeries.const(ONE, nb - vb, b.grid), b)
        p = binv
        for k in range(-1, a.lead - 1, -1):
            c = a.coeffs[k - a.lead] if 0 <= k - a.lead < len(a.coeffs) else ZERO
            if c:
                acc = acc + p.scale(c)
            if k > a.lead:
                p = ps_mul(p, binv).truncate(bound)
    return acc.truncate(bound)


def first_mismatch(a: PuiseuxSeries, b: PuiseuxSeries, below=None):
    """First exponent where the two series disagree, or None.

    Compares every exponent < min(orders, below); raises if that window is
    empty while a bound was requested.
    """
    g = _lcm(a.grid, b.grid)
    a, b = a.to_grid(g), b.to_grid(g)
    stop = min(a.order, b.order)
    if below is not None:
        want = _exp_to_grid_floorplus(QQ(below), g)
        if stop < want:
            raise ValueError(
                f"series only known below {QQ(stop, g)}, cannot compare below {below}"
            )
        stop = min(stop, want)
    start = min(a.lead if a.coeffs else stop, b.lead if b.coeffs else stop)
    for k in range(start, stop):
        ca = a.coeffs[k - a.lead] if 0 <= k - a.lead < len(a.coeffs) else ZERO
        cb = b.coeffs[k - b.lead] if 0 <= k - b.lead < len(b.coeffs) else ZERO
        if ca != cb:
            return QQ(k, g), ca, cb
    return None
