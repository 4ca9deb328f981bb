"""Integer polynomials and certified real root arithmetic.

Every sign decision here is exact: evaluation at a rational point reduces
to integer arithmetic, root counting uses Descartes bounds under Mobius
transforms, and isolating intervals shrink by bisection with exact
endpoint signs.  Floats never participate in a certified decision; they
only appear when a caller asks for an approximate value of an
already-certified root.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

_MAX_ISOLATE_DEPTH = 400


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Univariate polynomial with integer coefficients, constant term first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = tuple(int(x) for x in coeffs)
        if not c:
            c = (0,)
        object.__setattr__(self, "_coeffs", _strip(c))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self._coeffs == (0,)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of the value at a rational point (integer arithmetic).

        Computes value * q^deg = sum_i c_i p^i q^(deg - i) for x = p / q,
        which has the same sign as the value since q > 0.
        """
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        total = 0
        qpow = 1
        for c in reversed(self._coeffs):
            total = total * p + c * qpow
            qpow *= q
        return (total > 0) - (total < 0)

    def derivative(self) -> "IntPolynomial":
        if self.degree == 0:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(i * c for i, c in enumerate(self._coeffs))[1:])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self._coeffs, other._coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self._coeffs))

    def divides(self, other: "IntPolynomial") -> bool:
        """Exact divisibility over the rationals."""
        if self.is_zero:
            return other.is_zero
        _, rem = _fdivmod([Fraction(c) for c in other._coeffs],
                          [Fraction(c) for c in self._coeffs])
        return all(r == 0 for r in rem)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        quo, rem = _fdivmod([Fraction(c) for c in self._coeffs],
                            [Fraction(c) for c in other._coeffs])
        if any(r != 0 for r in rem):
            raise ValueError("not an exact division")
        den = lcm(*[f.denominator for f in quo]) if quo else 1
        if den != 1:
            raise ValueError("quotient is not an integer polynomial")
        return IntPolynomial(tuple(int(f) for f in quo))

    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"


def poly_str(p: IntPolynomial) -> str:
    """Human form with descending powers, e.g. 'x^5-2x^4+x^2-1'."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xpow = "x" if i == 1 else f"x^{i}"
            body = xpow if mag == 1 else f"{mag}{xpow}"
        parts.append(sign + body)
    return "".join(parts)


def _fdivmod(num: list[Fraction], den: list[Fraction]):
    """Quotient and remainder over the rationals, constant term first."""
    num = list(num)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    dden = len(den) - 1
    while dden > 0 and den[dden] == 0:
        dden -= 1
    if dden == 0 and den[0] == 0:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(num) - dden, 1)
    rem = num
    lead = den[dden]
    while len(rem) - 1 >= dden and any(rem):
        drem = len(rem) - 1
        coef = rem[-1] / lead
        quo[drem - dden] = coef
        for i in range(dden + 1):
            rem[drem - dden + i] -= coef * den[i]
        rem.pop()
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
    return quo, rem


def _content(coeffs: Sequence[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    return g or 1


def _primitive(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = _strip(coeffs)
    if c == (0,):
        return c
    g = _content(c)
    if c[-1] < 0:
        g = -g
    return tuple(x // g for x in c)


def _pseudo_rem(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """A pseudo-remainder of a by b (sign not normalized; fine for gcd)."""
    r = list(_strip(a))
    b = list(_strip(b))
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and any(r):
        top = r[-1]
        r = [lb * c for c in r]
        shiftn = len(r) - 1 - db
        for i, c in enumerate(b):
            r[shiftn + i] -= top * c
        r.pop()
        while len(r) > 1 and r[-1] == 0:
            r.pop()
    return tuple(r) if r else (0,)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over the integers via the primitive remainder sequence."""
    A = _primitive(a.coeffs)
    B = _primitive(b.coeffs)
    if A == (0,):
        return IntPolynomial(B)
    if B == (0,):
        return IntPolynomial(A)
    if len(A) < len(B):
        A, B = B, A
    while B != (0,):
        R = _primitive(_pseudo_rem(A, B))
        A, B = B, R
    return IntPolynomial(A)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p with repeated factors collapsed; same root set, all roots simple."""
    if p.degree <= 1:
        return IntPolynomial(_primitive(p.coeffs))
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return IntPolynomial(_primitive(p.coeffs))
    quo, rem = _fdivmod([Fraction(c) for c in p.coeffs],
                        [Fraction(c) for c in g.coeffs])
    assert all(r == 0 for r in rem)
    den = lcm(*[f.denominator for f in quo])
    return IntPolynomial(_primitive(tuple(int(f * den) for f in quo)))


def _sign_variations(coeffs: Sequence[int]) -> int:
    signs = [c for c in coeffs if c != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if (x < 0) != (y < 0))


def _taylor_shift_1(coeffs: Sequence[int]) -> list[int]:
    """Coefficients of P(x + 1), in place synthetic additions."""
    c = list(coeffs)
    d = len(c) - 1
    for i in range(d):
        for j in range(d - 1, i - 1, -1):
            c[j] += c[j + 1]
    return c


def _map_unit_interval(p: IntPolynomial, a: Fraction, b: Fraction) -> list[int]:
    """Integer coefficients of a polynomial whose roots in (0,1) are
    exactly the roots of p in (a, b), via x = a + (b - a) t and clearing
    denominators (Horner, one linear multiply per step)."""
    a, b = Fraction(a), Fraction(b)
    delta = b - a
    den = lcm(a.denominator, delta.denominator)
    alpha = a.numerator * (den // a.denominator)
    dnum = delta.numerator * (den // delta.denominator)
    # Q(t) = sum c_i (alpha + dnum t)^i den^(deg - i)
    coeffs = p.coeffs
    acc = [coeffs[-1]]
    for c in reversed(coeffs[:-1]):
        nxt = [0] * (len(acc) + 1)
        for i, v in enumerate(acc):
            nxt[i] += v * alpha
            nxt[i + 1] += v * dnum
        nxt[0] += c * den ** (len(nxt) - 1)
        acc = nxt
    return acc


def _descartes_bound(p: IntPolynomial, a: Fraction, b: Fraction) -> int:
    """Upper bound (exact when 0 or 1) on roots of p in the open (a, b)."""
    unit = _strip(_map_unit_interval(p, a, b))
    rev = list(reversed(unit))
    return _sign_variations(_taylor_shift_1(rev))


def isolate_roots(p: IntPolynomial, lo: Fraction, hi: Fraction):
    """Disjoint isolating intervals for all real roots of p in (lo, hi).

    p is taken squarefree and must not vanish at the endpoints.  Each
    returned pair (a, b) holds exactly one root; a == b marks an exact
    rational root.
    """
    sq = squarefree_part(p)
    lo, hi = Fraction(lo), Fraction(hi)
    if sq.sign_at(lo) == 0 or sq.sign_at(hi) == 0:
        raise ValueError("polynomial vanishes at an isolation endpoint")
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, 0)]
    while stack:
        a, b, depth = stack.pop()
        if depth > _MAX_ISOLATE_DEPTH:
            raise RuntimeError("root isolation did not converge")
        v = _descartes_bound(sq, a, b)
        if v == 0:
            continue
        if v == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        if sq.sign_at(m) == 0:
            out.append((m, m))
            mp = IntPolynomial(_primitive((-m.numerator, m.denominator)))
            sq = sq.exact_div(mp) if mp.divides(sq) else sq
            # after deflation the endpoints stay nonzero for the reduced poly
        stack.append((a, m, depth + 1))
        stack.append((m, b, depth + 1))
    out.sort()
    return out


class CertifiedRoot:
    """A real algebraic number: polynomial plus certified isolating interval.

    The interval only ever shrinks, so concurrent readers may observe
    different widths but never a different number.
    """

    __slots__ = ("poly", "_sq", "_lo", "_hi", "_sign_lo", "_float")

    def __init__(self, poly: IntPolynomial, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo <= hi:
            raise ValueError("empty interval")
        self.poly = poly
        self._sq = squarefree_part(poly)
        self._float = None
        if lo == hi:
            if self._sq.sign_at(lo) != 0:
                raise ValueError("point interval is not a root")
            self._lo = self._hi = lo
            self._sign_lo = 0
            return
        ivals = isolate_roots(self._sq, lo, hi)
        if len(ivals) != 1:
            raise ValueError(f"expected exactly one root in ({lo}, {hi}), found {len(ivals)}")
        self._lo, self._hi = ivals[0]
        self._sign_lo = self._sq.sign_at(self._lo)

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._lo, self._hi

    def _bisect(self) -> None:
        if self._lo == self._hi:
            return
        mid = (self._lo + self._hi) / 2
        s = self._sq.sign_at(mid)
        if s == 0:
            self._lo = self._hi = mid
            self._sign_lo = 0
        elif s == self._sign_lo:
            self._lo = mid
        else:
            self._hi = mid

    def refine(self, width) -> "CertifiedRoot":
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        while self._hi - self._lo >= width:
            self._bisect()
        return self

    def sign_at_root(self, r: IntPolynomial) -> int:
        """Exact sign of r evaluated at this root."""
        if r.is_zero:
            return 0
        if self._lo == self._hi:
            return r.sign_at(self._lo)
        g = poly_gcd(self._sq, r)
        if g.degree >= 1 and g.sign_at(self._lo) * g.sign_at(self._hi) < 0:
            return 0
        while True:
            vlo, vhi = _interval_eval(r, self._lo, self._hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            self._bisect()
            if self._lo == self._hi:
                return r.sign_at(self._lo)

    def compare(self, other: "CertifiedRoot") -> int:
        """Exact three-way comparison with another certified root."""
        if self is other:
            return 0
        mine_vanishes = None
        while True:
            if self._hi < other._lo:
                return -1
            if other._hi < self._lo:
                return 1
            if mine_vanishes is None:
                mine_vanishes = self.sign_at_root(other._sq) == 0
            if mine_vanishes:
                if other._lo < self._lo and self._hi < other._hi:
                    return 0
                self._bisect()
            else:
                self._bisect()
                other._bisect()

    def cmp_rational(self, x) -> int:
        """Sign of (root - x) for rational x, decided exactly."""
        x = Fraction(x)
        if self._lo == self._hi:
            return (self._lo > x) - (self._lo < x)
        if self._lo < x < self._hi and self._sq.sign_at(x) == 0:
            # a root of the polynomial strictly inside the isolating
            # interval can only be the certified root itself
            return 0
        while self._lo < x < self._hi:
            self._bisect()
            if self._lo == self._hi:
                return (self._lo > x) - (self._lo < x)
        # interval endpoints are never the root, so the root stays on
        # one strict side of x
        return 1 if x <= self._lo else -1

    def __float__(self) -> float:
        if self._float is None:
            self.refine(Fraction(1, 2 ** 60))
            self._float = float((self._lo + self._hi) / 2)
        return self._float


def _interval_eval(p: IntPolynomial, lo: Fraction, hi: Fraction):
    """Exact enclosure of p over [lo, hi] by interval Horner."""
    acc_lo = acc_hi = Fraction(p.coeffs[-1])
    for c in reversed(p.coeffs[:-1]):
        prods = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo = min(prods) + c
        acc_hi = max(prods) + c
    return acc_lo, acc_hi
