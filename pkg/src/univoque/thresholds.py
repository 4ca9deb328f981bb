"""Sharkovskii ordering, extremal periodic sequences, and base thresholds.

For each period k >= 2 there is a smallest base above which a unique
periodic expansion of primitive period k exists.  That threshold is the
root in (1, 2) of an integer polynomial built from the lexicographically
least extremal sequence of period k, which this module constructs in two
independent ways: by iterating the doubling map, and in closed form from
Thue-Morse fragments.  The thresholds are certified polynomial roots and
their order matches the Sharkovskii order on periods; the accumulation
point of the power-of-two thresholds is the Komornik-Loreti constant,
computed here by certified bisection with a rigorous series tail bound.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .algebraic import IntPolynomial, squarefree_part
from .errors import PreconditionViolated
from .expansions import AlgebraicBeta, FloatBeta
from .words import (
    EQUAL,
    GREATER,
    LESS,
    PeriodicSeq,
    doubling_map,
    thue_morse,
)


@dataclass(frozen=True)
class SharkovskiiKey:
    """Unique decomposition k = 2^n * (2m + 1)."""

    n: int
    m: int

    @property
    def k(self) -> int:
        return (1 << self.n) * (2 * self.m + 1)


def decompose(k: int) -> SharkovskiiKey:
    if k < 1:
        raise PreconditionViolated("k must be a positive integer")
    n = (k & -k).bit_length() - 1
    return SharkovskiiKey(n, ((k >> n) - 1) // 2)


def sharkovskii_cmp(k: int, l: int) -> int:
    """LESS means k comes before l in the Sharkovskii order.

    Rows of 2^n * odd are ordered by ascending n and, within a row, by
    ascending odd part; the pure powers of two form the final tail in
    descending order.
    """
    if k == l:
        return EQUAL
    a, b = decompose(k), decompose(l)
    if a.m == 0 and b.m == 0:
        return LESS if k > l else GREATER
    if a.m == 0:
        return GREATER
    if b.m == 0:
        return LESS
    if a.n != b.n:
        return LESS if a.n < b.n else GREATER
    return LESS if a.m < b.m else GREATER


def min_extremal_recursive(k: int) -> PeriodicSeq:
    """Least extremal sequence of primitive period k, by doubling.

    Period 1 is the all-ones sequence; for k = 2^n the construction
    iterates the doubling map on the all-zeros sequence, and for
    k = 2^n (2m + 1) with m >= 1 on the period word 1(10)^m.
    """
    key = decompose(k)
    if k == 1:
        return PeriodicSeq((), (1,))
    if key.m == 0:
        s = PeriodicSeq((), (0,))
    else:
        s = PeriodicSeq((), (1,) + (1, 0) * key.m)
    for _ in range(key.n):
        s = doubling_map(s)
    return s


def min_extremal_explicit(k: int) -> PeriodicSeq:
    """Least extremal sequence of primitive period k, in closed form.

    The period word consists of Thue-Morse fragments (1-indexed symbols):
    for k = 2^n the first 2^n - 1 symbols followed by the complement of
    symbol 2^n; for k = 2^n (2m + 1), m >= 1, the first 3 * 2^n symbols
    followed by m - 1 copies of the first 2^(n+1) symbols with the last
    one complemented.
    """
    key = decompose(k)
    if k == 1:
        return PeriodicSeq((), (1,))
    tm = thue_morse(3 * (1 << key.n) + 1).bits  # tm[i] is the i-th symbol
    if key.m == 0:
        size = 1 << key.n
        block = tm[1:size] + (1 - tm[size],)
    else:
        head = tm[1:3 * (1 << key.n) + 1]
        rep_size = 1 << (key.n + 1)
        rep = tm[1:rep_size] + (1 - tm[rep_size],)
        block = head + rep * (key.m - 1)
    return PeriodicSeq((), block)


def threshold_poly(k: int) -> IntPolynomial:
    """Defining polynomial of the k-th threshold: x^k minus the terms
    weighted by the extremal period word, minus 1.  Monic, not
    necessarily irreducible."""
    if k < 2:
        raise PreconditionViolated("threshold polynomials start at k = 2")
    alpha = min_extremal_recursive(k).period.bits
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    coeffs[0] = -1
    for i in range(1, k):
        coeffs[k - i] = -alpha[i - 1]
    return IntPolynomial(coeffs)


def threshold_beta(k: int, eps: float = 1e-8) -> AlgebraicBeta:
    """The k-th threshold as a certified root in (1, 2), refined below eps."""
    beta = AlgebraicBeta(threshold_poly(k), 1, 2)
    beta.refine(Fraction(eps))
    return beta


def reduced_poly(k: int) -> IntPolynomial:
    """Squarefree part of the defining polynomial with rational linear
    factors stripped.  The threshold root survives (it is irrational),
    but the result is not guaranteed minimal."""
    p = squarefree_part(threshold_poly(k))
    while p.coeffs[0] == 0 and p.degree > 0:
        p = IntPolynomial(p.coeffs[1:])
    changed = True
    while changed and p.degree > 1:
        changed = False
        const = abs(p.coeffs[0])
        for d in range(1, const + 1):
            if const % d:
                continue
            for r in (d, -d):
                cand = IntPolynomial((-r, 1))
                if cand.divides(p):
                    p = p.exact_div(cand)
                    changed = True
                    break
            if changed:
                break
    return p


# Known minimal polynomials of the first thresholds (constant term first),
# used by the table command and cross-checked by divisibility at runtime.
MINIMAL_POLYS: dict[int, IntPolynomial] = {
    2: IntPolynomial([-1, -1, 1]),
    3: IntPolynomial([-1, -1, -1, 1]),
    4: IntPolynomial([-1, 1, -2, 1]),
    5: IntPolynomial([-1, -1, 0, -1, -1, 1]),
    6: IntPolynomial([-1, 0, -1, 0, -1, -1, 1]),
    7: IntPolynomial([-1, 0, 0, -1, 1, -2, 1]),
    8: IntPolynomial([-1, 0, 1, 0, -2, 1]),
}


_KL_LOCK = threading.Lock()
_KL_STATE: list[Fraction] = [Fraction(3, 2), Fraction(2)]
_KL_TM_CACHE: list[tuple[int, ...]] = [()]


def _kl_terms(n: int) -> tuple[int, ...]:
    if len(_KL_TM_CACHE[0]) < n + 1:
        _KL_TM_CACHE[0] = thue_morse(max(2 * n, 64)).bits
    return _KL_TM_CACHE[0]


def _kl_sign(x: Fraction) -> int:
    """Exact sign of (sum of Thue-Morse weighted powers x^-k) - 1.

    Truncates the series at N terms and bounds the rest by the geometric
    tail x^-N / (x - 1); N doubles until the bound is decisive, which it
    always becomes at rational x since the root is irrational.
    """
    n = 64
    while True:
        tm = _kl_terms(n)
        acc = Fraction(0)
        for k in range(n, 0, -1):
            acc = (acc + tm[k]) / x
        tail = x ** -n / (x - 1)
        if acc - 1 > 0:
            return 1
        if acc - 1 + tail < 0:
            return -1
        n *= 2
        if n > 1 << 16:
            raise RuntimeError("series sign did not stabilize")


def kl_bracket(eps) -> tuple[Fraction, Fraction]:
    """Certified rational bracket of the Komornik-Loreti constant,
    narrower than eps.  Brackets only ever shrink across calls."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    with _KL_LOCK:
        lo, hi = _KL_STATE
        while hi - lo >= eps:
            mid = (lo + hi) / 2
            if _kl_sign(mid) > 0:
                lo = mid
            else:
                hi = mid
        _KL_STATE[0], _KL_STATE[1] = lo, hi
    return lo, hi


def komornik_loreti(eps: float = 1e-5) -> FloatBeta:
    """The Komornik-Loreti constant as a float base with a certified bracket."""
    lo, hi = kl_bracket(eps)
    mid = float((lo + hi) / 2)
    return FloatBeta(mid, tolerance=max(float(hi - lo) / 2, 1e-17))


def below_komornik_loreti(k: int) -> bool:
    """Whether the k-th threshold lies below the Komornik-Loreti constant,
    decided by refining both certified intervals until disjoint."""
    beta = threshold_beta(k, 1e-6)
    eps = Fraction(1, 10 ** 6)
    floor = Fraction(1, 10 ** 80)
    while True:
        beta.refine(eps)
        klo, khi = kl_bracket(eps)
        blo, bhi = beta.interval
        if bhi < klo:
            return True
        if khi < blo:
            return False
        if eps < floor:
            raise RuntimeError(f"threshold {k} numerically indistinguishable "
                               "from the Komornik-Loreti constant")
        eps = eps ** 2


def greedy_threshold(n: int, eps: float = 1e-8) -> AlgebraicBeta:
    """Root in (1, 2) of x^n = x^(n-1) + 1: the onset base for plain
    greedy (not necessarily unique) periodic expansions of period n."""
    if n < 2:
        raise PreconditionViolated("defined for n >= 2")
    coeffs = [0] * (n + 1)
    coeffs[0] = -1
    coeffs[n - 1] = -1
    coeffs[n] = 1
    beta = AlgebraicBeta(IntPolynomial(coeffs), 1, 2)
    beta.refine(Fraction(eps))
    return beta
