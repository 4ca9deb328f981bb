"""Expansions of reals in a non-integer base from (1, 2) with digits {0, 1}.

Provides the greedy digit algorithm, the lazily computed expansion of 1
and its quasi-greedy periodic form, evaluation of digit sequences, the
inverse problem (solving for the base that makes a digit sequence expand
1), Parry admissibility, the two-sided lexicographic uniqueness
criterion, and the gap map realizing the digit shift on values.

Bases come in two flavours.  A float base carries a tolerance: any
decision that lands inside the accumulated uncertainty raises instead of
guessing.  An algebraic base is a certified polynomial root: the orbit
of 1 is tracked as exact polynomial remainders, so digits, finiteness of
the expansion of 1, and all lexicographic decisions are exact.
"""

from __future__ import annotations

import math
import re
import threading
from fractions import Fraction
from typing import Optional

from .algebraic import CertifiedRoot, IntPolynomial
from .errors import (
    MiddleGapError,
    NotParryError,
    OutOfDomainError,
    PreconditionViolated,
    UndecidableDigitError,
    UndecidedError,
)
from .words import (
    GREATER,
    LESS,
    BinaryWord,
    PeriodicSeq,
    lex_cmp,
    mirror,
    shift,
)

DEFAULT_TOLERANCE = 1e-12
DEFAULT_DIGIT_BUDGET = 256


class BetaValue:
    """A base in (1, 2); see FloatBeta and AlgebraicBeta."""

    def __float__(self) -> float:
        raise NotImplementedError

    def greedy_one(self, budget: Optional[int] = None) -> "GreedyExpansion":
        """Cached lazy digits of the expansion of 1 in this base."""
        budget = budget or DEFAULT_DIGIT_BUDGET
        exp = getattr(self, "_greedy_one", None)
        if exp is None:
            exp = GreedyExpansion(self, budget)
            self._greedy_one = exp
        elif budget > exp.budget:
            exp.budget = budget
        return exp

    @staticmethod
    def parse(text: str) -> "BetaValue":
        """Parse 'float:1.9' or 'poly:[-1,-1,1]@(1,2)' (constant term first)."""
        text = text.strip()
        if text.startswith("float:"):
            return FloatBeta(float(text[len("float:"):]))
        m = re.fullmatch(r"poly:\[([^\]]*)\]@\(([^,]+),([^)]+)\)", text)
        if m:
            coeffs = [int(c) for c in m.group(1).split(",")]
            return AlgebraicBeta(IntPolynomial(coeffs),
                                 Fraction(m.group(2).strip()),
                                 Fraction(m.group(3).strip()))
        raise ValueError(f"cannot parse base: {text!r}")


class FloatBeta(BetaValue):
    """A base given by a float, trusted only up to a tolerance band."""

    def __init__(self, value: float, tolerance: float = DEFAULT_TOLERANCE):
        value = float(value)
        if not 1.0 < value < 2.0:
            raise PreconditionViolated(f"base must lie strictly inside (1, 2), got {value}")
        if tolerance <= 0:
            raise ValueError("tolerance must be positive")
        self.value = value
        self.tolerance = tolerance

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return f"float:{self.value!r}"

    def __repr__(self) -> str:
        return f"FloatBeta({self.value!r})"


class AlgebraicBeta(BetaValue):
    """A base certified as the unique root of an integer polynomial in an interval."""

    def __init__(self, poly: IntPolynomial, lo=1, hi=2):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo < 1 or hi > 2:
            raise PreconditionViolated("isolating interval must lie inside [1, 2]")
        self.root = CertifiedRoot(poly, lo, hi)

    @property
    def poly(self) -> IntPolynomial:
        return self.root.poly

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.root.interval

    def refine(self, eps) -> "AlgebraicBeta":
        self.root.refine(eps)
        return self

    def sign_at_root(self, r: IntPolynomial) -> int:
        return self.root.sign_at_root(r)

    def __float__(self) -> float:
        return float(self.root)

    def __str__(self) -> str:
        lo, hi = self.root.interval
        coeffs = ",".join(str(c) for c in self.poly.coeffs)
        return f"poly:[{coeffs}]@({lo},{hi})"

    def __repr__(self) -> str:
        return f"AlgebraicBeta({self.poly!r})"


def as_beta(x) -> BetaValue:
    if isinstance(x, BetaValue):
        return x
    if isinstance(x, str):
        return BetaValue.parse(x)
    return FloatBeta(float(x))


class _FloatOrbit:
    """Greedy digit orbit t -> b*t - digit, with roundoff tracking.

    The base is taken as the exact real equal to the float; roundoff
    grows by a factor b per step.  A digit whose branch decision falls
    inside the tolerance or inside the accumulated roundoff band raises
    rather than guesses.
    """

    __slots__ = ("b", "tol", "t", "err")

    def __init__(self, b: float, tol: float, t0: float):
        self.b = b
        self.tol = tol
        self.t = t0
        self.err = 0.0

    def step(self) -> int:
        v = self.b * self.t
        self.err = self.err * self.b + 1e-15 * max(1.0, v)
        band = max(self.tol, self.err)
        if abs(v - 1.0) <= band:
            raise UndecidableDigitError(
                f"orbit point {v/self.b!r} within {band:.3g} of branch point 1/b; "
                "use an algebraic base for an exact decision")
        digit = 1 if v > 1.0 else 0
        self.t = v - digit
        return digit


class _AlgebraicOrbit:
    """Exact greedy digit orbit: t is a polynomial remainder in the base."""

    __slots__ = ("beta", "_sq", "coeffs")

    def __init__(self, beta: AlgebraicBeta, t0: Fraction):
        self.beta = beta
        self._sq = beta.root._sq
        self.coeffs = self._reduce([Fraction(t0)])

    def _reduce(self, c: list[Fraction]) -> tuple[Fraction, ...]:
        sq = self._sq.coeffs
        d = len(sq) - 1
        lead = sq[-1]
        while len(c) > d:
            top = c.pop()
            if top:
                k = len(c) - d
                f = top / lead
                for i in range(d):
                    c[k + i] -= f * sq[i]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return tuple(c)

    @staticmethod
    def _as_int_poly(coeffs) -> IntPolynomial:
        den = 1
        for f in coeffs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        return IntPolynomial(tuple(int(f * den) for f in coeffs))

    def value_is_zero(self) -> bool:
        if all(f == 0 for f in self.coeffs):
            return True
        return self.beta.sign_at_root(self._as_int_poly(self.coeffs)) == 0

    def step(self) -> int:
        u = self._reduce([Fraction(0), *self.coeffs])
        shifted = list(u)
        shifted[0] -= 1
        s = self.beta.sign_at_root(self._as_int_poly(shifted))
        digit = 1 if s >= 0 else 0
        if digit:
            u = list(u)
            u[0] -= 1
            u = tuple(u)
        self.coeffs = u
        return digit


class GreedyExpansion:
    """Lazily extensible greedy digits of 1, with a finiteness verdict.

    Digits never change once produced; extension is internally locked so
    concurrent readers are safe.  ``finiteness`` is one of
    ``("finite", n)`` (digit n is the last 1), ``("infinite", (p, q))``
    (the digit sequence is eventually periodic, detected from an exact
    orbit repeat), or ``("unknown", budget)``.
    """

    def __init__(self, beta: BetaValue, budget: int = DEFAULT_DIGIT_BUDGET):
        self.beta = beta
        self.budget = budget
        self._digits: list[int] = []
        self._lock = threading.RLock()
        self._finite_at: Optional[int] = None
        self._cycle: Optional[tuple[int, int]] = None
        if isinstance(beta, AlgebraicBeta):
            self._orbit = _AlgebraicOrbit(beta, Fraction(1))
            self._seen = {self._orbit.coeffs: 0}
        else:
            self._orbit = _FloatOrbit(beta.value, beta.tolerance, 1.0)
            self._seen = None

    def _extend_to(self, n: int) -> None:
        with self._lock:
            while len(self._digits) < n:
                if self._finite_at is not None or self._cycle is not None:
                    if self._finite_at is not None:
                        self._digits.append(0)
                        continue
                    p, q = self._cycle
                    self._digits.append(self._digits[p + (len(self._digits) - p) % q])
                    continue
                d = self._orbit.step()
                self._digits.append(d)
                if self._seen is not None:
                    state = self._orbit.coeffs
                    if self._orbit.value_is_zero():
                        self._finite_at = len(self._digits)
                        self._orbit.coeffs = (Fraction(0),)
                    else:
                        k = self._seen.get(state)
                        if k is None:
                            self._seen[state] = len(self._digits)
                        else:
                            self._cycle = (k, len(self._digits) - k)

    def digit(self, i: int) -> int:
        """0-based digit access."""
        self._extend_to(i + 1)
        return self._digits[i]

    def prefix(self, n: int) -> BinaryWord:
        self._extend_to(n)
        return BinaryWord(self._digits[:n])

    @property
    def finiteness(self):
        with self._lock:
            if self._finite_at is None and self._cycle is None:
                try:
                    self._extend_to(self.budget)
                except UndecidableDigitError:
                    pass
            if self._finite_at is not None:
                return ("finite", self._finite_at)
            if self._cycle is not None:
                return ("infinite", self._cycle)
            return ("unknown", self.budget)

    def as_periodic_seq(self) -> Optional[PeriodicSeq]:
        """Exact eventually periodic form of the digits, when known."""
        kind = self.finiteness
        if kind[0] == "finite":
            n = kind[1]
            return PeriodicSeq(self.prefix(n), (0,))
        if kind[0] == "infinite":
            p, q = kind[1]
            bits = self.prefix(p + q).bits
            return PeriodicSeq(bits[:p], bits[p:])
        return None


def greedy_digits(beta, x, n: int) -> BinaryWord:
    """First n greedy digits of x in the given base.

    Exact for an algebraic base and rational x; for a float base the
    digits are certified only while branch decisions stay outside the
    accumulated error band (UndecidableDigitError otherwise).
    """
    beta = as_beta(beta)
    if n < 0:
        raise ValueError("digit count must be nonnegative")
    if isinstance(beta, AlgebraicBeta):
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise PreconditionViolated(f"x must lie in [0, 1], got {x}")
        orbit = _AlgebraicOrbit(beta, x)
    else:
        x = float(x)
        if not 0.0 <= x <= 1.0:
            raise PreconditionViolated(f"x must lie in [0, 1], got {x}")
        orbit = _FloatOrbit(beta.value, beta.tolerance, x)
    return BinaryWord(tuple(orbit.step() for _ in range(n)))


def d_of_beta(beta, budget: Optional[int] = None) -> GreedyExpansion:
    """The greedy expansion of 1 in the given base, computed lazily."""
    return as_beta(beta).greedy_one(budget)


def quasi_greedy(beta) -> PeriodicSeq:
    """The purely periodic quasi-greedy expansion of 1.

    Defined when the expansion of 1 is finite, say with last 1 at
    position n: the result repeats the first n digits with that final 1
    turned into a 0.
    """
    exp = d_of_beta(beta)
    kind = exp.finiteness
    if kind[0] != "finite":
        raise NotParryError(
            f"expansion of 1 is not known to be finite (status: {kind[0]})")
    n = kind[1]
    bits = exp.prefix(n).bits
    return PeriodicSeq((), bits[:-1] + (0,))


def expansion_value(beta, s: PeriodicSeq) -> float:
    """Value of the digit sequence: sum of s_k * b^-k (closed form)."""
    b = float(as_beta(beta))
    pre, per = s.preperiod.bits, s.period.bits
    head = 0.0
    for i, bit in enumerate(pre):
        if bit:
            head += b ** -(i + 1)
    tail = 0.0
    for j, bit in enumerate(per):
        if bit:
            tail += b ** -(j + 1)
    return head + b ** -len(pre) * tail / (1.0 - b ** -len(per))


def solve_base(s: PeriodicSeq) -> BetaValue:
    """The unique base in (1, 2) whose expansion of the sequence s is 1.

    Returns an algebraic (exact) base when the equation clears to an
    integer polynomial: for purely periodic s and for s with finite digit
    support (all-zero period).  Other eventually periodic sequences fall
    back to float bisection on the closed-form value.
    """
    pre, per = s.preperiod.bits, s.period.bits
    zeros = pre.count(0) + (math.inf if 0 in per else 0)
    ones = pre.count(1) + (math.inf if 1 in per else 0)
    if zeros < 1 or ones < 2:
        raise PreconditionViolated(
            "sequence must contain at least one 0 and at least two 1s")
    if not pre:
        q = len(per)
        coeffs = [0] * (q + 1)
        coeffs[q] = 1
        for j in range(1, q):
            coeffs[q - j] = -per[j - 1]
        coeffs[0] = -(per[q - 1] + 1)
        return AlgebraicBeta(IntPolynomial(coeffs), 1, 2)
    if per == (0,):
        p = len(pre)
        coeffs = [0] * (p + 1)
        coeffs[p] = 1
        for i in range(1, p + 1):
            coeffs[p - i] = -pre[i - 1]
        return AlgebraicBeta(IntPolynomial(coeffs), 1, 2)
    lo, hi = 1.0 + 1e-9, 2.0 - 1e-9
    f = lambda b: expansion_value(FloatBeta(b), s) - 1.0
    if not (f(lo) > 0.0 > f(hi)):
        raise PreconditionViolated("no sign change for the base equation in (1, 2)")
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-14:
            break
    return FloatBeta(0.5 * (lo + hi))


def is_parry_admissible(s: PeriodicSeq) -> bool:
    """Whether every proper shift of s is lexicographically below s.

    These are exactly the digit sequences arising as greedy expansions
    of 1.  Shifts repeat after preperiod + period steps, so the check is
    finite and exact.
    """
    bound = len(s.preperiod) + len(s.period)
    return all(lex_cmp(shift(s, j), s) == LESS for j in range(1, bound + 1))


def _cmp_seq_vs_digits(t: PeriodicSeq, exp: GreedyExpansion, budget: int,
                       mirrored: bool = False) -> int:
    for i in range(budget):
        a = t.at(i)
        b = exp.digit(i)
        if mirrored:
            b = 1 - b
        if a != b:
            return LESS if a < b else GREATER
    raise UndecidedError(
        f"no strict difference within {budget} digits; raise the budget "
        "or use an algebraic base", budget)


def is_unique_expansion(beta, s: PeriodicSeq,
                        digit_budget: Optional[int] = None) -> bool:
    """Two-sided criterion for s being the only expansion of its value.

    Holds exactly when every shift of s lies strictly between the
    mirrored bound and the bound itself, where the bound is the
    quasi-greedy expansion of 1 when that exists and the greedy
    expansion of 1 otherwise.  This characterizes unique expansions
    whose value lies in the attractor core; the two constant sequences
    (the expansions of the domain endpoints) are unique as expansions
    but always fail the criterion.
    """
    beta = as_beta(beta)
    if not s.is_purely_periodic:
        raise PreconditionViolated("sequence must be purely periodic")
    q = len(s.period)
    budget = digit_budget or 4 * q + 64
    exp = d_of_beta(beta)
    kind = exp.finiteness
    if kind[0] == "finite":
        bound = quasi_greedy(beta)
    else:
        bound = exp.as_periodic_seq()
    if bound is not None:
        mb = mirror(bound)
        for j in range(q):
            t = shift(s, j)
            if not (lex_cmp(mb, t) == LESS and lex_cmp(t, bound) == LESS):
                return False
        return True
    for j in range(q):
        t = shift(s, j)
        if _cmp_seq_vs_digits(t, exp, budget) != LESS:
            return False
        if _cmp_seq_vs_digits(t, exp, budget, mirrored=True) != GREATER:
            return False
    return True


def shift_map(beta, x: float) -> float:
    """The map realizing the digit shift on values: b*x left of the gap,
    b*x - 1 right of it.  Undefined on the middle gap [1/b, 1/(b(b-1))],
    which values with a unique expansion never visit."""
    b = float(as_beta(beta))
    dom_hi = 1.0 / (b - 1.0)
    if x < 0.0 or x > dom_hi:
        raise OutOfDomainError(f"x={x} outside [0, {dom_hi}]")
    if x < 1.0 / b:
        return b * x
    if x <= 1.0 / (b * (b - 1.0)):
        raise MiddleGapError(
            f"x={x} lies in the middle gap [{1.0/b}, {1.0/(b*(b-1.0))}]")
    return b * x - 1.0


def in_attractor(beta, x, digit_budget: Optional[int] = None) -> bool:
    """Whether x lies in the invariant core ((2-b)/(b-1), 1) with a unique
    expansion.  x may be a value or a purely periodic digit sequence; a
    bare value is accepted when a periodic expansion can be recovered
    from its greedy digits."""
    beta = as_beta(beta)
    b = float(beta)
    low = (2.0 - b) / (b - 1.0)
    if isinstance(x, PeriodicSeq):
        val = expansion_value(beta, x)
        if not low < val < 1.0:
            return False
        return is_unique_expansion(beta, x, digit_budget)
    val = float(x)
    if not low < val < 1.0:
        return False
    n = digit_budget or 48
    if isinstance(beta, AlgebraicBeta):
        digits = list(greedy_digits(beta, Fraction(val), n).bits)
    else:
        orbit = _FloatOrbit(beta.value, beta.tolerance, val)
        digits = []
        try:
            for _ in range(n):
                digits.append(orbit.step())
        except UndecidableDigitError:
            pass
    m = len(digits)
    for q in range(1, m // 3 + 1):
        if all(digits[i] == digits[i % q] for i in range(m)):
            cand = PeriodicSeq((), digits[:q])
            if abs(expansion_value(beta, cand) - val) < 1e-9:
                return is_unique_expansion(beta, cand, digit_budget)
    raise UndecidedError(
        f"could not recover a periodic expansion of {val} within {m} digits", m)
