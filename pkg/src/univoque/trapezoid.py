"""Trapezoidal interval maps and their symbolic dynamics.

The trapezoidal map rises linearly, holds a flat plateau at height 1,
then falls linearly.  Orbits are described by itineraries over {L, C, R}
(left branch, plateau, right branch).  A blockwise encoding turns 0-1
sequences into plateau-avoiding itineraries: a leading 0 becomes L, and
each block 1^a 0^b becomes R L^(a-1) R L^(b-1).  The encoding preserves
the position of every symbol, halves the period exactly on half-mirror
squares, and is an order isomorphism onto the unimodal order.

Also here: symbolic-affine search for plateau-avoiding cycles (compose
the affine branch formulas along a candidate word, solve the linear
fixed-point equation, verify strict branch membership), clipped
trapezoid variants with a lowered plateau, and the continuous-extension
demonstration producing a genuine 3-periodic point above the period-4
threshold.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .errors import (
    BoundaryAmbiguityError,
    NotInImageError,
    OutOfDomainError,
    PreconditionViolated,
)
from .expansions import AlgebraicBeta, BetaValue, as_beta, expansion_value
from .thresholds import threshold_beta
from .words import EQUAL, GREATER, LESS, PeriodicSeq, _canonical

BOUNDARY_TOL = 1e-10

_SYMBOLS = ("L", "C", "R")
_RANK = {"L": 0, "C": 1, "R": 2}


def _coerce_syms(syms) -> tuple[str, ...]:
    out = tuple(syms)
    if any(s not in _SYMBOLS for s in out):
        raise ValueError(f"symbols must be L, C or R: {out!r}")
    return out


class Itinerary:
    """Finite or eventually periodic word over {L, C, R}.

    An empty period marks a finite word; otherwise the representation is
    canonical exactly as for 0-1 sequences.  Text forms: ``RLLR``,
    ``(RL)^w``, ``L(RL)^w``.
    """

    __slots__ = ("_pre", "_per")

    def __init__(self, preperiod=(), period=()):
        pre = _coerce_syms(preperiod)
        per = _coerce_syms(period)
        if per:
            pre, per = _canonical(pre, per)
        object.__setattr__(self, "_pre", pre)
        object.__setattr__(self, "_per", per)

    @classmethod
    def parse(cls, text: str) -> "Itinerary":
        text = text.strip()
        m = re.fullmatch(r"([LCR]*)\(([LCR]+)\)\^w", text)
        if m:
            return cls(m.group(1), m.group(2))
        if re.fullmatch(r"[LCR]*", text):
            return cls(text, ())
        raise ValueError(f"cannot parse itinerary: {text!r}")

    @property
    def preperiod(self) -> tuple[str, ...]:
        return self._pre

    @property
    def period(self) -> tuple[str, ...]:
        return self._per

    @property
    def is_periodic(self) -> bool:
        return bool(self._per)

    @property
    def is_purely_periodic(self) -> bool:
        return bool(self._per) and not self._pre

    def at(self, i: int) -> Optional[str]:
        """Symbol at position i, or None past the end of a finite word."""
        p = len(self._pre)
        if i < p:
            return self._pre[i]
        if not self._per:
            return None
        return self._per[(i - p) % len(self._per)]

    def __eq__(self, other) -> bool:
        if isinstance(other, Itinerary):
            return self._pre == other._pre and self._per == other._per
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._pre, self._per))

    def __str__(self) -> str:
        pre = "".join(self._pre)
        if not self._per:
            return pre
        return f"{pre}({''.join(self._per)})^w"

    def __repr__(self) -> str:
        return f"Itinerary.parse({str(self)!r})"


@dataclass
class TrapezoidParams:
    """Map parameters: the base, plus an optional clipped plateau.

    A clip saws the top off at level b*x1 (side 'left', x1 inside the
    rising branch) or b/(b-1) - b*x1 (side 'right', x1 inside the
    falling branch), widening the plateau symmetrically.
    """

    beta: BetaValue
    clip: Optional[tuple[str, float]] = None

    def __post_init__(self):
        self.beta = as_beta(self.beta)
        b = float(self.beta)
        if self.clip is not None:
            side, x1 = self.clip
            if side not in ("left", "right"):
                raise ValueError("clip side must be 'left' or 'right'")
            if side == "left" and not 0.0 < x1 < 1.0 / b:
                raise PreconditionViolated("left clip point must lie in the rising branch")
            if side == "right" and not 1.0 / (b * (b - 1.0)) < x1 < 1.0 / (b - 1.0):
                raise PreconditionViolated("right clip point must lie in the falling branch")

    def domain_top(self) -> float:
        b = float(self.beta)
        return 1.0 / (b - 1.0)

    def plateau(self) -> tuple[float, float, float]:
        """(left edge, right edge, level) of the flat part."""
        b = float(self.beta)
        top = self.domain_top()
        if self.clip is None:
            return 1.0 / b, 1.0 / (b * (b - 1.0)), 1.0
        side, x1 = self.clip
        if side == "left":
            return x1, top - x1, b * x1
        return top - x1, x1, b / (b - 1.0) - b * x1


def as_params(p) -> TrapezoidParams:
    if isinstance(p, TrapezoidParams):
        return p
    return TrapezoidParams(as_beta(p))


def _classify(params: TrapezoidParams, x: float) -> str:
    """Branch symbol of a point.  Points within tolerance of a plateau
    edge raise, except exact hits, which go to the closed side (the
    plateau is closed, the outer branches open at its edges)."""
    top = params.domain_top()
    lo_c, hi_c, _ = params.plateau()
    if x < -BOUNDARY_TOL or x > top + BOUNDARY_TOL:
        raise OutOfDomainError(f"x={x} outside [0, {top}]")
    for edge in (lo_c, hi_c):
        if 0.0 < abs(x - edge) < BOUNDARY_TOL:
            raise BoundaryAmbiguityError(
                f"x={x} within {BOUNDARY_TOL} of branch boundary {edge}")
    if x < lo_c:
        return "L"
    if x <= hi_c:
        return "C"
    return "R"


def trapezoid_map(params, x: float) -> float:
    """One step of the trapezoidal map (clipped variant included)."""
    params = as_params(params)
    b = float(params.beta)
    sym = _classify(params, x)
    if sym == "L":
        return b * x
    if sym == "C":
        return params.plateau()[2]
    return b / (b - 1.0) - b * x


def itinerary(params, x: float, n: int) -> Itinerary:
    """First n branch symbols of the orbit of x, as a finite itinerary."""
    params = as_params(params)
    if n < 1:
        raise PreconditionViolated("need at least one symbol")
    b = float(params.beta)
    syms = []
    for _ in range(n):
        s = _classify(params, x)
        syms.append(s)
        if s == "L":
            x = b * x
        elif s == "C":
            x = params.plateau()[2]
        else:
            x = b / (b - 1.0) - b * x
    return Itinerary(syms, ())


def encode_itinerary(s: PeriodicSeq) -> Itinerary:
    """Blockwise image of a 0-1 sequence as a plateau-avoiding itinerary.

    Rules: a leading 0 maps to L; a block 1^a 0^b followed by a 1 maps to
    R L^(a-1) R L^(b-1); a final block 1^a 0^infinity maps to
    R L^(a-1) R L^infinity; an all-ones tail maps to R L^infinity.
    Symbol positions are preserved, so for input with preperiod p and
    period q the image repeats with period q from the first block start
    past position p, and canonicalization may halve that.
    """
    pre, per = s.preperiod.bits, s.period.bits
    p, q = len(pre), len(per)
    if per == (0,):
        # finite digit support; canonical form makes pre end in 1 or be empty
        if not pre:
            return Itinerary((), ("L",))
        out: list[str] = []
        i = 0
        while pre[i] == 0:
            out.append("L")
            i += 1
        while i < p:
            a = 0
            while i < p and pre[i] == 1:
                a += 1
                i += 1
            bcount = 0
            while i < p and pre[i] == 0:
                bcount += 1
                i += 1
            out.extend(["R"] + ["L"] * (a - 1))
            if bcount:
                out.extend(["R"] + ["L"] * (bcount - 1))
        out.append("R")  # opens the all-zero tail block
        return Itinerary(out, ("L",))
    if per == (1,):
        # all-ones tail; canonical form makes pre end in 0 or be empty
        out = []
        i = 0
        while i < p and pre[i] == 0:
            out.append("L")
            i += 1
        while i < p:
            a = 0
            while i < p and pre[i] == 1:
                a += 1
                i += 1
            bcount = 0
            while i < p and pre[i] == 0:
                bcount += 1
                i += 1
            out.extend(["R"] + ["L"] * (a - 1) + ["R"] + ["L"] * (bcount - 1))
        out.append("R")  # opens the all-ones tail
        return Itinerary(out, ("L",))
    # mixed period: block pairs eventually recur with the input period
    need = p + 3 * q + 6
    bits = s.prefix(need).bits
    out = []
    i = 0
    while bits[i] == 0:
        out.append("L")
        i += 1
    anchor = None
    while True:
        if anchor is None and i >= p + 1:
            anchor = i
        if anchor is not None and i >= anchor + q:
            break
        a = 0
        while i < len(bits) and bits[i] == 1:
            a += 1
            i += 1
        bcount = 0
        while i < len(bits) and bits[i] == 0:
            bcount += 1
            i += 1
        if i >= len(bits):
            raise RuntimeError("internal: prefix expansion too short")
        out.extend(["R"] + ["L"] * (a - 1) + ["R"] + ["L"] * (bcount - 1))
    return Itinerary(out[:anchor], out[anchor:anchor + q])


def decode_itinerary(it: Itinerary) -> PeriodicSeq:
    """Left inverse of encode_itinerary on plateau-free itineraries.

    Leading Ls decode to 0s; block pairs R L^x R L^y decode to
    1^(x+1) 0^(y+1); a final unpaired R L^infinity decodes to an
    all-ones tail, and a pair whose second block carries the infinite
    Ls decodes to a finite block of ones before an all-zero tail.
    """
    if not it.is_periodic:
        raise NotInImageError("finite itineraries do not determine a sequence")
    if "C" in it.preperiod or "C" in it.period:
        raise NotInImageError("plateau symbol C is outside the encoding's image")
    pre, per = it.preperiod, it.period
    p, q = len(pre), len(per)
    if per == ("L",):
        syms = list(pre)
        out: list[int] = []
        i = 0
        while i < p and syms[i] == "L":
            out.append(0)
            i += 1
        blocks: list[int] = []  # lengths of R L^x blocks, as x
        while i < p:
            assert syms[i] == "R"
            i += 1
            x = 0
            while i < p and syms[i] == "L":
                x += 1
                i += 1
            blocks.append(x)
        if not blocks:
            return PeriodicSeq(out, (0,))  # pure L^infinity: all zeros
        # pair the blocks; the last one absorbs the infinite L tail
        j = 0
        while j + 1 < len(blocks):
            out.extend([1] * (blocks[j] + 1) + [0] * (blocks[j + 1] + 1))
            j += 2
        if j < len(blocks):
            # odd count: the trailing R L^infinity is an all-ones tail
            out.extend([1] * (blocks[j] + 1))
            return PeriodicSeq(out, (1,))
        # even count: the final pair's zero run continues forever
        return PeriodicSeq(out, (0,))
    # infinitely many Rs: decode pairwise with position alignment
    need = p + 6 * q + 8
    syms = [it.at(i) for i in range(need)]
    out = []
    i = 0
    while syms[i] == "L":
        out.append(0)
        i += 1
    pair_starts: list[int] = []
    while i < need:
        pair_starts.append(i)  # syms[i] == "R" by block structure
        i += 1
        x = 0
        while i < need and syms[i] == "L":
            x += 1
            i += 1
        if i >= need:
            break
        i += 1  # second R of the pair
        y = 0
        while i < need and syms[i] == "L":
            y += 1
            i += 1
        out.extend([1] * (x + 1) + [0] * (y + 1))
    anchor = None
    for ps in pair_starts:
        if ps >= p + 1 and ps <= len(out):
            if anchor is None:
                anchor = ps
            elif (ps - anchor) % q == 0:
                return PeriodicSeq(out[:anchor], out[anchor:ps])
    raise RuntimeError("internal: itinerary expansion too short")


def unimodal_cmp(a: Itinerary, b: Itinerary) -> int:
    """Itinerary order for maps with one increasing and one decreasing
    branch: compare at the first difference with L < C < R, flipping the
    direction when the common prefix contains an odd number of Rs."""
    if a.is_periodic and b.is_periodic:
        if a == b:
            return EQUAL
        bound = (len(a.preperiod) + len(b.preperiod)
                 + lcm(len(a.period), len(b.period)))
    else:
        bound = max(len(a.preperiod), len(b.preperiod)) + 1
    flips = 0
    for i in range(bound):
        x, y = a.at(i), b.at(i)
        if x is None or y is None:
            if x is None and y is None:
                return EQUAL
            raise ValueError("one finite itinerary is a strict prefix of the other")
        if x != y:
            base = LESS if _RANK[x] < _RANK[y] else GREATER
            return -base if flips % 2 else base
        if x == "R":
            flips += 1
    return EQUAL


def _branch_intervals(params: TrapezoidParams):
    lo_c, hi_c, _ = params.plateau()
    return (0.0, lo_c), (hi_c, params.domain_top())


def find_lr_cycles(params, n: int, tol: float = BOUNDARY_TOL) -> list[Itinerary]:
    """All primitive period-n cycles avoiding the plateau, found
    symbolically: compose the two affine branch formulas along each
    candidate word, solve the linear fixed-point equation, and accept
    only orbits that sit strictly inside their claimed branches.

    One itinerary per cycle is returned, anchored at its largest
    rotation.
    """
    params = as_params(params)
    if n < 1:
        raise PreconditionViolated("cycle length must be positive")
    b = float(params.beta)
    c = b / (b - 1.0)
    (l_lo, l_hi), (r_lo, r_hi) = _branch_intervals(params)
    found: dict[tuple[str, ...], Itinerary] = {}
    for mask in range(1 << n):
        word = tuple("R" if (mask >> i) & 1 else "L" for i in range(n))
        rots = [word[i:] + word[:i] for i in range(n)]
        rep = max(rots)
        if word != rep or rep in found:
            continue
        if n > 1 and any(word == word[k:] + word[:k] for k in range(1, n)):
            continue  # not primitive
        amul, badd = 1.0, 0.0
        for sym in word:
            if sym == "L":
                amul, badd = b * amul, b * badd
            else:
                amul, badd = -b * amul, c - b * badd
        x0 = badd / (1.0 - amul)
        x = x0
        ok = True
        for sym in word:
            if sym == "L":
                if not (-1e-12 <= x < l_hi - tol):
                    ok = False
                    break
                x = b * x
            else:
                if not (r_lo + tol < x <= r_hi + 1e-12):
                    ok = False
                    break
                x = c - b * x
        if ok and abs(x - x0) < 1e-8:
            found[rep] = Itinerary((), rep)
    return [found[k] for k in sorted(found)]


def extension_map(beta, x: float) -> float:
    """Continuous extension of the gap map: the gap is bridged by the
    straight line from (1/b, 1) down to (1/(b(b-1)), (2-b)/(b-1))."""
    b = float(as_beta(beta))
    l_hi = 1.0 / b
    g_hi = 1.0 / (b * (b - 1.0))
    top = 1.0 / (b - 1.0)
    if x < 0.0 or x > top:
        raise OutOfDomainError(f"x={x} outside [0, {top}]")
    if x < l_hi:
        return b * x
    if x <= g_hi:
        y0, y1 = 1.0, (2.0 - b) / (b - 1.0)
        return y0 + (x - l_hi) * (y1 - y0) / (g_hi - l_hi)
    return b * x - 1.0


def extension_three_cycle(beta) -> float:
    """A genuine 3-periodic point of the continuous extension.

    Above the period-4 threshold the values of (0011)^w, (0110)^w,
    (1100)^w, (1001)^w form a 4-cycle of the gap map; the third iterate
    of the extension then changes sign across the first two of those
    points, and any root in between is 3-periodic because the extension
    has no fixed point there.
    """
    beta = as_beta(beta)
    b4 = threshold_beta(4, 1e-12)
    if isinstance(beta, AlgebraicBeta):
        if beta.root.compare(b4.root) <= 0:
            raise PreconditionViolated("base must exceed the period-4 threshold")
    else:
        if b4.root.cmp_rational(Fraction(beta.value)) >= 0:
            raise PreconditionViolated("base must exceed the period-4 threshold")
    x1 = expansion_value(beta, PeriodicSeq.parse("(0011)^w"))
    x2 = expansion_value(beta, PeriodicSeq.parse("(0110)^w"))

    def g(x: float) -> float:
        y = extension_map(beta, x)
        y = extension_map(beta, y)
        return extension_map(beta, y) - x

    lo, hi = x1, x2
    glo, ghi = g(lo), g(hi)
    if not (glo > 0.0 > ghi):
        raise RuntimeError("internal: no sign change for the third iterate")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if abs(gm) < 1e-12 and hi - lo < 1e-13:
            break
        if gm > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
