"""Binary words and eventually periodic 0-1 sequences.

This is the combinatorial core of the package: exact lexicographic
comparison of eventually periodic sequences, shifting, mirroring, the
Thue-Morse sequence and its generating morphism, the doubling map that
interleaves complement pairs, membership in the two-sided extremal set
(sequences dominating every shift while their mirror is dominated by
every shift), and detection of half-mirror squares u = v mirror(v).

Sequences are stored in canonical form: the period word is primitive and
the preperiod is as short as possible.  Equality, hashing and printing
all operate on that canonical form, so the primitive period of a purely
periodic sequence is simply ``len(s.period)``.
"""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Iterator, Optional, Union

LESS, EQUAL, GREATER = -1, 0, 1

_BitsLike = Union["BinaryWord", str, Iterable[int]]


def _coerce_bits(bits: _BitsLike) -> tuple[int, ...]:
    if isinstance(bits, BinaryWord):
        return bits.bits
    if isinstance(bits, str):
        if not re.fullmatch(r"[01]*", bits):
            raise ValueError(f"not a binary word: {bits!r}")
        return tuple(int(c) for c in bits)
    out = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"symbols must be 0 or 1, got {out}")
    return out


class BinaryWord:
    """Immutable finite word over {0, 1}."""

    __slots__ = ("_bits",)

    def __init__(self, bits: _BitsLike = ()):
        object.__setattr__(self, "_bits", _coerce_bits(bits))

    @property
    def bits(self) -> tuple[int, ...]:
        return self._bits

    def mirror(self) -> "BinaryWord":
        return BinaryWord(tuple(1 - b for b in self._bits))

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self._bits)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return BinaryWord(self._bits[i])
        return self._bits[i]

    def __add__(self, other: _BitsLike) -> "BinaryWord":
        return BinaryWord(self._bits + _coerce_bits(other))

    def __mul__(self, n: int) -> "BinaryWord":
        return BinaryWord(self._bits * n)

    def __eq__(self, other) -> bool:
        if isinstance(other, (BinaryWord, str)):
            return self._bits == _coerce_bits(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BinaryWord", self._bits))

    def __str__(self) -> str:
        return "".join(str(b) for b in self._bits)

    def __repr__(self) -> str:
        return f"BinaryWord({str(self)!r})"


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    """Shortest u with word = u^m, via the classic border (failure) array."""
    n = len(word)
    if n <= 1:
        return word
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1]
    return word[:p] if n % p == 0 else word


def _canonical(pre: tuple[int, ...], per: tuple[int, ...]):
    """Minimal preperiod, primitive period.  This form is unique."""
    per = _primitive_root(per)
    pre = list(pre)
    per = list(per)
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per.insert(0, per.pop())
    return tuple(pre), tuple(per)


class PeriodicSeq:
    """Eventually periodic infinite sequence over {0, 1}, kept canonical.

    ``PeriodicSeq(pre, per)`` represents pre followed by per repeated
    forever.  Text form is ``PRE(PER)^w``, e.g. ``11(0)^w`` or
    ``(1100)^w``.
    """

    __slots__ = ("_pre", "_per")

    def __init__(self, preperiod: _BitsLike = (), period: _BitsLike = (1,)):
        pre = _coerce_bits(preperiod)
        per = _coerce_bits(period)
        if not per:
            raise ValueError("period must be nonempty")
        pre, per = _canonical(pre, per)
        object.__setattr__(self, "_pre", pre)
        object.__setattr__(self, "_per", per)

    @classmethod
    def parse(cls, text: str) -> "PeriodicSeq":
        m = re.fullmatch(r"([01]*)\(([01]+)\)\^w", text.strip())
        if not m:
            raise ValueError(f"cannot parse periodic sequence: {text!r}")
        return cls(m.group(1), m.group(2))

    @property
    def preperiod(self) -> BinaryWord:
        return BinaryWord(self._pre)

    @property
    def period(self) -> BinaryWord:
        return BinaryWord(self._per)

    @property
    def is_purely_periodic(self) -> bool:
        return not self._pre

    def at(self, i: int) -> int:
        """Symbol at 0-based position i."""
        p = len(self._pre)
        if i < p:
            return self._pre[i]
        return self._per[(i - p) % len(self._per)]

    def prefix(self, n: int) -> BinaryWord:
        p, per = self._pre, self._per
        if n <= len(p):
            return BinaryWord(p[:n])
        rest = n - len(p)
        reps, tail = divmod(rest, len(per))
        return BinaryWord(p + per * reps + per[:tail])

    def __eq__(self, other) -> bool:
        if isinstance(other, PeriodicSeq):
            return self._pre == other._pre and self._per == other._per
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._pre, self._per))

    def __str__(self) -> str:
        pre = "".join(map(str, self._pre))
        per = "".join(map(str, self._per))
        return f"{pre}({per})^w"

    def __repr__(self) -> str:
        return f"PeriodicSeq.parse({str(self)!r})"


def lex_cmp(a, b) -> int:
    """Exact lexicographic comparison; returns LESS, EQUAL or GREATER.

    For two eventually periodic sequences a difference, if any, shows up
    within len(pre_a) + len(pre_b) + lcm(|per_a|, |per_b|) positions, so
    the scan below is exact, not a truncation heuristic.  Finite words
    are compared positionwise and must have equal length.
    """
    if isinstance(a, PeriodicSeq) and isinstance(b, PeriodicSeq):
        if a == b:
            return EQUAL
        bound = len(a._pre) + len(b._pre) + lcm(len(a._per), len(b._per))
        for i in range(bound):
            x, y = a.at(i), b.at(i)
            if x != y:
                return LESS if x < y else GREATER
        return EQUAL
    wa, wb = _coerce_bits(a), _coerce_bits(b)
    if len(wa) != len(wb):
        raise ValueError("finite words must have equal length to compare")
    if wa == wb:
        return EQUAL
    return LESS if wa < wb else GREATER


def shift(s: PeriodicSeq, j: int) -> PeriodicSeq:
    """Drop the first j symbols."""
    if j < 0:
        raise ValueError("shift distance must be nonnegative")
    p, q = len(s._pre), len(s._per)
    if j <= p:
        return PeriodicSeq(s._pre[j:], s._per)
    d = (j - p) % q
    return PeriodicSeq((), s._per[d:] + s._per[:d])


def mirror(s):
    """Complement every symbol."""
    if isinstance(s, PeriodicSeq):
        return PeriodicSeq(tuple(1 - b for b in s._pre), tuple(1 - b for b in s._per))
    return BinaryWord(s).mirror()


def thue_morse(n: int) -> BinaryWord:
    """First n symbols of the Thue-Morse sequence (index 0 onward).

    The k-th symbol is the parity of the binary digit sum of k, so the
    sequence begins 0110 1001 1001 0110 ...
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    return BinaryWord(tuple(bin(k).count("1") & 1 for k in range(n)))


def tm_morphism(w: _BitsLike) -> BinaryWord:
    """Apply the substitution 0 -> 01, 1 -> 10 to a finite word."""
    out = []
    for b in _coerce_bits(w):
        out.append(b)
        out.append(1 - b)
    return BinaryWord(out)


def doubling_prefix(bits: _BitsLike, n: int) -> BinaryWord:
    """First n symbols of the doubling map's image, from a plain prefix.

    The image starts with 1 and continues with the pair (b, 1-b) for each
    input symbol b, so n output symbols consume ceil((n-1)/2) input ones.
    """
    src = _coerce_bits(bits)
    need = (n + 1) // 2
    if len(src) < need:
        raise ValueError(f"need {need} input symbols for {n} output symbols")
    out = [1]
    for b in src:
        out.append(b)
        out.append(1 - b)
        if len(out) >= n:
            break
    return BinaryWord(tuple(out[:n]))


def doubling_map(s: PeriodicSeq) -> PeriodicSeq:
    """Interleaving doubling map: 1, then (s_1, 1-s_1), (s_2, 1-s_2), ...

    Computed symbolwise from the definition and recanonicalized.  On a
    purely periodic input with primitive period T ending in 0 the image
    is purely periodic with primitive period 2T; in general the image of
    a (p, q) sequence repeats with period 2q from position 2p + 1 onward.
    """
    p, q = len(s._pre), len(s._per)
    out = [1]
    for i in range(p + 2 * q):
        b = s.at(i)
        out.append(b)
        out.append(1 - b)
    cut = 2 * p + 1
    return PeriodicSeq(out[:cut], out[cut:cut + 2 * q])


def is_extremal(s: PeriodicSeq) -> bool:
    """Whether mirror(s) <= shift^k(s) <= s holds for every k >= 0.

    Shifts of an eventually periodic sequence repeat after the preperiod,
    so checking k < len(pre) + len(per) is exhaustive.  Purely periodic
    sequences get a fast path: all sequences involved share the period
    length q, so each comparison is decided within q symbols.
    """
    if not s._pre:
        per = s._per
        q = len(per)
        ext = per + per
        mir = tuple(1 - b for b in per)
        for k in range(q):
            rot = ext[k:k + q]
            if rot > per or mir > rot:
                return False
        return True
    m = mirror(s)
    for k in range(len(s._pre) + len(s._per)):
        t = shift(s, k)
        if lex_cmp(m, t) > 0 or lex_cmp(t, s) > 0:
            return False
    return True


def split_halfmirror(u: _BitsLike) -> Optional[BinaryWord]:
    """Return v if u = v · mirror(v), else None."""
    bits = _coerce_bits(u)
    n = len(bits)
    if n == 0 or n % 2:
        return None
    half = bits[:n // 2]
    if bits[n // 2:] == tuple(1 - b for b in half):
        return BinaryWord(half)
    return None
