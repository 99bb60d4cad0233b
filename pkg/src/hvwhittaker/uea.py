"""PBW monomials and normal ordering in the universal enveloping algebra.

PBW order: central block (``z_0 = I_0, z_1, z_2, z_3``), then ``L_k`` with
ascending ``k``, then ``I_k`` with ascending ``k``.  Straightening rewrites
an out-of-order adjacent pair ``x y`` as ``y x + [x, y]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .algebra import Generator, ad_weight, bracket_generators

Word = tuple  # tuple[Generator, ...]

_ONE = Fraction(1)


def pbw_key(g: Generator) -> tuple[int, int]:
    if g.kind == "Z":
        return (0, g.index)
    if g.kind == "I" and g.index == 0:
        return (0, 0)
    return (1, g.index) if g.kind == "L" else (2, g.index)


@dataclass(frozen=True, order=False)
class PBWMonomial:
    t: tuple[int, int, int, int] = (0, 0, 0, 0)
    l: tuple[tuple[int, int], ...] = ()
    i: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_exponents(cls, t: Sequence[int] = (0, 0, 0, 0),
                       l: Mapping[int, int] | None = None,
                       i: Mapping[int, int] | None = None) -> "PBWMonomial":
        t = tuple(int(x) for x in t)
        if len(t) != 4 or min(t) < 0:
            raise ValueError("central exponents must be four non-negative integers")
        i = dict(i or {})
        t0 = i.pop(0, 0)
        if t0:
            t = (t[0] + t0,) + t[1:]
        return cls(
            t,
            tuple(sorted((k, e) for k, e in (l or {}).items() if e)),
            tuple(sorted((k, e) for k, e in i.items() if e)),
        )

    @classmethod
    def from_sorted_word(cls, word: Word) -> "PBWMonomial":
        t = [0, 0, 0, 0]
        l: dict[int, int] = {}
        i: dict[int, int] = {}
        for g in word:
            if g.kind == "Z":
                t[g.index] += 1
            elif g.kind == "I" and g.index == 0:
                t[0] += 1
            elif g.kind == "L":
                l[g.index] = l.get(g.index, 0) + 1
            else:
                i[g.index] = i.get(g.index, 0) + 1
        return cls(tuple(t), tuple(sorted(l.items())), tuple(sorted(i.items())))

    def reading_word(self) -> Word:
        out = []
        for idx, e in enumerate(self.t):
            g = Generator("I", 0) if idx == 0 else Generator("Z", idx)
            out.extend([g] * e)
        out.extend(Generator("L", k) for k, e in self.l for _ in range(e))
        out.extend(Generator("I", k) for k, e in self.i for _ in range(e))
        return tuple(out)

    @property
    def weight(self) -> int:
        return sum(k * e for k, e in self.l) + sum(k * e for k, e in self.i)

    def __len__(self) -> int:
        return sum(self.t) + sum(e for _, e in self.l) + sum(e for _, e in self.i)

    def sort_key(self):
        return (len(self), self.t, self.l, self.i)

    def __repr__(self) -> str:
        w = self.reading_word()
        return "PBWMonomial(" + ("*".join(map(repr, w)) or "1") + ")"


ONE_MONOMIAL = PBWMonomial()


def weight(m: PBWMonomial) -> int:
    return m.weight


class UEAElement:
    """Sparse rational combination of PBW monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[PBWMonomial, object] | None = None):
        self._terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def one(cls) -> "UEAElement":
        return cls({ONE_MONOMIAL: 1})

    @classmethod
    def from_generator(cls, g: Generator, coeff=1) -> "UEAElement":
        return normal_form((g,)) * coeff

    @classmethod
    def from_lie(cls, x) -> "UEAElement":
        out = cls()
        for g, c in x.items():
            out = out + cls.from_generator(g, c)
        return out

    @property
    def terms(self) -> dict[PBWMonomial, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[PBWMonomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, UEAElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "UEAElement") -> "UEAElement":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return UEAElement(out)

    def __neg__(self) -> "UEAElement":
        return UEAElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "UEAElement") -> "UEAElement":
        return self + (-other)

    def __mul__(self, other) -> "UEAElement":
        if isinstance(other, UEAElement):
            return multiply(self, other)
        s = Fraction(other)
        return UEAElement({m: s * c for m, c in self._terms.items()})

    def __rmul__(self, scalar) -> "UEAElement":
        return self * Fraction(scalar)

    def __repr__(self) -> str:
        if not self._terms:
            return "UEAElement(0)"
        return "UEAElement(" + " + ".join(f"{c}*{m!r}" for m, c in self.items()) + ")"


def _accumulate(acc: dict, items: Iterable, scale: Fraction) -> None:
    for key, c in items:
        v = acc.get(key, 0) + scale * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


@lru_cache(maxsize=None)
def _insert_left(g: Generator, s: Word) -> tuple:
    """Normal form of ``g * s`` for a sorted word ``s`` as ((word, coeff), ...)."""
    if not s or pbw_key(g) <= pbw_key(s[0]):
        return (((g,) + s, _ONE),)
    head, rest = s[0], s[1:]
    acc: dict = {}
    # g head rest = head (g rest) + [g, head] rest
    for u, c in _insert_left(g, rest):
        _accumulate(acc, _insert_left(head, u), c)
    for h, c in bracket_generators(g, head).items():
        _accumulate(acc, _insert_left(h, rest), c)
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _insert_right(s: Word, g: Generator) -> tuple:
    """Normal form of ``s * g`` for a sorted word ``s``."""
    if not s or pbw_key(s[-1]) <= pbw_key(g):
        return ((s + (g,), _ONE),)
    rest, last = s[:-1], s[-1]
    acc: dict = {}
    # rest last g = rest g last + rest [last, g]
    for u, c in _insert_right(rest, g):
        _accumulate(acc, _insert_right(u, last), c)
    for h, c in bracket_generators(last, g).items():
        _accumulate(acc, _insert_right(rest, h), c)
    return tuple(acc.items())


def _straighten(word: Word, strategy: str) -> dict:
    if strategy == "suffix":
        current = {(): _ONE}
        for g in reversed(word):
            nxt: dict = {}
            for s, c in current.items():
                _accumulate(nxt, _insert_left(g, s), c)
            current = nxt
    elif strategy == "prefix":
        current = {(): _ONE}
        for g in word:
            nxt = {}
            for s, c in current.items():
                _accumulate(nxt, _insert_right(s, g), c)
            current = nxt
    else:
        raise ValueError(f"unknown straightening strategy {strategy!r}")
    return current


def normal_form(word: Iterable[Generator], strategy: str = "suffix") -> UEAElement:
    """PBW normal form of the product of ``word``.

    ``strategy="suffix"`` inserts letters right to left into a sorted suffix;
    ``"prefix"`` inserts left to right into a sorted prefix.  Both only use
    adjacent swaps and must agree.
    """
    word = tuple(Generator(*g) for g in word)
    out: dict[PBWMonomial, Fraction] = {}
    for s, c in _straighten(word, strategy).items():
        m = PBWMonomial.from_sorted_word(s)
        out[m] = out.get(m, 0) + c
    return UEAElement(out)


def multiply(a: UEAElement, b: UEAElement) -> UEAElement:
    out: dict[PBWMonomial, Fraction] = {}
    for ma, ca in a._terms.items():
        wa = ma.reading_word()
        for mb, cb in b._terms.items():
            current = {mb.reading_word(): _ONE}
            for g in reversed(wa):
                nxt: dict = {}
                for s, c in current.items():
                    _accumulate(nxt, _insert_left(g, s), c)
                current = nxt
            for s, c in current.items():
                m = PBWMonomial.from_sorted_word(s)
                out[m] = out.get(m, 0) + ca * cb * c
    return UEAElement(out)


def word_weight(word: Iterable[Generator]) -> int:
    return sum(ad_weight(g) for g in word)


def is_in_b_minus(e: UEAElement) -> bool:
    """True iff every monomial only uses centrals and non-positive indices."""
    return all(
        all(k <= 0 for k, _ in m.l) and all(k <= 0 for k, _ in m.i)
        for m in e._terms
    )


def monomials(e: UEAElement) -> Iterator[PBWMonomial]:
    return iter(m for m, _ in e.items())
