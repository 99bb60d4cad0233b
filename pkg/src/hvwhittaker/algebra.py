"""Generators and Lie bracket of the twisted Heisenberg-Virasoro algebra.

The algebra is spanned by ``L_k``, ``I_k`` (``k`` any integer) and three
central elements ``z_1, z_2, z_3``.  ``I_0`` brackets to zero with every
generator and is treated as the fourth central element ``z_0`` wherever
products are formed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

Rational = Fraction

NPLUS = "nPlus"
NMINUS = "nMinus"
CARTAN = "cartan"


class Generator(NamedTuple):
    kind: str  # "L", "I" or "Z"
    index: int

    def __repr__(self) -> str:
        if self.kind == "Z":
            return f"z{self.index}"
        return f"{self.kind}[{self.index}]"

    @property
    def is_central(self) -> bool:
        return self.kind == "Z" or (self.kind == "I" and self.index == 0)


def L(k: int) -> Generator:
    return Generator("L", int(k))


def I(k: int) -> Generator:  # noqa: E743
    return Generator("I", int(k))


def Z(i: int) -> Generator:
    """Central generator ``z_i``; ``Z(0)`` is returned as ``I_0``."""
    i = int(i)
    if i == 0:
        return Generator("I", 0)
    if i not in (1, 2, 3):
        raise ValueError(f"central index must be 0..3, got {i}")
    return Generator("Z", i)


def _check(g: Generator) -> Generator:
    if g.kind not in ("L", "I", "Z"):
        raise ValueError(f"unknown generator kind {g.kind!r}")
    if g.kind == "Z" and g.index not in (1, 2, 3):
        raise ValueError(f"central index must be 1..3, got {g.index}")
    return g


def generator_key(g: Generator) -> tuple[int, int]:
    """Canonical order: z_1 < z_2 < z_3 < I_0, then L ascending, then I ascending."""
    if g.kind == "Z":
        return (0, g.index)
    if g.kind == "I" and g.index == 0:
        return (0, 4)
    return (1, g.index) if g.kind == "L" else (2, g.index)


class LieElement:
    """Finite linear combination of generators with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Generator, object] | None = None):
        clean: dict[Generator, Fraction] = {}
        for g, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[_check(Generator(*g))] = clean.get(g, Fraction(0)) + c
        self._terms = {g: c for g, c in clean.items() if c}
        self._hash = None

    @classmethod
    def of(cls, g: Generator, coeff=1) -> "LieElement":
        return cls({g: coeff})

    @property
    def terms(self) -> dict[Generator, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Generator, Fraction]]:
        for g in sorted(self._terms, key=generator_key):
            yield g, self._terms[g]

    def __iter__(self):
        return iter(sorted(self._terms, key=generator_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, g: Generator) -> Fraction:
        return self._terms.get(g, Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, Generator):
            other = LieElement.of(other)
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, LieElement) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self._terms)
        for g, c in _as_lie(other)._terms.items():
            out[g] = out.get(g, Fraction(0)) + c
        return LieElement(out)

    __radd__ = __add__

    def __neg__(self) -> "LieElement":
        return LieElement({g: -c for g, c in self._terms.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-_as_lie(other))

    def __mul__(self, scalar) -> "LieElement":
        s = Fraction(scalar)
        return LieElement({g: s * c for g, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "LieElement(0)"
        return "LieElement(" + " + ".join(f"{c}*{g!r}" for g, c in self.items()) + ")"


def _as_lie(x) -> LieElement:
    if isinstance(x, LieElement):
        return x
    if isinstance(x, Generator):
        return LieElement.of(x)
    raise TypeError(f"cannot interpret {x!r} as a Lie element")


def bracket_generators(g: Generator, h: Generator) -> dict[Generator, Fraction]:
    """Bracket of two basis generators as a ``{generator: coefficient}`` dict."""
    if g.kind == "Z" or h.kind == "Z":
        return {}
    k, j = g.index, h.index
    out: dict[Generator, Fraction] = {}
    if g.kind == "L" and h.kind == "L":
        if j != k:
            out[Generator("L", k + j)] = Fraction(j - k)
        if j == -k and k**3 - k:
            out[Generator("Z", 1)] = Fraction(k**3 - k, 12)
    elif g.kind == "L" and h.kind == "I":
        if j:
            out[Generator("I", k + j)] = Fraction(j)
        if j == -k and k * k - k:
            out[Generator("Z", 2)] = Fraction(k * k - k)
    elif g.kind == "I" and h.kind == "L":
        return {x: -c for x, c in bracket_generators(h, g).items()}
    else:
        if j == -k and k:
            out[Generator("Z", 3)] = Fraction(k)
    return out


def bracket(x, y) -> LieElement:
    """Bilinear bracket ``[x, y]`` of Lie elements (or bare generators)."""
    x, y = _as_lie(x), _as_lie(y)
    out: dict[Generator, Fraction] = {}
    for g, a in x._terms.items():
        for h, b in y._terms.items():
            for e, c in bracket_generators(g, h).items():
                out[e] = out.get(e, Fraction(0)) + a * b * c
    return LieElement(out)


def ad_weight(g: Generator) -> int:
    """Eigenvalue of ``ad L_0`` on ``g``."""
    return 0 if g.kind == "Z" else g.index


def classify(g: Generator) -> str:
    if g.kind == "Z" or g.index == 0:
        return CARTAN
    return NPLUS if g.index > 0 else NMINUS


def reduce_central(x) -> LieElement:
    """Drop the ``z_1, z_2, z_3`` components; ``I_0`` survives."""
    x = _as_lie(x)
    return LieElement({g: c for g, c in x._terms.items() if g.kind != "Z"})


def bracket_reduced(x, y) -> LieElement:
    """Bracket of the centreless quotient algebra."""
    return reduce_central(bracket(reduce_central(x), reduce_central(y)))


def generators_in_range(lo: int, hi: int, central: bool = True) -> Iterable[Generator]:
    """All ``L_k, I_k`` with ``lo <= k <= hi`` (plus ``z_1..z_3`` if asked)."""
    gens = [Generator(kind, k) for k in range(lo, hi + 1) for kind in ("L", "I")]
    if central:
        gens += [Generator("Z", i) for i in (1, 2, 3)]
    return gens
