"""Whittaker modules: the universal module and its central quotients.

A basis vector ``z^t L_{-lam} I_{-mu} w`` is stored as a :class:`BasisIndex`
holding ``t`` together with the ascending index sequences of its ``L`` and
``I`` factors.  The action of a generator is computed by moving it to the
right through the PBW word, one commutator at a time, until it reaches
``w`` (positive modes act by ``psi``) or finds its PBW slot.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .algebra import Generator, bracket_generators
from .partitions import Partition, Pseudopartition, enumerate_pairs
from .uea import UEAElement

ZERO_T = (0, 0, 0, 0)
_ONE = Fraction(1)

NEG_INF = -math.inf


class InvalidPsiError(ValueError):
    """A Whittaker map that is not a Lie homomorphism, or is unsuitable for a module."""


@dataclass(frozen=True)
class WhittakerMap:
    psi_l1: Fraction
    psi_l2: Fraction
    psi_i1: Fraction

    def __post_init__(self):
        for name in ("psi_l1", "psi_l2", "psi_i1"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def nonsingular(self) -> bool:
        return bool(self.psi_l1 and self.psi_l2 and self.psi_i1)

    @property
    def is_zero(self) -> bool:
        return not (self.psi_l1 or self.psi_l2 or self.psi_i1)

    def __call__(self, g: Generator) -> Fraction:
        """Value on ``g``; zero off the generating triple ``L_1, L_2, I_1``."""
        if g.kind == "L" and g.index in (1, 2):
            return self.psi_l1 if g.index == 1 else self.psi_l2
        if g.kind == "I" and g.index == 1:
            return self.psi_i1
        return Fraction(0)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.psi_l1, self.psi_l2, self.psi_i1)


def make_psi(l1, l2, i1, extra: Mapping[Generator, object] | None = None) -> WhittakerMap:
    """Build a Whittaker map from its values on ``L_1, L_2, I_1``.

    ``extra`` may list values on other positive generators; they must be
    zero, because ``psi`` kills ``[n+, n+]``.
    """
    for g, value in (extra or {}).items():
        g = Generator(*g)
        if g.kind not in ("L", "I") or g.index <= 0:
            raise InvalidPsiError(f"{g!r} is not in the positive part")
        if (g.kind, g.index) in (("L", 1), ("L", 2), ("I", 1)):
            raise InvalidPsiError(f"give {g!r} through the positional arguments")
        if Fraction(value):
            raise InvalidPsiError(f"psi({g!r}) must vanish, got {value}")
    return WhittakerMap(l1, l2, i1)


@dataclass(frozen=True)
class CentralCharacter:
    xi0: Fraction = Fraction(0)
    xi1: Fraction = Fraction(0)
    xi2: Fraction = Fraction(0)
    xi3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("xi0", "xi1", "xi2", "xi3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.xi0, self.xi1, self.xi2, self.xi3)

    def evaluate(self, t: tuple[int, int, int, int]) -> Fraction:
        out = _ONE
        for x, e in zip(self.as_tuple(), t):
            if e:
                out *= x**e
        return out


@dataclass(frozen=True)
class Universal:
    """The universal Whittaker module ``M_psi`` (requires nonsingular psi)."""

    psi: WhittakerMap

    def __post_init__(self):
        if not self.psi.nonsingular:
            raise InvalidPsiError("the universal module needs psi(L1), psi(L2), psi(I1) all nonzero")

    xi = None


@dataclass(frozen=True)
class Reduced:
    """Quotient where ``z_i`` acts by ``xi_i``; psi may be singular but not zero."""

    psi: WhittakerMap
    xi: CentralCharacter = field(default_factory=CentralCharacter)

    def __post_init__(self):
        if self.psi.is_zero:
            raise InvalidPsiError("psi must not vanish identically")


ModuleSpec = Union[Universal, Reduced]


class BasisIndex:
    """Index of ``z^t L_{-lam} I_{-mu} w``.

    ``ls`` and ``is_`` are the ascending mode sequences of the ``L`` and
    ``I`` factors, e.g. ``L_{-2} L_0^2 I_{-1}`` has ``ls=(-2, 0, 0)`` and
    ``is_=(-1,)``.
    """

    __slots__ = ("t", "ls", "is_", "_hash")

    def __init__(self, t=ZERO_T, ls=(), is_=()):
        self.t = tuple(t)
        self.ls = tuple(ls)
        self.is_ = tuple(is_)
        self._hash = hash((self.t, self.ls, self.is_))

    @classmethod
    def from_partitions(cls, lam: Pseudopartition, mu: Partition, t=ZERO_T) -> "BasisIndex":
        return cls(t, tuple(-k for k in reversed(lam.parts())), tuple(-k for k in reversed(mu.parts())))

    @property
    def lam(self) -> Pseudopartition:
        return Pseudopartition.from_parts(-k for k in self.ls)

    @property
    def mu(self) -> Partition:
        return Partition.from_parts(-k for k in self.is_)

    @property
    def degree(self) -> int:
        return -sum(self.ls) - sum(self.is_)

    @property
    def l0(self) -> int:
        return self.ls.count(0)

    @property
    def mu_parts(self) -> int:
        return len(self.is_)

    def sort_key(self):
        return (self.degree, self.l0, self.lam.mult, self.mu.mult, sum(self.t), tuple(-e for e in self.t))

    def __eq__(self, other) -> bool:
        return (isinstance(other, BasisIndex) and self.t == other.t
                and self.ls == other.ls and self.is_ == other.is_)

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "BasisIndex") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        parts = []
        for i, e in enumerate(self.t):
            if e:
                parts.append(f"z{i}" + (f"^{e}" if e > 1 else ""))
        for tag, seq in (("L", self.ls), ("I", self.is_)):
            for k in sorted(set(seq)):
                e = seq.count(k)
                parts.append(f"{tag}[{k}]" + (f"^{e}" if e > 1 else ""))
        parts.append("w")
        return "*".join(parts)


CYCLIC = BasisIndex()


class ModuleVector:
    """Finite rational combination of basis vectors of a fixed module."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: ModuleSpec, terms: Mapping[BasisIndex, object] | None = None):
        self.spec = spec
        clean = {}
        for idx, c in (terms or {}).items():
            if c:
                if isinstance(spec, Reduced) and idx.t != ZERO_T:
                    raise ValueError("reduced modules carry no central exponents")
                clean[idx] = Fraction(c)
        self._terms = clean

    @classmethod
    def cyclic(cls, spec: ModuleSpec, coeff=1) -> "ModuleVector":
        return cls(spec, {CYCLIC: coeff})

    @classmethod
    def basis(cls, spec: ModuleSpec, idx: BasisIndex) -> "ModuleVector":
        return cls(spec, {idx: 1})

    @classmethod
    def zero(cls, spec: ModuleSpec) -> "ModuleVector":
        return cls(spec)

    @property
    def terms(self) -> dict[BasisIndex, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[BasisIndex, Fraction]]:
        return sorted(self._terms.items(), key=lambda ic: ic[0].sort_key())

    def coeff(self, idx: BasisIndex) -> Fraction:
        return self._terms.get(idx, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        return (isinstance(other, ModuleVector) and self.spec == other.spec
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.spec, frozenset(self._terms.items())))

    def _same(self, other: "ModuleVector") -> None:
        if self.spec != other.spec:
            raise ValueError("vectors live in different modules")

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._same(other)
        out = dict(self._terms)
        for idx, c in other._terms.items():
            out[idx] = out.get(idx, 0) + c
        return ModuleVector(self.spec, out)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector(self.spec, {i: -c for i, c in self._terms.items()})

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def __mul__(self, scalar) -> "ModuleVector":
        s = Fraction(scalar)
        return ModuleVector(self.spec, {i: s * c for i, c in self._terms.items()})

    __rmul__ = __mul__

    def is_cyclic_multiple(self) -> bool:
        return bool(self._terms) and set(self._terms) == {CYCLIC}

    def __repr__(self) -> str:
        if not self._terms:
            return "ModuleVector(0)"
        return "ModuleVector(" + " + ".join(f"{c}*{i!r}" for i, c in self.items()) + ")"


# -- action engine ----------------------------------------------------------

def _merge(acc: dict, items, scale: Fraction, shift=ZERO_T) -> None:
    for (t, ls, is_), c in items:
        if shift != ZERO_T:
            t = (t[0] + shift[0], t[1] + shift[1], t[2] + shift[2], t[3] + shift[3])
        key = (t, ls, is_)
        v = acc.get(key, 0) + scale * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


@lru_cache(maxsize=None)
def _act(psi: tuple, g: Generator, ls: tuple, is_: tuple) -> tuple:
    """``g . (L_ls I_is w)`` in M_psi as ((t, ls, is_), coeff) pairs."""
    kind, n = g
    if kind == "Z" or (kind == "I" and n == 0):
        t = [0, 0, 0, 0]
        t[0 if kind == "I" else n] = 1
        return (((tuple(t), ls, is_), _ONE),)
    if n <= 0:
        if kind == "L":
            if not ls or n <= ls[0]:
                return ((ZERO_T, (n,) + ls, is_), _ONE),
            x, rest = Generator("L", ls[0]), (ls[1:], is_)
        elif ls:
            x, rest = Generator("L", ls[0]), (ls[1:], is_)
        elif not is_ or n <= is_[0]:
            return ((ZERO_T, ls, (n,) + is_), _ONE),
        else:
            x, rest = Generator("I", is_[0]), (ls, is_[1:])
    else:
        if not ls and not is_:
            c = _psi_value(psi, g)
            return (((ZERO_T, (), ()), c),) if c else ()
        if ls:
            x, rest = Generator("L", ls[0]), (ls[1:], is_)
        else:
            x, rest = Generator("I", is_[0]), (ls, is_[1:])
    acc: dict = {}
    # g x rest = x (g rest) + [g, x] rest
    for (t, ls2, is2), c in _act(psi, g, *rest):
        _merge(acc, _act(psi, x, ls2, is2), c, t)
    for h, c in bracket_generators(g, x).items():
        _merge(acc, _act(psi, h, *rest), c)
    return tuple(acc.items())


def _psi_value(psi: tuple, g: Generator) -> Fraction:
    if g.kind == "L" and g.index in (1, 2):
        return psi[g.index - 1]
    if g.kind == "I" and g.index == 1:
        return psi[2]
    return Fraction(0)


def _finish(spec: ModuleSpec, raw: dict) -> ModuleVector:
    if isinstance(spec, Reduced):
        out: dict[BasisIndex, Fraction] = {}
        for (t, ls, is_), c in raw.items():
            c = c * spec.xi.evaluate(t)
            if c:
                idx = BasisIndex(ZERO_T, ls, is_)
                out[idx] = out.get(idx, 0) + c
        return ModuleVector(spec, out)
    return ModuleVector(spec, {BasisIndex(t, ls, is_): c for (t, ls, is_), c in raw.items()})


def act(g: Generator, v: ModuleVector) -> ModuleVector:
    """Action of a single generator on a module vector."""
    g = Generator(*g)
    psi = v.spec.psi.as_tuple()
    raw: dict = {}
    for idx, c in v._terms.items():
        _merge(raw, _act(psi, g, idx.ls, idx.is_), c, idx.t)
    return _finish(v.spec, raw)


def act_word(word: Iterable[Generator], v: ModuleVector) -> ModuleVector:
    """Apply the factors of ``word`` right to left."""
    for g in reversed(tuple(word)):
        v = act(g, v)
    return v


def act_uea(u: UEAElement, v: ModuleVector) -> ModuleVector:
    out = ModuleVector.zero(v.spec)
    for m, c in u.items():
        out = out + act_word(m.reading_word(), v) * c
    return out


def defect(g: Generator, v: ModuleVector) -> ModuleVector:
    """Dot action ``g . v = g v - psi(g) v``."""
    g = Generator(*g)
    out = act(g, v)
    c = v.spec.psi(g)
    return out - v * c if c else out


def maxdeg(v: ModuleVector):
    return max((idx.degree for idx in v._terms), default=NEG_INF)


def max_l0(v: ModuleVector):
    return max((idx.l0 for idx in v._terms), default=NEG_INF)


def evaluate_central(v: ModuleVector, xi: CentralCharacter) -> ModuleVector:
    """Image of a universal-module vector in the quotient with character ``xi``."""
    if not isinstance(v.spec, Universal):
        raise ValueError("evaluate_central expects a vector of the universal module")
    target = Reduced(v.spec.psi, xi)
    raw = {(idx.t, idx.ls, idx.is_): c for idx, c in v._terms.items()}
    return _finish(target, raw)


def central_monomials(zdeg: int) -> list[tuple[int, int, int, int]]:
    """Exponent vectors ``t`` with ``|t| <= zdeg``, graded then lexicographic."""
    out = []
    for total in range(zdeg + 1):
        layer = []
        for a in range(total + 1):
            for b in range(total - a + 1):
                for c in range(total - a - b + 1):
                    layer.append((a, b, c, total - a - b - c))
        out.extend(sorted(layer, reverse=True))
    return out


def basis_enumerate(spec: ModuleSpec, degree: int, l0: int, zdeg: int = 0) -> list[BasisIndex]:
    if min(degree, l0, zdeg) < 0:
        raise ValueError("bounds must be non-negative")
    ts = central_monomials(zdeg) if isinstance(spec, Universal) else [ZERO_T]
    return [BasisIndex.from_partitions(lam, mu, t)
            for lam, mu in enumerate_pairs(degree, l0) for t in ts]


def basis_vectors(spec: ModuleSpec, degree: int, l0: int, zdeg: int = 0) -> Iterator[ModuleVector]:
    for idx in basis_enumerate(spec, degree, l0, zdeg):
        yield ModuleVector.basis(spec, idx)


def annihilator_generators(spec: Reduced, m_max: int) -> list[tuple[Generator, Fraction]]:
    """Pairs ``(x, c)`` standing for ``x - c`` in the annihilator of the cyclic vector."""
    out = [(Generator("I", 0), spec.xi.xi0)]
    out += [(Generator("Z", i), spec.xi.as_tuple()[i]) for i in (1, 2, 3)]
    for m in range(1, m_max + 1):
        for kind in ("L", "I"):
            g = Generator(kind, m)
            out.append((g, spec.psi(g)))
    return out
