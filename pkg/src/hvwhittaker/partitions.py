"""Partitions and pseudopartitions in multiplicity form.

A pseudopartition is stored as a sorted tuple of ``(part, multiplicity)``
pairs.  Zero parts are allowed and encode powers of ``L_0``; a partition is
a pseudopartition without zero parts.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple


class PartitionStats(NamedTuple):
    size: int
    parts: int


class Pseudopartition:
    __slots__ = ("mult",)

    def __init__(self, mult: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = mult.items() if isinstance(mult, Mapping) else mult
        acc: dict[int, int] = {}
        for k, m in items:
            k, m = int(k), int(m)
            if k < 0:
                raise ValueError(f"negative part {k}")
            if m < 0:
                raise ValueError(f"negative multiplicity for part {k}")
            if m:
                acc[k] = acc.get(k, 0) + m
        object.__setattr__(self, "mult", tuple(sorted(acc.items())))
        self._validate()

    def _validate(self) -> None:
        pass

    def __setattr__(self, name, value):
        raise AttributeError("partitions are immutable")

    @classmethod
    def from_parts(cls, parts: Iterable[int]):
        acc: dict[int, int] = {}
        for p in parts:
            acc[p] = acc.get(p, 0) + 1
        return cls(acc)

    def __call__(self, k: int) -> int:
        """Multiplicity of the part ``k``."""
        for part, m in self.mult:
            if part == k:
                return m
        return 0

    def parts(self) -> tuple[int, ...]:
        """Non-decreasing sequence of parts."""
        return tuple(k for k, m in self.mult for _ in range(m))

    @property
    def size(self) -> int:
        return sum(k * m for k, m in self.mult)

    @property
    def length(self) -> int:
        return sum(m for _, m in self.mult)

    def stats(self) -> PartitionStats:
        return PartitionStats(self.size, self.length)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.mult)

    def is_empty(self) -> bool:
        return not self.mult

    def without_zeros(self) -> "Partition":
        return Partition((k, m) for k, m in self.mult if k)

    def adjust(self, k: int, delta: int) -> "Pseudopartition":
        """Copy with the multiplicity of ``k`` shifted by ``delta``."""
        acc = dict(self.mult)
        acc[k] = acc.get(k, 0) + delta
        cls = type(self) if k else Pseudopartition
        return cls(acc)

    def __add__(self, other: "Pseudopartition") -> "Pseudopartition":
        acc = dict(self.mult)
        for k, m in other.mult:
            acc[k] = acc.get(k, 0) + m
        cls = Partition if isinstance(self, Partition) and isinstance(other, Partition) else Pseudopartition
        return cls(acc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Pseudopartition) and self.mult == other.mult

    def __hash__(self) -> int:
        return hash(self.mult)

    def __lt__(self, other: "Pseudopartition") -> bool:
        return self.mult < other.mult

    def __repr__(self) -> str:
        body = ", ".join(f"{k}^{m}" for k, m in self.mult)
        return f"{type(self).__name__}({body})"


class Partition(Pseudopartition):
    __slots__ = ()

    def _validate(self) -> None:
        if self.mult and self.mult[0][0] == 0:
            raise ValueError("a partition has no zero parts")


EMPTY_PSEUDO = Pseudopartition()
EMPTY = Partition()


def stats(lam: Pseudopartition) -> PartitionStats:
    return lam.stats()


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` with parts at most ``max_part``, largest part first."""
    for mult in _partition_mults(n, n if max_part is None else max_part):
        yield Partition(mult)


def _partition_mults(n: int, max_part: int) -> Iterator[dict[int, int]]:
    if n == 0:
        yield {}
        return
    for part in range(min(n, max_part), 0, -1):
        for times in range(n // part, 0, -1):
            for rest in _partition_mults(n - part * times, part - 1):
                out = dict(rest)
                out[part] = times
                yield out


def enumerate_pairs(degree: int, l0: int) -> list[tuple[Pseudopartition, Partition]]:
    """All ``(lam, mu)`` with ``|lam + mu| <= degree`` and ``lam(0) <= l0``.

    Ordered by total size, then ``lam(0)``, then the multiplicity tuples of
    ``lam`` and ``mu``.
    """
    if degree < 0 or l0 < 0:
        raise ValueError("bounds must be non-negative")
    out = []
    for n in range(degree + 1):
        graded = []
        for a in range(n + 1):
            for lam_pos in partitions_of(a):
                for mu in partitions_of(n - a):
                    graded.append((lam_pos, mu))
        for zeros in range(l0 + 1):
            layer = [(lam_pos.adjust(0, zeros) if zeros else Pseudopartition(lam_pos.mult), mu)
                     for lam_pos, mu in graded]
            layer.sort(key=lambda pair: (pair[0].mult, pair[1].mult))
            out.extend(layer)
    return out


def to_word(lam: Pseudopartition, mu: Partition):
    """PBW monomial ``L_{-lam} I_{-mu}``."""
    from .uea import PBWMonomial

    return PBWMonomial.from_exponents(
        l={-k: m for k, m in lam.mult},
        i={-k: m for k, m in mu.mult},
    )
