"""Whittaker-vector search, constructive descent and lemma checks.

Search spaces are truncated by :class:`Bounds`; every action or defect is
computed exactly, so a vector reported as Whittaker really is one.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import Generator
from .linalg import IncrementalSpan, nullspace
from .modules import (
    CYCLIC,
    NEG_INF,
    BasisIndex,
    ModuleSpec,
    ModuleVector,
    Reduced,
    Universal,
    act,
    basis_enumerate,
    defect,
    max_l0,
    maxdeg,
)
from .partitions import enumerate_pairs

log = logging.getLogger(__name__)

WHITTAKER_TRIPLE = (Generator("L", 1), Generator("L", 2), Generator("I", 1))


class BoundExhaustedError(RuntimeError):
    """A bounded search ran out of room before deciding."""


class DescentStuckError(BoundExhaustedError):
    pass


class NilpotencyCapError(BoundExhaustedError):
    pass


class CounterexampleError(RuntimeError):
    """Descent reached a Whittaker vector that is not a multiple of the cyclic one."""


@dataclass(frozen=True)
class Bounds:
    degree: int = 3
    l0: int = 3
    zdeg: int = 2
    gen_index: int = 6

    def __post_init__(self):
        for name in ("degree", "l0", "zdeg", "gen_index"):
            if getattr(self, name) < 0:
                raise ValueError(f"bound {name} must be non-negative")


def _col(idx: BasisIndex):
    return idx.sort_key()


# -- Whittaker vectors -------------------------------------------------------

def whittaker_solve(spec: ModuleSpec, bounds: Bounds) -> list[ModuleVector]:
    """Basis of the Whittaker vectors inside the truncated basis span.

    The truncated basis is every ``z^t L_{-lam} I_{-mu} w`` within ``bounds``;
    defects of ``L_1, L_2, I_1`` are computed in full.
    """
    basis = basis_enumerate(spec, bounds.degree, bounds.l0,
                            bounds.zdeg if isinstance(spec, Universal) else 0)
    columns = list(range(len(basis)))
    rows: dict = {}
    for j, idx in enumerate(basis):
        v = ModuleVector.basis(spec, idx)
        for gi, g in enumerate(WHITTAKER_TRIPLE):
            for out_idx, c in defect(g, v)._terms.items():
                rows.setdefault((gi, _col(out_idx)), {})[j] = c
    ordered = [rows[k] for k in sorted(rows)]
    sols = nullspace(ordered, columns)
    return [ModuleVector(spec, {basis[j]: c for j, c in vec.items()}) for vec in sols]


def is_whittaker(v: ModuleVector, n_max: int = 2) -> bool:
    gens = list(WHITTAKER_TRIPLE) + [Generator(k, n) for n in range(3, n_max + 1) for k in "LI"]
    return all(not defect(g, v) for g in gens)


# -- descent -----------------------------------------------------------------

@dataclass
class DescentState:
    current: ModuleVector
    N: object
    Lambda_N: list
    k: int | None
    trace: list = field(default_factory=list)


@dataclass
class DescentResult:
    trace: list[Generator]
    scalar: Fraction
    vectors: list[ModuleVector]

    @property
    def result(self) -> ModuleVector:
        return self.vectors[-1]


def _measure(v: ModuleVector) -> tuple:
    """Multiset of ``(degree, l0)`` keys, sorted descending.

    Comparing these tuples lexicographically is the multiset extension of the
    lexicographic order on ``(degree, l0)``, hence well-founded.
    """
    return tuple(sorted(((idx.degree, idx.l0) for idx in v._terms), reverse=True))


def _state(v: ModuleVector) -> DescentState:
    N = maxdeg(v)
    top = [(idx.lam, idx.mu) for idx in v._terms if idx.degree == N]
    k = None
    if N != NEG_INF and N > 0:
        k = min(n for lam, mu in top for n in lam.support() + mu.support() if n > 0)
    return DescentState(v, N, top, k)


def _min_lam_part(pairs) -> int | None:
    parts = [min(lam.support()) for lam, _ in pairs if not lam.is_empty()]
    return min(parts) if parts else None


def recipe(v: ModuleVector) -> list[Generator]:
    """Operators suggested by the case split on top degree, in preference order."""
    st = _state(v)
    if st.N == NEG_INF:
        return []
    if st.N == 0:
        return [Generator("I", 1)]
    k = st.k
    if any(lam(k) for lam, _ in st.Lambda_N):
        return [Generator("I", k + 1)]
    lower = [(idx.lam, idx.mu) for idx in v._terms if idx.degree < st.N]
    lower_deg = max((lam.size + mu.size for lam, mu in lower), default=NEG_INF)
    if lower_deg < st.N - 1 or all(lam.is_empty() for lam, _ in st.Lambda_N + lower):
        return [Generator("L", k + 1)]
    if all(lam.is_empty() for lam, _ in st.Lambda_N):
        # top terms are pure I-words; attack the lower part
        l = _min_lam_part(lower)
        return [Generator("I", l + 1), Generator("L", k + 1)]
    l = _min_lam_part(st.Lambda_N)
    return [Generator("I", l + 1), Generator("L", k + 1)]


def _fallback(v: ModuleVector) -> list[Generator]:
    top = maxdeg(v)
    top = 0 if top == NEG_INF else int(top)
    return [Generator(kind, n) for n in range(1, top + 3) for kind in ("I", "L")]


def descend(v: ModuleVector, max_steps: int = 10_000) -> DescentResult:
    """Drive ``v`` to a nonzero multiple of the cyclic vector by dot actions.

    Every step must strictly lower the multiset of ``(degree, l0)`` keys of
    the current vector (see :func:`_measure`).
    """
    if not isinstance(v.spec, Reduced):
        raise ValueError("descent runs in a reduced module")
    if not v:
        raise ValueError("cannot descend from the zero vector")
    trace: list[Generator] = []
    history = [v]
    for _ in range(max_steps):
        if v.is_cyclic_multiple():
            return DescentResult(trace, v.coeff(CYCLIC), history)
        m = _measure(v)
        tried = set()
        saw_zero_only = True
        nxt = None
        for g in recipe(v) + _fallback(v):
            if g in tried:
                continue
            tried.add(g)
            u = defect(g, v)
            if not u:
                continue
            saw_zero_only = False
            if _measure(u) < m:
                nxt = (g, u)
                break
        if nxt is None:
            if saw_zero_only:
                raise CounterexampleError(f"{v!r} is killed by every tried dot action")
            raise DescentStuckError(f"no dot action lowers the measure of {v!r}")
        g, v = nxt
        trace.append(g)
        history.append(v)
    raise DescentStuckError("step limit reached")


def replay(v: ModuleVector, trace: Sequence[Generator]) -> ModuleVector:
    for g in trace:
        v = defect(g, v)
    return v


# -- local nilpotency --------------------------------------------------------

def nilpotency_index(g: Generator, v: ModuleVector, cap: int = 20) -> int:
    """Smallest ``K <= cap`` with ``(g .)^K v = 0``."""
    g = Generator(*g)
    if g.kind not in ("L", "I") or g.index <= 0:
        raise ValueError("nilpotency is probed for positive generators only")
    if cap < 1:
        raise ValueError("cap must be at least 1")
    u = v
    for K in range(cap + 1):
        if not u:
            return K
        if K < cap:
            u = defect(g, u)
    raise NilpotencyCapError(f"{g!r} not nilpotent on the vector within {cap} steps")


def dot_orbit_dimension(v: ModuleVector, n_max: int | None = None, limit: int = 10_000) -> int:
    """Dimension of the span of ``U(n+) . v`` using ``E_n`` with ``n <= n_max``."""
    if n_max is None:
        top = maxdeg(v)
        n_max = (0 if top == NEG_INF else int(top)) + 2
    gens = [Generator(k, n) for n in range(1, n_max + 1) for k in ("L", "I")]
    span = IncrementalSpan()
    queue = [v]
    count = 0
    while queue:
        u = queue.pop()
        if not u or not span.add({_col(i): c for i, c in u._terms.items()}, count):
            continue
        count += 1
        if count > limit:
            raise BoundExhaustedError("dot orbit exceeded the dimension limit")
        queue.extend(defect(g, u) for g in gens)
    return len(span)


# -- bounded submodule membership -------------------------------------------

@dataclass
class Membership:
    member: bool
    witness: list | None = None   # [(coefficient, generator_position, operator word)]
    explored: int = 0

    def __bool__(self) -> bool:
        return self.member


def submodule_membership(target: ModuleVector, gens: Sequence[ModuleVector],
                         bounds: Bounds) -> Membership:
    """Look for ``target`` in the submodule generated by ``gens``.

    The span of ``gens`` is saturated under ``L_n, I_n`` (``|n| <= gen_index``);
    products leaving the degree or ``L_0`` caps are dropped, never truncated.
    A negative answer only means "not found within the bounds".
    """
    if not gens:
        raise ValueError("at least one generator vector is required")
    spec = target.spec
    if any(g.spec != spec for g in gens):
        raise ValueError("all vectors must share one module")
    ops = [Generator(kind, n) for n in range(-bounds.gen_index, bounds.gen_index + 1)
           for kind in ("L", "I") if not (kind == "I" and n == 0)]

    def fits(u: ModuleVector) -> bool:
        return maxdeg(u) <= bounds.degree and max_l0(u) <= bounds.l0

    span = IncrementalSpan()
    origin: dict[int, tuple[int, tuple]] = {}
    queue: list[tuple[ModuleVector, int, tuple]] = []
    for pos, gvec in enumerate(gens):
        queue.append((gvec, pos, ()))
    head = 0
    while head < len(queue):
        u, pos, word = queue[head]
        head += 1
        if not u or not fits(u):
            continue
        tag = len(origin)
        if not span.add({_col(i): c for i, c in u._terms.items()}, tag):
            continue
        origin[tag] = (pos, word)
        for g in ops:
            queue.append((act(g, u), pos, (g,) + word))
    combo = span.express({_col(i): c for i, c in target._terms.items()})
    if combo is None:
        return Membership(False, None, len(origin))
    witness = [(c, origin[tag][0], origin[tag][1]) for tag, c in sorted(combo.items())]
    return Membership(True, witness, len(origin))


def rebuild(witness, gens: Sequence[ModuleVector]) -> ModuleVector:
    """Evaluate a membership witness back into a vector."""
    from .modules import act_word

    out = ModuleVector.zero(gens[0].spec)
    for c, pos, word in witness:
        out = out + act_word(word, gens[pos]) * c
    return out


def preserves_i_support(spec: Reduced, index_bound: int = 6, degree: int = 4,
                        l0: int = 2) -> list[tuple[Generator, BasisIndex]]:
    """Pairs ``(g, b)`` where acting by ``g`` on a basis vector with at least
    one ``I`` factor produces a term with none.  Empty means preserved."""
    gens = [Generator(kind, n) for n in range(-index_bound, index_bound + 1) for kind in ("L", "I")]
    gens += [Generator("Z", i) for i in (1, 2, 3)]
    bad = []
    for idx in basis_enumerate(spec, degree, l0):
        if idx.mu_parts == 0:
            continue
        v = ModuleVector.basis(spec, idx)
        for g in gens:
            if any(out.mu_parts == 0 for out in act(g, v)._terms):
                bad.append((g, idx))
    return bad


# -- lemma verification ------------------------------------------------------

LEMMA_IDS = ("3.1", "3.2i", "3.2ii", "3.2iii", "3.3i", "3.3ii", "3.3iii", "4.2i", "4.2ii")


@dataclass(frozen=True)
class LemmaRanges:
    a_max: int = 3
    k_max: int = 3
    m_max: int = 6
    degree: int = 4
    l0: int = 2
    n_max: int = 8


@dataclass
class Report:
    lemma_id: str
    instances: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"lemma {self.lemma_id}: {self.instances} instances, {len(self.failures)} failures"


def _vec(spec, lam, mu) -> ModuleVector:
    return ModuleVector.basis(spec, BasisIndex.from_partitions(lam, mu))


def _split(lhs: ModuleVector, lead: BasisIndex):
    got = lhs.coeff(lead)
    residual = lhs - ModuleVector(lhs.spec, {lead: got})
    return got, residual


def verify_lemma(lemma_id: str, psi, ranges: LemmaRanges = LemmaRanges()) -> Report:
    """Check one of the degree lemmas on every instance inside ``ranges``.

    Work happens in the universal module of ``psi``; the left-hand sides
    ``[E, u] w`` equal the dot action ``E . (u w)`` for ``u`` in ``U(b-)``.
    """
    try:
        check = _CHECKS[lemma_id]
    except KeyError:
        raise ValueError(f"unknown lemma id {lemma_id!r}; expected one of {LEMMA_IDS}") from None
    spec = Universal(psi)
    rep = Report(lemma_id)
    check(spec, ranges, rep)
    return rep


def _fail(rep: Report, params, expected, got) -> None:
    rep.failures.append((params, expected, got))


def _pairs(r: LemmaRanges):
    return enumerate_pairs(r.degree, r.l0)


def _check_3_1(spec, r: LemmaRanges, rep: Report) -> None:
    psi_l2 = spec.psi.psi_l2
    for a in range(1, r.a_max + 1):
        for k in range(0, r.k_max + 1):
            rep.instances += 1
            v = ModuleVector.basis(spec, BasisIndex(ls=(-k,) * a))
            lhs = defect(Generator("L", k + 2), v)
            lead = BasisIndex(ls=(-k,) * (a - 1))
            expected = -a * (2 * k + 2) * psi_l2
            got, res = _split(lhs, lead)
            ok_res = maxdeg(res) < k * (a - 1) if k > 0 else max_l0(res) < a - 1
            if got != expected or not ok_res:
                _fail(rep, {"a": a, "k": k}, expected, (got, res))


def _check_3_2i(spec, r, rep) -> None:
    for lam, mu in _pairs(r):
        for m in range(1, r.m_max + 1):
            rep.instances += 1
            d = maxdeg(defect(Generator("I", m), _vec(spec, lam, mu)))
            bound = lam.size + mu.size - m + 1
            if d > bound:
                _fail(rep, {"lam": lam, "mu": mu, "m": m}, f"maxdeg <= {bound}", d)


def _lead_with_residual(rep, params, lhs, lead, expected, top, l0_floor=None):
    """Compare the coefficient at ``lead``; residual terms must have degree
    below ``top``, or (when ``l0_floor`` is given) ``L_0``-exponent below it."""
    got, res = _split(lhs, lead)
    bad = [idx for idx in res._terms
           if not (idx.degree < top or (l0_floor is not None and idx.l0 < l0_floor))]
    if got != expected or bad:
        _fail(rep, params, expected, (got, bad))


def _check_3_2ii(spec, r, rep) -> None:
    psi_i1 = spec.psi.psi_i1
    for lam, mu in _pairs(r):
        if len(lam.support()) != 1:
            continue
        (k, a), = lam.mult
        rep.instances += 1
        lhs = defect(Generator("I", k + 1), _vec(spec, lam, mu))
        lead = BasisIndex.from_partitions(lam.adjust(k, -1), mu)
        expected = -a * (k + 1) * psi_i1
        _lead_with_residual(rep, {"k": k, "a": a, "mu": mu}, lhs, lead, expected,
                            top=lead.degree, l0_floor=(a - 1) if k == 0 else None)


def _check_3_2iii(spec, r, rep) -> None:
    psi_i1 = spec.psi.psi_i1
    for lam, mu in _pairs(r):
        if lam.is_empty():
            continue
        k = min(lam.support())
        rep.instances += 1
        lhs = defect(Generator("I", k + 1), _vec(spec, lam, mu))
        lead = BasisIndex.from_partitions(lam.adjust(k, -1), mu)
        expected = -(k + 1) * lam(k) * psi_i1
        _lead_with_residual(rep, {"lam": lam, "mu": mu, "k": k}, lhs, lead, expected,
                            top=lam.size + mu.size - k,
                            l0_floor=(lam(0) - 1) if k == 0 else None)


def _check_3_3i(spec, r, rep) -> None:
    for lam, mu in _pairs(r):
        for m in range(1, r.m_max + 1):
            rep.instances += 1
            d = maxdeg(defect(Generator("L", m), _vec(spec, lam, mu)))
            bound = lam.size + mu.size - m + 2
            if d > bound:
                _fail(rep, {"lam": lam, "mu": mu, "m": m}, f"maxdeg <= {bound}", d)


def _check_3_3ii(spec, r, rep) -> None:
    for lam, mu in _pairs(r):
        support = lam.support() + mu.support()
        low = min(support) if support else None
        for k in range(0, r.m_max):
            if low is not None and low <= k:
                break
            rep.instances += 1
            d = maxdeg(defect(Generator("L", k + 1), _vec(spec, lam, mu)))
            bound = lam.size + mu.size - k - 1
            if d > bound:
                _fail(rep, {"lam": lam, "mu": mu, "k": k}, f"maxdeg <= {bound}", d)


def _check_3_3iii(spec, r, rep) -> None:
    psi_i1 = spec.psi.psi_i1
    for lam, mu in _pairs(r):
        if mu.is_empty():
            continue
        k = min(mu.support())
        if any(part <= k for part in lam.support()):
            continue
        rep.instances += 1
        lhs = defect(Generator("L", k + 1), _vec(spec, lam, mu))
        lead = BasisIndex.from_partitions(lam, mu.adjust(k, -1))
        expected = -k * psi_i1 * mu(k)
        _lead_with_residual(rep, {"lam": lam, "mu": mu, "k": k}, lhs, lead, expected,
                            top=lam.size + mu.size - k)


def _check_4_2i(spec, r, rep) -> None:
    for lam, mu in _pairs(r):
        budget = lam.size + mu.size + lam(0)
        v = _vec(spec, lam, mu)
        for n in range(1, r.n_max + 1):
            for kind in ("L", "I"):
                rep.instances += 1
                out = defect(Generator(kind, n), v)
                bad = [idx for idx in out._terms if idx.degree + idx.l0 > budget]
                if bad:
                    _fail(rep, {"lam": lam, "mu": mu, "E": Generator(kind, n)},
                          f"confined to {budget}", bad)


def _check_4_2ii(spec, r, rep) -> None:
    for lam, mu in _pairs(r):
        v = _vec(spec, lam, mu)
        for n in range(lam.size + mu.size + 3, r.n_max + 1):
            for kind in ("L", "I"):
                rep.instances += 1
                out = defect(Generator(kind, n), v)
                if out:
                    _fail(rep, {"lam": lam, "mu": mu, "E": Generator(kind, n)}, 0, out)


_CHECKS: dict[str, Callable] = {
    "3.1": _check_3_1,
    "3.2i": _check_3_2i,
    "3.2ii": _check_3_2ii,
    "3.2iii": _check_3_2iii,
    "3.3i": _check_3_3i,
    "3.3ii": _check_3_3ii,
    "3.3iii": _check_3_3iii,
    "4.2i": _check_4_2i,
    "4.2ii": _check_4_2ii,
}
