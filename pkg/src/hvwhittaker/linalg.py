"""Sparse exact linear algebra over the rationals.

Rows are dicts ``column -> value`` with orderable column keys; pivots are
taken at the smallest column present, so the result depends only on the
column order, never on insertion timing.
"""
from __future__ import annotations

import heapq
import math
from fractions import Fraction
from typing import Hashable, Iterable, Mapping


def _integer_row(row: Mapping) -> dict:
    den = 1
    for v in row.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    out = {k: int(v * den) for k, v in row.items() if v}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


def row_echelon(rows: Iterable[Mapping]) -> dict:
    """Fraction-free echelon form: ``{pivot_column: primitive integer row}``."""
    pivots: dict = {}
    for row in rows:
        r = _integer_row(row)
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                if r[c] < 0:
                    r = {k: -v for k, v in r.items()}
                pivots[c] = r
                break
            a, b = p[c], r[c]
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                x = new.get(k, 0) - b * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            r = _primitive(new)
    return pivots


def reduced_row_echelon(rows: Iterable[Mapping]) -> dict:
    """Reduced echelon form with unit pivots, as ``{pivot: {column: Fraction}}``."""
    pivots = row_echelon(rows)
    reduced: dict = {}
    for c in sorted(pivots, reverse=True):
        p = pivots[c]
        lead = p[c]
        row = {k: Fraction(v, lead) for k, v in p.items()}
        for k in [k for k in row if k != c and k in reduced]:
            factor = row[k]
            for kk, vv in reduced[k].items():
                x = row.get(kk, 0) - factor * vv
                if x:
                    row[kk] = x
                else:
                    row.pop(kk, None)
        reduced[c] = row
    return reduced


def nullspace(rows: Iterable[Mapping], columns: list) -> list[dict]:
    """Basis of ``{x : row . x = 0 for every row}``, one vector per free column."""
    rref = reduced_row_echelon(rows)
    free = [c for c in columns if c not in rref]
    basis = []
    for f in free:
        vec = {f: Fraction(1)}
        for c, row in rref.items():
            v = row.get(f)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def rank(rows: Iterable[Mapping]) -> int:
    return len(row_echelon(rows))


class IncrementalSpan:
    """Growing span of vectors with membership witnesses.

    Each stored row remembers how it was built from the inserted vectors,
    so :meth:`express` can write a member as a combination of them.
    """

    def __init__(self):
        self._rows: dict = {}    # pivot -> (row with unit pivot, combination)
        self.size = 0

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Mapping, combo: dict) -> tuple[dict, dict]:
        r = {k: Fraction(v) for k, v in vec.items() if v}
        combo = dict(combo)
        heap = list(r)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            if c not in r or c not in self._rows:
                continue
            prow, pcombo = self._rows[c]
            factor = r[c]
            # pivot rows start at their pivot, so only larger columns appear
            for k, v in prow.items():
                if k not in r:
                    heapq.heappush(heap, k)
                x = r.get(k, 0) - factor * v
                if x:
                    r[k] = x
                else:
                    r.pop(k, None)
            for k, v in pcombo.items():
                x = combo.get(k, 0) - factor * v
                if x:
                    combo[k] = x
                else:
                    combo.pop(k, None)
        return r, combo

    def add(self, vec: Mapping, tag: Hashable) -> bool:
        """Insert ``vec`` under ``tag``; return True if it enlarged the span."""
        r, combo = self._reduce(vec, {tag: Fraction(1)})
        if not r:
            return False
        c = min(r)
        lead = r[c]
        self._rows[c] = ({k: v / lead for k, v in r.items()},
                         {k: v / lead for k, v in combo.items()})
        self.size += 1
        return True

    def contains(self, vec: Mapping) -> bool:
        r, _ = self._reduce(vec, {})
        return not r

    def express(self, vec: Mapping) -> dict | None:
        """Coefficients over inserted tags summing to ``vec``, or None."""
        r, combo = self._reduce(vec, {})
        if r:
            return None
        return {k: -v for k, v in combo.items() if v}
