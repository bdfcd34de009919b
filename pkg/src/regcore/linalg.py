"""Sparse exact row-echelon bases for truncated polynomial spaces.

Vectors live in (k[x,y]/m^N)^s and are stored as dicts from packed
integer keys to coefficients.  Keys encode (total degree, slot, y-exponent)
and sort degree-major, so restricting to a smaller truncation order is just
ignoring keys above a degree cap; a capped view of an echelon basis is
again echelon because leading keys have minimal degree within their row.

Over Q rows are integer rays (denominators cleared, content stripped),
which keeps elimination fraction-free; over F_p rows are lead-normalised
residues.
"""

from __future__ import annotations

import heapq
from math import gcd

from .field import Field

EPS_BASE = 1 << 60  # tag keys for kernel bookkeeping; order after all others

_DEG_SHIFT = 28
_SLOT_SHIFT = 14
_MASK = (1 << 14) - 1


def pack_key(degree: int, slot: int, b: int) -> int:
    return (degree << _DEG_SHIFT) | (slot << _SLOT_SHIFT) | b


def key_degree(key: int) -> int:
    return key >> _DEG_SHIFT

def key_slot(key: int) -> int:
    return (key >> _SLOT_SHIFT) & _MASK


def key_exponents(key: int) -> tuple[int, int]:
    """(a, b) exponents of the monomial a key stands for."""
    d = key >> _DEG_SHIFT
    b = key & _MASK
    return d - b, b


def _strip_content(row: dict) -> dict:
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = min(row)
    if row[lead] < 0:
        g = -g
    if g != 1:
        row = {k: c // g for k, c in row.items()}
    return row


class SparseBasis:
    """Incremental echelon basis; rows are never mutated once stored."""

    def __init__(self, field: Field):
        self.field = field
        self.p = field.p  # None over Q
        self.rows: dict[int, dict] = {}

    def clone(self) -> "SparseBasis":
        other = SparseBasis.__new__(SparseBasis)
        other.field = self.field
        other.p = self.p
        other.rows = dict(self.rows)
        return other

    def dim(self) -> int:
        return len(self.rows)

    def dim_up_to(self, cap: int) -> int:
        return sum(1 for k in self.rows if k < EPS_BASE and key_degree(k) <= cap)

    # -- reduction ----------------------------------------------------

    def _visible(self, key: int, cap) -> bool:
        return key >= EPS_BASE or cap is None or key_degree(key) <= cap

    def reduce_to_lead(self, row: dict, cap=None):
        """Top-reduce a copy of `row` against the basis in the capped quotient.

        Returns (lead, residual): lead is the smallest pivot-free key of
        the residual, or None when the row lies in the span.
        """
        if cap is None:
            work = dict(row)
        else:
            work = {k: c for k, c in row.items()
                    if k >= EPS_BASE or key_degree(k) <= cap}
        if not work:
            return None, {}
        heap = list(work)
        heapq.heapify(heap)
        rows = self.rows
        p = self.p
        merges = 0
        while heap:
            k = heapq.heappop(heap)
            c = work.get(k)
            if not c:
                work.pop(k, None)
                continue
            prow = rows.get(k)
            if prow is None:
                return k, work
            if p is None:
                scale = prow[k]
                factor = c
                if scale != 1:
                    for kk in work:
                        work[kk] *= scale
                for kk, cc in prow.items():
                    if not self._visible(kk, cap):
                        continue
                    nv = work.get(kk, 0) - factor * cc
                    if nv:
                        if kk not in work and kk != k:
                            heapq.heappush(heap, kk)
                        work[kk] = nv
                    else:
                        work.pop(kk, None)
                merges += 1
                if merges % 8 == 0 and work:
                    work = _strip_content(work)
            else:
                for kk, cc in prow.items():  # pivot rows are lead-normalised
                    if not self._visible(kk, cap):
                        continue
                    nv = (work.get(kk, 0) - c * cc) % p
                    if nv:
                        if kk not in work and kk != k:
                            heapq.heappush(heap, kk)
                        work[kk] = nv
                    else:
                        work.pop(kk, None)
        return None, {}

    def insert(self, row: dict, cap=None):
        """Insert a row; returns its pivot key, or None if dependent."""
        lead, work = self.reduce_to_lead(row, cap)
        if lead is None:
            return None
        if self.p is None:
            work = _strip_content(work)
        else:
            inv = self.field.inv(work[lead])
            if inv != 1:
                work = {k: c * inv % self.p for k, c in work.items()}
        self.rows[lead] = work
        return lead

    def contains(self, row: dict, cap=None) -> bool:
        lead, _ = self.reduce_to_lead(row, cap)
        return lead is None


def kernel_modulo(basis: SparseBasis, rows: list[dict], cap=None) -> list[dict]:
    """Relations sum(lam_i * rows_i) in span(basis), within the capped quotient.

    Returns ray representatives of the relation space as dicts {i: coeff}.
    Exact and complete: the relation count equals len(rows) minus the rank
    the rows add on top of the basis.
    """
    work = basis.clone()
    kernels = []
    for i, row in enumerate(rows):
        aug = dict(row)
        aug[EPS_BASE + i] = 1
        lead = work.insert(aug, cap=cap)
        if lead is not None and lead >= EPS_BASE:
            stored = work.rows[lead]
            kernels.append({k - EPS_BASE: c for k, c in stored.items()})
    return kernels
