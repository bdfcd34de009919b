"""Exact ideal arithmetic in k[x,y] localized at (x,y) via finite truncations.

Working in k[x,y]/m^N is exact as soon as a Nakayama certificate
m^N0 <= I with N0 < N is in hand: membership, colons, colengths and
equality tests all reduce to row operations below the certificate degree.
The same machinery drives finite-colength submodules of R^s, so the
module layer reuses TruncatedSpan with more slots.
"""

from __future__ import annotations

from math import lcm

from .config import DEFAULT, EngineConfig
from .errors import (FieldMismatchError, NotMPrimaryError,
                     TruncationCeilingError, ZeroIdealError)
from .field import Field
from .linalg import SparseBasis, kernel_modulo, key_exponents, key_slot, pack_key
from .poly import Monomial, Poly
from . import staircase


def triangle(n: int) -> int:
    """dim of k[x,y]/m^n."""
    return n * (n + 1) // 2


def monomials_below(degree_cap: int):
    """All (a, b) with a+b <= degree_cap, sorted degree-major."""
    return [Monomial(d - b, b) for d in range(degree_cap + 1) for b in range(d + 1)]


def vector_row(vector, cap=None) -> dict:
    """Pack a tuple of polynomials (one per slot) into a sparse row.

    Over Q one common denominator is cleared for the whole vector, so the
    row is an integer ray representing the same vector.
    """
    field = None
    for f in vector:
        if f is not None:
            field = f.field
            break
    items = []
    for slot, f in enumerate(vector):
        if f is None or f.is_zero:
            continue
        for mono, coeff in f.terms.items():
            if cap is None or mono.degree <= cap:
                items.append((pack_key(mono.degree, slot, mono.b), coeff))
    if not items:
        return {}
    if field.p is None:
        den = 1
        for _, c in items:
            den = lcm(den, c.denominator)
        return {k: int(c * den) for k, c in items}
    return {k: c for k, c in items}


def poly_row(f: Poly, cap=None) -> dict:
    return vector_row((f,), cap)


def row_to_vector(row: dict, field: Field, nslots: int):
    """Decode a sparse row back into a tuple of polynomials."""
    terms = [dict() for _ in range(nslots)]
    for key, coeff in row.items():
        a, b = key_exponents(key)
        terms[key_slot(key)][Monomial(a, b)] = field.coerce(coeff)
    return tuple(Poly(field, t) for t in terms)


class TruncatedSpan:
    """Echelonized R-span of column vectors inside (R/m^order)^nslots."""

    def __init__(self, field: Field, nslots: int, columns, order: int):
        self.field = field
        self.nslots = nslots
        self.columns = tuple(tuple(col) for col in columns)
        self.order = order
        self.basis = SparseBasis(field)
        self.n0 = None
        self._fill()
        self._find_certificate()

    def _fill(self):
        cap = self.order - 1
        for col in self.columns:
            base = vector_row(col, cap=None)
            if not base:
                continue
            col_order = min(f.order() for f in col if f is not None and not f.is_zero)
            for d in range(self.order - col_order):
                for b in range(d + 1):
                    delta = (d << 28) | b
                    row = {}
                    for k, c in base.items():
                        kk = k + delta
                        if (kk >> 28) <= cap:
                            row[kk] = c
                    if row:
                        self.basis.insert(row, cap=cap)

    def _find_certificate(self):
        one = self.field.one if self.field.p is not None else 1
        for t in range(self.order):
            ok = True
            for slot in range(self.nslots):
                for b in range(t + 1):
                    if not self.basis.contains({pack_key(t, slot, b): one}, cap=t):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                self.n0 = t
                return

    def colength(self) -> int:
        return self.nslots * triangle(self.n0) - self.basis.dim_up_to(self.n0 - 1)

    def contains_vector(self, vector) -> bool:
        return self.basis.contains(vector_row(vector, cap=self.n0 - 1),
                                   cap=self.n0 - 1)

    def basis_rows(self, cap):
        """Capped copies of the stored rows, deterministic order."""
        out = []
        for lead in sorted(self.basis.rows):
            if (lead >> 28) <= cap:
                row = {k: c for k, c in self.basis.rows[lead].items()
                       if (k >> 28) <= cap}
                out.append(row)
        return out


def span_with_certificate(columns, nslots: int, field: Field,
                          config: EngineConfig = DEFAULT,
                          order: int | None = None) -> TruncatedSpan:
    """Materialize a span, growing the truncation until a certificate appears."""
    maxdeg = 0
    for col in columns:
        for f in col:
            if f is not None and not f.is_zero:
                maxdeg = max(maxdeg, f.degree())
    if order is not None:
        if order > config.truncation_ceiling:
            raise TruncationCeilingError(
                f"order {order} exceeds ceiling {config.truncation_ceiling}")
        span = TruncatedSpan(field, nslots, columns, order)
        if span.n0 is None:
            raise NotMPrimaryError("not m-primary at this truncation")
        return span
    n = min(config.truncation_ceiling, max(6, 2 * maxdeg + 4))
    while True:
        span = TruncatedSpan(field, nslots, columns, n)
        if span.n0 is not None:
            return span
        if n >= config.truncation_ceiling:
            raise NotMPrimaryError(
                f"no Nakayama certificate up to the truncation ceiling "
                f"{config.truncation_ceiling}: not finite colength")
        n = min(2 * n, config.truncation_ceiling)


class TruncatedIdeal:
    """Finite-colength ideal with a verified Nakayama certificate m^n0 <= I."""

    def __init__(self, field: Field, gens, span: TruncatedSpan | None,
                 is_unit: bool, config: EngineConfig = DEFAULT):
        self.field = field
        self.gens = tuple(gens)
        self.span = span
        self.is_unit = is_unit
        self.config = config

    # -- constructors ---------------------------------------------------

    @classmethod
    def materialize(cls, gens, field: Field | None = None,
                    order: int | None = None,
                    config: EngineConfig = DEFAULT) -> "TruncatedIdeal":
        gens = [g for g in gens if not g.is_zero]
        if not gens:
            raise ZeroIdealError("the zero ideal is not supported")
        if field is None:
            field = gens[0].field
        for g in gens:
            if g.field != field:
                raise FieldMismatchError("generators over different fields")
        if any(g.constant_term() != field.zero for g in gens):
            return cls.unit(field, config)
        span = span_with_certificate([(g,) for g in gens], 1, field,
                                     config=config, order=order)
        return cls(field, gens, span, False, config)

    @classmethod
    def unit(cls, field: Field, config: EngineConfig = DEFAULT) -> "TruncatedIdeal":
        return cls(field, (Poly.one(field),), None, True, config)

    @classmethod
    def from_monomial(cls, ideal: staircase.MonomialIdeal, field: Field,
                      config: EngineConfig = DEFAULT) -> "TruncatedIdeal":
        if ideal.is_unit:
            return cls.unit(field, config)
        cert = staircase.power_certificate(ideal)
        gens = [Poly.monomial(field, g) for g in ideal.gens]
        return cls.materialize(gens, field, order=cert + 1, config=config)

    # -- basic structure --------------------------------------------------

    @property
    def n0(self) -> int:
        return 0 if self.is_unit else self.span.n0

    @property
    def order(self) -> int:
        return 1 if self.is_unit else self.span.order

    def at_order(self, order: int) -> "TruncatedIdeal":
        """Rematerialized copy at a (usually larger) truncation order."""
        if self.is_unit or order <= self.order:
            return self
        return TruncatedIdeal.materialize(self.gens, self.field, order=order,
                                          config=self.config)

    def colength(self) -> int:
        return 0 if self.is_unit else self.span.colength()

    def contains_power(self, t: int) -> bool:
        """Exact answer to m^t <= I (Nakayama test)."""
        return t >= self.n0

    def contains_poly(self, f: Poly) -> bool:
        if f.field != self.field:
            raise FieldMismatchError("membership across fields")
        if self.is_unit:
            return True
        return self.span.contains_vector((f,))

    def max_gen_degree(self) -> int:
        return max(g.degree() for g in self.gens)

    # -- comparisons ------------------------------------------------------

    def contains_ideal(self, other: "TruncatedIdeal") -> bool:
        if self.is_unit:
            return True
        if other.is_unit:
            return False
        return all(self.contains_poly(g) for g in other.gens)

    def equals(self, other: "TruncatedIdeal") -> bool:
        if self.field != other.field:
            raise FieldMismatchError("comparing ideals over different fields")
        if self.is_unit or other.is_unit:
            return self.is_unit and other.is_unit
        if self.colength() != other.colength():
            return False
        return self.contains_ideal(other)

    # -- arithmetic ---------------------------------------------------------

    def plus(self, other: "TruncatedIdeal") -> "TruncatedIdeal":
        if self.is_unit or other.is_unit:
            return TruncatedIdeal.unit(self.field, self.config)
        return TruncatedIdeal.materialize(
            self.gens + other.gens, self.field,
            order=min(self.n0, other.n0) + 1, config=self.config)

    def product(self, other: "TruncatedIdeal") -> "TruncatedIdeal":
        if self.is_unit:
            return other
        if other.is_unit:
            return self
        seen: dict[Poly, None] = {}
        for g in self.gens:
            for h in other.gens:
                seen.setdefault(g * h, None)
        gens = list(seen.keys())
        order = self.n0 + other.n0 + 1
        if order > self.config.truncation_ceiling:
            raise TruncationCeilingError(
                f"product needs truncation {order} > ceiling")
        return TruncatedIdeal.materialize(gens, self.field, order=order,
                                          config=self.config)

    def power(self, n: int) -> "TruncatedIdeal":
        result = TruncatedIdeal.unit(self.field, self.config)
        for _ in range(n):
            result = result.product(self)
        return result

    def intersect(self, other: "TruncatedIdeal") -> "TruncatedIdeal":
        if self.is_unit:
            return other
        if other.is_unit:
            return self
        t = max(self.n0, other.n0)
        a = self.at_order(t + 1)
        b = other.at_order(t + 1)
        cap = t - 1
        rows = a.span.basis_rows(cap)
        lams = kernel_modulo(b.span.basis, rows, cap=cap)
        gens = []
        for lam in lams:
            combo = {}
            for i, coeff in lam.items():
                for k, c in rows[i].items():
                    v = combo.get(k, 0) + coeff * c
                    if self.field.p is not None:
                        v %= self.field.p
                    if v:
                        combo[k] = v
                    else:
                        combo.pop(k, None)
            if combo:
                gens.append(row_to_vector(combo, self.field, 1)[0])
        gens += [Poly.term(self.field, t - b2, b2) for b2 in range(t + 1)]
        return TruncatedIdeal.materialize(gens, self.field, order=t + 1,
                                          config=self.config)

    def colon(self, other) -> "TruncatedIdeal":
        """(self : other) = { r : r * other <= self }.

        `other` may be a TruncatedIdeal or an iterable of generators.  The
        computation lives in R/m^n0(self): sound because m^n0 <= self is
        already inside the colon, so every class below the certificate
        decides membership exactly.
        """
        other_gens = list(other.gens) if isinstance(other, TruncatedIdeal) \
            else [g for g in other]
        other_gens = [g for g in other_gens if not g.is_zero]
        if self.is_unit:
            return TruncatedIdeal.unit(self.field, self.config)
        if any(g.constant_term() != self.field.zero for g in other_gens):
            return self
        t = self.n0
        cap = t - 1
        candidates = [Poly.monomial(self.field, m) for m in monomials_below(cap)]
        for g in other_gens:
            if not candidates:
                break
            rows = [poly_row(c * g, cap=cap) for c in candidates]
            lams = kernel_modulo(self.span.basis, rows, cap=cap)
            new_candidates = []
            for lam in lams:
                combo = Poly.zero(self.field)
                for i, coeff in sorted(lam.items()):
                    combo = combo + candidates[i].scale(coeff)
                if not combo.is_zero:
                    new_candidates.append(combo)
            candidates = new_candidates
        gens = candidates + [Poly.term(self.field, t - b, b) for b in range(t + 1)]
        return TruncatedIdeal.materialize(gens, self.field, order=t + 1,
                                          config=self.config)

    # -- conversions ---------------------------------------------------------

    def to_monomial(self) -> staircase.MonomialIdeal | None:
        """The monomial ideal equal to self, if self is monomial."""
        if self.is_unit:
            return staircase.MonomialIdeal.unit()
        found = [m for m in monomials_below(self.n0)
                 if self.contains_poly(Poly.monomial(self.field, m))]
        if not found:
            return None
        candidate = staircase.MonomialIdeal.from_exponents(found)
        if staircase.colength(candidate) == self.colength():
            return candidate
        return None

    def __repr__(self):
        return (f"TruncatedIdeal({self.field}, n0={self.n0}, "
                f"gens={[str(g) for g in self.gens]})")
