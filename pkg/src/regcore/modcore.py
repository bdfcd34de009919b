"""Finite-colength torsion-free submodules M of R^r: representing matrices,
minor ideals, Fitting ideals of presentations, reductions, symmetric-power
colengths, Buchsbaum-Rim multiplicity and cores.

Generators are columns inside the ambient free module F = R^r.  All exact
decisions run through the same truncated spans as the ideal engine, with
one slot per ambient coordinate; symmetric powers get one slot per degree-t
monomial in r slot variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .config import DEFAULT, EngineConfig
from .errors import (FieldMismatchError, GenericityError, MathError,
                     NotMPrimaryError, TruncationCeilingError, ZeroIdealError)
from .field import Field
from .linalg import SparseBasis
from .poly import Poly, matrix_minors
from .reduction import GenericSampler, adjoint_ideal
from .trunc import (TruncatedIdeal, TruncatedSpan, span_with_certificate,
                    vector_row)
from . import staircase


class ModuleRep:
    """Submodule of F = R^rank given by generator columns, with an optional
    presentation matrix whose columns are syzygies among the generators."""

    def __init__(self, field: Field, rank: int, columns,
                 presentation=None, config: EngineConfig = DEFAULT):
        self.field = field
        self.rank = rank
        self.columns = tuple(tuple(col) for col in columns)
        for col in self.columns:
            if len(col) != rank:
                raise MathError("generator column has wrong length")
            for f in col:
                if f.field != field:
                    raise FieldMismatchError("column entries over wrong field")
        self.presentation = None
        if presentation is not None:
            self.presentation = tuple(tuple(row) for row in presentation)
            n = len(self.columns)
            if len(self.presentation) != n or any(
                    len(row) != n - rank for row in self.presentation):
                raise MathError("presentation must be n x (n - rank)")
            self._check_syzygies()
        self.config = config
        self._span = None
        self._minor_ideal = None

    def _check_syzygies(self):
        n = len(self.columns)
        for j in range(n - self.rank):
            for i in range(self.rank):
                acc = Poly.zero(self.field)
                for l in range(n):
                    acc = acc + self.columns[l][i] * self.presentation[l][j]
                if not acc.is_zero:
                    raise MathError("presentation columns are not syzygies")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_ideal(cls, ideal: TruncatedIdeal,
                   config: EngineConfig = DEFAULT) -> "ModuleRep":
        return cls(ideal.field, 1, [(g,) for g in ideal.gens], config=config)

    @classmethod
    def from_monomial_ideal(cls, ideal: staircase.MonomialIdeal, field: Field,
                            config: EngineConfig = DEFAULT) -> "ModuleRep":
        """Rank-1 module with the analytic bidiagonal presentation."""
        cols = [(Poly.monomial(field, g),) for g in ideal.gens]
        pres = staircase.presentation_matrix(ideal, field)
        return cls(field, 1, cols, presentation=pres, config=config)

    # -- basic structure -----------------------------------------------------

    @property
    def ngens(self) -> int:
        return len(self.columns)

    def rep_matrix(self) -> list[list[Poly]]:
        """rank x ngens matrix whose columns are the generators."""
        return [[self.columns[j][i] for j in range(self.ngens)]
                for i in range(self.rank)]

    def span(self) -> TruncatedSpan:
        if self._span is None:
            self._span = span_with_certificate(self.columns, self.rank,
                                               self.field, config=self.config)
        return self._span

    @property
    def n0f(self) -> int:
        """Certificate order: m^n0f * F lies inside the module."""
        return self.span().n0

    def colength(self) -> int:
        return self.span().colength()

    def minor_ideal(self) -> TruncatedIdeal:
        """I(M): the ideal of rank-sized minors of the representing matrix."""
        if self._minor_ideal is None:
            minors = matrix_minors(self.rep_matrix(), self.rank, self.field)
            minors = [m for m in minors if not m.is_zero]
            if not minors:
                raise ZeroIdealError(
                    "representing matrix is rank-deficient: invalid module")
            self._minor_ideal = TruncatedIdeal.materialize(
                minors, self.field, config=self.config)
        return self._minor_ideal

    def is_free(self) -> bool:
        return self.minor_ideal().is_unit

    # -- membership and comparisons ---------------------------------------

    def contains_vector(self, vector) -> bool:
        vector = tuple(vector)
        if len(vector) != self.rank:
            raise MathError("vector has wrong rank")
        return self.span().contains_vector(vector)

    def contains_module(self, other: "ModuleRep") -> bool:
        if other.rank != self.rank:
            raise MathError("rank mismatch")
        return all(self.contains_vector(col) for col in other.columns)

    def equals(self, other: "ModuleRep") -> bool:
        if self.rank != other.rank or self.field != other.field:
            return False
        return (self.colength() == other.colength()
                and self.contains_module(other))

    # -- constructions ------------------------------------------------------

    def direct_sum(self, other: "ModuleRep") -> "ModuleRep":
        if self.field != other.field:
            raise FieldMismatchError("direct sum across fields")
        r1, r2 = self.rank, other.rank
        zero = Poly.zero(self.field)
        cols = [tuple(col) + (zero,) * r2 for col in self.columns]
        cols += [(zero,) * r1 + tuple(col) for col in other.columns]
        pres = None
        if self.presentation is not None and other.presentation is not None:
            n1, n2 = self.ngens, other.ngens
            c1, c2 = n1 - r1, n2 - r2
            pres = []
            for i in range(n1):
                pres.append(tuple(self.presentation[i]) + (zero,) * c2)
            for i in range(n2):
                pres.append((zero,) * c1 + tuple(other.presentation[i]))
        return ModuleRep(self.field, r1 + r2, cols, presentation=pres,
                         config=self.config)

    def scale_by_gens(self, ideal_gens) -> "ModuleRep":
        """The module a*M for the ideal a generated by ideal_gens."""
        cols = []
        for g in ideal_gens:
            for col in self.columns:
                cols.append(tuple(g * f for f in col))
        return ModuleRep(self.field, self.rank, cols, config=self.config)

    def scale_by_monomial_ideal(self, ideal: staircase.MonomialIdeal) -> "ModuleRep":
        parts = _slot_monomial_ideals(self)
        if parts is not None:
            # slotwise product with minimal generators, kept slot-monomial
            cols = []
            for slot, part in enumerate(parts):
                for m in ideal.product(part).gens:
                    col = [Poly.zero(self.field)] * self.rank
                    col[slot] = Poly.monomial(self.field, m)
                    cols.append(tuple(col))
            return ModuleRep(self.field, self.rank, cols, config=self.config)
        gens = [Poly.monomial(self.field, m) for m in ideal.gens]
        return self.scale_by_gens(gens)

    def add_column(self, vector) -> "ModuleRep":
        return ModuleRep(self.field, self.rank,
                         list(self.columns) + [tuple(vector)],
                         config=self.config)


# ---------------------------------------------------------------------------
# Fitting ideals


def _component_split(matrix, nrows, ncols):
    """Connected components of the row/column incidence graph."""
    parent = list(range(nrows + ncols))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(nrows):
        for j in range(ncols):
            if not matrix[i][j].is_zero:
                ri, rj = find(i), find(nrows + j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for i in range(nrows):
        if any(not matrix[i][j].is_zero for j in range(ncols)):
            groups.setdefault(find(i), ([], []))[0].append(i)
    for j in range(ncols):
        if any(not matrix[i][j].is_zero for i in range(nrows)):
            groups.setdefault(find(nrows + j), ([], []))[1].append(j)
    return [groups[key] for key in sorted(groups)]


_MINOR_BUDGET = 500_000


def _component_fitting_gens(matrix, rows, cols, size, field):
    """Generators (possibly zero) of I_size of one block, or None if zero."""
    if size == 0:
        return "unit"
    if size > len(rows) or size > len(cols):
        return None
    from math import comb
    if comb(len(rows), size) * comb(len(cols), size) > _MINOR_BUDGET:
        raise MathError("Fitting ideal needs too many minors to enumerate")
    sub = [[matrix[i][j] for j in cols] for i in rows]
    minors = [m for m in matrix_minors(sub, size, field) if not m.is_zero]
    return minors or None


def fitting(matrix, k: int, field: Field,
            config: EngineConfig = DEFAULT) -> TruncatedIdeal:
    """I_k(A): the ideal of k x k minors of A, as a truncated ideal.

    Unit for k <= 0.  Block-diagonal structure is detected and exploited:
    minors crossing independent blocks factor, so I_k is the convolution
    of the blocks' Fitting ideals; this keeps structured presentations
    (bidiagonal blocks) tractable at every k.
    """
    if k <= 0:
        return TruncatedIdeal.unit(field, config)
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    if k > min(nrows, ncols):
        raise ZeroIdealError(f"I_{k} of a {nrows}x{ncols} matrix is zero")
    comps = _component_split(matrix, nrows, ncols)
    # value per partial size: None (zero ideal), "unit", or list of gens
    acc: dict[int, list[Poly] | str | None] = {0: "unit"}
    for rows, cols in comps:
        limit = min(len(rows), len(cols))
        sizes = {}
        for size in range(limit + 1):
            sizes[size] = _component_fitting_gens(matrix, rows, cols, size,
                                                  field)
        new_acc: dict[int, list[Poly] | str | None] = {}
        for have, value in acc.items():
            if value is None:
                continue
            for size, gens in sizes.items():
                if gens is None or have + size > k:
                    continue
                if value == "unit":
                    contrib = gens
                elif gens == "unit":
                    contrib = value
                else:
                    contrib = [u * v for u in value for v in gens]
                prev = new_acc.get(have + size)
                if contrib == "unit" or prev == "unit":
                    new_acc[have + size] = "unit"
                elif prev is None:
                    new_acc[have + size] = list(contrib)
                else:
                    new_acc[have + size] = prev + list(contrib)
        acc = new_acc
    value = acc.get(k)
    if value is None:
        raise ZeroIdealError(f"I_{k} vanishes: all {k}-minors are zero")
    if value == "unit":
        return TruncatedIdeal.unit(field, config)
    dedup: dict[Poly, None] = {}
    for g in value:
        dedup.setdefault(g, None)
    return TruncatedIdeal.materialize(list(dedup), field, config=config)


# ---------------------------------------------------------------------------
# colon of modules into modules


def colon_into(N: ModuleRep, M: ModuleRep,
               config: EngineConfig = DEFAULT) -> TruncatedIdeal:
    """(N : M) = { r in R : r*M <= N } for N <= M of the same rank."""
    if N.rank != M.rank:
        raise MathError("colon needs modules of equal rank")
    from .linalg import kernel_modulo
    from .trunc import monomials_below
    field = N.field
    t = N.n0f
    cap = t - 1
    span = N.span()
    candidates = [Poly.monomial(field, m) for m in monomials_below(cap)]
    for col in M.columns:
        if not candidates:
            break
        rows = [vector_row(tuple(c * f for f in col), cap=cap)
                for c in candidates]
        lams = kernel_modulo(span.basis, rows, cap=cap)
        new_candidates = []
        for lam in lams:
            combo = Poly.zero(field)
            for i, coeff in sorted(lam.items()):
                combo = combo + candidates[i].scale(coeff)
            if not combo.is_zero:
                new_candidates.append(combo)
        candidates = new_candidates
    gens = candidates + [Poly.term(field, t - b, b) for b in range(t + 1)]
    return TruncatedIdeal.materialize(gens, field, order=t + 1, config=config)


# ---------------------------------------------------------------------------
# symmetric powers


def sym_slots(rank: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the degree-d monomials in rank slot variables."""
    slots = []
    for combo in combinations_with_replacement(range(rank), degree):
        exp = [0] * rank
        for i in combo:
            exp[i] += 1
        slots.append(tuple(exp))
    return slots


def _sym_multiply(state: dict, column, rank: int):
    """Multiply a Sym-degree state {exponent: Poly} by a degree-1 column."""
    out: dict[tuple[int, ...], Poly] = {}
    for exp, poly in state.items():
        for i in range(rank):
            f = column[i]
            if f.is_zero:
                continue
            key = exp[:i] + (exp[i] + 1,) + exp[i + 1:]
            prod = poly * f
            if key in out:
                out[key] = out[key] + prod
            else:
                out[key] = prod
    return {k: v for k, v in out.items() if not v.is_zero}


def sym_generators(M: ModuleRep, degree: int):
    """Generators of S_degree(M) as slot vectors inside Sym_degree(F)."""
    slots = sym_slots(M.rank, degree)
    index = {exp: i for i, exp in enumerate(slots)}
    zero = Poly.zero(M.field)
    one_state = {(0,) * M.rank: Poly.one(M.field)}
    vectors = []
    for combo in combinations_with_replacement(range(M.ngens), degree):
        state = one_state
        for j in combo:
            state = _sym_multiply(state, M.columns[j], M.rank)
        vec = [zero] * len(slots)
        for exp, poly in state.items():
            vec[index[exp]] = poly
        vectors.append(tuple(vec))
    return slots, vectors


def _slot_monomial_ideals(M: ModuleRep) -> list[staircase.MonomialIdeal] | None:
    """Per-slot monomial ideals when every column is a single monomial in a
    single slot (direct sums of monomial ideals and their scalings)."""
    buckets: list[list] = [[] for _ in range(M.rank)]
    for col in M.columns:
        hits = [(i, f) for i, f in enumerate(col) if not f.is_zero]
        if len(hits) != 1 or not hits[0][1].is_term:
            return None
        slot, f = hits[0]
        mono = next(iter(f.terms))
        buckets[slot].append(mono)
    if any(not bucket for bucket in buckets):
        return None
    return [staircase.MonomialIdeal.from_exponents(b) for b in buckets]


def _sym_slot_ideals(parts: list[staircase.MonomialIdeal], degree: int):
    """For slot-monomial modules, S_degree decomposes slotwise into
    products of the per-slot ideals."""
    out = []
    for exp in sym_slots(len(parts), degree):
        ideal = staircase.MonomialIdeal.unit()
        for i, e in enumerate(exp):
            for _ in range(e):
                ideal = ideal.product(parts[i])
        out.append(ideal)
    return out


def sym_colength(M: ModuleRep, degree: int,
                 config: EngineConfig = DEFAULT) -> int:
    """Exact length of Sym_degree(F) / S_degree(M)."""
    if degree == 0:
        return 0
    parts = _slot_monomial_ideals(M)
    if parts is not None:
        return sum(staircase.colength(ideal)
                   for ideal in _sym_slot_ideals(parts, degree))
    slots, vectors = sym_generators(M, degree)
    span = span_with_certificate(vectors, len(slots), M.field, config=config)
    return span.colength()


def _sym_certificate_order(M: ModuleRep, degree: int,
                           config: EngineConfig) -> int:
    """Least c with m^c * Sym_degree(F) inside S_degree(M)."""
    parts = _slot_monomial_ideals(M)
    if parts is not None:
        return max(staircase.power_certificate(ideal)
                   for ideal in _sym_slot_ideals(parts, degree))
    slots, vectors = sym_generators(M, degree)
    span = span_with_certificate(vectors, len(slots), M.field, config=config)
    return span.n0


def sym_reduction_check(N: ModuleRep, M: ModuleRep, t: int,
                        config: EngineConfig = DEFAULT) -> bool:
    """Exact test of S_1(N) * S_t(M) = S_(t+1)(M).

    Nakayama: equality follows once every generator of S_(t+1)(M) lies in
    S_1(N)*S_t(M) + m*S_(t+1)(M), checked in the truncation one past the
    certificate of S_(t+1)(M).
    """
    field = M.field
    rank = M.rank
    c0 = _sym_certificate_order(M, t + 1, config)
    cap = c0  # quotient Sym_(t+1)(F) / m^(c0+1)
    slots = sym_slots(rank, t + 1)
    index = {exp: i for i, exp in enumerate(slots)}
    _, big_gens = sym_generators(M, t + 1)
    basis = SparseBasis(field)

    def insert_multiples(vec, min_mult_degree):
        base = vector_row(vec, cap=None)
        if not base:
            return
        ordv = min(f.order() for f in vec if not f.is_zero)
        for d in range(min_mult_degree, cap + 1 - ordv):
            for b in range(d + 1):
                delta = (d << 28) | b
                row = {}
                for key, cf in base.items():
                    kk = key + delta
                    if (kk >> 28) <= cap:
                        row[kk] = cf
                if row:
                    basis.insert(row, cap=cap)

    for vec in big_gens:  # m * S_(t+1)(M)
        insert_multiples(vec, 1)
    small_slots = sym_slots(rank, t)
    _, small_gens = sym_generators(M, t)
    zero = Poly.zero(field)
    for ncol in N.columns:  # S_1(N) * S_t(M)
        for svec in small_gens:
            # multiply the degree-t slot vector by the degree-1 column
            state: dict[int, Poly] = {}
            for si, exp in enumerate(small_slots):
                if svec[si].is_zero:
                    continue
                for i in range(rank):
                    if ncol[i].is_zero:
                        continue
                    key = exp[:i] + (exp[i] + 1,) + exp[i + 1:]
                    prod = svec[si] * ncol[i]
                    j = index[key]
                    state[j] = state.get(j, zero) + prod
            vec = [zero] * len(slots)
            for j, poly in state.items():
                vec[j] = poly
            insert_multiples(tuple(vec), 0)
    return all(basis.contains(vector_row(vec, cap=cap), cap=cap)
               for vec in big_gens)


@dataclass(frozen=True)
class ModuleReductionCertificate:
    """S_1(N) * S_t(M) = S_(t+1)(M) was verified at this degree."""

    degree: int
    trivial: bool = False


def minimal_reduction_module(M: ModuleRep, sampler: GenericSampler,
                             config: EngineConfig = DEFAULT):
    """r+1 seeded-generic column combinations with a verified
    symmetric-power certificate.

    A free module is its own minimal reduction and is returned with a
    trivial certificate.
    """
    if M.is_free():
        return M, ModuleReductionCertificate(0, trivial=True)
    field = M.field
    for _ in range(sampler.retries):
        cand_cols = []
        for _i in range(M.rank + 1):
            col = [Poly.zero(field)] * M.rank
            for source in M.columns:
                c = sampler.coefficient(field)
                for i in range(M.rank):
                    col[i] = col[i] + source[i].scale(c)
            cand_cols.append(tuple(col))
        N = ModuleRep(field, M.rank, cand_cols, config=config)
        try:
            N.span()  # must have finite colength in F
        except (NotMPrimaryError, ZeroIdealError, TruncationCeilingError):
            continue
        for t in range(1, config.sym_power_bound + 1):
            if sym_reduction_check(N, M, t, config=config):
                return N, ModuleReductionCertificate(t)
    raise GenericityError("no certified module reduction found; "
                          "resampling limit exhausted")


def buchsbaum_rim(M: ModuleRep, config: EngineConfig = DEFAULT) -> int:
    """Buchsbaum-Rim multiplicity of F/M by difference stabilization.

    (rank+1)-th finite differences of t -> len(Sym_t(F)/S_t(M)) must be
    constant over three consecutive degrees; errors out rather than guess.
    """
    if M.is_free():
        return 0
    order = M.rank + 1
    values = [0]
    stable: list[int] = []
    for t in range(1, config.br_degree_bound + 1):
        values.append(sym_colength(M, t, config=config))
        if len(values) >= order + 1:
            diffs = list(values)
            for _ in range(order):
                diffs = [b - a for a, b in zip(diffs, diffs[1:])]
            stable.append(diffs[-1])
            if len(stable) >= 3 and stable[-1] == stable[-2] == stable[-3]:
                return stable[-1]
    raise MathError(
        f"Buchsbaum-Rim differences did not stabilize by degree "
        f"{config.br_degree_bound}")


# ---------------------------------------------------------------------------
# cores


def _adjoint_gens_of_ideal(I: TruncatedIdeal, sampler: GenericSampler,
                           config: EngineConfig):
    """Generators of adj(I), via the lattice oracle when I is monomial."""
    mono = I.to_monomial()
    if mono is not None:
        adj = staircase.adjoint(mono)
        return [Poly.monomial(I.field, m) for m in adj.gens], adj
    result = adjoint_ideal(I, sampler, config=config)
    return list(result.gens), None


def core_module(M: ModuleRep, sampler: GenericSampler,
                config: EngineConfig = DEFAULT) -> ModuleRep:
    """core(M) = adj(I(M)) * M for integrally closed M.

    With a presentation at hand the Fitting route I_(n-r-1)(A) * M is
    computed as well and any mismatch is an error.
    """
    I = M.minor_ideal()
    if I.is_unit:
        return M  # free module: its only reduction is itself
    adj_gens, adj_mono = _adjoint_gens_of_ideal(I, sampler, config)
    if adj_mono is not None:
        result = M.scale_by_monomial_ideal(adj_mono)
    else:
        result = M.scale_by_gens(adj_gens)
    if M.presentation is not None:
        fit = fitting(M.presentation, M.ngens - M.rank - 1, M.field,
                      config=config)
        via_fitting = M.scale_by_gens(list(fit.gens))
        if not result.equals(via_fitting):
            raise GenericityError(
                "adjoint route and Fitting route disagree on the core")
    return result


def core_iterate(M: ModuleRep, t: int, sampler: GenericSampler,
                 config: EngineConfig = DEFAULT) -> ModuleRep:
    """t-fold core; each step is checked against the closed form
    core^k(M) = adj(I(M))^((r+1)^k - 1)/r * M."""
    r = M.rank
    I = M.minor_ideal()
    adj_gens, adj_mono = _adjoint_gens_of_ideal(I, sampler, config)
    current = M
    for k in range(1, t + 1):
        current = core_module(current, sampler, config=config)
        exponent = ((r + 1) ** k - 1) // r
        if adj_mono is not None:
            power = adj_mono.power(exponent)
            closed_form = M.scale_by_monomial_ideal(power)
        else:
            ideal = TruncatedIdeal.materialize(adj_gens, M.field,
                                               config=config)
            closed_form = M.scale_by_gens(list(ideal.power(exponent).gens))
        if not current.equals(closed_form):
            raise GenericityError("iterated core disagrees with closed form")
    return current
