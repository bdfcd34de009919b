"""Independent brute-force oracles used to freeze expected values.

Nothing here touches the engine's staircase geometry or echelon bases:
membership is raw divisibility scanning, colength is raw lattice counting,
rank computations use a standalone Fraction Gaussian elimination, and
determinants use the permutation-sum formula.
"""

from fractions import Fraction
from itertools import permutations


def mono_member(point, gens) -> bool:
    a, b = point
    return any(g[0] <= a and g[1] <= b for g in gens)


def brute_colength(gens, box=80) -> int:
    count = 0
    for a in range(box):
        for b in range(box):
            if not mono_member((a, b), gens):
                count += 1
    return count


def brute_colon(j_gens, i_gens, box=40):
    """Minimal generators of (J : I) for monomial ideals, by scanning."""
    member = []
    for a in range(box):
        for b in range(box):
            if all(mono_member((a + ga, b + gb), j_gens) for ga, gb in i_gens):
                member.append((a, b))
    minimal = [p for p in member
               if not any(q != p and q[0] <= p[0] and q[1] <= p[1]
                          for q in member)]
    return sorted(minimal)


def brute_product(g1, g2):
    return sorted({(a1 + a2, b1 + b2) for a1, b1 in g1 for a2, b2 in g2})


def sign(perm) -> int:
    s = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def permutation_determinant(matrix, zero, add, mul, neg):
    """Sum over permutations; matrix entries in any commutative ring."""
    n = len(matrix)
    total = zero
    for perm in permutations(range(n)):
        term = None
        for i, j in enumerate(perm):
            term = matrix[i][j] if term is None else mul(term, matrix[i][j])
        if sign(perm) < 0:
            term = neg(term)
        total = add(total, term)
    return total


def fraction_rank(rows) -> int:
    """Row rank over Q by plain Gaussian elimination on Fraction lists."""
    rows = [[Fraction(x) for x in row] for row in rows if any(row)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col] / pv
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def quotient_dimension(gens_exponents_coeffs, order) -> int:
    """dim of k[x,y]/(I + m^order) for I given by [(coeff, a, b), ...] lists.

    Builds the multiples of each generator by monomials below the
    truncation and subtracts the resulting rank from dim k[x,y]/m^order.
    """
    monos = [(a, b) for d in range(order) for a in range(d + 1)
             for b in [d - a]]
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for gen in gens_exponents_coeffs:
        min_deg = min(a + b for _, a, b in gen)
        for da in range(order):
            for db in range(order - da):
                if da + db + min_deg >= order:
                    continue
                row = [Fraction(0)] * len(monos)
                hit = False
                for coeff, a, b in gen:
                    key = (a + da, b + db)
                    if key in index:
                        row[index[key]] += Fraction(coeff)
                        hit = True
                if hit and any(row):
                    rows.append(row)
    rank = fraction_rank(rows) if rows else 0
    return len(monos) - rank
