"""Independent oracles used by the test suite.

Everything here is deliberately naive: cofactor-expansion determinants,
gcds of enumerated minors, fraction-free rank over Q, Seifert-matrix and
mapping-torus formulas.  None of it shares code paths with the library's
minor-gcd engine or Smith normal form.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from twistalex.laurent import LaurentPoly, UnitClass, lp_gcd


# ---- polynomial determinants by cofactor expansion ----

def cofactor_det(M, rank):
    n = len(M)
    if n == 0:
        return LaurentPoly.one(rank)
    if n == 1:
        return M[0][0]
    total = LaurentPoly.zero(rank)
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor, rank)
        total = total + term if j % 2 == 0 else total - term
    return total


def brute_minor_gcd(M, rank):
    """Gcd of all maximal minors via cofactor expansion."""
    if not M:
        return UnitClass(LaurentPoly.zero(rank))
    k = len(M[0])
    if len(M) < k:
        return UnitClass(LaurentPoly.zero(rank))
    acc = LaurentPoly.zero(rank)
    for rows in combinations(range(len(M)), k):
        d = cofactor_det([M[i] for i in rows], rank)
        acc = lp_gcd(acc, d).representative
    return UnitClass(acc)


# ---- classical Alexander polynomial formulas ----

def seifert_alexander(V):
    """det(V - t V^T) for a 2x2 Seifert matrix, as a UnitClass."""
    t = LaurentPoly.var(1)
    one = LaurentPoly.one(1)

    def entry(i, j):
        return one * V[i][j] - t * V[j][i]

    d = entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0)
    return UnitClass(d)


def mapping_torus_alexander(A):
    """det(t A - I) for the monodromy matrix A on H_1 of the fibre."""
    t = LaurentPoly.var(1)
    one = LaurentPoly.one(1)
    e = [[t * A[i][j] - (one if i == j else LaurentPoly.zero(1))
          for j in range(len(A))] for i in range(len(A))]
    return UnitClass(cofactor_det(e, 1))


# ---- integer matrix rank and torsion, independent of the SNF code ----

def rational_rank(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def int_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        s = 1 if j % 2 == 0 else -1
        total += s * rows[0][j] * int_det(minor)
    return total


def minor_gcds(rows):
    """gcd of all k x k minors for k = 1..rank, via enumeration."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, int_det(sub))
        out.append(g)
    return out


def brute_homology(cells_k, d_k_rows, d_k1_rows):
    """(free_rank, torsion) of ker d_k / im d_{k+1} by minor enumeration."""
    rank_k = rational_rank(d_k_rows) if d_k_rows else 0
    rank_k1 = rational_rank(d_k1_rows) if d_k1_rows else 0
    free = cells_k - rank_k - rank_k1
    torsion = []
    if d_k1_rows:
        ds = minor_gcds(d_k1_rows)
        prev = 1
        for i in range(rank_k1):
            d = ds[i] // prev
            if d > 1:
                torsion.append(d)
            prev = ds[i]
    return free, tuple(torsion)


# ---- epimorphism counting by direct search ----

def brute_epimorphism_count(P, G):
    from itertools import product as iproduct

    def ev(word, images):
        x = 0
        for g, s in word:
            y = images[g] if s > 0 else G.inv(images[g])
            x = G.mul(x, y)
        return x

    count = 0
    for images in iproduct(range(G.order), repeat=P.ngens):
        if any(ev(r, images) != 0 for r in P.relators):
            continue
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for e in images:
                for y in (G.mul(x, e), G.mul(x, G.inv(e))):
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
        if len(seen) == G.order:
            count += 1
    return count
