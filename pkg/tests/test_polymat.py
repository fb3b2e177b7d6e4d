import random

from twistalex.laurent import LaurentPoly, UnitClass, normalize_unit
from twistalex.polymat import (_enum_minor_gcd_arrays, _gauss_valuation_sum,
                               _hermite_qpart, _independent_rows,
                               _bareiss_det, _prime_factors, _rows_to_arrays,
                               _arr_to_poly, _scale, laurent_det,
                               max_minor_gcd)

from oracles import brute_minor_gcd, cofactor_det


def random_poly(rng, max_terms=3, max_exp=3, max_coeff=4):
    return LaurentPoly(1, {(rng.randint(-max_exp, max_exp),):
                           rng.randint(-max_coeff, max_coeff)
                           for _ in range(rng.randint(0, max_terms))})


def random_matrix(rng, m, k, **kw):
    return [[random_poly(rng, **kw) for _ in range(k)] for _ in range(m)]


def hermite_path_gcd(M):
    """Force the Hermite + content route, bypassing the enumeration bound."""
    rows = _rows_to_arrays(M)
    k = len(M[0])
    qpart = _hermite_qpart(rows, k)
    if qpart is None:
        return UnitClass(LaurentPoly.zero(1))
    idx = _independent_rows(rows, k)
    m0 = _bareiss_det([rows[i] for i in idx])
    from twistalex.laurent import _int_poly_content
    content = 1
    for p in _prime_factors(_int_poly_content(m0)):
        content *= p ** _gauss_valuation_sum(rows, k, p)
    return UnitClass(_arr_to_poly(_scale(qpart, content)))


def test_laurent_det_matches_cofactor_oracle():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 4)
        M = random_matrix(rng, n, n)
        assert laurent_det(M, 1) == cofactor_det(M, 1)
    for _ in range(15):
        n = rng.randint(1, 3)
        M = [[LaurentPoly(2, {(rng.randint(-2, 2), rng.randint(-2, 2)):
                              rng.randint(-3, 3)
                              for _ in range(rng.randint(0, 2))})
              for _ in range(n)] for _ in range(n)]
        assert laurent_det(M, 2) == cofactor_det(M, 2)


def test_max_minor_gcd_matches_oracle_small():
    rng = random.Random(23)
    for _ in range(40):
        k = rng.randint(1, 3)
        m = k + rng.randint(0, 2)
        M = random_matrix(rng, m, k)
        assert UnitClass(max_minor_gcd(M, 1)) == brute_minor_gcd(M, 1)


def test_hermite_path_matches_enumeration():
    rng = random.Random(31)
    for trial in range(30):
        k = rng.randint(2, 4)
        m = k + rng.randint(1, 3)
        M = random_matrix(rng, m, k, max_terms=2, max_exp=2, max_coeff=3)
        enum = brute_minor_gcd(M, 1)
        assert hermite_path_gcd(M) == enum


def test_hermite_path_with_shared_content():
    rng = random.Random(47)
    for _ in range(20):
        k = rng.randint(2, 3)
        m = k + rng.randint(1, 2)
        M = random_matrix(rng, m, k, max_terms=2, max_exp=2, max_coeff=3)
        c = rng.choice((2, 3, 6, 12))
        M = [[e * c for e in row] for row in M]
        assert hermite_path_gcd(M) == brute_minor_gcd(M, 1)


def test_structured_content_case():
    # every maximal minor shares the prime 2 without the entries all being even
    t = LaurentPoly.var(1)
    one = LaurentPoly.one(1)
    M = [[2 * one, LaurentPoly.zero(1)],
         [LaurentPoly.zero(1), 2 * t],
         [2 * t ** 2, 2 * one]]
    assert hermite_path_gcd(M) == brute_minor_gcd(M, 1)
    assert hermite_path_gcd(M).representative == LaurentPoly.const(1, 4)


def test_rank_deficient_and_wide():
    t = LaurentPoly.var(1)
    one = LaurentPoly.one(1)
    z = LaurentPoly.zero(1)
    # rank 1 but two columns: all 2x2 minors vanish
    M = [[t - one, 2 * (t - one)], [t, 2 * t], [one, 2 * one]]
    assert max_minor_gcd(M, 1).is_zero()
    assert hermite_path_gcd(M).is_zero()
    # fewer rows than columns: free cokernel
    assert max_minor_gcd([[t, one]], 1).is_zero()
    assert max_minor_gcd([], 1, ncols=2).is_zero()
    assert max_minor_gcd([[z, z], [z, z]], 1).is_zero()
    # zero columns: the empty determinant
    assert max_minor_gcd([], 1, ncols=0) == one


def test_multivariable_minor_gcd():
    rng = random.Random(53)
    for _ in range(15):
        k = rng.randint(1, 2)
        m = k + rng.randint(0, 2)
        M = [[LaurentPoly(2, {(rng.randint(-1, 1), rng.randint(-1, 1)):
                              rng.randint(-2, 2)
                              for _ in range(rng.randint(0, 2))})
              for _ in range(k)] for _ in range(m)]
        assert UnitClass(max_minor_gcd(M, 2)) == brute_minor_gcd(M, 2)


def test_prime_factors():
    assert _prime_factors(1) == []
    assert _prime_factors(2 * 2 * 3 * 97) == [2, 3, 97]
    assert _prime_factors(10007 * 10009) == [10007, 10009]
