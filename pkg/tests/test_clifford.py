import random
from fractions import Fraction

import pytest

from twistalex.clifford import (CliffordElement, DimensionMismatch,
                                ExactMatrix, GaussianRational, GR_I, GR_ONE,
                                NotSplitting, all_blades, hodge_star, mu_map,
                                projector, vector_rank, verify_all,
                                verify_iso, volume_element, HODGE_TABLE_4)


def e(i, n=4, field="C"):
    return CliffordElement.e(n, field, i)


def scalar(c, n=4, field="C"):
    return CliffordElement.scalar(n, field, c)


def test_gaussian_rational_arithmetic():
    x = GaussianRational(1, 2)
    y = GaussianRational(Fraction(1, 2), -1)
    assert x * y == GaussianRational(Fraction(5, 2), 0)
    assert (x / y) * y == x
    assert GR_I * GR_I == GaussianRational(-1)


def test_product_examples():
    assert e(1) * e(1) == scalar(-1)
    assert e(1) * e(2) + e(2) * e(1) == CliffordElement.zero(4, "C")
    e12 = CliffordElement.blade(4, "C", (1, 2))
    assert e12 * e12 == scalar(-1)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        e(1, n=3, field="R") * e(1, n=4, field="R")


def test_associativity_random():
    rng = random.Random(13)
    for n in (2, 3, 4, 5):
        blades = all_blades(n)
        for _ in range(20):
            xs = []
            for _ in range(3):
                terms = {rng.choice(blades): rng.randint(-3, 3)
                         for _ in range(rng.randint(1, 3))}
                xs.append(CliffordElement(n, "R", terms))
            x, y, z = xs
            assert (x * y) * z == x * (y * z)


def test_alpha_grading():
    rng = random.Random(17)
    blades = all_blades(4)
    for _ in range(30):
        terms = {rng.choice(blades): rng.randint(-3, 3) for _ in range(3)}
        x = CliffordElement(4, "R", terms)
        y = CliffordElement(4, "R",
                            {rng.choice(blades): rng.randint(-3, 3)})
        assert x.alpha() * y.alpha() == (x * y).alpha()
        assert x.even_part() + x.odd_part() == x
        assert x.even_part().alpha() == x.even_part()
        assert x.odd_part().alpha() == -x.odd_part()


def test_volume_element_examples():
    w = volume_element(4, "C")
    assert w == CliffordElement.blade(4, "C", (1, 2, 3, 4), -1)
    assert w * w == scalar(1)
    w3 = volume_element(3, "R")
    assert w3 * w3 == CliffordElement.scalar(3, "R", 1)


def test_projector_examples():
    p_plus = projector(1, 4)
    p_minus = projector(-1, 4)
    assert p_plus + p_minus == scalar(1)
    assert p_plus * p_plus == p_plus
    assert p_minus * p_minus == p_minus
    assert p_plus * p_minus == CliffordElement.zero(4, "C")
    # omega^2 = -1 in Cl(R^2): no splitting there
    with pytest.raises(NotSplitting):
        projector(1, 2, "R")


def test_mu_map_examples():
    i = GR_I
    e4 = mu_map(e(4))
    assert e4 == ExactMatrix([[i, 0, 0, 0], [0, -i, 0, 0],
                              [0, 0, i, 0], [0, 0, 0, -i]])
    assert mu_map(scalar(1)) == ExactMatrix.identity(4)
    assert mu_map(e(1) * e(1)) == -ExactMatrix.identity(4)
    with pytest.raises(DimensionMismatch):
        mu_map(CliffordElement.e(3, "C", 1))


def test_hodge_table_line_for_line():
    for blade, sign, comp in HODGE_TABLE_4:
        assert hodge_star(blade, 4) == (sign, comp)


def test_hodge_involution_on_two_forms():
    s, c = hodge_star((2, 4), 4)
    s2, c2 = hodge_star(c, 4)
    assert (s * s2, c2) == (1, (2, 4))


def test_verify_all_suites_pass():
    reports = verify_all()
    assert len(reports) == 7
    for rep in reports:
        assert rep.ok, rep.failures()


def test_verify_iso_unknown():
    with pytest.raises(ValueError):
        verify_iso("nope")


def test_vector_rank():
    one = GaussianRational(1)
    zero = GaussianRational(0)
    assert vector_rank([[one, zero], [zero, one], [one, one]]) == 2
    assert vector_rank([]) == 0
