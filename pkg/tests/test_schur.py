import json

import pytest

from doubleschur.poly import Poly
from doubleschur.schur import (
    SchurExpansion,
    add_staircase,
    alternant,
    double_monomial,
    double_schur,
    expand_in_alternants,
    expand_in_double_schur,
    expansion_to_poly,
    partition,
    pieri_multiply,
    remove_staircase,
    staircase,
    strict_sequence,
    x_sum,
)
from doubleschur.oracles import classical_schur_ssyt


def box_partitions(rows, cols):
    out = {()}

    def grow(prefix, cap, left):
        if left == 0:
            return
        for part in range(1, cap + 1):
            lam = prefix + (part,)
            out.add(lam)
            grow(lam, part, left - 1)

    grow((), cols, rows)
    return sorted(out)


# -- index utilities ---------------------------------------------------------

def test_partition_normalizes():
    assert partition([3, 1, 0, 0]) == (3, 1)
    assert partition(()) == ()
    with pytest.raises(ValueError):
        partition((1, 2))
    with pytest.raises(ValueError):
        partition((2, -1))


def test_strict_sequence_validates():
    assert strict_sequence((3, 1, 0)) == (3, 1, 0)
    with pytest.raises(ValueError):
        strict_sequence((2, 2, 0))
    with pytest.raises(ValueError):
        strict_sequence((2, 1), n=3)


def test_staircase_round_trip():
    assert staircase(3) == (2, 1, 0)
    assert add_staircase((2, 1), 3) == (4, 2, 0)
    assert remove_staircase((4, 2, 0)) == (2, 1)
    assert add_staircase((), 2) == (1, 0)
    with pytest.raises(ValueError):
        add_staircase((1, 1, 1), 2)


# -- double monomials --------------------------------------------------------

def test_double_monomial_zero_is_one():
    assert double_monomial(0) == Poly.one(1)


def test_double_monomial_two():
    x, t1, t2 = Poly.x(1, 1), Poly.t(1, 1), Poly.t(2, 1)
    assert double_monomial(2) == x ** 2 + (t1 + t2) * x + t1 * t2


def test_double_monomial_monic():
    for k in range(7):
        dm = double_monomial(k)
        assert dm.leading_x() == (k,)
        assert dm.coefficient_of_x((k,)) == Poly.one()


def test_telescoping_identity():
    # x * (x|t)^k = (x|t)^{k+1} - t_{k+1} * (x|t)^k
    x = Poly.x(1, 1)
    for k in range(13):
        lhs = x * double_monomial(k)
        rhs = double_monomial(k + 1) - Poly.t(k + 1, 1) * double_monomial(k)
        assert lhs == rhs, k


# -- alternants --------------------------------------------------------------

def vandermonde(n):
    prod = Poly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            prod = prod * (Poly.x(i, n) - Poly.x(j, n))
    return prod


def test_staircase_alternant_is_vandermonde():
    for n in (2, 3):
        assert alternant(staircase(n), n) == vandermonde(n)


def test_alternant_two_zero():
    n = 2
    x1, x2 = Poly.x(1, n), Poly.x(2, n)
    t1, t2 = Poly.t(1, n), Poly.t(2, n)
    assert alternant((2, 0), 2) == (x1 - x2) * (x1 + x2 + t1 + t2)


def test_alternant_skew_symmetry():
    for n, nu in ((2, (3, 1)), (3, (4, 2, 1)), (4, (4, 2, 1, 0))):
        a = alternant(nu, n)
        for i in range(1, n):
            assert a.swap_x(i, i + 1) == -a, (nu, i)


def test_alternant_single_variable():
    assert alternant((3,), 1) == double_monomial(3)


# -- double Schur polynomials -------------------------------------------------

def test_schur_empty_is_one():
    assert double_schur((), 3) == Poly.one(3)


def test_schur_one_box():
    n = 2
    want = Poly.x(1, n) + Poly.x(2, n) + Poly.t(1, n) + Poly.t(2, n)
    assert double_schur((1,), 2) == want


def test_schur_is_symmetric():
    for lam in ((2,), (2, 1), (3, 1)):
        assert double_schur(lam, 3).is_symmetric()


def test_schur_specializes_to_classical():
    # t -> 0 recovers the classical Schur polynomial (2x2 box; the full
    # 3x3 box is exercised by the acceptance suite)
    for lam in box_partitions(2, 2):
        got = double_schur(lam, 2).kill_t_above(0)
        assert got == classical_schur_ssyt(lam, 2), lam


def test_schur_division_never_fails_in_small_box():
    for lam in box_partitions(3, 3):
        double_schur(lam, 3)  # raises NotDivisible on failure


def test_schur_rejects_too_many_parts():
    with pytest.raises(ValueError):
        double_schur((1, 1, 1), 2)


# -- expansions ---------------------------------------------------------------

def test_expand_alternant_is_unit_vector():
    for nu in ((2, 0), (3, 1), (5, 2)):
        got = expand_in_alternants(alternant(nu, 2), 2)
        assert got == {nu: Poly.one()}


def test_expand_zero_is_empty():
    assert expand_in_alternants(Poly.zero(2), 2) == {}


def test_expand_product_example():
    n = 2
    p = (Poly.x(1, n) + Poly.x(2, n) + Poly.t(1, n) + Poly.t(2, n)) * alternant((1, 0), n)
    assert expand_in_alternants(p, n) == {(2, 0): Poly.one()}


def test_expand_rejects_non_skew():
    with pytest.raises(ValueError):
        expand_in_alternants(Poly.x(1, 2), 2)


def test_expand_in_double_schur_round_trip():
    for n, lam in ((2, (2, 1)), (3, (1, 1)), (3, ())):
        got = expand_in_double_schur(double_schur(lam, n), n)
        assert got == SchurExpansion(n, {lam: 1})


def test_expand_x_sum():
    got = expand_in_double_schur(x_sum(2), 2)
    want = SchurExpansion(2, {(): -(Poly.t(1) + Poly.t(2)), (1,): 1})
    assert got == want


def test_expand_x_sum_squared():
    n = 2
    t1, t2, t3 = Poly.t(1), Poly.t(2), Poly.t(3)
    got = expand_in_double_schur(x_sum(n) ** 2, n)
    want = SchurExpansion(n, {
        (2,): 1,
        (1, 1): 1,
        (1,): -(2 * t1 + t2 + t3),
        (): (t1 + t2) ** 2,
    })
    assert got == want


def test_expand_rejects_non_symmetric():
    with pytest.raises(ValueError):
        expand_in_double_schur(Poly.x(1, 2), 2)


def test_expansion_to_poly_inverts_expansion():
    n = 2
    p = x_sum(n) ** 2 + 3 * x_sum(n)
    assert expansion_to_poly(expand_in_double_schur(p, n)) == p


def test_expansion_round_trip_with_t_coefficients():
    e = SchurExpansion(2, {(): Poly.t(4), (2, 1): 3, (1,): Poly.t(1) ** 2})
    assert expand_in_double_schur(expansion_to_poly(e), 2) == e


# -- Pieri rule ---------------------------------------------------------------

def test_pieri_empty():
    got = pieri_multiply((), 2)
    assert got == SchurExpansion(2, {(): -(Poly.t(1) + Poly.t(2)), (1,): 1})


def test_pieri_one_box():
    got = pieri_multiply((1,), 2)
    want = SchurExpansion(2, {
        (1,): -(Poly.t(3) + Poly.t(1)),
        (2,): 1,
        (1, 1): 1,
    })
    assert got == want


def test_pieri_no_colliding_shapes():
    # adding a box below an equal row would collide; it must not appear
    got = pieri_multiply((1, 1), 2)
    assert set(got.coeffs) == {(1, 1), (2, 1)}
    got = pieri_multiply((2, 2), 2)
    assert set(got.coeffs) == {(2, 2), (3, 2)}


def test_pieri_agrees_with_expansion_small():
    for n in (1, 2, 3):
        sx = x_sum(n)
        for lam in box_partitions(n, 3):
            got = expand_in_double_schur(sx * double_schur(lam, n), n)
            assert got == pieri_multiply(lam, n), (n, lam)


# -- SchurExpansion container ---------------------------------------------------

def test_expansion_drops_zeros_and_validates():
    e = SchurExpansion(2, {(1,): Poly.zero(0), (2,): 3})
    assert e.coeffs == {(2,): Poly.const(3)}
    with pytest.raises(ValueError):
        SchurExpansion(2, {(1, 1, 1): 1})


def test_expansion_json_round_trip():
    e = SchurExpansion(2, {(2, 1): Poly.t(1) - Poly.t(4), (): 2})
    obj = e.to_obj()
    assert [term["lambda"] for term in obj["terms"]] == [[], [2, 1]]
    assert SchurExpansion.from_obj(json.loads(json.dumps(obj))) == e
