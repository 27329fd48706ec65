import random

import pytest
from hypothesis import given, strategies as st

from coha.algebra import (
    element,
    element_from_json,
    graded_dim,
    mul2,
    muln,
    one,
    psi,
    psi_chain,
    subalgebra_element,
    vertex_blocks,
)
from coha.errors import BadMarker, NotSymmetric, QuiverMismatch, VariableOutOfRange
from coha.poly import MPoly, format_poly, is_block_symmetric, omega, parse_poly, schur
from coha.quiver import euler_form, validate_partition
from helpers import A2, A3, D4, KRONECKER, random_element


def test_element_validation():
    element(A3, (0, 1, 1), "w[2,1]*w[3,1]")
    with pytest.raises(NotSymmetric):
        element(A3, (2, 0, 0), "w[1,1] - w[1,2]")
    with pytest.raises(VariableOutOfRange):
        element(A3, (1, 0, 0), "w[1,2]")
    with pytest.raises(QuiverMismatch):
        mul2(one(A2, (1, 0)), one(A3, (1, 0, 0)))


def test_one_and_unit():
    assert one(A3, (1, 1, 1)).poly == MPoly.const(1)
    assert one(A2, (0, 1)).grade == (0, 1)
    f = element(A3, (0, 1, 1), "w[2,1]^2 + w[3,1]")
    u = one(A3, (0, 0, 0))
    assert (u * f).poly == f.poly and (f * u).poly == f.poly


def test_general_f_g_example():
    rng = random.Random(3)
    for _ in range(3):
        f = random_element(rng, A3, (2, 0, 0), 2)
        g = random_element(rng, A3, (0, 1, 1), 2)
        assert (f * g).poly == f.poly * g.poly
        factor = parse_poly("(w[1,1] - w[2,1])*(w[1,2] - w[2,1])")
        assert (g * f).poly == f.poly * g.poly * factor


def test_zero_orbit_product():
    assert format_poly((one(A2, (0, 1)) * one(A2, (1, 0))).poly) == "ω[1,1] - ω[2,1]"
    assert format_poly((one(A2, (1, 0)) * one(A2, (0, 1))).poly) == "1"


def test_psi_small_products():
    assert format_poly((psi(0) * psi(1)).poly) == "1"
    assert format_poly((psi(1) * psi(0)).poly) == "-1"
    assert muln([psi(3)]).poly == psi(3).poly


def test_psi_chain_is_schur():
    lam = (2, 1)
    got = muln(psi_chain(lam))
    assert got.poly == schur(lam, [omega(1, 1), omega(1, 2)])


def test_subalgebra_element():
    e = subalgebra_element(A2, (1, 1), 1, 1, "w[1,1]")
    assert e.grade == (1, 1) and format_poly(e.poly) == "ω[1,1]"
    e2 = subalgebra_element(A2, (1, 1), 2, 2, "w[1,1]*w[1,2]")
    assert e2.grade == (2, 2) and format_poly(e2.poly) == "ω[2,1]*ω[2,2]"
    assert subalgebra_element(A2, (1, 1), 3, 1, "1").poly == MPoly.const(1)
    with pytest.raises(BadMarker):
        subalgebra_element(A2, (1, 0), 1, 2, "1")


def test_graded_dim():
    assert [graded_dim((1,), k) for k in range(4)] == [1, 1, 1, 1]
    assert graded_dim((2,), 2) == 2
    assert graded_dim((0,), 0) == 1 and graded_dim((0,), 3) == 0
    assert graded_dim((1, 1), 2) == 3


def test_json_round_trip():
    f = element(A3, (0, 2, 1), "w[2,1]*w[3,1] + w[2,2]*w[3,1] - w[3,1]^2")
    assert element_from_json(A3, f.to_json()) == f


GRADES = {
    A2: [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)],
    A3: [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1)],
    D4: [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 1, 1)],
    KRONECKER: [(1, 0), (0, 1), (1, 1), (2, 1)],
}


@st.composite
def homogeneous_pair(draw):
    q = draw(st.sampled_from(list(GRADES)))
    rng = random.Random(draw(st.integers(0, 10**6)))
    g1, g2 = draw(st.sampled_from(GRADES[q])), draw(st.sampled_from(GRADES[q]))
    f = random_element(rng, q, g1, draw(st.integers(0, 2)))
    g = random_element(rng, q, g2, draw(st.integers(0, 2)))
    return f, g


@given(homogeneous_pair())
def test_degree_contract_and_symmetry(pair):
    f, g = pair
    h = f * g
    assert is_block_symmetric(h.poly, vertex_blocks(h.grade))
    element(h.quiver, h.grade, h.poly)  # variable-range invariant
    if f.poly.is_zero() or g.poly.is_zero() or h.poly.is_zero():
        return
    assert h.poly.is_homogeneous()
    assert h.degree() == f.degree() + g.degree() - euler_form(f.quiver, f.grade, g.grade)


@given(st.integers(0, 10**6))
def test_associativity(seed):
    rng = random.Random(seed)
    q = rng.choice([A2, A3, KRONECKER])
    grades = [rng.choice(GRADES[q][:3]) for _ in range(3)]
    f, g, h = (random_element(rng, q, gr, rng.randint(0, 1), homogeneous=False) for gr in grades)
    assert ((f * g) * h).poly == (f * (g * h)).poly


def test_singleton_consistent_products_are_plain():
    rng = random.Random(5)
    # grades supported on vertices in head-before-tail order multiply plainly
    for _ in range(5):
        fs = [random_element(rng, A3, g, 1, homogeneous=False) for g in [(2, 0, 0), (0, 1, 0), (0, 0, 2)]]
        expected = fs[0].poly * fs[1].poly * fs[2].poly
        assert muln(fs).poly == expected


@pytest.mark.parametrize("blocks,g1,g2", [
    ([[1], [2, 3]], (2, 0, 0), (0, 1, 1)),
    ([[1, 2], [3]], (1, 1, 0), (0, 0, 2)),
    ([[1], [2, 3]], (1, 0, 0), (1, 1, 1)),
])
def test_outside_arrows_contribute_nothing(blocks, g1, g2):
    p = validate_partition(A3, blocks)
    rng = random.Random(11)
    f = random_element(rng, A3, g1, 1, homogeneous=False)
    g = random_element(rng, A3, g2, 1, homogeneous=False)
    assert mul2(f, g).poly == mul2(f, g, arrows=p.internal_arrows).poly
