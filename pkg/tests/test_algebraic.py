import random
from fractions import Fraction

import pytest

from eigenmult.algebraic import (
    AlgebraicNumber,
    Field,
    FieldElement,
    FieldMatrix,
    NotAnEigenvalueError,
    ReducibleMinimalPolynomialError,
    constrained_eigenspace_dim,
    default_lambda_set,
    field_of,
    is_downer,
    multiplicity,
    rank_multiplicity,
)
from eigenmult.families import cycle_graph, path_graph, starlike
from eigenmult.graphs import from_edge_list, induced_delete, join_bridge
from eigenmult.polynomials import IntPoly

from oracles import numeric_multiplicity

ONE = AlgebraicNumber.from_angle(1, 3)
ZERO = AlgebraicNumber.from_angle(1, 2)
TWO = AlgebraicNumber.from_angle(0, 1)
GOLD = AlgebraicNumber.from_angle(1, 5)


def rand_graph(rng, n, p=0.4):
    return from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def test_algebraic_number_construction():
    assert ONE.minpoly == IntPoly([-1, 1]) and ONE.name == "2cos(1pi/3)"
    assert TWO.name == "2" and AlgebraicNumber.from_angle(1, 1).name == "-2"
    lam = AlgebraicNumber.from_minpoly([-2, 0, 1])
    assert lam.degree == 2
    with pytest.raises(ValueError):
        AlgebraicNumber.from_minpoly([-1, 0, 1])  # reducible
    with pytest.raises(ValueError):
        AlgebraicNumber.from_minpoly([3, 2])  # not monic
    assert abs(GOLD.approx() - 1.6180339887) < 1e-9
    assert abs(AlgebraicNumber.from_minpoly([-2, 0, 1]).approx() - 1.41421356) < 1e-6


def test_default_lambda_set():
    lams = default_lambda_set(5)
    names = [l.name for l in lams]
    assert names[0] == "2" and names[1] == "-2"
    assert "2cos(1pi/5)" in names and "2cos(2pi/5)" in names
    assert len(lams) == 2 + 1 + 2 + 2 + 4


def test_field_element_arithmetic():
    fld = field_of(IntPoly([-1, -1, 1]))  # golden ratio field
    phi = FieldElement(fld, fld.gen)
    one = FieldElement(fld, fld.one)
    # phi^2 = phi + 1
    assert phi * phi == phi + one
    inv = phi.inverse()
    assert phi * inv == one
    # 1/phi = phi - 1
    assert inv == phi - one
    assert (phi / phi) == one
    assert phi.coords == (Fraction(0), Fraction(1))
    half = FieldElement(fld, fld.norm([1, 1], 2))
    assert half.coords == (Fraction(1, 2), Fraction(1, 2))
    assert (half + half).coords == (Fraction(1), Fraction(1))


def test_reducible_modulus_alarm():
    fld = Field(IntPoly([-1, 0, 1]))  # x^2 - 1 is not irreducible
    bad = fld.sub(fld.gen, fld.one)  # x - 1 is a zero divisor
    with pytest.raises(ReducibleMinimalPolynomialError):
        fld.inverse(bad)
    with pytest.raises(ZeroDivisionError):
        fld.inverse(fld.zero)


def test_multiplicity_examples():
    assert multiplicity(cycle_graph(6), ONE) == 2
    assert multiplicity(path_graph(4), GOLD) == 1
    assert multiplicity(starlike(3, 2), TWO) == 1
    assert rank_multiplicity(cycle_graph(6), ONE) == 2
    assert rank_multiplicity(path_graph(3), ZERO) == 1
    assert rank_multiplicity(from_edge_list(1, []), TWO) == 0


def test_oracles_agree_and_match_numerics(conn_upto6, lambdas_q8):
    rng = random.Random(9)
    sample = rng.sample(conn_upto6, 30)
    mus = {}
    for lam in lambdas_q8:
        mus.setdefault(lam.minpoly, lam)
    for g in sample:
        for lam in mus.values():
            m = multiplicity(g, lam)
            assert m == rank_multiplicity(g, lam)
            assert m == numeric_multiplicity(g, lam.approx())


def test_conjugate_multiplicities_equal(lambdas_q8):
    # all conjugate roots of one minimal polynomial occur equally often
    rng = random.Random(10)
    import math

    for _ in range(10):
        g = rand_graph(rng, rng.randint(2, 7))
        for p, q in [(1, 5), (2, 5), (1, 8), (3, 8)]:
            lam = AlgebraicNumber.from_angle(p, q)
            m = multiplicity(g, lam)
            for pp in range(1, q):
                if math.gcd(pp, q) == 1 and (pp % 2) == (p % 2):
                    conj = 2 * math.cos(math.pi * pp / q)
                    assert numeric_multiplicity(g, conj) == m


def test_constrained_eigenspace():
    assert constrained_eigenspace_dim(path_graph(3), ZERO, []) == 1
    assert constrained_eigenspace_dim(path_graph(3), ZERO, [1]) == 1
    assert constrained_eigenspace_dim(cycle_graph(6), ONE, [0]) == 1
    with pytest.raises(Exception):
        constrained_eigenspace_dim(path_graph(3), ZERO, [5])


def test_constrained_dim_bound_and_monotonicity(lambdas_q8):
    rng = random.Random(11)
    for _ in range(25):
        g = rand_graph(rng, rng.randint(2, 6))
        lam = rng.choice(lambdas_q8)
        m = multiplicity(g, lam)
        verts = list(range(g.n))
        rng.shuffle(verts)
        big = verts[: rng.randint(0, g.n)]
        small = big[: rng.randint(0, len(big))]
        dim_big = constrained_eigenspace_dim(g, lam, big)
        dim_small = constrained_eigenspace_dim(g, lam, small)
        assert m <= dim_big + len(big)
        assert dim_small <= dim_big + (len(big) - len(small))


def test_interlacing(lambdas_q8):
    rng = random.Random(12)
    for _ in range(25):
        g = rand_graph(rng, rng.randint(2, 7))
        lam = rng.choice(lambdas_q8)
        m = multiplicity(g, lam)
        for u in range(g.n):
            sub, _ = induced_delete(g, [u])
            assert abs(m - multiplicity(sub, lam)) <= 1


def test_is_downer():
    assert is_downer(cycle_graph(6), 0, ONE) is True
    assert is_downer(path_graph(3), 1, ZERO) is False
    assert is_downer(path_graph(2), 0, ONE) is True
    with pytest.raises(NotAnEigenvalueError):
        is_downer(path_graph(3), 0, TWO)


def test_bridge_join_multiplicity_via_downers(lambdas_q8):
    # wherever u is a downer, the bridged join adds multiplicities
    rng = random.Random(13)
    found = 0
    while found < 12:
        g = rand_graph(rng, rng.randint(2, 6))
        h = rand_graph(rng, rng.randint(1, 5))
        lam = rng.choice(lambdas_q8)
        if multiplicity(g, lam) < 1:
            continue
        u = rng.randrange(g.n)
        if not is_downer(g, u, lam):
            continue
        v = rng.randrange(h.n)
        joined, _, _ = join_bridge(g, u, h, v)
        gu, _ = induced_delete(g, [u])
        hv, _ = induced_delete(h, [v])
        assert multiplicity(joined, lam) == multiplicity(gu, lam) + multiplicity(hv, lam)
        found += 1


def test_rank_against_rational_oracle():
    # degree-1 lambdas turn (A - lambda I) into a plain rational matrix
    from oracles import rational_matrix_rank

    rng = random.Random(14)
    for _ in range(20):
        g = rand_graph(rng, rng.randint(1, 7))
        for lam, val in ((ZERO, 0), (ONE, 1), (TWO, 2)):
            rows = [
                [
                    (1 if v in g.adj[u] else 0) - (val if u == v else 0)
                    for v in range(g.n)
                ]
                for u in range(g.n)
            ]
            assert g.n - rational_matrix_rank(rows) == rank_multiplicity(g, lam)


def test_nullspace_diagnostic():
    mat = FieldMatrix.lambda_shifted_adjacency(path_graph(3), ZERO)
    basis = mat.nullspace_fractions()
    assert len(basis) == 1
    vec = basis[0]
    # kernel of P_3 at 0 is spanned by (1, 0, -1)
    assert vec[1] == 0 and vec[0] == -vec[2] != 0
