"""End-to-end checks of the package's headline computations.

Each criterion is a single test function, so ``pytest -v`` reports one
pass/fail line per criterion.  Every comparison is exact rational
arithmetic; no tolerances appear anywhere.
"""

import math
import random

import pytest

from tautring.cli import main as cli_main
from tautring.cone_complex import (
    barycentric,
    explosion_chern_identity,
    generated_by_degree_one,
    simplex_cone_complex,
    triangle_z3_complex,
)
from tautring.errors import DomainError
from tautring.integration import integrate, kappa_to_psi
from tautring.membership import (
    MembershipReport,
    div_membership,
    pairing_rank,
    pairing_vector,
    theta_solve,
)
from tautring.pixton import (
    lambda_top,
    pixton_class_at_r,
    pixton_r_polynomial,
    reference_lambda_expansion,
    weightings_mod_r,
)
from tautring.product import multiply
from tautring.rationals import QQ
from tautring.stable_graphs import (
    StableGraph,
    enumerate_stable_graphs,
    separating_edges,
)
from tautring.taut_classes import (
    TautClass,
    class_of_graph,
    dim_moduli,
    generators,
    kappa_class,
    psi_class,
)


def test_criterion_01_lambda_expansions_match_reference():
    """lambda_g from the zero-weight cycle equals the boundary expansion
    for g = 1, 2, 3, compared exactly through pairing vectors."""
    expected_coeffs = {
        1: [QQ(1, 24)],
        2: [QQ(1, 1152), QQ(1, 240)],
        3: [
            QQ(1, 2016),
            QQ(1, 2016),
            QQ(-1, 672),
            QQ(1, 5760),
            QQ(-13, 30240),
            QQ(-1, 5760),
            QQ(1, 82944),
        ],
    }
    for g, n in ((1, 1), (2, 0), (3, 0)):
        computed = lambda_top(g, n)
        reference = reference_lambda_expansion(g, n)
        assert sorted(computed.terms.values()) == sorted(expected_coeffs[g])
        basis = generators(g, n, dim_moduli(g, n) - g)
        assert pairing_vector(computed, basis) == pairing_vector(reference, basis)


def test_criterion_02_divisor_span_ranks_degree3_genus3():
    """The divisor subalgebra fills rank 9 of 10 in degree 3 without a
    marking (missing lambda_3), and rank 28 of 29 with one marking
    (containing lambda_3)."""
    assert pairing_rank(3, 0, 3) == 10
    closed = div_membership(lambda_top(3, 0))
    assert (closed.rank, closed.rank_with_class) == (9, 10)
    assert not closed.in_span and closed.verdict == "not a member"

    assert pairing_rank(3, 1, 3) == 29
    marked = div_membership(lambda_top(3, 1))
    assert (marked.rank, marked.rank_with_class) == (28, 28)
    assert marked.in_span and marked.verdict == "member"


def test_criterion_03_genus2_boundary_relation_solution_set():
    """The genus-2 system has the one-parameter solution line
    x = z - 1/120, y = -(5/24) z + 11/2880, and no solution with
    x >= 0 and z <= 0."""
    report = theta_solve()
    solutions = report.solutions
    assert len(solutions.basis) == 1
    for t in (QQ(0), QQ(1), QQ(-3, 7)):
        x, y, z = solutions.point([t])
        assert x == z - QQ(1, 120)
        assert y == QQ(-5, 24) * z + QQ(11, 2880)
    assert report.sign_constrained_feasible is False


def test_criterion_04_lambda3_vanishing_products():
    """lambda_3 squares to zero, and lambda_3 times the irreducible
    boundary divisor annihilates every degree-2 generator."""
    lam3 = lambda_top(3)
    assert integrate(multiply(lam3, lam3)) == 0

    loop = StableGraph((2,), ((),), (((0, 0), (0, 1)),))
    delta0 = class_of_graph(loop, coeff=QQ(1, 2))
    lam3_delta0 = multiply(lam3, delta0)
    degree2 = generators(3, 0, 2)
    assert degree2
    for gen in degree2:
        assert integrate(multiply(lam3_delta0, gen)) == 0


def test_criterion_05_lambda_g_formula_genus2():
    """psi-lambda_2 integrals with two markings reduce to the one-marking
    constant 7/5760 times a binomial coefficient."""
    base = integrate(multiply(psi_class(2, 1, 1, 2), lambda_top(2, 1)))
    assert base == QQ(7, 5760)

    lam2 = lambda_top(2, 2)
    for k1 in range(4):
        k2 = 3 - k1
        monomial = class_of_graph(StableGraph((2,), ((1, 2),), ()))
        if k1:
            monomial = multiply(monomial, psi_class(2, 2, 1, k1))
        if k2:
            monomial = multiply(monomial, psi_class(2, 2, 2, k2))
        value = integrate(multiply(monomial, lam2))
        assert value == QQ(math.comb(3, k1)) * QQ(7, 5760)


def test_criterion_06_r_polynomiality_disjoint_windows():
    """Interpolations from two disjoint r-windows give the same coefficient
    polynomials, and evaluating at a fresh r matches direct computation."""
    for g, d in ((2, 2), (3, 3)):
        start1 = d + 2
        start2 = start1 + 2 * d + 2
        window1 = pixton_r_polynomial(g, (), d, start=start1)
        window2 = pixton_r_polynomial(g, (), d, start=start2)
        assert window1.coeffs == window2.coeffs
        fresh = start2 + 2 * d + 3
        assert window1.at(fresh).terms == pixton_class_at_r(g, (), d, fresh).terms


def test_criterion_07_lambda_expansions_avoid_separating_edges():
    """No graph supporting a lambda_g expansion term has a separating edge."""
    for g, n in ((1, 1), (2, 0), (3, 0)):
        cls = lambda_top(g, n)
        assert cls.terms
        for graph, _dec in cls.terms:
            assert separating_edges(graph) == []


def test_criterion_08_weighting_counts_are_r_to_h1():
    """The zero-weight weighting count equals r^(first Betti number) for all
    enumerated stable graphs with at most five edges, for r up to 7."""
    checked = 0
    for g, n in ((0, 4), (0, 5), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)):
        for graph in enumerate_stable_graphs(g, n):
            if graph.n_edges > 5:
                continue
            h1 = graph.n_edges - graph.n_vertices + 1
            for r in range(1, 8):
                assert len(weightings_mod_r(graph, (0,) * n, r)) == r**h1
                checked += 1
    assert checked > 500


def test_criterion_09_cone_complex_suite():
    """Barycentric subdivision of the n-dimensional orthant has n! maximal
    cones; the explosion Chern identity holds for all 1 <= k <= s <= 4; and
    after two barycentric subdivisions the rotation-glued triangle's
    piecewise polynomials are generated in degree one up to degree 3."""
    for n in range(1, 6):
        fine, _mapping = barycentric(simplex_cone_complex(n))
        assert len(fine.cones) == math.factorial(n)

    for s in range(1, 5):
        for k in range(1, s + 1):
            assert explosion_chern_identity(s, k)

    once, _ = barycentric(triangle_z3_complex())
    twice, _ = barycentric(once)
    for d in (2, 3):
        assert generated_by_degree_one(twice, d)


def test_criterion_10_extended_genus_mode_is_explicit_and_uncertified():
    """Above genus 3 membership analysis refuses to run unless the
    lower-bound mode is requested explicitly, and that mode never reports
    a certified positive verdict."""
    with pytest.raises(DomainError):
        div_membership(kappa_class(4, 0, 1))

    positive = MembershipReport(
        g=4, n=1, degree=4, in_span=True, certified=False, rank=5, rank_with_class=5
    )
    assert positive.verdict == "unresolved (pairing-consistent)"
    negative = MembershipReport(
        g=4, n=1, degree=4, in_span=False, certified=False, rank=5, rank_with_class=6
    )
    assert negative.verdict == "not a member"

    assert cli_main(["div-membership", "4", "0", "4"]) == 2


def test_criterion_11_kappa_conversion_routes_agree():
    """Twenty seeded-random products of degree-one classes integrate to the
    same value whether kappa classes are absorbed during integration or
    rewritten into psi classes first."""
    rng = random.Random(20260815)

    def random_combo(pool):
        out = TautClass(pool[0].g, pool[0].n, pool[0].d)
        while out.is_zero():
            for gen in pool:
                coeff = QQ(rng.randint(-6, 6), rng.randint(1, 4))
                if coeff != 0:
                    out = out + coeff * gen
        return out

    nonzero = 0
    pool = generators(2, 0, 1)
    for _ in range(12):
        a, b, c = (random_combo(pool) for _ in range(3))
        product = multiply(multiply(a, b), c)
        direct = integrate(product)
        rewritten = integrate(kappa_to_psi(product))
        assert direct == rewritten
        nonzero += direct != 0

    pool = generators(1, 2, 1)
    for _ in range(8):
        a, b = (random_combo(pool) for _ in range(2))
        product = multiply(a, b)
        direct = integrate(product)
        rewritten = integrate(kappa_to_psi(product))
        assert direct == rewritten
        nonzero += direct != 0

    assert nonzero == 20
