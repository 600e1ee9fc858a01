from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from jackkernel.arith import ALPHA, B_RING
from jackkernel.symfun import (
    CatPoly,
    PSPoly,
    alpha_content,
    basis_ops,
    deriv_p,
    dominance_leq,
    from_monomial,
    gamma_y,
    laplace_beltrami,
    mul_p,
    partition_stats,
    partitions,
    principal_eval,
    theta_y,
    to_monomial,
    y_plus,
)

alpha = ALPHA.alpha
b = B_RING.b


def test_partition_counts():
    # number of partitions of 0..8
    assert [len(partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partition_stats_examples():
    st1 = partition_stats((1,))
    assert (st1.z, st1.conjugate) == (1, (1,))
    st2 = partition_stats((2, 2, 1))
    assert (st2.z, st2.conjugate, st2.length, st2.size) == (8, (3, 2), 3, 5)
    st0 = partition_stats(())
    assert (st0.z, st0.conjugate) == (1, ())


def test_invalid_partition():
    with pytest.raises(ValueError):
        partition_stats((1, 2))


def test_dominance_examples():
    assert dominance_leq((1, 1), (2,))
    assert not dominance_leq((2,), (1, 1))
    assert dominance_leq((2, 1), (2, 1))
    assert not dominance_leq((2,), (2, 1))


def test_alpha_content_examples():
    assert alpha_content(1, 1) == 0
    assert alpha_content(1, 2) == alpha
    assert alpha_content(2, 1) == -1


def test_basis_ops_examples():
    assert basis_ops(PSPoly.one(), 2, "mul_p") == PSPoly.p((2,))
    assert basis_ops(PSPoly.p((2, 2)), 2, "deriv_p") == PSPoly.p((2,), 2)
    assert basis_ops(PSPoly.p((1,)), 2, "deriv_p") == PSPoly()


def test_laplace_beltrami_examples():
    assert laplace_beltrami(PSPoly.p((1,), ALPHA.one)) == PSPoly()
    assert laplace_beltrami(PSPoly.p((2,), ALPHA.one)) == PSPoly({(1, 1): ALPHA.one, (2,): alpha - 1})
    j2 = PSPoly({(1, 1): ALPHA.one, (2,): alpha})
    assert laplace_beltrami(j2) == j2.scale(alpha)


def test_catalytic_examples():
    assert y_plus(CatPoly.y(0)) == CatPoly.y(1)
    assert y_plus(CatPoly.y(2, (3,))) == CatPoly.y(3, (3,))
    assert y_plus(CatPoly()) == CatPoly()
    assert gamma_y(CatPoly.y(0, (), B_RING.one), B_RING) == CatPoly()
    assert gamma_y(CatPoly.y(0, (1,), B_RING.one), B_RING) == CatPoly.y(2, (), 1 + b)
    assert gamma_y(CatPoly.y(1, (), B_RING.one), B_RING) == CatPoly({(1, (1,)): B_RING.one, (2, ()): b})
    assert theta_y(CatPoly.y(2)) == PSPoly.p((2,))
    assert theta_y(CatPoly.y(0, (5,))) == PSPoly()
    assert theta_y(CatPoly.y(1, (1,))) == PSPoly.p((1, 1))


def test_principal_eval_examples():
    for uv in (Fraction(2), Fraction(-3, 2)):
        for av in (Fraction(1), Fraction(5, 3)):
            j2 = PSPoly({(1, 1): Fraction(1), (2,): av})
            assert principal_eval(j2, uv) == uv * (uv + av)
    assert principal_eval(PSPoly({(1, 1): 1, (2,): -1}), Fraction(4)) == 4 * 3
    assert principal_eval(PSPoly.one(), Fraction(7)) == 1


def test_to_monomial_examples():
    assert to_monomial(PSPoly.p((1, 1)), 2) == {(2,): 1, (1, 1): 2}
    assert to_monomial(PSPoly.p((2,)), 2) == {(2,): 1}
    assert to_monomial(PSPoly({(1, 1): 1, (2,): -1}), 2) == {(1, 1): 2}
    with pytest.raises(ValueError):
        to_monomial(PSPoly({(1,): 1, (2,): 1}), 2)


@pytest.mark.parametrize("n", [3, 4])
def test_to_monomial_against_expansion(n):
    xs = sympy.symbols(f"x1:{n + 1}")
    for mu in partitions(n):
        poly = sympy.Poly(sympy.prod([sum(x ** k for x in xs) for k in mu]), *xs)
        got = to_monomial(PSPoly.p(mu), n)
        for nu in partitions(n):
            exps = tuple(nu) + (0,) * (n - len(nu))
            assert poly.coeff_monomial(exps) == got.get(nu, 0)


@pytest.mark.parametrize("n", range(7))
def test_monomial_round_trip(n):
    for mu in partitions(n):
        f = PSPoly.p(mu, Fraction(1))
        assert from_monomial(to_monomial(f, n), n) == f


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------

parts = st.sampled_from([lam for n in range(6) for lam in partitions(n)])
cat_terms = st.dictionaries(st.tuples(st.integers(0, 4), parts), st.integers(-3, 3), max_size=5)
ps_terms = st.dictionaries(parts, st.integers(-3, 3), max_size=5)


@settings(max_examples=60, deadline=None)
@given(cat_terms)
def test_catalytic_grading(terms):
    g = CatPoly({k: B_RING(v) for k, v in terms.items()})
    w = g.weights()
    for op in (lambda x: gamma_y(x, B_RING), y_plus):
        img = op(g)
        assert img.weights() <= {x + 1 for x in w}
    assert theta_y(g).weights() <= w


@settings(max_examples=60, deadline=None)
@given(ps_terms, st.integers(1, 4))
def test_heisenberg_relation(terms, k):
    f = PSPoly({key: Fraction(v) for key, v in terms.items()})
    # plain partial derivative: the commutator is the identity
    assert deriv_p(mul_p(f, k), k) - mul_p(deriv_p(f, k), k) == f


@settings(max_examples=40, deadline=None)
@given(ps_terms)
def test_laplace_beltrami_preserves_weight(terms):
    f = PSPoly({key: ALPHA(v) for key, v in terms.items()})
    assert laplace_beltrami(f).weights() <= f.weights()
