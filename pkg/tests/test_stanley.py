from fractions import Fraction

import pytest

from jackkernel.arith import B_RING, substitute
from jackkernel.jack import jack_character, jack_character_b
from jackkernel.stanley import (
    commutator_suite,
    coords_partition,
    evaluate_stanley,
    f_series,
    feray_top_degree_check,
    lassalle_check,
    multirect_invariance_check,
    shifted_symmetry_check,
    stanley_ring,
    stanley_theta,
    tau_intertwining_check,
    tau_series,
    theta_via_F,
    vanishing_check,
)
from jackkernel.symfun import partitions

small = [lam for n in range(5) for lam in partitions(n)]


@pytest.mark.parametrize("lam", small)
def test_F_gives_characters(lam):
    for n in range(1, 5):
        for mu in partitions(n):
            assert theta_via_F(mu, lam) == jack_character(mu, lam)


@pytest.mark.parametrize("lam", small)
def test_F_vanishes_above_size(lam):
    assert vanishing_check(lam, sum(lam) + 1)
    assert vanishing_check(lam, sum(lam) + 2)


def test_vanishing_needs_large_m():
    with pytest.raises(ValueError):
        vanishing_check((2,), 2)


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 1)])
def test_zero_part_padding(lam):
    assert f_series(lam + (0,), 4) == f_series(lam, 4)


def test_F_grading():
    assert f_series((2, 2), 5).check_grading()


def test_coords_partition():
    assert coords_partition((3, 1), (1, 2)) == (3, 1, 1)
    assert coords_partition((2, 5), (2, 0)) == (2, 2)
    with pytest.raises(ValueError):
        coords_partition((1, 3), (1, 1))


@pytest.mark.parametrize("k,coords", [
    (1, ((2,), (3,))),
    (2, ((3, 1), (1, 2))),
    (2, ((2, 1), (2, 1))),
])
def test_stanley_specializes(k, coords):
    s, r = coords
    lam = coords_partition(s, r)
    for n in range(1, 5):
        for mu in partitions(n):
            assert evaluate_stanley(stanley_theta(mu, k), s, r) == jack_character_b(mu, lam)


def test_rectangle_content_formula():
    # theta_2 on an s x r rectangle is the content sum alpha*r*s(s-1)/2 - s*r(r-1)/2
    R = stanley_ring(1)
    s, r, a = R.gen("s1"), R.gen("r1"), R.alpha
    expected = (a * r * s * (s - 1) - s * r * (r - 1)) * Fraction(1, 2)
    assert stanley_theta((2,), 1) == expected


def test_lassalle_spot_value():
    rep = lassalle_check((2,), 1)
    # variables (b, sigma = -s, r): sigma^2 r + b sigma^2 r + b sigma r + sigma r^2
    assert rep.polynomial.terms == {(0, 2, 1): 1, (1, 2, 1): 1, (1, 1, 1): 1, (0, 1, 2): 1}
    assert rep.passed


@pytest.mark.parametrize("mu", [lam for n in range(1, 5) for lam in partitions(n)])
def test_lassalle_small(mu):
    for k in (1, 2):
        rep = lassalle_check(mu, k)
        assert rep.nonnegative and rep.integral, rep.witnesses


def test_outer_order_matters():
    # the other nesting order fails to specialize to the character
    s, r = (3, 1), (1, 2)
    lam = coords_partition(s, r)
    good = evaluate_stanley(stanley_theta((2, 1), 2), s, r)
    bad = evaluate_stanley(stanley_theta((2, 1), 2, order="last_outer"), s, r)
    assert good == jack_character_b((2, 1), lam)
    assert bad != good


@pytest.mark.parametrize("mu", [(1,), (2,), (2, 1), (3,), (2, 2)])
def test_shifted_symmetry(mu):
    assert shifted_symmetry_check(mu, 2)
    assert shifted_symmetry_check(mu, 3)


@pytest.mark.parametrize("mu", [(1,), (2,), (3,), (2, 1), (1, 1)])
def test_top_degree(mu):
    assert feray_top_degree_check(mu, 2)


def test_multirect_invariance():
    assert multirect_invariance_check((2, 2), ((2,), (2,)), ((2, 5), (2, 0)))
    assert multirect_invariance_check((3, 1, 1), ((3, 1), (1, 2)), ((3, 1, 4), (1, 2, 0)))


def test_theta_is_polynomial_in_b():
    p = stanley_theta((3,), 2)
    assert p.e == 0
    # b = -1 is a legal substitution once the denominator is gone
    substitute(p, "b", -1)


@pytest.mark.parametrize("mode,ell,m", [("B", 1, 2), ("B", 2, 3), ("C", 0, 2), ("C", 1, 2), ("C", 2, 3)])
def test_commutators(mode, ell, m):
    assert commutator_suite(mode, ell, m, 5, 3)


def test_tau_routes_agree():
    a, b = tau_series(3)
    assert all(a[n] == b[n] for n in range(4))
    assert tau_intertwining_check(b)
