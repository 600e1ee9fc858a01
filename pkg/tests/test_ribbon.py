from itertools import product

import pytest

from jackkernel.arith import SQRT, UniPoly
from jackkernel.ribbon import (
    ch_in_moments,
    enumerate_excursions,
    enumerate_luka_ribbon,
    expansion_identity_check,
    is_excursion,
    moments_round_trip,
    ns_combi_check,
    product_expansion,
    ribbon_weight,
)
from jackkernel.symfun import PSPoly, partitions


def g(*c):
    return UniPoly("gamma", c)


def _brute_excursions(ell, d):
    out = []
    for steps in product(range(-d, d + 1), repeat=ell):
        h, ok = 0, True
        for x in steps:
            if x == 0 and h == 0:
                ok = False
            h += x
            if h < 0:
                ok = False
        if ok and h == 0:
            out.append(steps)
    return sorted(out, reverse=True)


@pytest.mark.parametrize("ell,d", [(1, 1), (2, 2), (3, 2), (4, 2), (5, 3)])
def test_excursions_brute_force(ell, d):
    assert enumerate_excursions(ell, d) == _brute_excursions(ell, d)


def test_excursion_examples():
    assert is_excursion((1, -1))
    assert is_excursion((2, 0, -1, -1))
    assert not is_excursion((0,))
    assert not is_excursion((1, -2, 1))
    assert enumerate_excursions(2, 1) == [(1, -1)]


def test_small_expansions():
    assert product_expansion((2,)) == {(1,): g(1)}
    assert product_expansion((3,)) == {(1,): g(0, -1), (2,): g(1)}
    assert product_expansion((4,)) == {(1,): g(0, 0, 1), (1, 1): g(1), (2,): g(0, -3), (3,): g(1)}
    assert product_expansion((2, 2)) == {(1,): g(1), (1, 1): g(1)}
    assert product_expansion((3,), "moment") == product_expansion((3,))


def test_ch_in_moments_spot():
    assert ch_in_moments((2,)) == {(3,): g(1), (2,): g(0, 1)}
    assert ch_in_moments((1, 1)) == {(2, 2): g(1), (2,): g(-1)}


@pytest.mark.parametrize("mu", [lam for n in range(1, 6) for lam in partitions(n)])
def test_integrality_and_round_trip(mu):
    exp = ch_in_moments(mu)
    assert all(c.is_integral() for c in exp.values())
    assert moments_round_trip(mu)
    # unitriangular: the top monomial is (mu_i + 1) with coefficient 1, the rest are smaller
    top = tuple(p + 1 for p in mu)
    assert exp[top] == g(1)
    assert all(sum(k) - len(k) < sum(mu) for k in exp if k != top)


@pytest.mark.parametrize("lengths", [(2,), (3,), (4,), (5,), (2, 2), (3, 2), (2, 3), (2, 2, 2)])
def test_size_invariant(lengths):
    for mode in (True, False):
        for path in enumerate_luka_ribbon(lengths, mode):
            mu, _ = ribbon_weight(path)
            horizontal = sum(1 for x in path.steps if x == 0)
            assert sum(lengths) == sum(mu) + len(mu) + 2 * len(path.pairings) + horizontal


@pytest.mark.parametrize("lengths", [(2,), (4,), (2, 3), (3, 3)])
def test_expansion_identities(lengths):
    for lam in [(1,), (2,), (2, 1), (3, 1), (2, 2)]:
        assert expansion_identity_check(lengths, "boolean", lam)
        assert expansion_identity_check(lengths, "moment", lam)


@pytest.mark.parametrize("lengths", [(2,), (3,), (4,), (2, 2), (3, 2)])
def test_operator_form(lengths):
    for mu in [(), (1,), (2,), (1, 1)]:
        assert ns_combi_check(lengths, PSPoly.p(mu, SQRT.one))
