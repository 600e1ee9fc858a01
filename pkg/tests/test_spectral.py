from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from jackkernel.arith import SQRT, substitute
from jackkernel.jack import jack_polynomial
from jackkernel.spectral import (
    CumulantSeq,
    MomentSeq,
    alpha_boolean,
    alpha_moments,
    cauchy_moments,
    cumulant_convert,
    moments_from_free,
    moments_from_free_noncrossing,
    ns_boolean,
    ns_dalpha_diagnostic,
    rect_moment_poly,
)
from jackkernel.stanley import evaluate_stanley
from jackkernel.symfun import PSPoly, partitions

gamma = SQRT.gamma


def _content_moments(lam, a, L):
    """Moments from the profile of the diagram with boxes stretched to width a.

    Minima of the rotated profile sit at a*lam_i - i for addable rows, maxima at
    a*lam_i - i - 1 for removable rows.
    """
    lam = list(lam)
    row = lambda i: lam[i] if i < len(lam) else 0
    minima = [a * row(i) - i for i in range(len(lam) + 1) if i == 0 or row(i) < row(i - 1)]
    maxima = [a * lam[i] - i - 1 for i in range(len(lam)) if row(i + 1) < lam[i]]
    z = sympy.Symbol("z")
    G = sympy.prod([z - y for y in maxima]) / sympy.prod([z - x for x in minima])
    w = sympy.Symbol("w")
    ser = sympy.series(G.subs(z, 1 / w), w, 0, L + 2).removeO()
    return [sympy.Rational(ser.coeff(w, ell + 1)) for ell in range(L + 1)]


@pytest.mark.parametrize("lam", [lam for n in range(5) for lam in partitions(n)])
def test_moments_match_contents(lam):
    got = cauchy_moments(lam, 5).values
    assert [sympy.Rational(x.numerator, x.denominator) for x in got] == _content_moments(lam, 1, 5)
    # anisotropic check at alpha = 4, s = 2
    am = alpha_moments(lam, 5)
    want = _content_moments(lam, 4, 5)
    for ell in range(6):
        v = am[ell].evaluate(Fraction(2)) * 2 ** ell
        assert sympy.Rational(v.numerator, v.denominator) == want[ell]


@pytest.mark.parametrize("lam", [lam for n in range(7) for lam in partitions(n)])
def test_first_moment_vanishes(lam):
    m = alpha_moments(lam, 2)
    assert m[0] == 1 and m[1] == 0 and m[2] == sum(lam)


def test_rect_moment_poly():
    polys = rect_moment_poly(1, 5)
    for p in polys:
        assert p.e == 0 and all(v.denominator == 1 for v in p.terms.values())
    # a 2 x 3 block (rows of width 2, three of them) at alpha = 2
    want = _content_moments((2, 2, 2), 2, 5)
    for ell, p in enumerate(polys):
        v = substitute(evaluate_stanley(p, (2,), (3,)), "b", 1).constant_term()
        assert sympy.Rational(v.numerator, v.denominator) == want[ell]


def test_boolean_spot_values():
    assert ns_boolean((1,), 0) == 1
    assert ns_boolean((1,), 1) == -gamma
    assert ns_boolean((1,), 2) == gamma * gamma
    assert alpha_boolean((1,), 3) == -gamma
    assert alpha_boolean((1,), 4) == gamma * gamma


@pytest.mark.parametrize("lam", [(2,), (1, 1), (2, 1), (3, 1), (2, 2)])
def test_ns_eigenvalues(lam):
    for ell in range(4):
        assert ns_boolean(lam, ell) == alpha_boolean(lam, ell + 2)


@pytest.mark.parametrize("mu", [(), (1,), (2,), (2, 1)])
def test_laplace_beltrami_diagnostic(mu):
    assert ns_dalpha_diagnostic(PSPoly.p(mu, SQRT.one)).matches_correction


def test_diagnostic_on_a_jack():
    assert ns_dalpha_diagnostic(jack_polynomial((2, 1))).matches_correction


ints = st.integers(-6, 6)


@settings(max_examples=60, deadline=None)
@given(st.lists(ints, min_size=5, max_size=7))
def test_cumulant_round_trips(tail):
    M = MomentSeq(tuple([1, 0] + tail))
    L = len(M) - 1
    for kind in ("boolean", "free"):
        cum = cumulant_convert(M, kind)
        assert all(Fraction(v).denominator == 1 for v in cum.values.values())
        assert cumulant_convert(cum, "moments", L).values == M.values


@settings(max_examples=40, deadline=None)
@given(st.lists(ints, min_size=5, max_size=6))
def test_free_against_noncrossing(vals):
    R = {k + 2: v for k, v in enumerate(vals)}
    L = len(vals) + 1
    assert moments_from_free(R, L) == moments_from_free_noncrossing(R, L)


def test_free_cumulant_small():
    # R_2 = M_2, R_3 = M_3, R_4 = M_4 - 2 M_2^2 for centred moments
    cum = cumulant_convert(MomentSeq((1, 0, 2, 3, 11)), "free")
    assert cum.values == {2: 2, 3: 3, 4: 3}
    b = cumulant_convert(MomentSeq((1, 0, 2, 3, 11)), "boolean")
    assert b.values == {2: 2, 3: 3, 4: 7}
    assert isinstance(b, CumulantSeq)
