"""Transition-measure moments, cumulants and the Nazarov-Sklyanin operator.

The Cauchy transform is expanded in w = 1/z.  Each factor (z + a)/(z + c)
becomes (1 + a w)/(1 + c w), and 1/(1 + c w) is a geometric series, so the
moments come out in any ring without division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .arith import SQRT, LocRing, MultiPolyLoc, RatFunc, UniPoly
from .jack import jack_polynomial_b, lift_pspoly
from .symfun import PSPoly, _accumulate, add_part, deriv_p, euler_operator, laplace_beltrami, mul_p, partitions
from .stanley import stanley_ring

# ---------------------------------------------------------------------------
# Power series in w
# ---------------------------------------------------------------------------


def _series_mul(a: List, b: List, L: int, zero) -> List:
    out = [zero] * (L + 1)
    for i, x in enumerate(a[: L + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: L + 1 - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _linear(c, L: int, one, zero) -> List:
    """1 + c w."""
    out = [one] + [zero] * L
    if L >= 1:
        out[1] = one * c
    return out


def _geometric(c, L: int, one, zero) -> List:
    """1 / (1 + c w)."""
    out = [one]
    for _ in range(L):
        out.append(out[-1] * (-c))
    return out


def _moments_from_factors(numer: Sequence, denom: Sequence, shift, L: int, one, zero) -> List:
    """Moments of G = w / (1 + shift w) * prod (1 + a w) / prod (1 + c w)."""
    series = _geometric(shift, L, one, zero)
    for a in numer:
        series = _series_mul(series, _linear(a, L, one, zero), L, zero)
    for c in denom:
        series = _series_mul(series, _geometric(c, L, one, zero), L, zero)
    # G = w * series, M_l = [w^{l+1}] G = series[l]
    return series[: L + 1]


@dataclass(frozen=True)
class MomentSeq:
    values: Tuple[object, ...]  # M_0 .. M_L

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)


def cauchy_moments(lam: Sequence, L: int, one=Fraction(1), zero=Fraction(0)) -> MomentSeq:
    """Moments of the transition measure of a diagram with (possibly symbolic) row lengths."""
    ell = len(lam)
    numer = [(i + 1) - x for i, x in enumerate(lam)]
    denom = [i - x for i, x in enumerate(lam)]
    return MomentSeq(tuple(_moments_from_factors(numer, denom, one * ell, L, one, zero)))


def alpha_moments(lam: Sequence[int], L: int) -> MomentSeq:
    """M^(alpha)_l(lam) = s^{-l} M_l(alpha lam) in Q(s)."""
    return _alpha_moments(tuple(lam), L)


@lru_cache(maxsize=None)
def _alpha_moments(lam: Tuple[int, ...], L: int) -> MomentSeq:
    raw = _scaled_moments(lam, L)
    return MomentSeq(tuple(_unscale(m, i) for i, m in enumerate(raw)))


@lru_cache(maxsize=None)
def _scaled_moments(lam: Tuple[int, ...], L: int) -> Tuple[UniPoly, ...]:
    """M_l(alpha lam) as polynomials in alpha."""
    one = UniPoly("alpha", (1,))
    alpha = UniPoly.gen("alpha")
    return cauchy_moments([alpha * x for x in lam], L, one, UniPoly("alpha")).values


def _unscale(p: UniPoly, ell: int) -> RatFunc:
    """p(alpha) / sqrt(alpha)^ell in Q(s)."""
    coeffs = [0] * (2 * len(p.coeffs))
    for i, c in enumerate(p.coeffs):
        coeffs[2 * i] = c
    return RatFunc(UniPoly("s", coeffs), UniPoly("s", (0, 1)) ** ell)


def rect_moment_poly(k: int, L: int) -> List[MultiPolyLoc]:
    """sqrt(alpha)^l M^(alpha)_l of the multirectangular diagram, l = 0..L, in (b, s, r)."""
    ring = stanley_ring(k)
    alpha = ring.alpha
    s = [ring.gen(f"s{i}") for i in range(1, k + 1)]
    r = [ring.gen(f"r{i}") for i in range(1, k + 1)]
    prefix = [ring.zero]
    for ri in r:
        prefix.append(prefix[-1] + ri)
    numer = [prefix[i + 1] - alpha * s[i] for i in range(k)]
    denom = [prefix[i] - alpha * s[i] for i in range(k)]
    return _moments_from_factors(numer, denom, prefix[k], L, ring.one, ring.zero)


# ---------------------------------------------------------------------------
# Cumulants
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def compositions_min2(n: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(2, n + 1):
        for rest in compositions_min2(n - first):
            out.append((first,) + rest)
    return tuple(out)


def _falling(x: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= x - i
    return out


def _prod(xs, one):
    out = one
    for x in xs:
        out = out * x
    return out


@dataclass(frozen=True)
class CumulantSeq:
    kind: str
    values: Dict[int, object]  # index -> value, indices from 2

    def __getitem__(self, i):
        return self.values[i]


def moments_from_boolean(B: Dict[int, object], L: int, one=1) -> List:
    out = [one]
    for n in range(1, L + 1):
        acc = 0 * one
        for comp in compositions_min2(n):
            acc = acc + _prod((B[k] for k in comp), one)
        out.append(acc)
    return out


def moments_from_free(R: Dict[int, object], L: int, one=1) -> List:
    out = [one]
    for n in range(1, L + 1):
        acc = 0 * one
        for comp in compositions_min2(n):
            ell = len(comp)
            c = Fraction(_falling(n, ell - 1), factorial(ell))
            acc = acc + _prod((R[k] for k in comp), one) * c
        out.append(acc)
    return out


def boolean_from_moments(M: Sequence, L: int) -> Dict[int, object]:
    B: Dict[int, object] = {}
    one = M[0]
    for n in range(2, L + 1):
        # the single-part composition contributes B_n itself
        B[n] = one * 0
        B[n] = M[n] - moments_from_boolean(B, n, one)[n]
    return B


def free_from_moments(M: Sequence, L: int) -> Dict[int, object]:
    R: Dict[int, object] = {}
    one = M[0]
    for n in range(2, L + 1):
        R[n] = one * 0
        R[n] = M[n] - moments_from_free(R, n, one)[n]
    return R


def cumulant_convert(seq, target: str, L: int | None = None):
    """Convert between moments, Boolean cumulants and free cumulants.

    ``seq`` is a ``MomentSeq`` or a ``CumulantSeq``.  Moments are assumed centred (M_1 = 0).
    """
    if isinstance(seq, MomentSeq):
        M = list(seq.values)
    else:
        L0 = max(seq.values) if L is None else L
        one = next(iter(seq.values.values())) * 0 + 1
        M = moments_from_boolean(seq.values, L0, one) if seq.kind == "boolean" else \
            moments_from_free(seq.values, L0, one)
    L = len(M) - 1 if L is None else L
    if target == "moments":
        return MomentSeq(tuple(M[: L + 1]))
    if target == "boolean":
        return CumulantSeq("boolean", boolean_from_moments(M, L))
    if target == "free":
        return CumulantSeq("free", free_from_moments(M, L))
    raise ValueError(f"unknown target {target!r}")


def alpha_boolean(lam: Sequence[int], ell: int) -> RatFunc:
    """B^(alpha)_ell(lam) through the moment route."""
    return _alpha_boolean(tuple(lam), ell)


@lru_cache(maxsize=None)
def _alpha_boolean(lam: Tuple[int, ...], ell: int) -> RatFunc:
    # Boolean cumulants scale like moments, so convert before dividing by s^ell
    raw = cumulant_convert(MomentSeq(_scaled_moments(lam, ell)), "boolean")
    return _unscale(raw[ell], ell) if ell >= 2 else SQRT.zero


# non-crossing partitions without singletons, used as an independent oracle


def _noncrossing(n: int) -> List[List[Tuple[int, ...]]]:
    """All non-crossing set partitions of {0..n-1} (blocks as sorted tuples)."""
    if n == 0:
        return [[]]
    out = []
    # block containing 0 is {0} + subset; recurse on gaps
    def rec(elems: Tuple[int, ...]) -> List[List[Tuple[int, ...]]]:
        if not elems:
            return [[]]
        first, rest = elems[0], elems[1:]
        res = []
        m = len(rest)
        for mask in range(1 << m):
            block = (first,) + tuple(rest[i] for i in range(m) if mask >> i & 1)
            # gaps between consecutive block elements and after the last one
            gaps = []
            chosen = [i for i in range(m) if mask >> i & 1]
            prev = -1
            for c in chosen:
                gaps.append(rest[prev + 1:c])
                prev = c
            gaps.append(rest[prev + 1:])
            parts = [[]]
            for g in gaps:
                parts = [p + q for p in parts for q in rec(g)]
            res.extend([[block] + p for p in parts])
        return res

    return rec(tuple(range(n)))


def moments_from_free_noncrossing(R: Dict[int, object], L: int, one=1) -> List:
    out = [one]
    for n in range(1, L + 1):
        acc = 0 * one
        for pi in _noncrossing(n):
            if all(len(b) >= 2 for b in pi):
                acc = acc + _prod((R[len(b)] for b in pi), one)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# Nazarov-Sklyanin operator
# ---------------------------------------------------------------------------


def _vec_add(a: Dict[int, PSPoly], i: int, f: PSPoly) -> None:
    if not f:
        return
    a[i] = a[i] + f if i in a else f
    if not a[i]:
        del a[i]


def ns_dagger(f: PSPoly, ring=SQRT) -> Dict[int, PSPoly]:
    s = ring.s
    out: Dict[int, PSPoly] = {}
    N = max((sum(lam) for lam in f.terms), default=0)
    for k in range(1, N + 1):
        _vec_add(out, k, deriv_p(f, k).scale(s * k))
    return out


def ns_apply_L(vec: Dict[int, PSPoly], ring=SQRT) -> Dict[int, PSPoly]:
    s = ring.s
    gamma = ring.gamma
    inv_s = 1 / s
    out: Dict[int, PSPoly] = {}
    if not vec:
        return out
    # index + weight is constant, so indices never exceed the total
    total = max(j + max((sum(lam) for lam in v.terms), default=0) for j, v in vec.items())
    for j, v in vec.items():
        _vec_add(out, j, v.scale(gamma * (-j)))
        for i in range(1, j):
            _vec_add(out, i, mul_p(v, j - i).scale(inv_s))
        for i in range(j + 1, total + 1):
            _vec_add(out, i, deriv_p(v, i - j).scale(s * (i - j)))
    return out


def ns_close(vec: Dict[int, PSPoly], ring=SQRT) -> PSPoly:
    inv_s = 1 / ring.s
    out = PSPoly()
    for k, v in vec.items():
        out = out + mul_p(v, k).scale(inv_s)
    return out


def apply_ns(f: PSPoly, ell: int, ring=SQRT) -> PSPoly:
    """P L^ell P-dagger applied to f, coefficients in Q(s)."""
    vec = ns_dagger(f, ring)
    inv = {i + max((sum(l) for l in v.terms), default=0) for i, v in vec.items()}
    for _ in range(ell):
        vec = ns_apply_L(vec, ring)
        now = {i + max((sum(l) for l in v.terms), default=0) for i, v in vec.items()}
        if vec and not now <= inv:
            raise ArithmeticError("index + weight not conserved")
    return ns_close(vec, ring)


class NotEigenvectorError(ArithmeticError):
    pass


def proportionality(g: PSPoly, f: PSPoly):
    """Return c with g = c f, or raise."""
    if not f:
        raise ValueError("reference polynomial is zero")
    key = next(iter(f.terms))
    c = g[key] / f.terms[key] if g[key] else f.terms[key] * 0
    if g != f.scale(c):
        raise NotEigenvectorError("result is not proportional to the input")
    return c


def ns_boolean(lam: Sequence[int], ell: int) -> RatFunc:
    J = lift_pspoly(jack_polynomial_b(tuple(lam)), SQRT)
    return proportionality(apply_ns(J, ell), J)


@dataclass(frozen=True)
class DiagnosticReport:
    lhs: PSPoly
    rhs: PSPoly
    difference: PSPoly
    matches_correction: bool


def ns_dalpha_diagnostic(f: PSPoly) -> DiagnosticReport:
    """Compare (sqrt(alpha)/2) P L P-dagger with the Laplace-Beltrami operator."""
    f = f.map_coeffs(SQRT.lift)
    lhs = apply_ns(f, 1).scale(SQRT.s / 2)
    rhs = laplace_beltrami(f, SQRT)
    diff = lhs - rhs
    correction = euler_operator(f).scale((SQRT.alpha - 1) / 2)
    return DiagnosticReport(lhs, rhs, diff, diff == correction)
