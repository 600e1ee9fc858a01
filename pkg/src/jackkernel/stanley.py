"""Truncated generating series, Jack characters in multirectangular coordinates,
and the identity checks built on them.

Stanley polynomials live in ``LocRing(("b", "s1", ..., "sk", "r1", ..., "rk"))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

from .arith import ALPHA, B_RING, LocRing, MultiPolyLoc, RatFunc, _substitute_loc, ratfunc_to_loc
from .jack import (
    apply_B_n,
    apply_C_lk,
    exp_b_infinity,
    jack_character_b,
    jack_polynomial,
    jack_polynomial_b,
    j_norm,
)
from .symfun import BiPSPoly, Partition, PSPoly, _accumulate, make_partition, partitions, principal_eval, z_factor

# ---------------------------------------------------------------------------
# Truncated series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncSeries:
    coeffs: Tuple[object, ...]  # PSPoly or BiPSPoly per t-degree

    @property
    def max_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def check_grading(self) -> bool:
        """Seeded at 1, the t^n coefficient has p-weight n."""
        for n, c in enumerate(self.coeffs):
            if isinstance(c, PSPoly):
                if any(sum(lam) != n for lam in c.terms):
                    return False
            else:
                if any(sum(lp) != n or sum(lq) != n for lp, lq in c.terms):
                    return False
        return True


def apply_exp(series: Sequence[PSPoly], u, N: int, ring, scale=1) -> List[PSPoly]:
    """Multiply a truncated series by exp(scale * B_inf(-t, p, u)) (operator action)."""
    out = [PSPoly() for _ in range(N + 1)]
    for j, g in enumerate(series[: N + 1]):
        if not g:
            continue
        for i, h in enumerate(exp_b_infinity(g, u, N - j, ring, scale)):
            if h:
                out[i + j] = out[i + j] + h
    return out


def b_infinity_exp(f: PSPoly, u, N: int, ring=B_RING) -> TruncSeries:
    return TruncSeries(tuple(exp_b_infinity(f, u, N, ring)))


# ---------------------------------------------------------------------------
# F(lambda)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def f_series(lam: Partition, N: int) -> TruncSeries:
    """exp(B_inf(-t, -alpha lam_1)) ... exp(B_inf(-t, -alpha lam_l)) . 1 truncated at t^N.

    Zero parts are allowed and act trivially.
    """
    lam = tuple(lam)
    series: List[PSPoly] = [PSPoly.one(B_RING.one)] + [PSPoly() for _ in range(N)]
    for part in reversed(lam):
        series = apply_exp(series, B_RING.alpha * (-part), N, B_RING)
    out = TruncSeries(tuple(series))
    if not out.check_grading():
        raise ArithmeticError("grading violated in F series")
    return out


def theta_via_F(mu: Partition, lam: Partition):
    """[t^|mu| p_mu] F(lam), as an element of Q(alpha)."""
    mu = make_partition(mu)
    n = sum(mu)
    return ALPHA.lift(f_series(tuple(lam), n)[n][mu])


def vanishing_check(lam: Partition, m: int) -> bool:
    if m <= sum(lam):
        raise ValueError("vanishing check needs m > |lambda|")
    return not f_series(tuple(lam), m)[m]


# ---------------------------------------------------------------------------
# Stanley coordinates
# ---------------------------------------------------------------------------


def stanley_symbols(k: int) -> Tuple[str, ...]:
    return ("b",) + tuple(f"s{i}" for i in range(1, k + 1)) + tuple(f"r{i}" for i in range(1, k + 1))


def stanley_ring(k: int) -> LocRing:
    return LocRing(stanley_symbols(k))


@lru_cache(maxsize=None)
def f_tilde_series(k: int, N: int, order: str = "first_outer") -> TruncSeries:
    """exp(r_1 B_inf(-t, -alpha s_1)) ... exp(r_k B_inf(-t, -alpha s_k)) . 1 truncated at t^N.

    ``order="last_outer"`` puts the k-th rectangle outermost instead (kept for comparison).
    """
    ring = stanley_ring(k)
    series: List[PSPoly] = [PSPoly.one(ring.one)] + [PSPoly() for _ in range(N)]
    idx = list(range(1, k + 1))
    inner_first = list(reversed(idx)) if order == "first_outer" else idx
    for i in inner_first:
        u = -(ring.alpha * ring.gen(f"s{i}"))
        series = apply_exp(series, u, N, ring, ring.gen(f"r{i}"))
    out = TruncSeries(tuple(series))
    if not out.check_grading():
        raise ArithmeticError("grading violated in F~ series")
    return out


def stanley_theta(mu: Partition, k: int, order: str = "first_outer") -> MultiPolyLoc:
    mu = make_partition(mu)
    n = sum(mu)
    ring = stanley_ring(k)
    val = f_tilde_series(k, n, order)[n][mu]
    val = ring.lift(val) if val else ring.zero
    if val.e:
        raise ArithmeticError(f"Stanley polynomial for {mu} keeps a (1+b)^{val.e} denominator")
    return val


def evaluate_stanley(p: MultiPolyLoc, s: Sequence, r: Sequence) -> MultiPolyLoc:
    """Substitute numeric coordinates; the result lives in Q[b] localized."""
    out = p
    for i, (si, ri) in enumerate(zip(s, r), 1):
        out = _substitute_loc(out, f"s{i}", Fraction(si))
        out = _substitute_loc(out, f"r{i}", Fraction(ri))
    return out.restrict(("b",))


@dataclass(frozen=True)
class LassalleReport:
    polynomial: MultiPolyLoc  # in (b, sigma_i = -s_i, r_i), stored under the names s_i
    nonnegative: bool
    integral: bool
    witnesses: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.nonnegative and self.integral


def _flip_s(p: MultiPolyLoc, k: int) -> MultiPolyLoc:
    sidx = [p.symbols.index(f"s{i}") for i in range(1, k + 1)]
    terms = {}
    for exp, v in p.terms.items():
        deg = sum(exp[i] for i in sidx)
        terms[exp] = -v if deg % 2 else v
    return MultiPolyLoc(p.symbols, terms, p.e)


def lassalle_check(mu: Partition, k: int) -> LassalleReport:
    """Audit (-1)^|mu| z_mu theta~ rewritten in (b, -s, r)."""
    mu = make_partition(mu)
    theta = stanley_theta(mu, k)
    scaled = theta * (z_factor(mu) * (-1) ** sum(mu))
    poly = _flip_s(scaled, k)
    bad = []
    for exp, v in poly.sorted_terms():
        if v < 0 or v.denominator != 1:
            mono = "*".join(f"{s}^{e}" for s, e in zip(poly.symbols, exp) if e) or "1"
            bad.append(f"{v}*{mono}")
    nonneg = all(v >= 0 for v in poly.terms.values())
    integral = poly.e == 0 and all(v.denominator == 1 for v in poly.terms.values())
    return LassalleReport(poly, nonneg, integral, tuple(bad))


def _set_r_one(p: MultiPolyLoc, k: int) -> MultiPolyLoc:
    for i in range(1, k + 1):
        p = _substitute_loc(p, f"r{i}", 1)
    return p


def shifted_symmetry_check(mu: Partition, k: int) -> bool:
    """theta~ at r = 1 is symmetric in s_i - i/alpha."""
    p = _set_r_one(stanley_theta(mu, k), k)
    ring = stanley_ring(k)
    inv_alpha = ring.one.div_one_plus_b(1)
    for i in range(1, k + 1):
        p = _substitute_loc(p, f"s{i}", ring.gen(f"s{i}") + inv_alpha * i)
    for i in range(1, k):
        if p.permute({f"s{i}": f"s{i + 1}", f"s{i + 1}": f"s{i}"}) != p:
            return False
    return True


def coords_partition(s: Sequence[int], r: Sequence[int]) -> Partition:
    rows: List[int] = []
    live = [(si, ri) for si, ri in zip(s, r) if ri]
    if any(ri < 0 for ri in r) or len(s) != len(r):
        raise ValueError("multiplicities must be nonnegative and match the widths")
    for a, b in zip(live, live[1:]):
        if a[0] < b[0]:
            raise ValueError("rectangle widths must weakly decrease")
    for si, ri in live:
        rows.extend([si] * ri)
    return tuple(x for x in rows if x)


def multirect_invariance_check(lam: Partition, coords_a, coords_b) -> bool:
    lam = make_partition(lam)
    for s, r in (coords_a, coords_b):
        if coords_partition(s, r) != lam:
            raise ValueError(f"coordinates {s}, {r} do not describe {lam}")
    for n in range(sum(lam) + 1):
        for mu in partitions(n):
            vals = []
            for s, r in (coords_a, coords_b):
                vals.append((evaluate_stanley(stanley_theta(mu, len(s)), s, r)))
            if vals[0] != vals[1]:
                return False
    return True


def feray_top_degree_check(mu: Partition, k: int) -> bool:
    mu = make_partition(mu)
    if k < len(mu):
        raise ValueError("need k >= l(mu)")
    ring = stanley_ring(k)
    p = _set_r_one(stanley_theta(mu, k), k)
    names = [f"s{i}" for i in range(1, k + 1)]
    top = p.homogeneous_part(names, p.degree_in(names))
    power = ring.one
    for part in mu:
        power = power * sum((ring.gen(n) ** part for n in names), ring.zero)
    expected = power * ring.alpha ** (sum(mu) - len(mu)) * Fraction(1, z_factor(mu))
    return top == expected


# ---------------------------------------------------------------------------
# Commutation suites
# ---------------------------------------------------------------------------


def _c_coeff(f: PSPoly, ell: int, d: int, ring=B_RING) -> PSPoly:
    """[t^d] C_ell(t) f."""
    if d < ell or d == 0:
        return PSPoly()
    if d == ell:
        return apply_C_lk(f, ell, 0, ring).scale(Fraction(1, ell)) if ell > 0 else PSPoly()
    return apply_C_lk(f, ell, d - ell, ring).scale(Fraction(1, d))


def _c_compose(f: PSPoly, ell: int, m: int, n: int, ring=B_RING) -> PSPoly:
    """[t^n] C_ell(t) C_m(t) f."""
    out = PSPoly()
    for d in range(n + 1):
        inner = _c_coeff(f, m, d, ring)
        if inner:
            out = out + _c_coeff(inner, ell, n - d, ring)
    return out


def commutator_suite(mode: str, ell: int, m: int, N: int, max_size: int = 4,
                     inputs: Sequence[Partition] | None = None) -> bool:
    """mode "B": [B_ell(u), B_m(u)] p_lam = 0 for |lam| <= max_size, symbolic u.

    mode "C": [C_ell, C_m] = 0 for ell, m > 0 and [C_0, C_m] = (m+1) C_{m+1},
    each t^n coefficient with n <= N, on p_lam for the given inputs.
    """
    if inputs is None:
        inputs = [lam for n in range(max_size + 1) for lam in partitions(n)]
    if mode == "B":
        ring = LocRing(("b", "u"))
        for lam in inputs:
            f = PSPoly.p(lam, ring.one)
            lhs = apply_B_n(apply_B_n(f, m, "u", ring), ell, "u", ring)
            rhs = apply_B_n(apply_B_n(f, ell, "u", ring), m, "u", ring)
            if lhs != rhs:
                return False
        return True
    if mode == "C":
        for lam in inputs:
            f = PSPoly.p(lam, B_RING.one)
            for n in range(N + 1):
                comm = _c_compose(f, ell, m, n) - _c_compose(f, m, ell, n)
                if ell == 0 and m > 0:
                    target = _c_coeff(f, m + 1, n).scale(m + 1)
                elif m == 0 and ell > 0:
                    target = -_c_coeff(f, ell + 1, n).scale(ell + 1)
                else:
                    target = PSPoly()
                if comm != target:
                    return False
        return True
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# tau_b
# ---------------------------------------------------------------------------

TAU_RING = LocRing(("b", "u"))


def _bi_from(fp: PSPoly, fq: PSPoly, c) -> BiPSPoly:
    out: dict = {}
    for lp, vp in fp.terms.items():
        for lq, vq in fq.terms.items():
            _accumulate(out, (lp, lq), vp * vq * c)
    return BiPSPoly._raw(out)


def tau_series_partition_sum(N: int) -> TruncSeries:
    """sum over xi of t^|xi| J_xi(p) J_xi(q) J_xi(u) / j_xi, coefficients in Q[b, u] localized."""
    if N > 5:
        raise ValueError("the partition-sum route is limited to N <= 5")
    coeffs = []
    u_poly = []  # J_xi(u) as polynomials in u with Q(alpha) coefficients
    for n in range(N + 1):
        # collect per (p-key, q-key): dict u-power -> Q(alpha)
        acc: Dict[Tuple[Partition, Partition], Dict[int, RatFunc]] = {}
        for xi in partitions(n):
            J = jack_polynomial(xi)
            jn = j_norm(xi)
            # principal specialization coefficients: sum over terms c * u^{l(lam)}
            spec: Dict[int, RatFunc] = {}
            for lam, c in J.terms.items():
                spec[len(lam)] = spec.get(len(lam), ALPHA.zero) + c
            for lp, cp in J.terms.items():
                for lq, cq in J.terms.items():
                    slot = acc.setdefault((lp, lq), {})
                    for d, cu in spec.items():
                        slot[d] = slot.get(d, ALPHA.zero) + cp * cq * cu / jn
        out: dict = {}
        u = TAU_RING.gen("u")
        for key, poly in acc.items():
            val = TAU_RING.zero
            for d, c in poly.items():
                if c:
                    val = val + ratfunc_to_loc(c, TAU_RING) * u ** d
            if val:
                out[key] = val
        coeffs.append(BiPSPoly._raw(out))
    return TruncSeries(tuple(coeffs))


def tau_series_operator(N: int) -> TruncSeries:
    """exp(sum_m t^m q_m B_m(p, u) / m) . 1, truncated at t^N."""
    ring = TAU_RING
    one = BiPSPoly({((), ()): ring.one})
    series = [one] + [BiPSPoly() for _ in range(N)]
    layer = {0: one}
    ell = 0
    while layer:
        ell += 1
        nxt: Dict[int, BiPSPoly] = {}
        for d, g in layer.items():
            for k in range(1, N - d + 1):
                h = g.apply_p(lambda f, k=k: apply_B_n(f, k, "u", ring)).mul_q(k).scale(Fraction(1, k))
                if h:
                    nxt[d + k] = nxt[d + k] + h if d + k in nxt else h
        layer = nxt
        inv = Fraction(1, _fact(ell))
        for d, g in layer.items():
            series[d] = series[d] + g.scale(inv)
    return TruncSeries(tuple(series))


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def tau_series(N: int) -> Tuple[TruncSeries, TruncSeries]:
    return tau_series_partition_sum(N), tau_series_operator(N)


def tau_intertwining_check(series: TruncSeries) -> bool:
    """t^m B_m/m tau = d tau/d q_m, compared coefficientwise up to the truncation."""
    ring = TAU_RING
    N = series.max_degree
    for m in range(1, N + 1):
        for n in range(m, N + 1):
            lhs = series[n - m].apply_p(lambda f: apply_B_n(f, m, "u", ring)).scale(Fraction(1, m))
            rhs = series[n].deriv_q(m)
            if lhs != rhs:
                return False
    return True
