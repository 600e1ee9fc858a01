"""Creation operators, Jack polynomials and Jack characters.

The workhorse is ``catalytic_table(n, lam)``: the expansion of
``Theta_Y (Gamma_Y + u Y_+)^n y_0 p_lam`` as integer polynomials in b and u,
computed once per ``(n, lam)``.  Every operator in the package (B_n, C_{l,k},
the exponential of B_infinity) reads from it and lifts into the target ring.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Dict, List, Tuple

from .arith import ALPHA, B_RING, SQRT, AlphaField, LocRing, MultiPolyLoc, RatFunc, SqrtField, substitute
from .config import LIMITS
from .symfun import (
    CatPoly,
    Partition,
    PSPoly,
    _accumulate,
    add_part,
    boxes,
    conjugate,
    dominance_leq,
    gamma_y,
    laplace_beltrami,
    make_partition,
    partitions,
    principal_eval,
    remove_part,
    theta_y,
    to_monomial,
    y_plus,
    z_factor,
)

# ---------------------------------------------------------------------------
# Integer catalytic table
# ---------------------------------------------------------------------------

# key of a table entry: (output partition, b-degree, u-degree) -> integer


@lru_cache(maxsize=None)
def catalytic_table(n: int, lam: Partition) -> Tuple[Tuple[Partition, int, int, int], ...]:
    """Numerator of B_n p_lam: tuples (partition, deg_b, deg_u, coefficient)."""
    state: Dict[Tuple[int, Partition, int, int], int] = {(0, lam, 0, 0): 1}
    for _ in range(n):
        nxt: Dict[Tuple[int, Partition, int, int], int] = {}

        def put(key, c):
            v = nxt.get(key, 0) + c
            if v:
                nxt[key] = v
            else:
                nxt.pop(key, None)

        for (m, mu, db, du), c in state.items():
            # u * Y_+
            put((m + 1, mu, db, du + 1), c)
            # Gamma_Y, first term carries (1 + b)
            for part, mult in Counter(mu).items():
                key = (part + m + 1, remove_part(mu, part))
                w = c * part * mult
                put(key + (db, du), w)
                put(key + (db + 1, du), w)
            if m >= 1:
                for i in range(1, m + 1):
                    put((i, add_part(mu, m + 1 - i), db, du), c)
                put((m + 1, mu, db + 1, du), c * m)
        state = nxt
    out: Dict[Tuple[Partition, int, int], int] = {}
    for (m, mu, db, du), c in state.items():
        if m >= 1:
            key = (add_part(mu, m), db, du)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return tuple((k[0], k[1], k[2], v) for k, v in sorted(out.items()))


def _ring_b(ring):
    return ring.b


def _div_one_plus_b(x, ring):
    if isinstance(ring, LocRing):
        return x.div_one_plus_b(1) if isinstance(x, MultiPolyLoc) else ring(x).div_one_plus_b(1)
    return x / ring.alpha


def _resolve_u(u, ring):
    if isinstance(u, str):
        if not isinstance(ring, LocRing) or u not in ring.symbols:
            raise ValueError(f"symbol {u!r} is not available in {ring!r}")
        return ring.gen(u)
    return u


_LIFT_CACHE: Dict[tuple, Dict[Partition, object]] = {}


def _lifted_table(n: int, lam: Partition, ring, u, ell: int | None = None) -> Dict[Partition, object]:
    """B_n p_lam (or its u^ell coefficient when ``ell`` is given) as ring scalars."""
    key = (n, lam, ring, u, ell)
    hit = _LIFT_CACHE.get(key)
    if hit is not None:
        return hit
    b = _ring_b(ring)
    grouped: Dict[Partition, Dict[Tuple[int, int], int]] = {}
    for mu, db, du, c in catalytic_table(n, lam):
        if ell is not None:
            if du != ell:
                continue
            du = 0
        grouped.setdefault(mu, {})[(db, du)] = c
    bpow = [ring.one]
    upow = [ring.one]
    out: Dict[Partition, object] = {}
    for mu, poly in grouped.items():
        acc = ring.zero
        for (db, du), c in poly.items():
            while len(bpow) <= db:
                bpow.append(bpow[-1] * b)
            while len(upow) <= du:
                upow.append(upow[-1] * u)
            acc = acc + bpow[db] * upow[du] * c
        acc = _div_one_plus_b(acc, ring)
        if acc:
            out[mu] = acc
    _LIFT_CACHE[key] = out
    return out


def clear_caches() -> None:
    _LIFT_CACHE.clear()
    _JACK_B.clear()


# ---------------------------------------------------------------------------
# Creation operators
# ---------------------------------------------------------------------------


def apply_B_n(f: PSPoly, n: int, u, ring=B_RING) -> PSPoly:
    """B_n(p, u) f.  ``u`` is a ring scalar or the name of a ring generator."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return PSPoly()
    u = _resolve_u(u, ring)
    out: dict = {}
    for lam, v in f.terms.items():
        for mu, c in _lifted_table(n, lam, ring, u).items():
            _accumulate(out, mu, v * c)
    return PSPoly._raw(out)


def apply_B_n_generic(f: PSPoly, n: int, u, ring=B_RING) -> PSPoly:
    """Same as ``apply_B_n`` but through the generic catalytic operators (slow reference)."""
    if n == 0:
        return PSPoly()
    u = _resolve_u(u, ring)
    g = CatPoly.from_pspoly(f, 0)
    for _ in range(n):
        g = gamma_y(g, ring) + y_plus(g).scale(u)
    return theta_y(g).map_coeffs(lambda c: _div_one_plus_b(c, ring))


def apply_C_lk(f: PSPoly, ell: int, k: int, ring=B_RING) -> PSPoly:
    """C_{ell,k} f = [u^ell] B_{ell+k} f.  C_{0,0} is taken to be the identity."""
    if ell < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if ell == 0 and k == 0:
        return f
    out: dict = {}
    for lam, v in f.terms.items():
        for mu, c in _lifted_table(ell + k, lam, ring, None, ell).items():
            _accumulate(out, mu, v * c)
    return PSPoly._raw(out)


def exp_b_infinity(f: PSPoly, u, N: int, ring=B_RING, scale=1) -> List[PSPoly]:
    """[t^0..t^N] of exp(scale * B_inf(-t, p, u)) f.

    Each t^n coefficient is the sum over compositions (n_1, ..., n_l) of n of
    prod(scale * (-1)^{n_i} B_{n_i} / n_i) f divided by l!.
    """
    u = _resolve_u(u, ring)
    series = [f] + [PSPoly() for _ in range(N)]
    layer = {0: f}
    ell = 0
    while layer:
        ell += 1
        nxt: Dict[int, PSPoly] = {}
        for m, g in layer.items():
            for k in range(1, N - m + 1):
                h = apply_B_n(g, k, u, ring)
                if not h:
                    continue
                coef = Fraction((-1) ** k, k)
                h = h.scale(coef if _is_one(scale) else scale * coef)
                nxt[m + k] = nxt[m + k] + h if m + k in nxt else h
        layer = {m: g for m, g in nxt.items() if g}
        inv = Fraction(1, factorial(ell))
        for m, g in layer.items():
            series[m] = series[m] + g.scale(inv)
    return series


def _is_one(x) -> bool:
    return isinstance(x, (int, Fraction)) and x == 1


def creation_apply(f: PSPoly, n: int, u, ring=B_RING) -> PSPoly:
    """[t^n] exp(B_inf(-t, p, u)) f."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return exp_b_infinity(f, u, n, ring)[n]


# ---------------------------------------------------------------------------
# Jack polynomials
# ---------------------------------------------------------------------------

_JACK_B: Dict[Partition, PSPoly] = {}


def jack_polynomial_b(lam: Partition) -> PSPoly:
    """J_lam with coefficients in Q[b] (localized at 1 + b), b = alpha - 1."""
    lam = make_partition(lam)
    hit = _JACK_B.get(lam)
    if hit is not None:
        return hit
    if not lam:
        out = PSPoly.one(B_RING.one)
    else:
        inner = jack_polynomial_b(lam[1:])
        u = B_RING.alpha * (-lam[0])
        out = creation_apply(inner, lam[0], u, B_RING)
    _JACK_B[lam] = out
    return out


def lift_pspoly(f: PSPoly, ring) -> PSPoly:
    return f.map_coeffs(ring.lift)


def jack_polynomial(lam: Partition, ring=ALPHA) -> PSPoly:
    """J_lam in the power-sum basis, coefficients in ``ring`` (Q(alpha) by default)."""
    f = jack_polynomial_b(lam)
    if isinstance(ring, LocRing) and ring.symbols == ("b",):
        return f
    return lift_pspoly(f, ring)


@dataclass
class JackTable:
    """Memo of Jack polynomials over one ring, optionally checked on insert."""

    ring: object = ALPHA
    verify: bool = False
    table: Dict[Partition, PSPoly] = field(default_factory=dict)

    def __getitem__(self, lam: Partition) -> PSPoly:
        lam = make_partition(lam)
        if lam not in self.table:
            f = jack_polynomial(lam, self.ring)
            if self.verify:
                rep = jack_verify(lam)
                if not rep.all_ok:
                    raise ArithmeticError(f"Jack polynomial {lam} fails verification: {rep}")
            self.table[lam] = f
        return self.table[lam]

    def build(self, n: int) -> "JackTable":
        for k in range(n + 1):
            for lam in partitions(k):
                self[lam]
        return self


def eigenvalue(lam: Partition, ring=ALPHA):
    acc = ring.zero
    for i, j in boxes(lam):
        acc = acc + ring.alpha * (j - 1) - (i - 1)
    return acc


def leading_coefficient(lam: Partition, ring=ALPHA):
    lt = conjugate(lam)
    acc = ring.one
    for i, j in boxes(lam):
        acc = acc * (ring.alpha * (lam[i - 1] - j) + (lt[j - 1] - i) + 1)
    return acc


def j_norm(lam: Partition, ring=ALPHA):
    lam = make_partition(lam)
    lt = conjugate(lam)
    acc = ring.one
    for i, j in boxes(lam):
        arm = lam[i - 1] - j
        leg = lt[j - 1] - i
        acc = acc * (ring.alpha * arm + leg + 1) * (ring.alpha * arm + leg + ring.alpha)
    return acc


@dataclass(frozen=True)
class JackReport:
    partition: Partition
    eigen_ok: bool
    triangular_ok: bool
    leading_coeff_ok: bool
    principal_ok: bool
    eigenvalue: object
    leading_coeff: object

    @property
    def all_ok(self) -> bool:
        return self.eigen_ok and self.triangular_ok and self.leading_coeff_ok and self.principal_ok


def jack_verify(lam: Partition) -> JackReport:
    lam = make_partition(lam)
    n = sum(lam)
    f = jack_polynomial_b(lam)
    ev = eigenvalue(lam, B_RING)
    eigen_ok = laplace_beltrami(f, B_RING) == f.scale(ev)
    mono = to_monomial(f, n) if n else {(): f[()]}
    triangular_ok = all(dominance_leq(nu, lam) for nu in mono)
    lead = leading_coefficient(lam, B_RING)
    leading_ok = mono.get(lam, 0) == lead
    ring = LocRing(("b", "u"))
    u = ring.gen("u")
    lhs = principal_eval(lift_pspoly(f, ring), u)
    rhs = ring.one
    for i, j in boxes(lam):
        rhs = rhs * (u + ring.alpha * (j - 1) - (i - 1))
    principal_ok = lhs == rhs
    return JackReport(lam, eigen_ok, triangular_ok, leading_ok, principal_ok,
                      ALPHA.lift(ev), ALPHA.lift(lead))


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------


def jack_character_b(mu: Partition, lam: Partition):
    mu = make_partition(mu)
    lam = make_partition(lam)
    extra = sum(lam) - sum(mu)
    if extra < 0:
        return B_RING.zero
    m1 = mu.count(1)
    key = mu + (1,) * extra
    return jack_polynomial_b(lam)[key] * comb(extra + m1, m1)


def jack_character(mu: Partition, lam: Partition):
    """theta_mu(lam) in Q(alpha)."""
    return ALPHA.lift(jack_character_b(mu, lam))


def normalized_character(mu: Partition, lam: Partition) -> RatFunc:
    """Ch_mu(lam) = alpha^{(l(mu) - |mu|)/2} z_mu theta_mu(lam), in Q(s)."""
    return _normalized_character(make_partition(mu), make_partition(lam))


@lru_cache(maxsize=None)
def _normalized_character(mu: Partition, lam: Partition) -> RatFunc:
    theta = SQRT.lift(jack_character_b(mu, lam))
    return theta * z_factor(mu) * SQRT.s ** (len(mu) - sum(mu))


# ---------------------------------------------------------------------------
# Young's formula at alpha = 1
# ---------------------------------------------------------------------------


def _perm_sign(p: Tuple[int, ...]) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _cycle_type(p: Tuple[int, ...]) -> Partition:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def _stabilizer(blocks: List[List[int]], n: int) -> List[Tuple[int, ...]]:
    perms = [tuple(range(n))]
    for block in blocks:
        nxt = []
        for base in perms:
            for img in permutations(block):
                q = list(base)
                for src, dst in zip(block, img):
                    q[src] = dst
                nxt.append(tuple(q))
        perms = nxt
    return perms


@dataclass(frozen=True)
class YoungReport:
    polynomial: PSPoly
    cycle_sign_polynomial: PSPoly  # same sum with (-1)^{#cycles}
    note: str


def young_oracle(lam: Partition, report: bool = False):
    """Sum over column and row stabilizers of sign(column perm) p_{cycle type of the product}."""
    lam = make_partition(lam)
    n = sum(lam)
    if n > LIMITS.young_max:
        raise ValueError(f"young_oracle is limited to |lambda| <= {LIMITS.young_max}")
    cells: Dict[Tuple[int, int], int] = {}
    for idx, box in enumerate(boxes(lam)):
        cells[box] = idx
    rows = [[cells[(i, j)] for j in range(1, lam[i - 1] + 1)] for i in range(1, len(lam) + 1)]
    lt = conjugate(lam)
    cols = [[cells[(i, j)] for i in range(1, lt[j - 1] + 1)] for j in range(1, len(lt) + 1)]
    col_perms = _stabilizer(cols, n)
    row_perms = _stabilizer(rows, n)
    acc: Dict[Partition, int] = {}
    acc_cycles: Dict[Partition, int] = {}
    for c in col_perms:
        sgn = _perm_sign(c)
        csign = (-1) ** len(_cycle_type(c))
        for r in row_perms:
            prod = tuple(c[r[i]] for i in range(n))
            ct = _cycle_type(prod)
            acc[ct] = acc.get(ct, 0) + sgn
            acc_cycles[ct] = acc_cycles.get(ct, 0) + csign
    poly = PSPoly({k: Fraction(v) for k, v in acc.items()})
    if not report:
        return poly
    alt = PSPoly({k: Fraction(v) for k, v in acc_cycles.items()})
    return YoungReport(poly, alt, "permutation sign used; the cycle-count sign differs by (-1)^|lambda|")


def specialize_alpha(f: PSPoly, value) -> PSPoly:
    """Substitute a rational alpha into a Q(alpha) or Q[b] polynomial."""
    def one(c):
        if isinstance(c, MultiPolyLoc):
            return substitute(c, "b", Fraction(value) - 1).constant_term()
        return substitute(c, "alpha", value)
    return f.map_coeffs(one)
