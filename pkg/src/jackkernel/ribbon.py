"""Excursions, ribbon paths and the character expansions they produce.

Steps are integers: +n is an up step of degree n, -n a down step of degree n,
0 a horizontal step.  A ribbon path is a tuple of excursions (sites) read left to
right in operator order, together with pairings ``(i, j)`` of global positions
where step i is a down step of degree n and step j > i an up step of degree n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .arith import SQRT, UniPoly
from .jack import jack_polynomial_b, lift_pspoly, normalized_character
from .spectral import alpha_boolean, alpha_moments, apply_ns
from .symfun import Partition, PSPoly, deriv_p, mul_p, partitions, sort_partition

Excursion = Tuple[int, ...]
GammaPoly = UniPoly  # integer polynomial in gamma

GAMMA_ONE = UniPoly("gamma", (1,))
GAMMA_ZERO = UniPoly("gamma")


@dataclass(frozen=True)
class RibbonPath:
    sites: Tuple[Excursion, ...]
    pairings: FrozenSet[Tuple[int, int]]

    @property
    def steps(self) -> Tuple[int, ...]:
        return tuple(x for site in self.sites for x in site)

    def heights(self) -> List[int]:
        """Height before each step."""
        out = []
        for site in self.sites:
            h = 0
            for x in site:
                out.append(h)
                h += x
        return out

    def sort_key(self):
        return (self.sites, tuple(sorted(self.pairings)))


# ---------------------------------------------------------------------------
# Excursions
# ---------------------------------------------------------------------------


def is_excursion(steps: Sequence[int]) -> bool:
    h = 0
    for x in steps:
        if x == 0 and h == 0:
            return False
        h += x
        if h < 0:
            return False
    return h == 0


def enumerate_excursions(ell: int, dmax: int) -> List[Excursion]:
    out: List[Excursion] = []

    def rec(prefix: List[int], h: int, left: int) -> None:
        if left == 0:
            if h == 0 and prefix:
                out.append(tuple(prefix))
            return
        if h > left * dmax:
            return
        for d in range(-min(h, dmax), dmax + 1):
            if d == 0 and h == 0:
                continue
            prefix.append(d)
            rec(prefix, h + d, left - 1)
            prefix.pop()

    if ell > 0:
        rec([], 0, ell)
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------
# Ribbon paths
# ---------------------------------------------------------------------------


def _enumerate_ribbons(lengths: Tuple[int, ...], touch_only_at_ends: bool, max_free_up: int) -> List[RibbonPath]:
    total = sum(lengths)
    ends = set()
    acc = 0
    for length in lengths:
        acc += length
        ends.add(acc)  # global index just after the last step of a site
    out: List[RibbonPath] = []
    steps: List[int] = []
    pairs: List[Tuple[int, int]] = []

    def rec(pos: int, h: int, open_downs: Tuple[Tuple[int, int], ...]) -> None:
        if pos == total:
            if h == 0 and not open_downs:
                sites = []
                start = 0
                for length in lengths:
                    sites.append(tuple(steps[start:start + length]))
                    start += length
                out.append(RibbonPath(tuple(sites), frozenset(pairs)))
            return
        if len(open_downs) > total - pos:
            return
        after = pos + 1
        site_end = after in ends

        def ok(nh: int) -> bool:
            if nh < 0:
                return False
            if site_end:
                return nh == 0
            if touch_only_at_ends and nh == 0:
                return False
            return True

        # horizontal
        if h > 0 and ok(h):
            steps.append(0)
            rec(after, h, open_downs)
            steps.pop()
        # unpaired up steps
        for d in range(1, max_free_up + 1):
            if ok(h + d):
                steps.append(d)
                rec(after, h + d, open_downs)
                steps.pop()
        # up steps closing an earlier down of the same degree
        for idx, (p, d) in enumerate(open_downs):
            if ok(h + d):
                steps.append(d)
                pairs.append((p, pos))
                rec(after, h + d, open_downs[:idx] + open_downs[idx + 1:])
                pairs.pop()
                steps.pop()
        # down steps, unpaired or left open for a later up step
        for d in range(1, h + 1):
            if ok(h - d):
                steps.append(-d)
                rec(after, h - d, open_downs)
                rec(after, h - d, open_downs + ((pos, d),))
                steps.pop()

    rec(0, 0, ())
    return sorted(out, key=RibbonPath.sort_key)


@lru_cache(maxsize=None)
def _luka_cached(lengths: Tuple[int, ...], touches: bool) -> Tuple[RibbonPath, ...]:
    paths = _enumerate_ribbons(lengths, touches, 1)
    for path in paths:
        mu, _ = ribbon_weight(path)
        n_h = sum(1 for x in path.steps if x == 0)
        if sum(mu) + len(mu) != sum(lengths) - n_h - 2 * len(path.pairings):
            raise ArithmeticError(f"size relation violated by {path}")
    return tuple(paths)


def enumerate_luka_ribbon(lengths: Sequence[int], require_k_touches: bool = False) -> List[RibbonPath]:
    lengths = tuple(lengths)
    if any(x < 2 for x in lengths):
        raise ValueError("every site needs length at least 2")
    return list(_luka_cached(lengths, require_k_touches))


def enumerate_general_ribbon(lengths: Sequence[int], max_up: int) -> List[RibbonPath]:
    """Ribbon paths touching the axis only at site ends, with unpaired up degrees up to ``max_up``."""
    return _enumerate_ribbons(tuple(lengths), True, max_up)


def ribbon_weight(path: RibbonPath) -> Tuple[Partition, GammaPoly]:
    steps = path.steps
    heights = path.heights()
    paired = {i for pair in path.pairings for i in pair}
    w = 1
    for i, _ in path.pairings:
        w *= -steps[i]
    n_h = 0
    poly = UniPoly("gamma", (w,))
    for x, h in zip(steps, heights):
        if x == 0:
            n_h += 1
            poly = poly * UniPoly("gamma", (0, -h))
    mu = sort_partition(-x for i, x in enumerate(steps) if x < 0 and i not in paired)
    return mu, poly


def _free_ups(path: RibbonPath) -> Partition:
    paired = {i for pair in path.pairings for i in pair}
    return sort_partition(x for i, x in enumerate(path.steps) if x > 0 and i not in paired)


# ---------------------------------------------------------------------------
# Expansions
# ---------------------------------------------------------------------------


def product_expansion(lengths: Sequence[int], mode: str = "boolean") -> Dict[Partition, GammaPoly]:
    if mode not in ("boolean", "moment"):
        raise ValueError(f"unknown mode {mode!r}")
    out: Dict[Partition, GammaPoly] = {}
    for path in enumerate_luka_ribbon(lengths, mode == "boolean"):
        mu, w = ribbon_weight(path)
        out[mu] = out.get(mu, GAMMA_ZERO) + w
    return {k: v for k, v in sorted(out.items()) if v}


def gamma_to_s(p: GammaPoly):
    return p(SQRT.gamma) * SQRT.one


def evaluate_expansion(exp: Dict[Partition, GammaPoly], lam: Partition):
    acc = SQRT.zero
    for mu, c in exp.items():
        acc = acc + gamma_to_s(c) * normalized_character(mu, lam)
    return acc


def expansion_identity_check(lengths: Sequence[int], mode: str, lam: Partition) -> bool:
    """Evaluate the expansion on lam and compare with the product of cumulants or moments."""
    lhs = evaluate_expansion(product_expansion(lengths, mode), lam)
    rhs = SQRT.one
    for ell in lengths:
        if mode == "boolean":
            rhs = rhs * alpha_boolean(lam, ell)
        else:
            rhs = rhs * alpha_moments(lam, ell)[ell]
    return lhs == rhs


MomentMonomial = Tuple[int, ...]  # (k_1 >= k_2 >= ...) meaning M_{k_1} M_{k_2} ...


class NonIntegralError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def _ch_in_moments(mu: Partition) -> Tuple[Tuple[MomentMonomial, Tuple[int, ...]], ...]:
    top = tuple(p + 1 for p in mu)
    forward = product_expansion(top, "moment")
    if forward.get(mu) != GAMMA_ONE:
        raise ArithmeticError(f"leading coefficient of {mu} is not 1")
    out: Dict[MomentMonomial, GammaPoly] = {top: GAMMA_ONE}
    for rho, a in forward.items():
        if rho == mu:
            continue
        if sum(rho) >= sum(mu):
            raise ArithmeticError(f"expansion of {mu} is not triangular (found {rho})")
        for mono, c in ch_in_moments(rho).items():
            out[mono] = out.get(mono, GAMMA_ZERO) - a * c
    for mono, c in out.items():
        if not c.is_integral():
            raise NonIntegralError(f"coefficient {c} of {mono} is not in Z[gamma]")
    return tuple((k, tuple(int(x) for x in v.coeffs)) for k, v in sorted(out.items()) if v)


def ch_in_moments(mu: Partition) -> Dict[MomentMonomial, GammaPoly]:
    """Ch_mu as a polynomial in the moments with Z[gamma] coefficients."""
    return {k: UniPoly("gamma", v) for k, v in _ch_in_moments(tuple(mu))}


def moments_round_trip(mu: Partition) -> bool:
    """Expanding every moment monomial back into characters must give Ch_mu."""
    total: Dict[Partition, GammaPoly] = {}
    for mono, c in ch_in_moments(mu).items():
        for rho, a in product_expansion(mono, "moment").items():
            total[rho] = total.get(rho, GAMMA_ZERO) + c * a
    total = {k: v for k, v in total.items() if v}
    return total == {tuple(mu): GAMMA_ONE}


# ---------------------------------------------------------------------------
# Operator form of the ribbon sum
# ---------------------------------------------------------------------------


def _path_operator(path: RibbonPath, f: PSPoly) -> PSPoly:
    """weight * (prod p_up / s) (prod s n d/dp_n) f, normally ordered."""
    mu, w = ribbon_weight(path)
    ups = _free_ups(path)
    g = f
    for n in mu:
        g = deriv_p(g, n).scale(n)
        if not g:
            return g
    for n in ups:
        g = mul_p(g, n)
    return g.scale(gamma_to_s(w) * SQRT.s ** (len(mu) - len(ups)))


def ns_combi_check(lengths: Sequence[int], f: PSPoly) -> bool:
    f = f.map_coeffs(SQRT.lift)
    weight = max((sum(lam) for lam in f.terms), default=0)
    lhs = PSPoly()
    for path in enumerate_general_ribbon(lengths, weight + sum(lengths)):
        lhs = lhs + _path_operator(path, f)
    rhs = f
    for ell in reversed(list(lengths)):
        rhs = apply_ns(rhs, ell - 2)
    return lhs == rhs
