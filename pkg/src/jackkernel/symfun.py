"""Partitions, the power-sum algebra and the catalytic space.

A partition is a plain tuple of positive integers in weakly decreasing order.
``PSPoly`` maps partitions to scalars (the key ``lam`` stands for ``p_lam``);
``CatPoly`` maps ``(i, lam)`` to scalars (the key stands for ``y_i p_lam``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from .arith import ALPHA, Number

Partition = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and return a partition; parts must be positive and weakly decreasing."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def sort_partition(parts: Iterable[int]) -> Partition:
    return tuple(sorted((x for x in parts if x), reverse=True))


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order ([n] first)."""
    if n == 0:
        return ((),)

    def gen(rem: int, cap: int) -> Iterator[Partition]:
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def partitions_up_to(n: int) -> List[Partition]:
    return [lam for k in range(n + 1) for lam in partitions(k)]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def multiplicities(lam: Partition) -> Dict[int, int]:
    return dict(Counter(lam))


@lru_cache(maxsize=None)
def z_factor(lam: Partition) -> int:
    out = 1
    for i, m in Counter(lam).items():
        out *= factorial(m) * i ** m
    return out


@dataclass(frozen=True)
class PartitionStats:
    z: int
    conjugate: Partition
    multiplicities: Tuple[int, ...]  # m_1, m_2, ..., m_{max part}
    length: int
    size: int


def partition_stats(lam: Partition) -> PartitionStats:
    lam = make_partition(lam)
    c = Counter(lam)
    mult = tuple(c.get(i, 0) for i in range(1, (lam[0] if lam else 0) + 1))
    return PartitionStats(z_factor(lam), conjugate(lam), mult, len(lam), sum(lam))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    if sum(mu) != sum(lam):
        return False
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def boxes(lam: Partition) -> Iterator[Tuple[int, int]]:
    """Boxes (row, column), 1-indexed."""
    for i, row in enumerate(lam, 1):
        for j in range(1, row + 1):
            yield i, j


def alpha_content(i: int, j: int, ring=ALPHA):
    if i < 1 or j < 1:
        raise ValueError("box coordinates start at 1")
    return ring.alpha * (j - 1) - (i - 1)


@lru_cache(maxsize=None)
def add_part(lam: Partition, k: int) -> Partition:
    if k <= 0:
        return lam
    return sort_partition(lam + (k,))


@lru_cache(maxsize=None)
def remove_part(lam: Partition, k: int) -> Partition:
    i = lam.index(k)
    return lam[:i] + lam[i + 1:]


def union(lam: Partition, mu: Partition) -> Partition:
    return sort_partition(lam + mu)


# ---------------------------------------------------------------------------
# Sparse linear combinations
# ---------------------------------------------------------------------------


def _accumulate(out: dict, key, value) -> None:
    cur = out.get(key)
    if cur is None:
        if value:
            out[key] = value
    else:
        cur = cur + value
        if cur:
            out[key] = cur
        else:
            del out[key]


class _Sparse:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(out, k, v)
        return self._raw(out)

    def __neg__(self):
        return self._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return self._raw({})
        out = {}
        for k, v in self.terms.items():
            w = v * c
            if w:
                out[k] = w
        return self._raw(out)

    def map_coeffs(self, fn: Callable):
        out = {}
        for k, v in self.terms.items():
            w = fn(v)
            if w:
                out[k] = w
        return self._raw(out)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(v == other.terms[k] for k, v in self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, key):
        return self.terms.get(key, 0)


class PSPoly(_Sparse):
    """Sparse symmetric function in the power-sum basis."""

    @classmethod
    def one(cls, c=1) -> "PSPoly":
        return cls({(): c})

    @classmethod
    def p(cls, lam: Iterable[int], c=1) -> "PSPoly":
        return cls({sort_partition(lam): c})

    def __mul__(self, other):
        if isinstance(other, PSPoly):
            out: dict = {}
            for ka, va in self.terms.items():
                for kb, vb in other.terms.items():
                    _accumulate(out, union(ka, kb), va * vb)
            return PSPoly._raw(out)
        return self.scale(other)

    def weights(self) -> set:
        return {sum(k) for k in self.terms}

    def is_homogeneous(self, n: int | None = None) -> bool:
        w = self.weights()
        if not w:
            return True
        return len(w) == 1 and (n is None or n in w)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def __repr__(self):
        if not self.terms:
            return "PSPoly(0)"
        return "PSPoly(" + " + ".join(f"({v})*p{list(k)}" for k, v in self.sorted_terms()) + ")"


class CatPoly(_Sparse):
    """Element of the catalytic space: keys ``(i, lam)`` mean ``y_i p_lam``."""

    @classmethod
    def y(cls, i: int, lam: Iterable[int] = (), c=1) -> "CatPoly":
        return cls({(i, sort_partition(lam)): c})

    @classmethod
    def from_pspoly(cls, f: PSPoly, i: int = 0) -> "CatPoly":
        return cls._raw({(i, k): v for k, v in f.terms.items()})

    def weights(self) -> set:
        return {i + sum(lam) for i, lam in self.terms}

    def __repr__(self):
        if not self.terms:
            return "CatPoly(0)"
        return "CatPoly(" + " + ".join(f"({v})*y{i}p{list(l)}" for (i, l), v in sorted(self.terms.items())) + ")"


class BiPSPoly(_Sparse):
    """Two power-sum alphabets: keys ``(lam, mu)`` mean ``p_lam q_mu``."""

    def apply_p(self, op: Callable[[PSPoly], PSPoly]) -> "BiPSPoly":
        by_q: Dict[Partition, dict] = {}
        for (lp, lq), v in self.terms.items():
            by_q.setdefault(lq, {})[lp] = v
        out: dict = {}
        for lq, part in by_q.items():
            for lp, v in op(PSPoly._raw(part)).terms.items():
                _accumulate(out, (lp, lq), v)
        return BiPSPoly._raw(out)

    def mul_q(self, k: int) -> "BiPSPoly":
        return BiPSPoly._raw({(lp, add_part(lq, k)): v for (lp, lq), v in self.terms.items()})

    def deriv_q(self, k: int) -> "BiPSPoly":
        out: dict = {}
        for (lp, lq), v in self.terms.items():
            m = lq.count(k)
            if m:
                _accumulate(out, (lp, remove_part(lq, k)), v * m)
        return BiPSPoly._raw(out)

    def __repr__(self):
        return f"BiPSPoly({self.terms!r})"


# ---------------------------------------------------------------------------
# Operators on the power-sum algebra
# ---------------------------------------------------------------------------


def mul_p(f: PSPoly, k: int) -> PSPoly:
    if k < 1:
        raise ValueError("power-sum index must be positive")
    return PSPoly._raw({add_part(lam, k): v for lam, v in f.terms.items()})


def deriv_p(f: PSPoly, k: int) -> PSPoly:
    if k < 1:
        raise ValueError("power-sum index must be positive")
    out: dict = {}
    for lam, v in f.terms.items():
        m = lam.count(k)
        if m:
            _accumulate(out, remove_part(lam, k), v * m)
    return PSPoly._raw(out)


def basis_ops(f: PSPoly, k: int, which: str) -> PSPoly:
    if which == "mul_p":
        return mul_p(f, k)
    if which == "deriv_p":
        return deriv_p(f, k)
    raise ValueError(f"unknown basis operation {which!r}")


def euler_operator(f: PSPoly) -> PSPoly:
    """Sum over k of k p_k d/dp_k, i.e. multiplication by the weight."""
    return PSPoly._raw({lam: v * sum(lam) for lam, v in f.terms.items() if lam})


@lru_cache(maxsize=None)
def _lb_terms(lam: Partition) -> Tuple[Tuple[Partition, int, int], ...]:
    """D_alpha on p_lam as triples (target, coeff of alpha, constant coeff)."""
    acc: Dict[Partition, List[Fraction]] = {}

    def put(key, a, c):
        slot = acc.setdefault(key, [Fraction(0), Fraction(0)])
        slot[0] += a
        slot[1] += c

    n = len(lam)
    # joining two parts: alpha * sum_{a<b} lam_a lam_b
    for a in range(n):
        for b in range(a + 1, n):
            rest = lam[:a] + lam[a + 1:b] + lam[b + 1:]
            put(add_part(rest, lam[a] + lam[b]), lam[a] * lam[b], 0)
    # cutting a part: (1/2) * sum over ordered splits, times the part size
    for a in range(n):
        rest = lam[:a] + lam[a + 1:]
        k = lam[a]
        for i in range(1, k):
            put(add_part(add_part(rest, i), k - i), 0, Fraction(k, 2))
    # diagonal: (alpha - 1)/2 * sum lam_a (lam_a - 1)
    d = Fraction(sum(x * (x - 1) for x in lam), 2)
    if d:
        put(lam, d, -d)
    return tuple((k, a, c) for k, (a, c) in acc.items() if a or c)


def laplace_beltrami(f: PSPoly, ring=ALPHA) -> PSPoly:
    """Apply the Laplace-Beltrami operator; ``ring`` supplies alpha."""
    alpha = ring.alpha
    out: dict = {}
    for lam, v in f.terms.items():
        for key, a, c in _lb_terms(lam):
            _accumulate(out, key, v * (alpha * a + c))
    return PSPoly._raw(out)


# ---------------------------------------------------------------------------
# Catalytic operators
# ---------------------------------------------------------------------------


def y_plus(g: CatPoly) -> CatPoly:
    return CatPoly._raw({(i + 1, lam): v for (i, lam), v in g.terms.items()})


def gamma_y(g: CatPoly, ring=ALPHA) -> CatPoly:
    """The catalytic operator that raises total weight by one; ``ring`` supplies b."""
    b = ring.b
    one_plus_b = b + 1
    out: dict = {}
    for (m, lam), v in g.terms.items():
        for part, mult in Counter(lam).items():
            _accumulate(out, (part + m + 1, remove_part(lam, part)), v * one_plus_b * (part * mult))
        if m >= 1:
            for i in range(1, m + 1):
                _accumulate(out, (i, add_part(lam, m + 1 - i)), v)
            _accumulate(out, (m + 1, lam), v * b * m)
    return CatPoly._raw(out)


def theta_y(g: CatPoly) -> PSPoly:
    out: dict = {}
    for (m, lam), v in g.terms.items():
        if m >= 1:
            _accumulate(out, add_part(lam, m), v)
    return PSPoly._raw(out)


# ---------------------------------------------------------------------------
# Evaluations and basis change
# ---------------------------------------------------------------------------


def principal_eval(f: PSPoly, u):
    """Set every p_i to ``u``."""
    acc = 0
    for lam, v in f.terms.items():
        acc = acc + v * u ** len(lam)
    return acc


@lru_cache(maxsize=None)
def power_to_monomial(mu: Partition, nu: Partition) -> int:
    """Coefficient of m_nu in p_mu: ways to distribute the parts of mu onto the rows of nu."""
    if sum(mu) != sum(nu):
        return 0

    def count(i: int, rem: Tuple[int, ...]) -> int:
        if i == len(mu):
            return 1 if not any(rem) else 0
        total = 0
        for j, r in enumerate(rem):
            if r >= mu[i]:
                total += count(i + 1, rem[:j] + (r - mu[i],) + rem[j + 1:])
        return total

    return count(0, tuple(nu))


def to_monomial(f: PSPoly, n: int) -> Dict[Partition, object]:
    if not f.is_homogeneous(n):
        raise ValueError(f"expected a homogeneous polynomial of weight {n}")
    out: dict = {}
    for mu, v in f.terms.items():
        for nu in partitions(n):
            c = power_to_monomial(mu, nu)
            if c:
                _accumulate(out, nu, v * c)
    return out


def from_monomial(m: Mapping[Partition, object], n: int) -> PSPoly:
    """Inverse of ``to_monomial`` on weight n (triangular solve, rational coefficients)."""
    # p_mu only reaches m_nu for nu coarser than mu, so solve finest first
    rest = {k: v for k, v in m.items() if v}
    out: dict = {}
    order = sorted(partitions(n), key=lambda lam: -len(lam))
    for mu in order:
        c = rest.get(mu)
        if not c:
            continue
        lead = power_to_monomial(mu, mu)
        coeff = c * Fraction(1, lead)
        out[mu] = coeff
        for nu in partitions(n):
            k = power_to_monomial(mu, nu)
            if k:
                _accumulate(rest, nu, -(coeff * k))
    if rest:
        raise ArithmeticError("monomial expansion is not symmetric")
    return PSPoly._raw(out)
