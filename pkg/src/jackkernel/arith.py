"""Exact coefficient rings.

Three concrete rings cover every computation in the package:

* ``RatFunc`` with symbol ``"alpha"``: the field Q(alpha).
* ``RatFunc`` with symbol ``"s"``: the field Q(s) where alpha = s**2.  Half-integer
  powers of alpha live here; gamma = (1 - s**2)/s is derived, never stored.
* ``MultiPolyLoc``: polynomials over Q in b, s_i, r_i, u, ... localized at 1 + b.
  The only denominators are (1 + b)**e and integers.

Rationals are ``fractions.Fraction``.  All values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

BigRat = Fraction
Number = Union[int, Fraction]


class ArithError(ArithmeticError):
    pass


class RingMismatchError(ArithError, TypeError):
    pass


class InexactDivisionError(ArithError):
    pass


class PoleError(ArithError, ZeroDivisionError):
    pass


def _is_number(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------

UNI_SYMBOLS = ("alpha", "s", "gamma")


class UniPoly:
    """Dense univariate polynomial over Q; ``coeffs[i]`` multiplies ``symbol**i``."""

    __slots__ = ("symbol", "coeffs")

    def __init__(self, symbol: str, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.symbol = symbol
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def gen(cls, symbol: str) -> "UniPoly":
        return cls(symbol, (0, 1))

    @classmethod
    def const(cls, symbol: str, c: Number) -> "UniPoly":
        return cls(symbol, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def _check(self, other: "UniPoly") -> None:
        if other.symbol != self.symbol:
            raise RingMismatchError(f"{self.symbol!r} vs {other.symbol!r}")

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            self._check(other)
            return other
        if _is_number(other):
            return UniPoly(self.symbol, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly(self.symbol, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.symbol, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(self.symbol)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(self.symbol, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly(self.symbol, (1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: Number) -> "UniPoly":
        return UniPoly(self.symbol, [c * x for x in self.coeffs])

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.coeffs
        if len(rem) < len(d):
            return UniPoly(self.symbol), self
        q = [Fraction(0)] * (len(rem) - len(d) + 1)
        inv = 1 / d[-1]
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + len(d) - 1] * inv
            q[k] = c
            if c:
                for j, y in enumerate(d):
                    rem[k + j] -= c * y
        return UniPoly(self.symbol, q), UniPoly(self.symbol, rem[: len(d) - 1])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead())

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(self.symbol, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other):
        if _is_number(other):
            other = UniPoly(self.symbol, (other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.symbol == other.symbol and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.symbol, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self):
        return f"UniPoly({self.symbol!r}, {format_univariate(self)!r})"

    def __str__(self):
        return format_univariate(self)


def format_univariate(p: UniPoly) -> str:
    return _format_sparse({(i,): c for i, c in enumerate(p.coeffs) if c}, (p.symbol,))


# ---------------------------------------------------------------------------
# Rational functions in one variable
# ---------------------------------------------------------------------------


class RatFunc:
    """Element of Q(x): reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None, _reduced: bool = False):
        if den is None:
            den = UniPoly(num.symbol, (1,))
        if num.symbol != den.symbol:
            raise RingMismatchError(f"{num.symbol!r} vs {den.symbol!r}")
        if den.is_zero():
            raise PoleError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = UniPoly(num.symbol, (1,))
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num = num.divmod(g)[0]
                    den = den.divmod(g)[0]
                lc = den.lead()
                if lc != 1:
                    num = num.scale(1 / lc)
                    den = den.scale(1 / lc)
        self.num = num
        self.den = den

    @property
    def symbol(self) -> str:
        return self.num.symbol

    @classmethod
    def gen(cls, symbol: str) -> "RatFunc":
        return cls(UniPoly.gen(symbol), _reduced=True)

    @classmethod
    def const(cls, symbol: str, c: Number) -> "RatFunc":
        return cls(UniPoly(symbol, (c,)), _reduced=True)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.symbol != self.symbol:
                raise RingMismatchError(f"Q({self.symbol}) vs Q({other.symbol})")
            return other
        if _is_number(other):
            return RatFunc.const(self.symbol, other)
        if isinstance(other, (UniPoly, MultiPolyLoc)):
            raise RingMismatchError(f"cannot combine RatFunc with {type(other).__name__}")
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_number(other):
            if other == 0:
                return RatFunc(UniPoly(self.symbol), _reduced=True)
            return RatFunc(self.num.scale(other), self.den, _reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if _is_number(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RatFunc(self.num.scale(Fraction(1) / other), self.den, _reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        if _is_number(other):
            other = RatFunc.const(self.symbol, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def evaluate(self, x):
        d = self.den(x)
        if d == 0:
            raise PoleError(f"pole of {self} at {self.symbol}={x}")
        return self.num(x) / d

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


# ---------------------------------------------------------------------------
# Multivariate polynomials localized at 1 + b
# ---------------------------------------------------------------------------

Exponent = Tuple[int, ...]


class MultiPolyLoc:
    """``numerator / (1 + b)**e`` with a sparse numerator over Q.

    ``e`` is kept minimal: when ``e > 0`` the numerator is not divisible by 1 + b.
    """

    __slots__ = ("symbols", "terms", "e", "_hash")

    def __init__(self, symbols: Sequence[str], terms: Mapping[Exponent, Number] | None = None, e: int = 0,
                 _clean: bool = False):
        self.symbols: Tuple[str, ...] = tuple(symbols)
        if _clean:
            t = terms  # type: ignore[assignment]
        else:
            t = {}
            n = len(self.symbols)
            for k, v in (terms or {}).items():
                if len(k) != n:
                    raise ValueError(f"exponent {k} does not match symbols {self.symbols}")
                if v:
                    t[tuple(k)] = Fraction(v)
        if e < 0:
            raise ValueError("negative denominator exponent")
        if e and "b" not in self.symbols:
            raise RingMismatchError("denominator (1+b)^e needs symbol 'b'")
        self.terms: Dict[Exponent, Fraction] = t  # type: ignore[assignment]
        self.e = e
        self._hash = None
        if e:
            self._reduce()

    # construction ---------------------------------------------------------
    @classmethod
    def zero(cls, symbols: Sequence[str]) -> "MultiPolyLoc":
        return cls(symbols, {}, _clean=True)

    @classmethod
    def const(cls, symbols: Sequence[str], c: Number) -> "MultiPolyLoc":
        c = Fraction(c)
        return cls(symbols, {(0,) * len(symbols): c} if c else {}, _clean=True)

    @classmethod
    def gen(cls, symbols: Sequence[str], name: str) -> "MultiPolyLoc":
        symbols = tuple(symbols)
        i = symbols.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(symbols)))
        return cls(symbols, {exp: Fraction(1)}, _clean=True)

    # normalization --------------------------------------------------------
    def _bidx(self) -> int:
        return self.symbols.index("b")

    def _divisible_by_1pb(self, terms) -> bool:
        bi = self._bidx()
        groups: Dict[Exponent, Fraction] = {}
        for k, v in terms.items():
            rest = k[:bi] + k[bi + 1:]
            groups[rest] = groups.get(rest, 0) + (v if k[bi] % 2 == 0 else -v)
        return all(v == 0 for v in groups.values())

    def _reduce(self) -> None:
        while self.e and self.terms and self._divisible_by_1pb(self.terms):
            self.terms = _div_1pb(self.terms, self._bidx())
            self.e -= 1
        if not self.terms:
            self.e = 0

    # helpers ----------------------------------------------------------------
    def _check(self, other: "MultiPolyLoc") -> None:
        if other.symbols != self.symbols:
            raise RingMismatchError(f"symbols {self.symbols} vs {other.symbols}")

    def _coerce(self, other):
        if isinstance(other, MultiPolyLoc):
            self._check(other)
            return other
        if _is_number(other):
            return MultiPolyLoc.const(self.symbols, other)
        if isinstance(other, (RatFunc, UniPoly)):
            raise RingMismatchError(f"cannot combine MultiPolyLoc with {type(other).__name__}")
        return NotImplemented

    def _one_plus_b_pow(self, k: int) -> Dict[Exponent, Fraction]:
        bi = self._bidx()
        n = len(self.symbols)
        out = {}
        c = 1
        for j in range(k + 1):
            exp = tuple(j if i == bi else 0 for i in range(n))
            out[exp] = Fraction(c)
            c = c * (k - j) // (j + 1)
        return out

    @staticmethod
    def _mul_terms(a, b) -> Dict[Exponent, Fraction]:
        out: Dict[Exponent, Fraction] = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                s = out.get(k)
                v = va * vb
                if s is None:
                    out[k] = v
                else:
                    s += v
                    if s:
                        out[k] = s
                    else:
                        del out[k]
        return out

    def _lifted(self, e: int) -> Dict[Exponent, Fraction]:
        if e == self.e:
            return self.terms
        return self._mul_terms(self.terms, self._one_plus_b_pow(e - self.e))

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        e = max(self.e, other.e)
        a = self._lifted(e)
        out = dict(a)
        for k, v in other._lifted(e).items():
            s = out.get(k)
            if s is None:
                out[k] = v
            else:
                s += v
                if s:
                    out[k] = s
                else:
                    del out[k]
        return MultiPolyLoc(self.symbols, out, e, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolyLoc(self.symbols, {k: -v for k, v in self.terms.items()}, self.e, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_number(other):
            if not other:
                return MultiPolyLoc.zero(self.symbols)
            c = Fraction(other)
            return MultiPolyLoc(self.symbols, {k: v * c for k, v in self.terms.items()}, self.e, _clean=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # product of reduced fractions is reduced: 1+b is prime
        return MultiPolyLoc(self.symbols, self._mul_terms(self.terms, other.terms), self.e + other.e, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = MultiPolyLoc.const(self.symbols, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def div_one_plus_b(self, k: int = 1) -> "MultiPolyLoc":
        return MultiPolyLoc(self.symbols, dict(self.terms), self.e + k, _clean=True)

    def __truediv__(self, other):
        if _is_number(other):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div_exact(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div_exact(other, self)

    def __eq__(self, other):
        if _is_number(other):
            other = MultiPolyLoc.const(self.symbols, other)
        if not isinstance(other, MultiPolyLoc):
            return NotImplemented
        return self.symbols == other.symbols and self.e == other.e and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.symbols, self.e, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # structure ----------------------------------------------------------------
    def is_polynomial(self) -> bool:
        return self.e == 0

    def is_integral(self) -> bool:
        return self.e == 0 and all(v.denominator == 1 for v in self.terms.values())

    def degree_in(self, names: Iterable[str]) -> int:
        idx = [self.symbols.index(n) for n in names]
        return max((sum(k[i] for i in idx) for k in self.terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.symbols), Fraction(0))

    def extend(self, symbols: Sequence[str]) -> "MultiPolyLoc":
        """Embed into a ring with a superset of symbols."""
        symbols = tuple(symbols)
        if symbols == self.symbols:
            return self
        pos = [symbols.index(s) for s in self.symbols]
        n = len(symbols)
        out = {}
        for k, v in self.terms.items():
            exp = [0] * n
            for p, x in zip(pos, k):
                exp[p] = x
            out[tuple(exp)] = v
        return MultiPolyLoc(symbols, out, self.e, _clean=True)

    def restrict(self, symbols: Sequence[str]) -> "MultiPolyLoc":
        """Drop symbols that do not occur (inverse of ``extend``)."""
        symbols = tuple(symbols)
        pos = [self.symbols.index(s) for s in symbols]
        keep = set(pos)
        out = {}
        for k, v in self.terms.items():
            if any(x for i, x in enumerate(k) if i not in keep):
                raise ValueError("restriction would drop an occurring symbol")
            out[tuple(k[p] for p in pos)] = v
        return MultiPolyLoc(symbols, out, self.e, _clean=True)

    def permute(self, mapping: Mapping[str, str]) -> "MultiPolyLoc":
        """Rename symbols by a permutation of the symbol set."""
        new_pos = [self.symbols.index(mapping.get(s, s)) for s in self.symbols]
        out = {}
        for k, v in self.terms.items():
            exp = [0] * len(k)
            for i, x in enumerate(k):
                exp[new_pos[i]] = x
            out[tuple(exp)] = v
        return MultiPolyLoc(self.symbols, out, self.e, _clean=True)

    def numerator(self) -> "MultiPolyLoc":
        return MultiPolyLoc(self.symbols, dict(self.terms), 0, _clean=True)

    def homogeneous_part(self, names: Iterable[str], degree: int) -> "MultiPolyLoc":
        idx = [self.symbols.index(n) for n in names]
        out = {k: v for k, v in self.terms.items() if sum(k[i] for i in idx) == degree}
        return MultiPolyLoc(self.symbols, out, self.e)

    def coefficient(self, name: str, power: int) -> "MultiPolyLoc":
        i = self.symbols.index(name)
        out = {}
        for k, v in self.terms.items():
            if k[i] == power:
                out[k[:i] + (0,) + k[i + 1:]] = v
        return MultiPolyLoc(self.symbols, out, self.e)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))

    def __repr__(self):
        return f"MultiPolyLoc({self})"

    def __str__(self):
        num = _format_sparse(self.terms, self.symbols)
        if not self.e:
            return num
        den = "(b + 1)" if self.e == 1 else f"(b + 1)^{self.e}"
        return f"({num})/{den}"


def _div_1pb(terms: Mapping[Exponent, Fraction], bi: int) -> Dict[Exponent, Fraction]:
    """Exact division of a numerator by (1 + b), column by column in b."""
    cols: Dict[Exponent, Dict[int, Fraction]] = {}
    for k, v in terms.items():
        cols.setdefault(k[:bi] + k[bi + 1:], {})[k[bi]] = v
    out: Dict[Exponent, Fraction] = {}
    for rest, col in cols.items():
        top = max(col)
        q = Fraction(0)
        # a(b) = (b+1) q(b);  q_{d-1} = a_d - q_d
        for d in range(top, 0, -1):
            q = col.get(d, 0) - q
            if q:
                out[rest[:bi] + (d - 1,) + rest[bi:]] = q
        if col.get(0, 0) != q:
            raise InexactDivisionError("not divisible by 1+b")
    return out


def _format_sparse(terms: Mapping[Exponent, Fraction], symbols: Sequence[str]) -> str:
    if not terms:
        return "0"
    items = sorted(terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))
    parts = []
    for k, v in items:
        mono = "*".join(s if x == 1 else f"{s}^{x}" for s, x in zip(symbols, k) if x)
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

Scalar = Union[Fraction, int, RatFunc, MultiPolyLoc]


def _leading(terms: Mapping[Exponent, Fraction]) -> Exponent:
    return max(terms, key=lambda k: (sum(k), k))


def div_exact(a: MultiPolyLoc, d: MultiPolyLoc) -> MultiPolyLoc:
    """Exact quotient ``a / d`` in the localized ring, or ``InexactDivisionError``."""
    a._check(d)
    if not d.terms:
        raise ZeroDivisionError("division by zero")
    # move (1+b) factors of d's numerator into the exponent bookkeeping
    dn, de = dict(d.terms), d.e
    e_shift = 0
    if "b" in d.symbols:
        bi = d._bidx()
        while len(dn) > 0 and d._divisible_by_1pb(dn) and any(k[bi] for k in dn):
            dn = _div_1pb(dn, bi)
            e_shift += 1
    # a / d = a.num * (1+b)^de / (dn * (1+b)^(a.e + e_shift))
    num = a.terms
    if de:
        num = MultiPolyLoc._mul_terms(num, a._one_plus_b_pow(de))
    rem = dict(num)
    quot: Dict[Exponent, Fraction] = {}
    lk = _leading(dn)
    lc = dn[lk]
    while rem:
        rk = _leading(rem)
        diff = tuple(x - y for x, y in zip(rk, lk))
        if any(x < 0 for x in diff):
            raise InexactDivisionError(f"{a} is not divisible by {d}")
        c = rem[rk] / lc
        quot[diff] = quot.get(diff, 0) + c
        for k, v in dn.items():
            kk = tuple(x + y for x, y in zip(k, diff))
            s = rem.get(kk, 0) - c * v
            if s:
                rem[kk] = s
            else:
                rem.pop(kk, None)
    return MultiPolyLoc(a.symbols, {k: v for k, v in quot.items() if v}, a.e + e_shift, _clean=True)._renorm()


def _renorm(self: MultiPolyLoc) -> MultiPolyLoc:
    if self.e:
        self._reduce()
    return self


MultiPolyLoc._renorm = _renorm  # type: ignore[attr-defined]


def _ring_of(a) -> Tuple[str, object]:
    if isinstance(a, RatFunc):
        return ("ratfunc", a.symbol)
    if isinstance(a, MultiPolyLoc):
        return ("loc", a.symbols)
    if _is_number(a):
        return ("Q", None)
    raise RingMismatchError(f"not a scalar: {a!r}")


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Ring operation with an explicit ring-compatibility check."""
    ra, rb = _ring_of(a), _ring_of(b)
    if ra != rb and "Q" not in (ra[0], rb[0]):
        raise RingMismatchError(f"{ra} vs {rb}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "div_exact":
        if _is_number(a) and _is_number(b):
            return Fraction(a) / b
        if isinstance(a, RatFunc) or isinstance(b, RatFunc):
            return a / b
        if _is_number(a):
            a = MultiPolyLoc.const(b.symbols, a)
        if _is_number(b):
            return a / b
        return div_exact(a, b)
    raise ValueError(f"unknown op {op!r}")


def normalize(a: Scalar) -> Scalar:
    """Rebuild a value in canonical form (idempotent)."""
    if isinstance(a, RatFunc):
        return RatFunc(a.num, a.den)
    if isinstance(a, MultiPolyLoc):
        return MultiPolyLoc(a.symbols, a.terms, a.e)
    return Fraction(a)


def localized_reduce(p: MultiPolyLoc) -> MultiPolyLoc:
    return MultiPolyLoc(p.symbols, p.terms, p.e)


def substitute(a: Scalar, symbol: str, value) -> Scalar:
    """Replace ``symbol`` by ``value`` (a number or a scalar of a compatible ring).

    * RatFunc: ``value`` may be a number (result is a Fraction) or a RatFunc in
      another variable (e.g. alpha := s**2).
    * MultiPolyLoc: ``value`` may be a number or a MultiPolyLoc over the same
      symbols.  Substituting b hits a pole when 1 + value vanishes and e > 0.
    """
    if _is_number(a):
        return Fraction(a)
    if isinstance(a, RatFunc):
        if symbol != a.symbol:
            return a
        if _is_number(value):
            return a.evaluate(Fraction(value))
        if isinstance(value, RatFunc):
            den = a.den(value)
            if not den:
                raise PoleError(f"pole of {a} at {symbol}={value}")
            return a.num(value) / den
        raise RingMismatchError(f"cannot substitute {type(value).__name__} into RatFunc")
    if isinstance(a, MultiPolyLoc):
        return _substitute_loc(a, symbol, value)
    raise RingMismatchError(f"not a scalar: {a!r}")


def _substitute_loc(a: MultiPolyLoc, symbol: str, value) -> MultiPolyLoc:
    if symbol not in a.symbols:
        return a
    i = a.symbols.index(symbol)
    if _is_number(value):
        value = Fraction(value)
        cols: Dict[Exponent, Fraction] = {}
        for k, v in a.terms.items():
            kk = k[:i] + (0,) + k[i + 1:]
            cols[kk] = cols.get(kk, 0) + v * value ** k[i]
        num = MultiPolyLoc(a.symbols, cols)
    elif isinstance(value, MultiPolyLoc):
        a._check(value)
        by_pow: Dict[int, Dict[Exponent, Fraction]] = {}
        for k, v in a.terms.items():
            by_pow.setdefault(k[i], {})[k[:i] + (0,) + k[i + 1:]] = v
        num = MultiPolyLoc.zero(a.symbols)
        powv = MultiPolyLoc.const(a.symbols, 1)
        for p in range(max(by_pow, default=0) + 1):
            if p in by_pow:
                num = num + MultiPolyLoc(a.symbols, by_pow[p], _clean=True) * powv
            powv = powv * value
    else:
        raise RingMismatchError(f"cannot substitute {type(value).__name__} into MultiPolyLoc")
    if not a.e:
        return num
    if symbol == "b":
        one_plus = 1 + value
        if _is_number(one_plus):
            if one_plus == 0:
                raise PoleError("substitution hits the pole 1+b = 0")
            return num * (Fraction(1) / one_plus ** a.e)
        return div_exact(num, one_plus ** a.e)
    return MultiPolyLoc(a.symbols, num.terms, num.e + a.e)


# ---------------------------------------------------------------------------
# Ring contexts
# ---------------------------------------------------------------------------


class AlphaField:
    """Q(alpha)."""

    name = "alpha"

    def __init__(self):
        self.alpha = RatFunc.gen("alpha")
        self.b = self.alpha - 1
        self.one = RatFunc.const("alpha", 1)
        self.zero = RatFunc.const("alpha", 0)

    def __call__(self, c: Number) -> RatFunc:
        return RatFunc.const("alpha", c)

    def lift(self, x) -> RatFunc:
        """Image of a Q[b, 1/(1+b)] element (b := alpha - 1)."""
        if isinstance(x, RatFunc):
            return x
        if _is_number(x):
            return self(x)
        x = x.restrict(("b",)) if x.symbols != ("b",) else x
        num = UniPoly("alpha")
        shift = UniPoly("alpha", (-1, 1))
        for (d,), v in x.terms.items():
            num = num + (shift ** d).scale(v)
        return RatFunc(num, UniPoly("alpha", (0, 1)) ** x.e)

    def __repr__(self):
        return "AlphaField()"


class SqrtField:
    """Q(s) with alpha = s**2."""

    name = "s"

    def __init__(self):
        self.s = RatFunc.gen("s")
        self.alpha = self.s * self.s
        self.b = self.alpha - 1
        self.gamma = (1 - self.alpha) / self.s
        self.one = RatFunc.const("s", 1)
        self.zero = RatFunc.const("s", 0)

    def __call__(self, c: Number) -> RatFunc:
        return RatFunc.const("s", c)

    def lift(self, x) -> RatFunc:
        """Image of a Q(alpha) or Q[b, 1/(1+b)] element."""
        if _is_number(x):
            return self(x)
        if isinstance(x, RatFunc):
            if x.symbol == "s":
                return x
            return substitute(x, "alpha", self.alpha)
        return substitute(ALPHA.lift(x), "alpha", self.alpha)

    def __repr__(self):
        return "SqrtField()"


class LocRing:
    """Q[symbols] localized at 1 + b."""

    def __init__(self, symbols: Sequence[str]):
        self.symbols = tuple(symbols)
        if "b" not in self.symbols:
            raise ValueError("a localized ring needs the symbol 'b'")
        self.b = self.gen("b")
        self.alpha = self.b + 1
        self.one = MultiPolyLoc.const(self.symbols, 1)
        self.zero = MultiPolyLoc.zero(self.symbols)

    def gen(self, name: str) -> MultiPolyLoc:
        return MultiPolyLoc.gen(self.symbols, name)

    def __call__(self, c: Number) -> MultiPolyLoc:
        return MultiPolyLoc.const(self.symbols, c)

    def lift(self, x) -> MultiPolyLoc:
        if _is_number(x):
            return self(x)
        if isinstance(x, MultiPolyLoc):
            return x.extend(self.symbols)
        raise RingMismatchError("cannot lift a rational function into a localized polynomial ring")

    def __eq__(self, other):
        return isinstance(other, LocRing) and other.symbols == self.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"LocRing({self.symbols})"


ALPHA = AlphaField()
SQRT = SqrtField()
B_RING = LocRing(("b",))

Ring = Union[AlphaField, SqrtField, LocRing]


def ratfunc_to_loc(x: RatFunc, ring: LocRing = B_RING) -> MultiPolyLoc:
    """Q(alpha) -> Q[b, 1/(1+b)] when the denominator is a power of alpha."""
    if x.symbol != "alpha":
        raise RingMismatchError("expected an element of Q(alpha)")
    e = x.den.degree
    if x.den != UniPoly("alpha", (0, 1)) ** e:
        raise InexactDivisionError(f"{x} has a denominator outside powers of alpha")
    out = ring.zero
    alpha = ring.alpha
    for d, c in enumerate(x.num.coeffs):
        if c:
            out = out + alpha ** d * c
    return out.div_one_plus_b(e) if e else out


# ---------------------------------------------------------------------------
# JSON encoding of scalars
# ---------------------------------------------------------------------------


def scalar_to_json(x: Scalar) -> dict:
    """``{"num": ..., "den": ...}`` with integer-coefficient polynomial strings."""
    if _is_number(x):
        x = Fraction(x)
        return {"num": str(x.numerator), "den": str(x.denominator)}
    if isinstance(x, RatFunc):
        sym = (x.symbol,)
        nt = {(i,): c for i, c in enumerate(x.num.coeffs) if c}
        dt = {(i,): c for i, c in enumerate(x.den.coeffs) if c}
        m = reduce(lcm, (v.denominator for v in list(nt.values()) + list(dt.values())), 1)
        return {"num": _format_sparse({k: v * m for k, v in nt.items()}, sym) if nt else "0",
                "den": _format_sparse({k: v * m for k, v in dt.items()}, sym)}
    if isinstance(x, MultiPolyLoc):
        m = reduce(lcm, (v.denominator for v in x.terms.values()), 1)
        num = {k: v * m for k, v in x.terms.items()}
        den_terms = {k: v * m for k, v in x._one_plus_b_pow(x.e).items()} if x.e else \
            {(0,) * len(x.symbols): Fraction(m)}
        return {"num": _format_sparse(num, x.symbols), "den": _format_sparse(den_terms, x.symbols)}
    raise RingMismatchError(f"not a scalar: {x!r}")
