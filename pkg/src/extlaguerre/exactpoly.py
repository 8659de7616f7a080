"""Exact polynomial arithmetic over the rationals.

:class:`RationalPoly` is a dense univariate polynomial with
:class:`fractions.Fraction` coefficients stored in ascending order, and
:class:`BivarPoly` a sparse polynomial in ``(z, t)``.  Real-root questions
(Sturm counts, square-free parts, nonnegativity on the real line) are
answered exactly; remainder sequences run on primitive integer
polynomials to keep coefficient growth in check.

The resultant :func:`resultant_in_s` builds ``Res_s(a(s), b(s))`` for
polynomials in ``s`` whose coefficients live in ``Q[z, t]``, by evaluation
at a grid of integer points and interpolation.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache, reduce
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .errors import IdenticallyZero, NotNegativeAnywhere

Rational = Fraction

__all__ = [
    "Rational",
    "RationalPoly",
    "BivarPoly",
    "as_rational",
    "derivative",
    "evaluate",
    "sturm_count",
    "square_free_part",
    "square_free_decomposition",
    "is_real_rooted",
    "real_root_count",
    "nonneg_on_reals",
    "find_negative_point",
    "simplest_rational",
    "resultant",
    "resultant_in_s",
    "poly_gcd",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions, floats and ``"p/q"`` strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class RationalPoly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[l]`` is the coefficient of ``z**l``; the zero polynomial has an
    empty coefficient tuple and degree ``-1``.  Instances are immutable.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls([c])

    @classmethod
    def z(cls) -> "RationalPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "RationalPoly":
        """``lead * prod(z - r)``."""
        p = cls([lead])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    @classmethod
    def parse(cls, text: str) -> "RationalPoly":
        return _PolyParser(text).parse()

    # basic properties --------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RationalPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({self.to_string()!r})"

    def __str__(self):
        return self.to_string()

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            c = as_rational(other)
            return RationalPoly([c * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RationalPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = RationalPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        c = as_rational(other)
        return RationalPoly([a / c for a in self.coeffs])

    def __divmod__(self, other: "RationalPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lcb = other.lc
        if len(rem) - 1 < db:
            return RationalPoly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            q = rem[i] / lcb
            quot[i - db] = q
            if q:
                for j in range(db + 1):
                    rem[i - db + j] -= q * bc[j]
        return RationalPoly(quot), RationalPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "RationalPoly") -> "RationalPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # calculus & evaluation ---------------------------------------------
    def derivative(self, order: int = 1) -> "RationalPoly":
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = self.coeffs
        if order == 0:
            return self
        if order > self.degree:
            return RationalPoly()
        return RationalPoly(
            [cs[i] * math.perm(i, order) for i in range(order, len(cs))]
        )

    def __call__(self, x):
        """Horner evaluation; works for any ring element ``x``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "RationalPoly") -> "RationalPoly":
        acc = RationalPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a) -> "RationalPoly":
        """``p(z + a)``."""
        return self.compose(RationalPoly([a, 1]))

    def taylor_coeffs(self, x) -> list[Fraction]:
        """Coefficients of ``p(x + w)`` in ``w``, i.e. ``p^(m)(x)/m!``."""
        cs = list(self.coeffs)
        x = as_rational(x)
        n = len(cs)
        # repeated synthetic division by (z - x)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                cs[j] += x * cs[j + 1]
        return cs

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            raise IdenticallyZero("zero polynomial has no monic normalization")
        return self / self.lc

    def content_primitive(self) -> tuple[Fraction, list[int]]:
        """Split into ``content * primitive`` with integer primitive part.

        The primitive part keeps the sign of the leading coefficient.
        """
        if self.is_zero():
            return Fraction(0), []
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        return Fraction(g, den), [c // g for c in ints]

    # printing -----------------------------------------------------------
    def to_string(self, var: str = "z") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = _fmt_rational(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else _fmt_rational(mag) + mono
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def to_latex(self, var: str = "z") -> str:
        if self.is_zero():
            return "0"
        out = ""
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else ("+" if out else "")
            if mag.denominator != 1:
                num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            else:
                num = str(mag.numerator)
            if i == 0:
                body = num
            else:
                mono = var if i == 1 else f"{var}^{{{i}}}"
                body = mono if mag == 1 else num + " " + mono
            out += (" " + sign + " " if out else sign) + body
        return out


def _fmt_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class _PolyParser:
    """Recursive-descent parser for printed polynomials.

    Grammar (implicit multiplication between adjacent factors)::

        expr   := ['+'|'-'] term (('+'|'-') term)*
        term   := power (['*'] power)*
        power  := atom ('^' INT)?
        atom   := NUMBER | 'z' | 'x' | '(' expr ')'

    ``NUMBER`` may be ``p/q`` or a decimal; ``1/2z`` reads as ``(1/2)*z``.
    """

    _token = re.compile(r"\s*(?:(\d+(?:/\d+|\.\d*)?)|([a-zA-Z])|(\*\*|[-+*^()]))")

    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = self._token.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
            num, name, op = m.groups()
            if num is not None:
                self.tokens.append(("num", Fraction(num)))
            elif name is not None:
                if name not in ("z", "x"):
                    raise ValueError(f"unknown variable {name!r}")
                self.tokens.append(("var", name))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0
        self.text = text

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> RationalPoly:
        if not self.tokens:
            raise ValueError("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.power()
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or val.denominator != 1 or val < 0:
                raise ValueError("exponent must be a nonnegative integer")
            return base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return RationalPoly([val])
        if kind == "var":
            return RationalPoly.z()
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return inner
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


# ---------------------------------------------------------------------------
# module-level operations


def derivative(p: RationalPoly, order: int = 1) -> RationalPoly:
    return p.derivative(order)


def evaluate(p: RationalPoly, x) -> Fraction:
    """Exact ``p(x)`` by Horner's rule."""
    return Fraction(p(as_rational(x)))


# -- integer polynomial kernels (ascending lists of ints) ------------------


def _strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _primitive(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    if g > 1:
        return [c // g for c in a]
    return a


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder ``lc(b)**(deg a - deg b + 1) * a mod b``."""
    r = list(a)
    nb = len(b) - 1
    lcb = b[-1]
    for i in range(len(r) - 1, nb - 1, -1):
        coef = r[i]
        r = [c * lcb for c in r]
        if coef:
            off = i - nb
            for j in range(nb + 1):
                r[off + j] -= coef * b[j]
        r.pop()
    # loop ran deg a - deg b + 1 times; r now has length nb
    return _strip(r)


def _int_derivative(a: list[int]) -> list[int]:
    return [i * a[i] for i in range(1, len(a))]


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient."""
    a, b = _primitive(list(a)), _primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _as_int_primitive(p: RationalPoly) -> list[int]:
    return p.content_primitive()[1]


def poly_gcd(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    """Monic gcd over Q (zero if both are zero)."""
    if p.is_zero() and q.is_zero():
        return RationalPoly()
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    g = _int_gcd(_as_int_primitive(p), _as_int_primitive(q))
    return RationalPoly(g).monic()


def _sign_at(a: list[int], x) -> int:
    """Sign of the integer polynomial ``a`` at a rational or infinite ``x``."""
    if not a:
        return 0
    if x == math.inf:
        return 1 if a[-1] > 0 else -1
    if x == -math.inf:
        s = 1 if a[-1] > 0 else -1
        return s if (len(a) - 1) % 2 == 0 else -s
    x = as_rational(x)
    num, den = x.numerator, x.denominator
    d = len(a) - 1
    # den**d * a(num/den), same sign since den > 0
    acc = 0
    pw = 1
    for i in range(d, -1, -1):
        acc = acc * num + a[i] * pw
        pw *= den
    return (acc > 0) - (acc < 0)


@lru_cache(maxsize=4096)
def _sturm_chain(sqf: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Sturm chain of a square-free primitive integer polynomial.

    Each entry is a positive multiple of the classical remainder, so sign
    variation counts are unchanged.
    """
    p0 = list(sqf)
    chain = [p0]
    if len(p0) <= 1:
        return (tuple(p0),)
    p1 = _primitive(_int_derivative(p0))
    chain.append(p1)
    a, b = p0, p1
    while len(b) > 1:
        r = _prem(a, b)
        if not r:
            break
        delta = len(a) - len(b)
        factor_sign = 1 if (b[-1] > 0 or (delta + 1) % 2 == 0) else -1
        nxt = _primitive([-c * factor_sign for c in r])
        chain.append(nxt)
        a, b = b, nxt
    return tuple(tuple(c) for c in chain)


def _variations(chain, x) -> int:
    count = 0
    prev = 0
    for a in chain:
        s = _sign_at(list(a), x)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sqf_int(p: RationalPoly) -> tuple[int, ...]:
    if p.is_zero():
        raise IdenticallyZero("polynomial is identically zero")
    a = _as_int_primitive(p)
    if len(a) <= 2:
        return tuple(a)
    g = _int_gcd(a, _int_derivative(a))
    if len(g) > 1:
        q = RationalPoly(a).exact_div(RationalPoly(g))
        a = _as_int_primitive(q)
    return tuple(a)


def _bound(x):
    if x in (math.inf, -math.inf):
        return x
    if isinstance(x, float) and math.isinf(x):
        return x
    return as_rational(x)


def sturm_count(p: RationalPoly, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``lo``/``hi`` may be rationals or ``math.inf``/``-math.inf``.
    """
    sqf = _sqf_int(p)
    lo, hi = _bound(lo), _bound(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    chain = _sturm_chain(sqf)
    return _variations(chain, lo) - _variations(chain, hi)


def real_root_count(p: RationalPoly) -> int:
    """Distinct real roots over the whole line."""
    return sturm_count(p, -math.inf, math.inf)


def square_free_part(p: RationalPoly) -> RationalPoly:
    """``p / gcd(p, p')`` normalized monic."""
    return RationalPoly(_sqf_int(p)).monic()


def square_free_decomposition(p: RationalPoly) -> list[tuple[RationalPoly, int]]:
    """Yun's algorithm: monic ``a_i`` with ``p = lc * prod a_i**i``.

    Only factors of positive degree are returned.
    """
    if p.is_zero():
        raise IdenticallyZero("polynomial is identically zero")
    if p.degree == 0:
        return []
    f = p.monic()
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f.exact_div(a0)
    c = df.exact_div(a0)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def is_real_rooted(p: RationalPoly) -> bool:
    """True iff every complex root of ``p`` is real."""
    sqf = _sqf_int(p)
    return _variations(_sturm_chain(sqf), -math.inf) - _variations(
        _sturm_chain(sqf), math.inf
    ) == len(sqf) - 1


def nonneg_on_reals(p: RationalPoly) -> bool:
    """Decide ``p(x) >= 0`` for every real ``x``.

    Holds iff ``p`` is zero, or has even degree, positive leading
    coefficient, and every real root of even multiplicity.
    """
    if p.is_zero():
        return True
    if p.degree % 2 or p.lc < 0:
        return False
    if p.degree == 0:
        return True
    # fast path: no real roots at all
    if real_root_count(p) == 0:
        return True
    odd = RationalPoly([1])
    for factor, mult in square_free_decomposition(p):
        if mult % 2:
            odd = odd * factor
    if odd.degree <= 0:
        return True
    return real_root_count(odd) == 0


# -- rational points ---------------------------------------------------------


def _simplest_open(lo, hi) -> Fraction:
    """Simplest rational strictly between ``lo < hi`` (either may be infinite)."""
    if lo == -math.inf and hi == math.inf:
        return Fraction(0)
    if lo == -math.inf:
        if hi > 0:
            return Fraction(0)
        return Fraction(math.ceil(hi) - 1)
    if hi == math.inf:
        if lo < 0:
            return Fraction(0)
        return Fraction(math.floor(lo) + 1)
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -_simplest_open(-hi, -lo)
    fl = math.floor(lo)
    if fl + 1 < hi:
        return Fraction(fl + 1)
    # lo, hi both in [fl, fl + 1]
    lo_f, hi_f = lo - fl, hi - fl
    inv_lo = math.inf if lo_f == 0 else 1 / lo_f
    return fl + 1 / _simplest_open(1 / hi_f, inv_lo)


def _simplicity(x: Fraction):
    return (x.denominator, abs(x.numerator), x < 0)


def simplest_rational(lo, hi, lo_closed=False, hi_closed=False) -> Fraction:
    """Rational of smallest denominator in the interval ``lo .. hi``.

    Ties go to the smaller magnitude, then to the nonnegative candidate.
    """
    cands = []
    if lo < hi:
        cands.append(_simplest_open(lo, hi))
    if lo_closed and lo not in (math.inf, -math.inf):
        cands.append(as_rational(lo))
    if hi_closed and hi not in (math.inf, -math.inf):
        cands.append(as_rational(hi))
    if not cands:
        raise ValueError("empty interval")
    return min(cands, key=_simplicity)


def _cauchy_bound(a: list[int]) -> Fraction:
    lc = abs(a[-1])
    return 1 + max(Fraction(abs(c), lc) for c in a[:-1])


def _isolate(chain, sqf: list[int]) -> list[list]:
    """Isolate the real roots of the square-free ``sqf``.

    Returns sorted ``[left, right]`` pairs: either an exact rational root
    (``left == right``) or an open interval whose endpoint values are
    nonzero and of opposite sign.
    """
    if len(sqf) <= 1:
        return []
    B = _cauchy_bound(sqf) + 1
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = _variations(chain, lo) - _variations(chain, hi)
        if n == 0:
            continue
        if n == 1:
            if _sign_at(sqf, hi) == 0:
                out.append([hi, hi])
                continue
            if _sign_at(sqf, lo) != 0:
                out.append([lo, hi])
                continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda item: item[0])
    return out


def _split_at(sqf: list[int], root: list, c: Fraction) -> str:
    """Shrink ``root``'s interval using the point ``c`` inside it.

    Returns where ``c`` sits relative to the root: "at", "left" or "right".
    """
    s = _sign_at(sqf, c)
    if s == 0:
        root[0] = root[1] = c
        return "at"
    if s == _sign_at(sqf, root[1]):
        root[1] = c
        return "right"
    root[0] = c
    return "left"


def _simplest_in_gap(sqf, left_root, right_root) -> Fraction:
    """Simplest rational strictly between two consecutive real roots.

    ``None`` stands for the unbounded side.  Isolating intervals are
    refined in place until the hull's simplest point falls in the gap.
    """
    while True:
        lo = -math.inf if left_root is None else left_root[0]
        hi = math.inf if right_root is None else right_root[1]
        c = _simplest_open(lo, hi)
        if left_root is not None and c <= left_root[1]:
            if c == left_root[1] and left_root[0] != left_root[1]:
                return c
            _split_at(sqf, left_root, c)
            continue
        if right_root is not None and c >= right_root[0]:
            if c == right_root[0] and right_root[0] != right_root[1]:
                return c
            _split_at(sqf, right_root, c)
            continue
        return c


def find_negative_point(p: RationalPoly) -> Fraction:
    """A rational ``x`` with ``p(x) < 0``.

    Each gap between consecutive distinct real roots has constant sign;
    the simplest rational of every negative gap is a candidate and the
    smallest denominator wins.
    """
    if p.is_zero():
        raise NotNegativeAnywhere("zero polynomial is nowhere negative")
    sqf = list(_sqf_int(p))
    roots = _isolate(_sturm_chain(tuple(sqf)), sqf)
    bounds = [None] + roots + [None]
    best = None
    for left, right in zip(bounds, bounds[1:]):
        x = _simplest_in_gap(sqf, left, right)
        if evaluate(p, x) < 0 and (best is None or _simplicity(x) < _simplicity(best)):
            best = x
    if best is None:
        raise NotNegativeAnywhere(f"{p} is nonnegative on the real line")
    return best


# -- resultants ----------------------------------------------------------------


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem(a: list, b: list) -> list:
    r = list(a)
    nb = len(b) - 1
    lcb = b[-1]
    for i in range(len(r) - 1, nb - 1, -1):
        q = r[i] / lcb
        if q:
            off = i - nb
            for j in range(nb):
                r[off + j] -= q * b[j]
        r[i] = 0
    return _trim(r[:nb] if nb >= 0 else [])


def _resultant_list(a: list, b: list) -> Fraction:
    a, b = _trim(list(a)), _trim(list(b))
    sign = 1
    acc = Fraction(1)
    while True:
        if not a or not b:
            return Fraction(0)
        m, n = len(a) - 1, len(b) - 1
        if n == 0:
            return sign * acc * b[0] ** m
        if m == 0:
            return sign * acc * a[0] ** n
        if m < n:
            if (m * n) % 2:
                sign = -sign
            a, b = b, a
            continue
        r = _rem(a, b)
        if not r:
            return Fraction(0)
        # Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r)
        if (m * n) % 2:
            sign = -sign
        acc *= b[-1] ** (m - (len(r) - 1))
        a, b = b, r


def resultant(a: RationalPoly, b: RationalPoly) -> Fraction:
    """Sylvester resultant of two univariate polynomials over Q."""
    return Fraction(_resultant_list(list(a.coeffs), list(b.coeffs)))


class BivarPoly:
    """Sparse polynomial in ``(z, t)`` with rational coefficients.

    Keys of ``coeffs`` are ``(z_exponent, t_exponent)``; zero coefficients
    are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for key, c in coeffs.items():
                c = as_rational(c)
                if c:
                    self.coeffs[(int(key[0]), int(key[1]))] = c

    @classmethod
    def constant(cls, c) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def from_z(cls, p: RationalPoly, t_power: int = 0, scale=1) -> "BivarPoly":
        """``scale * p(z) * t**t_power``."""
        scale = as_rational(scale)
        return cls({(i, t_power): scale * c for i, c in enumerate(p.coeffs)})

    @classmethod
    def from_t_coeffs(cls, polys: Sequence[RationalPoly]) -> "BivarPoly":
        out = {}
        for k, p in enumerate(polys):
            for i, c in enumerate(p.coeffs):
                out[(i, k)] = c
        return cls(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree_z(self) -> int:
        return max((i for i, _ in self.coeffs), default=-1)

    @property
    def degree_t(self) -> int:
        return max((j for _, j in self.coeffs), default=-1)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.coeffs), default=-1)

    def __eq__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        terms = " + ".join(
            f"({c})*z^{i}*t^{j}" for (i, j), c in sorted(self.coeffs.items())
        )
        return f"BivarPoly({terms or '0'})"

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return BivarPoly(out)

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivarPoly):
            c = as_rational(other)
            return BivarPoly({k: c * v for k, v in self.coeffs.items()})
        out: dict = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __call__(self, z, t):
        return sum(
            (c * z**i * t**j for (i, j), c in self.coeffs.items()), Fraction(0)
        )

    def coeff_t(self, k: int) -> RationalPoly:
        """The coefficient of ``t**k`` as a polynomial in ``z``."""
        items = [(i, c) for (i, j), c in self.coeffs.items() if j == k]
        if not items:
            return RationalPoly()
        cs = [Fraction(0)] * (max(i for i, _ in items) + 1)
        for i, c in items:
            cs[i] = c
        return RationalPoly(cs)

    def subs_t(self, t) -> RationalPoly:
        t = as_rational(t)
        deg = self.degree_z
        cs = [Fraction(0)] * (deg + 1)
        for (i, j), c in self.coeffs.items():
            cs[i] += c * t**j
        return RationalPoly(cs)


@lru_cache(maxsize=256)
def _lagrange_table(nodes: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Integer Lagrange basis for ``nodes``.

    Returns ``(Q, W)`` such that the interpolant of values ``y`` has
    coefficients ``sum_i y[i] * Q[i][k] / W``.
    """
    weights = []
    basis = []
    for i, xi in enumerate(nodes):
        w = 1
        poly = [1]
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            w *= xi - xj
            # poly *= (z - xj)
            nxt = [0] * (len(poly) + 1)
            for k, c in enumerate(poly):
                nxt[k + 1] += c
                nxt[k] -= xj * c
            poly = nxt
        weights.append(w)
        basis.append(poly)
    W = reduce(math.lcm, (abs(w) for w in weights), 1)
    Q = tuple(
        tuple((W // w) * c for c in poly) for w, poly in zip(weights, basis)
    )
    return Q, W


def _interpolate_ints(nodes: tuple[int, ...], ys: Sequence[int]) -> list[int]:
    """``W`` times the interpolant's coefficients (see :func:`_lagrange_table`)."""
    Q, _ = _lagrange_table(nodes)
    n = len(nodes)
    out = [0] * n
    for y, row in zip(ys, Q):
        if y:
            for k in range(n):
                out[k] += y * row[k]
    return out


def _nodes(deg: int) -> tuple[int, ...]:
    # symmetric integer nodes keep the evaluation values small
    half = deg // 2
    return tuple(j - half for j in range(deg + 1))


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


class _IntBivar:
    """Integer-coefficient view ``num / den`` of a BivarPoly for fast evaluation."""

    __slots__ = ("terms", "den")

    def __init__(self, p: BivarPoly):
        self.den = reduce(math.lcm, (c.denominator for c in p.coeffs.values()), 1)
        self.terms = [(i, j, int(c * self.den)) for (i, j), c in p.coeffs.items()]

    def at(self, zp: list[int], tp: list[int]) -> int:
        return sum(c * zp[i] * tp[j] for i, j, c in self.terms)


def _companion_powers(a: list[Fraction], upto: int):
    """Integer matrices ``D * C**m`` (m = 0..upto) and ``D``, for monic ``a``."""
    M = len(a) - 1
    C = [[Fraction(0)] * M for _ in range(M)]
    for i in range(1, M):
        C[i][i - 1] = Fraction(1)
    for i in range(M):
        C[i][M - 1] = -a[i]
    powers = [[[Fraction(int(i == j)) for j in range(M)] for i in range(M)]]
    for _ in range(upto):
        prev = powers[-1]
        powers.append(
            [
                [sum(prev[i][k] * C[k][j] for k in range(M)) for j in range(M)]
                for i in range(M)
            ]
        )
    D = reduce(
        math.lcm,
        (x.denominator for P in powers for row in P for x in row),
        1,
    )
    return [[[int(x * D) for x in row] for row in P] for P in powers], D


def resultant_in_s(a: Sequence[BivarPoly], b: Sequence[BivarPoly]) -> BivarPoly:
    """``Res_s(a, b)`` where ``a`` and ``b`` list their ``s``-coefficients.

    ``a`` must have a nonzero constant leading coefficient, so its degree
    survives every specialization of ``(z, t)`` and the result equals
    ``lc(a)**deg_s(b) * prod b(beta)`` over the roots ``beta`` of ``a``.
    Computed by evaluation on an integer grid sized from the Sylvester
    degree bounds, followed by exact interpolation in ``z`` then ``t``.
    When ``a`` has constant coefficients each grid value is the
    determinant of ``b`` applied to the companion matrix of ``a``.
    """
    a = list(a)
    b = list(b)
    while b and b[-1].is_zero():
        b.pop()
    while a and a[-1].is_zero():
        a.pop()
    if not a or not b:
        return BivarPoly()
    lead = a[-1]
    if lead.total_degree != 0:
        raise ValueError("leading s-coefficient of a must be a nonzero constant")
    lead_c = lead.coeffs[(0, 0)]
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return BivarPoly.constant(lead_c**db)

    def maxdeg(ps, attr):
        return max(max((getattr(p, attr) for p in ps), default=0), 0)

    zdeg = da * maxdeg(b, "degree_z") + db * maxdeg(a, "degree_z")
    tdeg = da * maxdeg(b, "degree_t") + db * maxdeg(a, "degree_t")
    zs, ts = _nodes(zdeg), _nodes(tdeg)
    zpows = [[z**i for i in range(zdeg + 1)] for z in zs]
    tpows = [[t**j for j in range(tdeg + 1)] for t in ts]

    # common denominator E for b so every specialization is integral
    ib = [_IntBivar(p) for p in b]
    E = reduce(math.lcm, (p.den for p in ib), 1)
    bscale = [E // p.den for p in ib]
    constant_a = all(p.total_degree <= 0 for p in a)

    grid: list[list[int]] = []
    if constant_a:
        monic_a = [p.coeffs.get((0, 0), Fraction(0)) / lead_c for p in a]
        cpow, D = _companion_powers(monic_a, db)
        # value = lead_c**db * det(sum_m b_m C^m) = lead_c**db * det(int) / (E*D)**da
        scale = lead_c**db / Fraction(E * D) ** da
        for tp in tpows:
            row = []
            for zp in zpows:
                bv = [p.at(zp, tp) * s for p, s in zip(ib, bscale)]
                mat = [[0] * da for _ in range(da)]
                for m, bm in enumerate(bv):
                    if bm:
                        Pm = cpow[m]
                        for i in range(da):
                            mi, Pi = mat[i], Pm[i]
                            for j in range(da):
                                mi[j] += bm * Pi[j]
                row.append(_bareiss_det(mat))
            grid.append(row)
    else:
        ia = [_IntBivar(p) for p in a]
        values = []
        for tp in tpows:
            row = []
            for zp in zpows:
                av = [Fraction(p.at(zp, tp), p.den) / lead_c for p in ia]
                bv = _trim([Fraction(p.at(zp, tp), p.den) for p in ib])
                row.append(lead_c**db * _resultant_list(av, bv))
            values.append(row)
        den = reduce(
            math.lcm, (v.denominator for row in values for v in row), 1
        )
        grid = [[int(v * den) for v in row] for row in values]
        scale = Fraction(1, den)

    _, Wz = _lagrange_table(zs)
    _, Wt = _lagrange_table(ts)
    zrows = [_interpolate_ints(zs, row) for row in grid]
    scale = scale / (Wz * Wt)
    out = {}
    for i in range(zdeg + 1):
        col = _interpolate_ints(ts, [r[i] for r in zrows])
        for j, c in enumerate(col):
            if c:
                out[(i, j)] = c * scale
    return BivarPoly(out)
