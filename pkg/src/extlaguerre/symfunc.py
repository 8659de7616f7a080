"""Partitions and symmetric functions of the roots of a generator polynomial.

For monic ``g(z) = prod_j (z + alpha_j)`` the coefficients give the
elementary symmetric values directly, ``e_l(alpha) = c_{M-l}``.  Power sums
follow from Newton's identities and monomial symmetric values from the
power-sum/monomial transition matrix, so nothing here needs the roots.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NotMonic
from .exactpoly import RationalPoly

Partition = tuple  # weakly decreasing tuple of positive ints

__all__ = [
    "Partition",
    "partitions",
    "elementary_from_coeffs",
    "power_sums_from_coeffs",
    "elementary_from_power_sums",
    "monomial_sym_exact",
    "elementary_sym_eval",
    "power_to_monomial",
    "SymValues",
]


def partitions(k: int, max_length: int | None = None) -> list[Partition]:
    """Partitions of ``k`` with at most ``max_length`` parts.

    Reverse lexicographic order: ``(4), (3, 1), (2, 2), (2, 1, 1), ...``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if max_length is None:
        max_length = k
    return list(_partitions(k, max_length, k))


@lru_cache(maxsize=None)
def _partitions(k: int, max_length: int, max_part: int) -> tuple[Partition, ...]:
    if k == 0:
        return ((),)
    if max_length == 0:
        return ()
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in _partitions(k - first, max_length - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def _check_monic(g: RationalPoly) -> int:
    if g.degree < 1:
        raise NotMonic("generator must have degree >= 1")
    if g.lc != 1:
        raise NotMonic(f"{g} is not monic")
    return g.degree


def elementary_from_coeffs(g: RationalPoly) -> list[Fraction]:
    """``[e_0, ..., e_M]`` of the alphas, read off the coefficients."""
    M = _check_monic(g)
    return [g[M - l] for l in range(M + 1)]


def power_sums_from_coeffs(g: RationalPoly, K: int) -> list[Fraction]:
    """``[p_1, ..., p_K]`` of the alphas via Newton's identities."""
    e = elementary_from_coeffs(g)
    M = len(e) - 1
    p: list[Fraction] = []
    for j in range(1, K + 1):
        # p_j = sum_{i=1}^{j-1} (-1)^(i-1) e_i p_{j-i} + (-1)^(j-1) j e_j
        acc = Fraction(0)
        for i in range(1, min(j - 1, M) + 1):
            term = e[i] * p[j - i - 1]
            acc += term if i % 2 == 1 else -term
        if j <= M:
            term = j * e[j]
            acc += term if j % 2 == 1 else -term
        p.append(acc)
    return p


def elementary_from_power_sums(p: Sequence[Fraction], M: int) -> list[Fraction]:
    """Inverse Newton: ``[e_0, ..., e_M]`` from ``p_1..p_M``."""
    e = [Fraction(1)]
    for l in range(1, M + 1):
        acc = Fraction(0)
        for i in range(1, l + 1):
            term = e[l - i] * p[i - 1]
            acc += term if i % 2 == 1 else -term
        e.append(acc / l)
    return e


def _mul_by_power_sum(expansion: dict, r: int, M: int) -> dict:
    """Multiply a monomial-basis expansion by ``p_r`` in ``M`` variables."""
    out: dict = {}
    for mu, coef in expansion.items():
        # add r to one distinct part value
        for u in set(mu):
            nu = list(mu)
            nu[nu.index(u)] = u + r
            nu = tuple(sorted(nu, reverse=True))
            c = coef * nu.count(u + r)
            out[nu] = out.get(nu, 0) + c
        # or append r as a new part
        if len(mu) < M:
            nu = tuple(sorted(mu + (r,), reverse=True))
            out[nu] = out.get(nu, 0) + coef * nu.count(r)
    return out


@lru_cache(maxsize=None)
def power_to_monomial(lam: Partition, M: int) -> tuple[tuple[Partition, int], ...]:
    """Integer row ``p_lam = sum_mu R[lam, mu] m_mu`` in ``M`` variables.

    Monomials with more than ``M`` parts vanish and are dropped.
    """
    if not lam:
        return (((), 1),)
    prev = dict(power_to_monomial(lam[:-1], M))
    row = _mul_by_power_sum(prev, lam[-1], M)
    return tuple(sorted(((mu, c) for mu, c in row.items() if c), reverse=True))


_cache_lock = threading.Lock()


class SymValues:
    """Exact symmetric-function values of the alphas of one generator.

    Monomial values are solved per weight and memoized; the cache is
    guarded so concurrent readers are safe.
    """

    def __init__(self, g: RationalPoly):
        self.M = _check_monic(g)
        self.g = g
        self.elementary = elementary_from_coeffs(g)
        self._power = power_sums_from_coeffs(g, max(self.M, 1))
        self._monomial: dict[Partition, Fraction] = {}
        self._solved: set[int] = set()

    def power_sums(self, K: int) -> list[Fraction]:
        with _cache_lock:
            if len(self._power) < K:
                self._power = power_sums_from_coeffs(self.g, K)
            return self._power[:K]

    def _p_lambda(self, lam: Partition) -> Fraction:
        p = self.power_sums(max(lam, default=0))
        return math.prod((p[part - 1] for part in lam), start=Fraction(1))

    def _solve_weight(self, k: int) -> None:
        lams = partitions(k, self.M)
        values: dict[Partition, Fraction] = {}
        # rows are triangular: p_lam involves m_mu only for mu that merge
        # parts of lam, and those come earlier in reverse-lex order
        for lam in lams:
            acc = self._p_lambda(lam)
            diag = 0
            for mu, c in power_to_monomial(lam, self.M):
                if mu == lam:
                    diag = c
                else:
                    acc -= c * values[mu]
            values[lam] = acc / diag
        with _cache_lock:
            self._monomial.update(values)
            self._solved.add(k)

    def monomial(self, lam: Iterable[int]) -> Fraction:
        lam = tuple(sorted(lam, reverse=True))
        if len(lam) > self.M:
            return Fraction(0)
        k = sum(lam)
        if k not in self._solved:
            self._solve_weight(k)
        return self._monomial[lam]


@lru_cache(maxsize=128)
def _sym_values(g: RationalPoly) -> SymValues:
    return SymValues(g)


def monomial_sym_exact(lam: Iterable[int], g: RationalPoly) -> Fraction:
    """``m_lam(alpha_1, ..., alpha_M)`` for the alphas of monic ``g``."""
    _check_monic(g)
    return _sym_values(g).monomial(tuple(lam))


def elementary_sym_eval(k: int, values: Sequence):
    """``e_k(values)``; works over any commutative ring (e.g. RationalPoly)."""
    n = len(values)
    if k < 0 or k > n:
        raise IndexOutOfRange(f"e_{k} needs 0 <= k <= {n}")
    # e[j] after processing a prefix of values
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e[k]
