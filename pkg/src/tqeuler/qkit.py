"""q-calculus building blocks.

q-integers, q-Pochhammer symbols (including shifted bases such as
``-q**(1-b)``), Gaussian binomial coefficients in base q and base q**2,
ballot numbers, and the auxiliary polynomial family ``(1-q) * A_k(q)``.

All functions are pure; the Gaussian binomial cache is append-only, so
results are identical under concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactalg import LaurentPoly, ONE, ZERO, monomial

__all__ = [
    "QSymbolSpec",
    "q_int",
    "tq_factor",
    "pochhammer",
    "odd_pochhammer",
    "gauss_binom",
    "partition_box_binom",
    "ballot",
    "a_k_poly",
    "square_sum",
    "neg_q_power",
]


def neg_q_power(e: int) -> LaurentPoly:
    """``(-q)**e`` for any integer exponent ``e``."""
    return monomial(-1 if e % 2 else 1, 0, e)


def q_int(n: int) -> LaurentPoly:
    """The q-integer ``1 + q + ... + q**(n-1)``; ``q_int(0) == 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LaurentPoly({(0, i): 1 for i in range(n)})


def tq_factor(n: int) -> LaurentPoly:
    """``1 - t*q**n``, the numerator of the (t,q)-integer of index n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return LaurentPoly({(0, 0): 1, (1, n): -1})


@dataclass(frozen=True)
class QSymbolSpec:
    """A q-Pochhammer symbol ``(sign * q**base_power; q)_length``."""

    base_sign: int
    base_power: int
    length: int

    def __post_init__(self):
        if self.base_sign not in (1, -1):
            raise ValueError("base_sign must be +1 or -1")
        if self.length < 0:
            raise ValueError("length must be nonnegative")


def pochhammer(spec: QSymbolSpec) -> LaurentPoly:
    """Product of ``(1 - sign * q**(base_power + i))`` for ``i = 0 .. length-1``."""
    out = ONE
    for i in range(spec.length):
        # built by subtraction so the i = -base_power factor (1 -+ 1) collapses
        out = out * (ONE - monomial(spec.base_sign, 0, spec.base_power + i))
    return out


def odd_pochhammer(i: int) -> LaurentPoly:
    """``(q; q**2)_i``: the product of ``(1 - q**(2j+1))`` for ``j = 0 .. i-1``."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    out = ONE
    for j in range(i):
        out = out * LaurentPoly({(0, 0): 1, (0, 2 * j + 1): -1})
    return out


_GAUSS_CACHE: dict[tuple[int, int], LaurentPoly] = {}


def gauss_binom(n: int, k: int, squared: bool = False) -> LaurentPoly:
    """Gaussian binomial coefficient.

    Out-of-range arguments (``k < 0``, ``k > n`` or ``n < 0``) give 0, the
    convention the q-series sums in this package rely on.  With ``squared``
    set, every ``q`` in the result is replaced by ``q**2``.
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    base = _gauss(n, k)
    return base.scale_q(2) if squared else base


def _gauss(n: int, k: int) -> LaurentPoly:
    k = min(k, n - k)
    if k == 0:
        return ONE
    key = (n, k)
    cached = _GAUSS_CACHE.get(key)
    if cached is not None:
        return cached
    # q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    value = _gauss(n - 1, k - 1) + monomial(1, 0, k) * _gauss(n - 1, k)
    _GAUSS_CACHE.setdefault(key, value)
    return _GAUSS_CACHE[key]


def partition_box_binom(rows: int, cols: int, squared: bool = False) -> LaurentPoly:
    """Generating function of partitions inside a ``rows x cols`` box.

    Equals ``gauss_binom(rows + cols, rows)`` for nonnegative dimensions.
    A box with zero rows contains only the empty partition, even when the
    column count is negative; that degenerate corner is where this differs
    from the out-of-range-is-zero convention of :func:`gauss_binom`, and it
    is exactly the reading the lattice-path closed forms rely on.
    """
    if rows == 0:
        return ONE
    if rows < 0 or cols < 0:
        return ZERO
    return gauss_binom(rows + cols, rows, squared=squared)


def ballot(n: int, k: int) -> int:
    """``C(2n, n-k) - C(2n, n-k-1)`` with out-of-range binomials equal to 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def c(m: int, j: int) -> int:
        return math.comb(m, j) if 0 <= j <= m else 0

    return c(2 * n, n - k) - c(2 * n, n - k - 1)


def a_k_poly(k: int) -> LaurentPoly:
    """The cleared-denominator form ``(1-q) * A_k(q)``.

    For ``k >= 1`` this is ``sum_{i=-k}^{k} (-q)**(i*i) +
    q**(2k+1) * sum_{i=-(k-1)}^{k-1} (-q)**(i*i)``; for ``k == 0`` it is
    ``1 - q``.  Consumers recover ``A_k`` itself by exact division, which
    keeps the whole computation inside the Laurent ring.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return LaurentPoly({(0, 0): 1, (0, 1): -1})
    first = square_sum(k)
    second = square_sum(k - 1)
    return first + monomial(1, 0, 2 * k + 1) * second


def square_sum(m: int) -> LaurentPoly:
    """``sum_{i=-m}^{m} (-q)**(i*i)``."""
    out = ONE
    for i in range(1, m + 1):
        out = out + 2 * neg_q_power(i * i)
    return out
