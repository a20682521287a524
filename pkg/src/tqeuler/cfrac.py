"""S-fraction coefficient extraction.

An S-fraction is the continued fraction ``1 / (1 - c_1 x / (1 - c_2 x / ...))``.
Its power-series coefficient of ``x**n`` (the n-th moment) equals the sum over
Dyck paths of length 2n of the product of ``c_h`` over down steps from height
``h``.  That weighted-path dynamic program is the only expansion algorithm
used here; nested symbolic division is never performed.

This module is the ground-truth definition of the normalized (t,q)-Euler
numbers ``euler_hat(n) = (1-q)**(2n) * E_n(t,q)`` (moments of the fraction
with ``c_h = (1-q**h)(1-t*q**h)``) and of the Touchard-Riordan quantity
``dn_hat(n) = (1-q)**n * d_n`` (moments with ``c_h = 1-q**h``).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable

from .exactalg import LaurentPoly, ONE, ZERO, Series

__all__ = [
    "SFractionSpec",
    "sfrac_expand",
    "sfrac_moments",
    "euler_coeff",
    "euler_hat",
    "dn_hat",
    "en_even_q",
    "en_odd_q",
]


@dataclass(frozen=True)
class SFractionSpec:
    """Coefficient rule ``h -> c_h`` (h >= 1) plus a truncation order.

    Only ``c_1 .. c_order`` are ever consulted.
    """

    coeff_fn: Callable[[int], LaurentPoly]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")


def sfrac_moments(coeff_fn: Callable[[int], LaurentPoly], order: int) -> list[LaurentPoly]:
    """Moments ``mu_0 .. mu_order`` of the S-fraction with coefficients ``c_h``.

    Walks all lattice prefixes step by step: up steps carry weight 1, a down
    step from height h carries ``c_h``.  Heights above ``order`` cannot
    contribute to any requested moment and are pruned, giving O(order**2)
    polynomial multiplications overall.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = {h: coeff_fn(h) for h in range(1, order + 1)}
    state: dict[int, LaurentPoly] = {0: ONE}
    moments = [ONE]
    for step in range(1, 2 * order + 1):
        nxt: dict[int, LaurentPoly] = {}
        for h, w in state.items():
            if h + 1 <= order:
                nxt[h + 1] = nxt.get(h + 1, ZERO) + w
            if h >= 1:
                nxt[h - 1] = nxt.get(h - 1, ZERO) + w * c[h]
        state = {h: w for h, w in nxt.items() if not w.is_zero()}
        if step % 2 == 0:
            moments.append(state.get(0, ZERO))
    return moments


def sfrac_expand(spec: SFractionSpec) -> Series:
    """The S-fraction as a truncated :class:`Series` in ``x``."""
    return Series(spec.order, sfrac_moments(spec.coeff_fn, spec.order))


def euler_coeff(h: int) -> LaurentPoly:
    """``(1 - q**h) * (1 - t*q**h)``, the normalized fraction coefficient."""
    return LaurentPoly({(0, 0): 1, (0, h): -1}) * LaurentPoly({(0, 0): 1, (1, h): -1})


_euler_cache: dict[int, LaurentPoly] = {}
_dn_cache: dict[int, LaurentPoly] = {}
_cache_lock = threading.Lock()


def euler_hat(n: int) -> LaurentPoly:
    """Normalized (t,q)-Euler number ``(1-q)**(2n) * E_n(t,q)``.

    The shared cache is write-once: concurrent callers may recompute a value
    but always store and observe the same polynomial.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cached = _euler_cache.get(n)
    if cached is not None:
        return cached
    moments = sfrac_moments(euler_coeff, n)
    with _cache_lock:
        for m, value in enumerate(moments):
            _euler_cache.setdefault(m, value)
    return _euler_cache[n]


def dn_hat(n: int) -> LaurentPoly:
    """``(1-q)**n * d_n``: moments of the fraction with ``c_h = 1 - q**h``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    cached = _dn_cache.get(n)
    if cached is not None:
        return cached
    moments = sfrac_moments(lambda h: LaurentPoly({(0, 0): 1, (0, h): -1}), n)
    with _cache_lock:
        for m, value in enumerate(moments):
            _dn_cache.setdefault(m, value)
    return _dn_cache[n]


def _one_minus_q_power(n: int) -> LaurentPoly:
    return LaurentPoly({(0, 0): 1, (0, 1): -1}) ** n


def en_even_q(n: int) -> LaurentPoly:
    """The classical q-secant value E_{2n}(q), via ``euler_hat(n)`` at t = 1."""
    return euler_hat(n).substitute_t(1, 0).divide_exact(_one_minus_q_power(2 * n))


def en_odd_q(n: int) -> LaurentPoly:
    """The classical q-tangent value E_{2n+1}(q), via ``euler_hat(n)`` at t = q."""
    return euler_hat(n).substitute_t(1, 1).divide_exact(_one_minus_q_power(2 * n))
