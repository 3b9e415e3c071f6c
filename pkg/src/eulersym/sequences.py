"""Bernoulli and Euler numbers from their defining recurrences.

B_0 = 1 with sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, and
E_0 = 1 with sum over k <= n, n - k even, of C(n, k) E_k = 0 for n >= 1.
Values are cached in monotonically growing tables; extension is batched
under a lock so readers never observe a partially filled table.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from eulersym.exact import binom_int


class SequenceTable:
    """Grow-only cache of one number sequence, extended by a recurrence."""

    def __init__(self, kind: str):
        if kind not in ("bernoulli", "euler"):
            raise ValueError(f"unknown sequence kind {kind!r}")
        self.kind = kind
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def high_water(self) -> int:
        return len(self._values) - 1

    def value(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError(f"sequence index must be >= 0, got {k}")
        values = self._values
        if k < len(values):
            return values[k]
        with self._lock:
            if k >= len(self._values):
                # Extend into a fresh list and swap in atomically.
                extended = list(self._values)
                for n in range(len(extended), k + 1):
                    extended.append(self._next_value(n, extended))
                self._values = extended
            return self._values[k]

    def _next_value(self, n: int, known: list[Fraction]) -> Fraction:
        if self.kind == "bernoulli":
            # sum_{k=0}^{n} C(n+1, k) B_k = 0, coefficient of B_n is n+1.
            acc = sum((binom_int(n + 1, k) * known[k] for k in range(n)), Fraction(0))
            return -acc / (n + 1)
        # Euler: sum over k <= n with n - k even; coefficient of E_n is 1.
        acc = Fraction(0)
        for k in range(n % 2, n, 2):
            acc += binom_int(n, k) * known[k]
        return -acc


_BERNOULLI = SequenceTable("bernoulli")
_EULER = SequenceTable("euler")


def bernoulli_number(k: int) -> Fraction:
    """Exact Bernoulli number B_k."""
    return _BERNOULLI.value(k)


def euler_number(k: int) -> Fraction:
    """Exact Euler number E_k (always integral)."""
    return _EULER.value(k)


def b_tilde(k: int) -> Fraction:
    """Scaled Bernoulli number 2^k (2^k - 1) B_k / k, defined for k >= 1."""
    if k < 1:
        raise ValueError(f"b_tilde is undefined for k={k}; requires k >= 1")
    return Fraction(2**k * (2**k - 1), k) * bernoulli_number(k)


def euler_at_zero(k: int) -> Fraction:
    """E_k(0) = 2 (1 - 2^(k+1)) B_(k+1) / (k+1)."""
    if k < 0:
        raise ValueError(f"sequence index must be >= 0, got {k}")
    return Fraction(2 * (1 - 2 ** (k + 1)), k + 1) * bernoulli_number(k + 1)
