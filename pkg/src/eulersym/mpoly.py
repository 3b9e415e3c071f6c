"""Sparse multivariate polynomials over the rationals.

A polynomial is a map from monomials to nonzero Fraction coefficients,
where a monomial is a sorted tuple of (variable name, positive exponent)
pairs. The zero polynomial is the empty map and equality is structural,
so "identity holds" literally means "LHS - RHS has no terms".
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from eulersym.exact import format_fraction

Monomial = tuple[tuple[str, int], ...]
Composition = tuple[int, ...]
Scalar = Union[int, Fraction]


def _merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for var, e in m2:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


class MultiPoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        canon: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coef in terms.items():
                c = Fraction(coef)
                if c != 0:
                    canon[mono] = c
        object.__setattr__(self, "terms", canon)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "MultiPoly":
        return cls({(): Fraction(c)})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls({((name, 1),): Fraction(1)})

    @staticmethod
    def _coerce(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other)
        return NotImplemented  # type: ignore[return-value]

    # -- ring structure ----------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in q.terms.items():
            s = terms.get(mono, Fraction(0)) + c
            if s == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = s
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", terms)
        return out

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", {m: -c for m, c in self.terms.items()})
        return out

    def __sub__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return MultiPoly.zero()
            out = MultiPoly.__new__(MultiPoly)
            object.__setattr__(out, "terms", {m: k * c for m, k in self.terms.items()})
            return out
        if not isinstance(other, MultiPoly):
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                s = terms.get(mono, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(mono, None)
                else:
                    terms[mono] = s
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", terms)
        return out

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "MultiPoly":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def variables(self) -> set[str]:
        return {var for mono in self.terms for var, _ in mono}

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in mono) for mono in self.terms)

    def degree_in(self, v: str) -> int:
        deg = 0
        for mono in self.terms:
            for var, e in mono:
                if var == v:
                    deg = max(deg, e)
        return deg

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(sorted(mono)), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, v: str, replacement: "MultiPoly | Scalar") -> "MultiPoly":
        """Replace every occurrence of variable v by `replacement`, expanded."""
        repl = self._coerce(replacement)
        powers: dict[int, MultiPoly] = {0: MultiPoly.constant(1), 1: repl}

        def power(e: int) -> MultiPoly:
            if e not in powers:
                powers[e] = power(e - 1) * repl
            return powers[e]

        out = MultiPoly.zero()
        for mono, c in self.terms.items():
            e_v = 0
            rest = []
            for var, e in mono:
                if var == v:
                    e_v = e
                else:
                    rest.append((var, e))
            base = MultiPoly({tuple(rest): c})
            out = out + (base * power(e_v) if e_v else base)
        return out

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a full rational assignment of the occurring variables."""
        total = Fraction(0)
        for mono, c in self.terms.items():
            val = c
            for var, e in mono:
                if var not in assignment:
                    raise KeyError(f"no value assigned to variable {var!r}")
                val *= Fraction(assignment[var]) ** e
            total += val
        return total

    # -- serialization -----------------------------------------------------

    def _ordered_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(
            self.terms.items(),
            key=lambda item: (-sum(e for _, e in item[0]), item[0]),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for idx, (mono, coef) in enumerate(self._ordered_terms()):
            neg = coef < 0
            mag = -coef if neg else coef
            factors = [f"{var}^{e}" if e > 1 else var for var, e in mono]
            if not factors:
                body = format_fraction(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_fraction(mag)] + factors)
            if idx == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


# -- difference operators and binomials ------------------------------------


def shift_one(p: MultiPoly, v: str) -> MultiPoly:
    """p with v replaced by v + 1."""
    return p.substitute(v, MultiPoly.variable(v) + 1)


def delta(p: MultiPoly, v: str) -> MultiPoly:
    """Forward difference: p(v+1) - p(v)."""
    return shift_one(p, v) - p


def delta_star(p: MultiPoly, v: str) -> MultiPoly:
    """Companion operator: p(v+1) + p(v); injective on polynomials."""
    return shift_one(p, v) + p


def binom_poly(upper: MultiPoly | Scalar, k: int) -> MultiPoly:
    """Generalized binomial coefficient C(upper, k) as a polynomial.

    upper*(upper-1)*...*(upper-k+1)/k!; equals 1 for k = 0 and 0 for k < 0.
    """
    if k < 0:
        return MultiPoly.zero()
    up = MultiPoly._coerce(upper)
    prod = MultiPoly.constant(1)
    for i in range(k):
        prod = prod * (up - i)
    return prod * Fraction(1, math.factorial(k))


def compositions(n: int, m: int) -> Iterator[Composition]:
    """Weak compositions of n into m parts, lexicographically ascending.

    Yields exactly binom_int(n + m - 1, m - 1) tuples.
    """
    if n < 0 or m < 1:
        raise ValueError(f"compositions requires n >= 0 and m >= 1, got n={n}, m={m}")
    if m == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, m - 1):
            yield (first,) + rest


def poly_from_pairs(pairs: Iterable[tuple[dict[str, int], Scalar]]) -> MultiPoly:
    """Build a polynomial from (exponent dict, coefficient) pairs; test helper."""
    out = MultiPoly.zero()
    for exps, coef in pairs:
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        out = out + MultiPoly({mono: coef})
    return out
