"""Construct both sides of each identity and certify exact cancellation.

Every builder returns (lhs, rhs) as expanded MultiPoly values; the
verdict is whether lhs - rhs has an empty term map. The r_0 parameter,
constrained by r_0 + r_1 + ... + r_m = n - 1, is eliminated everywhere by
substituting r_0 = (n - 1) - (r_1 + ... + r_m), so each identity becomes a
polynomial statement in free variables over the rationals.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from eulersym.exact import format_fraction, random_rational
from eulersym.mpoly import MultiPoly, binom_poly, compositions, delta, delta_star, shift_one
from eulersym.polyfam import (
    AppellSpec,
    appell_poly_at,
    bernoulli_poly_shifted,
    euler_poly_shifted,
)
from eulersym.sequences import b_tilde, bernoulli_number, euler_number

IDENTITY_IDS = (
    "thm11_part1",
    "thm11_part2",
    "thm12",
    "cor11",
    "lemma21",
    "lemma22_eq1",
    "lemma22_eq2",
    "remark11",
    "chu_vandermonde",
)


@dataclass(frozen=True)
class IdentitySpec:
    """One verification request."""

    identity: str
    n: int
    m: int | None = None
    i: int | None = None
    mode: str = "symbolic"
    params: dict[str, Fraction] | None = None
    seed: int | None = None

    def validate(self) -> None:
        if self.identity not in IDENTITY_IDS:
            raise ValueError(f"unknown identity {self.identity!r}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.mode not in ("symbolic", "numeric"):
            raise ValueError(f"mode must be symbolic or numeric, got {self.mode!r}")
        if self.identity in ("thm12", "cor11"):
            if self.m is None or self.m < 1:
                raise ValueError(f"{self.identity} requires m >= 1")
        if self.identity in ("lemma22_eq1", "lemma22_eq2", "lemma21"):
            if self.m is None or self.m < 2:
                raise ValueError(f"{self.identity} requires m >= 2")
        if self.identity == "lemma22_eq2":
            if self.i is None or not 2 <= self.i <= (self.m or 0):
                raise ValueError("lemma22_eq2 requires an index i in 2..m")
        if self.identity == "lemma21" and self.seed is None:
            raise ValueError("lemma21 verification needs a seed for the random tuple")


@dataclass
class IdentityReport:
    """Outcome of one verification run."""

    spec: IdentitySpec
    holds: bool
    lhs_terms: int
    rhs_terms: int
    residual_terms: int
    elapsed_ms: float
    residual_sample: str | None = None
    params_used: dict[str, Fraction] | None = None

    def to_json_dict(self) -> dict:
        return {
            "identity": self.spec.identity,
            "m": self.spec.m,
            "n": self.spec.n,
            "mode": self.spec.mode,
            "holds": self.holds,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "residual_terms": self.residual_terms,
            "elapsed_ms": self.elapsed_ms,
            "params": (
                {k: format_fraction(v) for k, v in self.params_used.items()}
                if self.params_used
                else None
            ),
        }


# -- Theorem on products of Euler polynomials (m parameters) ----------------


def _r_variables(m: int, n: int) -> tuple[list[MultiPoly], MultiPoly]:
    """The free r_1..r_m as polynomials plus the eliminated r_0."""
    rs = [MultiPoly.variable(f"r_{j}") for j in range(1, m + 1)]
    r0 = MultiPoly.constant(n - 1)
    for r in rs:
        r0 = r0 - r
    return rs, r0


def thm12_sides(m: int, n: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the m-fold symmetric relation (odd m: all-Euler form,
    even m: mixed Bernoulli/Euler form with the r_0/2 prefactor)."""
    if m < 1 or n < 1:
        raise ValueError(f"thm12 requires m >= 1 and n >= 1, got m={m}, n={n}")
    xs = [MultiPoly.variable(f"x_{j}") for j in range(1, m + 1)]
    rs, r0 = _r_variables(m, n)
    binom_r0 = [binom_poly(r0, k) for k in range(n + 1)]
    binom_r = [[binom_poly(rs[j], k) for k in range(n + 1)] for j in range(m)]
    e_at_x = [[euler_poly_shifted(k, xs[j]) for k in range(n + 1)] for j in range(m)]

    odd = m % 2 == 1
    lhs = MultiPoly.zero()
    for ks in compositions(n if odd else n - 1, m):
        term = MultiPoly.constant(1)
        for j in range(m):
            term = term * binom_r[j][ks[j]] * e_at_x[j][ks[j]]
        lhs = lhs + term
    if not odd:
        lhs = r0 * lhs / 2

    rhs = MultiPoly.zero()
    for i in range(1, m + 1):
        if odd:
            pivot = [euler_poly_shifted(k, 1 - xs[i - 1]) for k in range(n + 1)]
        else:
            pivot = [bernoulli_poly_shifted(k, 1 - xs[i - 1]) for k in range(n + 1)]
        shifted = [
            [
                euler_poly_shifted(k, xs[j] - xs[i - 1] + (1 if j + 1 > i else 0))
                for k in range(n + 1)
            ]
            for j in range(m)
        ]
        i_sum = MultiPoly.zero()
        for ks in compositions(n, m):
            term = binom_r0[ks[i - 1]] * pivot[ks[i - 1]]
            for j in range(m):
                if j + 1 == i:
                    continue
                term = term * binom_r[j][ks[j]] * shifted[j][ks[j]]
            i_sum = i_sum + term
        sign = (-1) ** i if not odd else -((-1) ** i)
        rhs = rhs + i_sum * sign
    return lhs, rhs


def cor11_sides(m: int, n: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the Euler/Bernoulli-number corollary, in r_1..r_m only.

    The left side carries the prefactor (-1)^(n+1); with (-1)^n the stated
    identity fails whenever its left side is nonzero (checked independently
    against the parent theorem specialized at x_j = 1/2).
    """
    if m < 1 or n < 1:
        raise ValueError(f"cor11 requires m >= 1 and n >= 1, got m={m}, n={n}")
    rs, r0 = _r_variables(m, n)
    binom_r0 = [binom_poly(r0, k) for k in range(n + 1)]
    binom_r = [[binom_poly(rs[j], k) for k in range(n + 1)] for j in range(m)]

    odd = m % 2 == 1
    lhs = MultiPoly.zero()
    for ks in compositions(n if odd else n - 1, m):
        term = MultiPoly.constant(1)
        for j in range(m):
            term = term * binom_r[j][ks[j]] * euler_number(ks[j])
        lhs = lhs + term
    lhs = lhs * Fraction((-1) ** (n + 1))
    if not odd:
        lhs = r0 * lhs

    rhs = MultiPoly.zero()
    for i in range(1, m + 1):
        i_sum = MultiPoly.zero()
        for ks in compositions(n, m):
            tail_sign = (-1) ** sum(1 for j in range(i, m) if ks[j] > 0)
            ki = ks[i - 1]
            pivot = euler_number(ki) if odd else (2**ki - 2) * bernoulli_number(ki)
            coef = Fraction(tail_sign) * pivot
            if coef == 0:
                continue
            term = binom_r0[ki] * coef
            for j in range(m):
                if j + 1 == i:
                    continue
                term = term * binom_r[j][ks[j]] * b_tilde(ks[j] + 1)
            i_sum = i_sum + term
        rhs = rhs + i_sum * ((-1) ** i)
    return lhs, rhs


# -- Three-parameter symmetric relations (x, y, r, s free) -----------------


def _bernoulli_pair_sum(
    n: int, s_arg: MultiPoly, t_arg: MultiPoly, x_arg: MultiPoly, y_arg: MultiPoly
) -> MultiPoly:
    """sum_k (-1)^k C(s,k) C(t,n-k) B_(n-k)(x) B_k(y)."""
    out = MultiPoly.zero()
    for k in range(n + 1):
        out = out + (
            binom_poly(s_arg, k)
            * binom_poly(t_arg, n - k)
            * bernoulli_poly_shifted(n - k, x_arg)
            * bernoulli_poly_shifted(k, y_arg)
            * Fraction((-1) ** k)
        )
    return out


def thm11_part1_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    """Cyclic three-term Bernoulli relation; z = 1-x-y and t = n-r-s are
    eliminated, leaving a statement in x, y, r, s whose left side must be 0."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    x, y = MultiPoly.variable("x"), MultiPoly.variable("y")
    r, s = MultiPoly.variable("r"), MultiPoly.variable("s")
    z = 1 - x - y
    t = MultiPoly.constant(n) - r - s
    lhs = (
        r * _bernoulli_pair_sum(n, s, t, x, y)
        + s * _bernoulli_pair_sum(n, t, r, y, z)
        + t * _bernoulli_pair_sum(n, r, s, z, x)
    )
    return lhs, MultiPoly.zero()


def thm11_part2_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    """Mixed Bernoulli/Euler relation with r + s + t = n - 1; z and t eliminated."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    x, y = MultiPoly.variable("x"), MultiPoly.variable("y")
    r, s = MultiPoly.variable("r"), MultiPoly.variable("s")
    z = 1 - x - y
    t = MultiPoly.constant(n - 1) - r - s

    lhs = MultiPoly.zero()
    for l in range(n):
        lhs = lhs + (
            binom_poly(s, l)
            * binom_poly(t, n - 1 - l)
            * euler_poly_shifted(l, y)
            * euler_poly_shifted(n - 1 - l, x)
            * Fraction((-1) ** l)
        )
    lhs = r * lhs / 2

    first = MultiPoly.zero()
    second = MultiPoly.zero()
    for k in range(n + 1):
        e_z = euler_poly_shifted(n - k, z)
        common = binom_poly(r, k) * Fraction((-1) ** k)
        first = first + common * binom_poly(s, n - k) * bernoulli_poly_shifted(k, x) * e_z
        second = second + common * binom_poly(t, n - k) * bernoulli_poly_shifted(k, y) * e_z
    rhs = first - second * Fraction((-1) ** n)
    return lhs, rhs


def remark11_sides(n: int) -> tuple[tuple[MultiPoly, MultiPoly], tuple[MultiPoly, MultiPoly]]:
    """The m=2 even-branch instance rewritten in the (x, y, r, s) variables,
    paired with the three-parameter mixed relation it must coincide with.

    Renaming: x_1 -> 1-y, x_2 -> x, r_1 -> s, r_2 -> (n-1)-r-s, so that the
    eliminated r_0 becomes r.
    """
    l12, r12 = thm12_sides(2, n)
    x, y = MultiPoly.variable("x"), MultiPoly.variable("y")
    r, s = MultiPoly.variable("r"), MultiPoly.variable("s")
    t = MultiPoly.constant(n - 1) - r - s

    def rename(p: MultiPoly) -> MultiPoly:
        return (
            p.substitute("x_1", 1 - y)
            .substitute("x_2", x)
            .substitute("r_1", s)
            .substitute("r_2", t)
        )

    return (rename(l12), rename(r12)), thm11_part2_sides(n)


def remark11_equivalence(n: int) -> "IdentityReport":
    """Certify that the transformed m=2 instance is literally the same
    polynomial statement as the three-parameter mixed relation."""
    return verify(IdentitySpec("remark11", n=n))


# -- Telescoping lemma and Appell-sequence lemma ---------------------------


def lemma21_residual(
    polys: Sequence[MultiPoly], parity_branch: str, v: str = "x"
) -> MultiPoly:
    """LHS - RHS of the telescoping identity for P_1..P_m in one variable.

    LHS = P_1 * sum_(1<i<=m) (-1)^i D*(P_i) * prod_(1<j<=m, j!=i) P_j(x + [j<i])
    RHS = D*(P_1...P_m) - D*(P_1) * P_2(x+1)...P_m(x+1)   (odd m)
          D*(P_1...P_m) - D(P_1)  * P_2(x+1)...P_m(x+1)   (even m)
    """
    m = len(polys)
    if m < 2:
        raise ValueError(f"need at least 2 polynomials, got {m}")
    if parity_branch not in ("odd", "even"):
        raise ValueError(f"parity_branch must be odd or even, got {parity_branch!r}")
    if (m % 2 == 1) != (parity_branch == "odd"):
        raise ValueError(f"parity_branch {parity_branch!r} does not match m={m}")

    shifted = [shift_one(p, v) for p in polys]
    lhs_sum = MultiPoly.zero()
    for i in range(2, m + 1):
        term = delta_star(polys[i - 1], v)
        for j in range(2, m + 1):
            if j == i:
                continue
            term = term * (shifted[j - 1] if j < i else polys[j - 1])
        lhs_sum = lhs_sum + term * ((-1) ** i)
    lhs = polys[0] * lhs_sum

    product = MultiPoly.constant(1)
    for p in polys:
        product = product * p
    head = delta_star(polys[0], v) if m % 2 == 1 else delta(polys[0], v)
    tail = MultiPoly.constant(1)
    for q in shifted[1:]:
        tail = tail * q
    rhs = delta_star(product, v) - head * tail
    return lhs - rhs


def lemma22_sides(
    m: int, n: int, which: str, i: int | None = None
) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the Appell-sequence convolution lemma with fully
    symbolic coefficient sequences a_0..a_n (and abar_0..abar_n for eq2)."""
    if m < 2 or n < 1:
        raise ValueError(f"lemma22 requires m >= 2 and n >= 1, got m={m}, n={n}")
    if which not in ("eq1", "eq2"):
        raise ValueError(f"which must be eq1 or eq2, got {which!r}")
    if which == "eq2":
        if i is None or not 2 <= i <= m:
            raise ValueError(f"eq2 requires an index i in 2..{m}, got {i}")

    xs = [MultiPoly.variable(f"x_{j}") for j in range(1, m + 1)]
    rs, r0 = _r_variables(m, n)
    binom_r0 = [binom_poly(r0, k) for k in range(n + 1)]
    binom_r = [[binom_poly(rs[j], k) for k in range(n + 1)] for j in range(m)]
    a_spec = AppellSpec.symbolic(n, "a")

    if which == "eq1":
        a_shift = [
            [appell_poly_at(a_spec, k, xs[j] - xs[0]) for k in range(n + 1)]
            for j in range(m)
        ]
        a_plain = [
            [appell_poly_at(a_spec, k, xs[j]) for k in range(n + 1)] for j in range(m)
        ]
        neg_x1 = [(-xs[0]) ** k for k in range(n + 1)]
        pos_x1 = [xs[0] ** k for k in range(n + 1)]
        lhs = MultiPoly.zero()
        rhs = MultiPoly.zero()
        for ks in compositions(n, m):
            lt = binom_r0[ks[0]] * neg_x1[ks[0]]
            rt = binom_r[0][ks[0]] * pos_x1[ks[0]]
            for j in range(1, m):
                lt = lt * binom_r[j][ks[j]] * a_shift[j][ks[j]]
                rt = rt * binom_r[j][ks[j]] * a_plain[j][ks[j]]
            lhs = lhs + lt
            rhs = rhs + rt
        return lhs, rhs

    abar_spec = AppellSpec.symbolic(n, "abar")
    a_neg_x1 = [appell_poly_at(a_spec, k, -xs[0]) for k in range(n + 1)]
    a_neg_xi = [appell_poly_at(a_spec, k, -xs[i - 1]) for k in range(n + 1)]
    abar_from_x1 = [
        [appell_poly_at(abar_spec, k, xs[j] - xs[0]) for k in range(n + 1)]
        for j in range(m)
    ]
    abar_from_xi = [
        [appell_poly_at(abar_spec, k, xs[j] - xs[i - 1]) for k in range(n + 1)]
        for j in range(m)
    ]
    gap_l = [(xs[i - 1] - xs[0]) ** k for k in range(n + 1)]
    gap_r = [(xs[0] - xs[i - 1]) ** k for k in range(n + 1)]

    lhs = MultiPoly.zero()
    rhs = MultiPoly.zero()
    for ks in compositions(n, m):
        lt = binom_r0[ks[0]] * a_neg_x1[ks[0]] * binom_r[i - 1][ks[i - 1]] * gap_l[ks[i - 1]]
        rt = binom_r[0][ks[0]] * gap_r[ks[0]] * binom_r0[ks[i - 1]] * a_neg_xi[ks[i - 1]]
        for j in range(1, m):
            if j + 1 == i:
                continue
            lt = lt * binom_r[j][ks[j]] * abar_from_x1[j][ks[j]]
            rt = rt * binom_r[j][ks[j]] * abar_from_xi[j][ks[j]]
        lhs = lhs + lt
        rhs = rhs + rt
    return lhs, rhs


def chu_vandermonde_sides(n: int) -> tuple[MultiPoly, MultiPoly]:
    """sum_k C(r,k) C(s,n-k) = C(r+s,n) as polynomials in r and s."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    r, s = MultiPoly.variable("r"), MultiPoly.variable("s")
    lhs = MultiPoly.zero()
    for k in range(n + 1):
        lhs = lhs + binom_poly(r, k) * binom_poly(s, n - k)
    return lhs, binom_poly(r + s, n)


# -- Verification driver ---------------------------------------------------


def random_one_var_poly(
    rng: random.Random, v: str = "x", max_degree: int = 4, bound: int = 20
) -> MultiPoly:
    """Random polynomial in one variable with small rational coefficients."""
    degree = rng.randint(0, max_degree)
    out = MultiPoly.zero()
    for e in range(degree + 1):
        c = random_rational(rng, bound, bound)
        if c != 0:
            out = out + MultiPoly.variable(v) ** e * c
    return out


def _seeded_lemma21_tuple(m: int, seed: int, max_degree: int) -> list[MultiPoly]:
    rng = random.Random(seed)
    return [random_one_var_poly(rng, "x", max_degree) for _ in range(m)]


def _build_sides(spec: IdentitySpec) -> tuple[MultiPoly, MultiPoly]:
    ident = spec.identity
    if ident == "thm12":
        return thm12_sides(spec.m, spec.n)  # type: ignore[arg-type]
    if ident == "cor11":
        return cor11_sides(spec.m, spec.n)  # type: ignore[arg-type]
    if ident == "thm11_part1":
        return thm11_part1_sides(spec.n)
    if ident == "thm11_part2":
        return thm11_part2_sides(spec.n)
    if ident == "lemma22_eq1":
        return lemma22_sides(spec.m, spec.n, "eq1")  # type: ignore[arg-type]
    if ident == "lemma22_eq2":
        return lemma22_sides(spec.m, spec.n, "eq2", spec.i)  # type: ignore[arg-type]
    if ident == "chu_vandermonde":
        return chu_vandermonde_sides(spec.n)
    if ident == "lemma21":
        polys = _seeded_lemma21_tuple(spec.m, spec.seed, max_degree=min(spec.n, 4))  # type: ignore[arg-type]
        parity = "odd" if spec.m % 2 == 1 else "even"  # type: ignore[operator]
        return lemma21_residual(polys, parity), MultiPoly.zero()
    raise ValueError(f"unknown identity {ident!r}")


def _numeric_assignment(
    spec: IdentitySpec, variables: set[str]
) -> dict[str, Fraction]:
    assignment: dict[str, Fraction] = dict(spec.params or {})
    missing = sorted(variables - assignment.keys())
    if missing:
        if spec.seed is None:
            raise ValueError(
                f"numeric mode needs values for {missing} or a seed to sample them"
            )
        rng = random.Random(spec.seed)
        for v in missing:
            assignment[v] = random_rational(rng)
    return assignment


def verify(spec: IdentitySpec) -> IdentityReport:
    """Build the requested identity and certify it exactly."""
    spec.validate()
    start = time.perf_counter()

    if spec.identity == "remark11":
        (l12, r12), (l11, r11) = remark11_sides(spec.n)
        res_l = l12 - l11
        res_r = r12 - r11
        residual_terms = len(res_l) + len(res_r)
        sample = None
        if residual_terms:
            sample = str(res_l if res_l else res_r)
        return IdentityReport(
            spec=spec,
            holds=residual_terms == 0,
            lhs_terms=len(l12) + len(r12),
            rhs_terms=len(l11) + len(r11),
            residual_terms=residual_terms,
            elapsed_ms=(time.perf_counter() - start) * 1000.0,
            residual_sample=sample,
        )

    lhs, rhs = _build_sides(spec)
    if spec.mode == "numeric":
        variables = lhs.variables() | rhs.variables()
        assignment = _numeric_assignment(spec, variables)
        equal = lhs.evaluate(assignment) == rhs.evaluate(assignment)
        return IdentityReport(
            spec=spec,
            holds=equal,
            lhs_terms=len(lhs),
            rhs_terms=len(rhs),
            residual_terms=0 if equal else 1,
            elapsed_ms=(time.perf_counter() - start) * 1000.0,
            params_used=assignment,
        )

    residual = lhs - rhs
    return IdentityReport(
        spec=spec,
        holds=residual.is_zero(),
        lhs_terms=len(lhs),
        rhs_terms=len(rhs),
        residual_terms=len(residual),
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
        residual_sample=None if residual.is_zero() else str(residual),
    )


def enumerate_specs(max_m: int, max_n: int, seed: int = 0) -> Iterator[IdentitySpec]:
    """The verification matrix run by `verify-all`."""
    if max_m < 1 or max_n < 1:
        raise ValueError("bounds must be >= 1")
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            yield IdentitySpec("thm12", n=n, m=m)
            yield IdentitySpec("cor11", n=n, m=m)
    for n in range(1, max_n + 1):
        yield IdentitySpec("thm11_part1", n=n)
        yield IdentitySpec("thm11_part2", n=n)
        yield IdentitySpec("remark11", n=n)
    for m in range(2, min(max_m, 3) + 1):
        for n in range(1, min(max_n, 4) + 1):
            yield IdentitySpec("lemma22_eq1", n=n, m=m)
            for i in range(2, m + 1):
                yield IdentitySpec("lemma22_eq2", n=n, m=m, i=i)
    for m in range(2, max(2, min(max_m, 5)) + 1):
        yield IdentitySpec("lemma21", n=4, m=m, seed=seed * 1000 + m)
