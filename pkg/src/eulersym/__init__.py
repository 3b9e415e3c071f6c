"""Exact verification of symmetric identities for Euler and Bernoulli polynomials.

Everything is computed over the rationals with exact arithmetic; an identity
is certified by expanding both sides as sparse multivariate polynomials and
checking that their difference has no surviving terms.
"""

from eulersym.mpoly import MultiPoly
from eulersym.identities import IdentitySpec, IdentityReport, verify

__all__ = ["MultiPoly", "IdentitySpec", "IdentityReport", "verify"]
