"""Binary presentations of n and the hypothesis gate.

The gate decides whether a pair (n, p) is covered by the construction: p must
divide n and the binary presentation n = 2^(m_1) + ... + 2^(m_r) must have
r >= 4 terms. With exactly four terms the construction may need the quadratic
extension of GF(p), so the required field degree is 2; with five or more terms
the prime field suffices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenCharacteristicError, NotPrimeError
from .gf import _is_prime

# Structured reason codes carried by HypothesisDecision.reasons.
OK = "Ok"
P_NOT_DIVIDING_N = "PNotDividingN"
R_TOO_SMALL = "RTooSmall"
NEEDS_QUADRATIC_EXTENSION = "NeedsQuadraticExtension"
SMALL_N = "SmallN"  # n < 5: the geometric operations need at least 5 coordinates


@dataclass(frozen=True)
class BinaryProfile:
    """n together with its binary presentation, exponents descending."""

    n: int
    exponents: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.exponents)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(1 << m for m in self.exponents)


@dataclass(frozen=True)
class HypothesisDecision:
    applies: bool
    required_field_degree: int
    reasons: tuple[str, ...]
    n: int
    p: int
    r: int
    available_degree: int

    def to_json(self) -> dict:
        return {
            "applies": self.applies,
            "required_field_degree": self.required_field_degree,
            "reasons": list(self.reasons),
            "n": self.n,
            "p": self.p,
            "r": self.r,
            "available_degree": self.available_degree,
        }


def binary_profile(n: int) -> BinaryProfile:
    """The unique presentation n = sum of distinct powers of two."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    exponents = tuple(m for m in range(n.bit_length() - 1, -1, -1) if (n >> m) & 1)
    return BinaryProfile(n, exponents)


def check_hypotheses(n: int, p: int, available_degree: int = 1) -> HypothesisDecision:
    """Gate decision for (n, p) with a working field GF(p^available_degree).

    applies is true iff p | n and r >= 4; required_field_degree is 2 exactly
    when r = 4. The reasons list carries Ok when the working field already
    suffices (GF(p^2) sits inside GF(p^k) iff k is even), or
    NeedsQuadraticExtension when r = 4 and the available degree is odd.
    Failures collect every code that applies, never just the first.
    """
    if p == 2:
        raise EvenCharacteristicError("characteristic 2 is not supported")
    if not _is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if available_degree < 1:
        raise ValueError("available_degree must be at least 1")
    prof = binary_profile(n)
    r = prof.r
    applies = n % p == 0 and r >= 4
    required = 2 if r == 4 else 1
    reasons: list[str] = []
    if applies:
        if r == 4 and available_degree % 2 == 1:
            reasons.append(NEEDS_QUADRATIC_EXTENSION)
        else:
            reasons.append(OK)
    else:
        if n % p != 0:
            reasons.append(P_NOT_DIVIDING_N)
        if r < 4:
            reasons.append(R_TOO_SMALL)
        if n < 5:
            reasons.append(SMALL_N)
    return HypothesisDecision(
        applies=applies,
        required_field_degree=required,
        reasons=tuple(reasons),
        n=n,
        p=p,
        r=r,
        available_degree=available_degree,
    )
