"""Homology of real projective space from its cellular chain complex.

RP^d has one cell in each dimension 0..d, with boundary
d_i = 1 + (-1)^i: zero for odd i, multiplication by 2 for even i > 0.
Used as an independent check on the weight-2 column, since C_2(R^n) is
homotopy equivalent to RP^{n-1}.
"""

from __future__ import annotations

from fractions import Fraction

from .operations import is_prime


def _rank_1x1(value: int, coeff) -> int:
    if coeff == "Q":
        return int(Fraction(value) != 0)
    return int(value % coeff != 0)


def rp_homology(d: int, coeff) -> dict:
    """dim H_i(RP^d; F) for F = F_p (any prime p) or Q, nonzero entries only."""
    if d < 0:
        raise ValueError("dimension must be >= 0")
    if coeff != "Q" and not (isinstance(coeff, int) and is_prime(coeff)):
        raise ValueError(f"coefficients must be a prime or 'Q', got {coeff!r}")
    boundary = {i: 1 + (-1) ** i for i in range(1, d + 1)}
    rank = {i: _rank_1x1(v, coeff) for i, v in boundary.items()}
    dims = {}
    for i in range(d + 1):
        h = 1 - rank.get(i, 0) - rank.get(i + 1, 0)
        if h:
            dims[i] = h
    return dims


def c2_oracle(n: int, coeff) -> dict:
    """dim H_i(C_2(R^n); F) via C_2(R^n) ~ RP^{n-1}."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return rp_homology(n - 1, coeff)
