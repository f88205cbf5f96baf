"""Stability ranges for open manifolds M with M - X homeomorphic to R^n.

Only degree bookkeeping: C_k(M) is filtered by the number j of points in X,
and each stratum C_{k-j}(M - X) x C_j(X) contributes a compactly supported
threshold.  Dualizing the worst stratum gives the homology range

    r_M(k) = min_{0 <= j <= k} r(k - j) + q*j,     q = codim X.

``certify_range`` evaluates this closed form; ``certify_range_by_induction``
runs the downward induction over j in cohomological degrees.  They must agree.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import numpy as np

from .errors import OutOfRange
from .operations import admissible_s, Bigrading, check_dim, check_prime
from .stability import CERTIFIED, RangeFunction

TRIVIAL = "trivial"
TWISTED = "twisted"

BOUNDARY_NOTE = (
    "boundary degree: at compactly supported degree n(k+1) - r the five lemma gives only a "
    "surjection; it is counted as stable because t_* is injective on homology"
)
ORIENTATION_NOTE = (
    "orientation: twisted coefficients (odd n or non-orientable M) use the same degree "
    "arithmetic as the trivial case"
)
EXHAUSTION_NOTE = "ranges pass to exhaustions of M by nested open subsets (homology commutes with the colimit)"

# int64 headroom for the vectorized minimum
_UNBOUNDED = 1 << 60
_LIMIT = 1 << 50


@dataclass(frozen=True)
class ComplementProfile:
    n: int
    x_dim: int
    orientation: str = TRIVIAL

    def __post_init__(self):
        check_dim(self.n)
        if not 0 <= self.x_dim <= self.n - 1:
            raise ValueError(f"x_dim must lie in [0, {self.n - 1}], got {self.x_dim}")
        if self.orientation not in (TRIVIAL, TWISTED):
            raise ValueError(f"orientation must be {TRIVIAL!r} or {TWISTED!r}")

    @property
    def q(self) -> int:
        return self.n - self.x_dim

    @classmethod
    def from_codim(cls, n: int, q: int, orientation: str = TRIVIAL) -> "ComplementProfile":
        return cls(n, n - q, orientation)


@dataclass
class Certificate:
    profile: ComplementProfile
    input_range: RangeFunction
    certified: RangeFunction
    trace: List[Optional[int]]
    notes: List[str] = field(default_factory=list)

    def slope_at(self, k: int) -> float:
        r = self.certified.r[k]
        return math.inf if r is None else r / k

    def to_dict(self):
        return {
            "n": self.profile.n,
            "q": self.profile.q,
            "orientation": self.profile.orientation,
            "input_range": self.input_range.to_list(),
            "certified_range": self.certified.to_list(),
            "trace": self.trace,
            "notes": self.notes,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


def dual_degree(i: int, k: int, n: int) -> int:
    """Compactly supported degree on C_{k+1}(M) dual to homological degree i."""
    top = n * (k + 1)
    if not 0 <= i <= top:
        raise OutOfRange(f"degree {i} outside [0, {top}]")
    return top - i


def x_vanishing_bound(x_dim: int, j: int) -> int:
    """H^i_c(C_j(X)) vanishes above this degree."""
    if j < 0:
        raise ValueError("j must be >= 0")
    return x_dim * j


def _notes():
    return [BOUNDARY_NOTE, ORIENTATION_NOTE, EXHAUSTION_NOTE]


def _input_array(input_range: RangeFunction, k_max: int):
    missing = [m for m in range(k_max + 1) if m not in input_range.r]
    if missing:
        raise ValueError(f"input range undefined at k = {missing[:5]}")
    vals = []
    for m in range(k_max + 1):
        v = input_range.r[m]
        if v is None:
            vals.append(_UNBOUNDED)
        elif abs(v) > _LIMIT:
            raise OverflowError(f"input range value {v} too large")
        else:
            vals.append(v)
    return np.array(vals, dtype=np.int64)


def certify_range(
    input_range: RangeFunction,
    profile: ComplementProfile,
    k_max: int,
    j_max: Optional[int] = None,
) -> Certificate:
    """Certified range for M from a range for R^n.

    ``j_max`` caps the number of points allowed in X; ``j_max=0`` returns the
    input unchanged (M = R^n).
    """
    q = profile.q
    if q * k_max > _LIMIT:
        raise OverflowError("k_max too large")
    vals = _input_array(input_range, k_max)
    r, trace = {}, []
    for k in range(k_max + 1):
        top = k if j_max is None else min(k, j_max)
        js = np.arange(top + 1, dtype=np.int64)
        cand = vals[k - js] + q * js
        j = int(np.argmin(cand))
        best = int(cand[j])
        if best >= _UNBOUNDED:
            r[k], j = None, None
        else:
            r[k] = best
        trace.append(j)
    return Certificate(profile, input_range, RangeFunction(r, CERTIFIED), trace, _notes())


def certify_range_by_induction(input_range: RangeFunction, profile: ComplementProfile, k_max: int) -> Certificate:
    """Downward induction on the stratum index j, tracked in cohomological degrees.

    Strata with j > k are empty, so the induction starts with no obstruction
    (threshold -inf).  Stratum j contributes the compactly supported
    threshold of R^n x C_{k-j}(R^n) -> C_{k-j+1}(R^n), shifted up by the
    top nonvanishing degree of C_j(X).
    """
    n, d = profile.n, profile.x_dim
    r, trace = {}, []
    for k in range(k_max + 1):
        threshold, worst = None, None
        for j in range(k, -1, -1):
            rin = input_range.r[k - j]
            if rin is None:
                continue
            stratum = n * (k - j + 1) - rin + x_vanishing_bound(d, j)
            # ties resolve to the smaller j, as in the closed form
            if threshold is None or stratum >= threshold:
                threshold, worst = stratum, j
        r[k] = None if threshold is None else n * (k + 1) - threshold
        trace.append(worst)
    return Certificate(profile, input_range, RangeFunction(r, CERTIFIED), trace, _notes())


def rn_slope(n: int, coeff):
    """Smallest degree/weight ratio among the e-free generators for R^n.

    ``coeff`` is an odd prime or ``"Q"``.  Returns a Fraction, or ``math.inf``
    when only e survives.
    """
    check_dim(n, 3)
    browder = Fraction(n - 1, 2) if n % 2 == 0 else math.inf
    if coeff == "Q":
        return browder
    p = check_prime(coeff)
    ratios = [browder]
    for s in admissible_s(Bigrading(0, 1), n):
        top = 2 * s * (p - 1)
        ratios += [Fraction(top - 1, p), Fraction(top, p)]
    return min(ratios)
