"""Checks of the stability statements against computed tables and generator sets.

Multiplication by e sends basis monomials injectively to basis monomials, so
the cokernel of H_i(C_k) -> H_i(C_{k+1}) has dimension
dim(i, k+1) - dim(i, k): the number of e-free monomials.  No linear algebra
is needed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence

from .errors import MismatchedBounds, OutOfBounds
from .generators import EnumerationBounds, GeneratorSet, enumerate_generators
from .hilbert import HilbertTable, hilbert_by_product, rational_table
from .operations import (
    BROWDER_EE,
    Bigrading,
    DLApplication,
    admissible_s,
    apply_dl,
    is_unstable,
    product_bigrading,
)

EMPIRICAL = "empirical"
CERTIFIED = "certified"
HYPOTHESIS = "hypothesis"

DEFAULT_PRIMES = (3, 5, 7, 11)

SAMPLED_PRIMES_CAVEAT = (
    "sampled primes only: the full Z[1/2] claim requires every odd prime p, "
    "which rests on the generator analysis holding for all p and on the "
    "structure theorem for finitely generated Z[1/2]-modules, not on this computation"
)


@dataclass(frozen=True)
class RangeFunction:
    """Max stable degree r(k) for each weight k.

    Weights in ``clamped`` hit the table validity bound: there the true range
    is only known to be at least r(k).  A value of ``None`` means unbounded.
    """

    r: Dict[int, Optional[int]]
    provenance: str
    clamped: FrozenSet[int] = frozenset()

    def __call__(self, k: int) -> Optional[int]:
        return self.r[k]

    @property
    def k_max(self) -> int:
        return max(self.r)

    def to_list(self):
        return [self.r[k] for k in sorted(self.r)]

    @classmethod
    def linear(cls, slope, k_max: int, provenance=HYPOTHESIS) -> "RangeFunction":
        """r(m) = floor(slope * m); an infinite slope gives r(0) = 0, else unbounded."""
        if slope == math.inf:
            return cls({m: (0 if m == 0 else None) for m in range(k_max + 1)}, provenance)
        slope = Fraction(slope)
        return cls({m: math.floor(slope * m) for m in range(k_max + 1)}, provenance)


@dataclass
class LemmaReport:
    checked: Dict[str, int] = field(default_factory=dict)
    counterexamples: Dict[str, List[str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.counterexamples.values())

    def _add(self, fact, bad=None):
        self.checked[fact] = self.checked.get(fact, 0) + 1
        self.counterexamples.setdefault(fact, [])
        if bad is not None:
            self.counterexamples[fact].append(bad)

    def to_dict(self):
        return {"pass": self.passed, "checked": self.checked, "counterexamples": self.counterexamples}


def verify_unstable_facts(gens: GeneratorSet, injected: Iterable[Bigrading] = ()) -> LemmaReport:
    """Check the three unstable-class facts on an enumerated generator set.

    (i)   length-one words and L(e,e) are unstable;
    (ii)  every admissible Q^s / beta Q^s of an unstable class is unstable;
    (iii) products of unstable classes are unstable.

    ``injected`` bigradings are treated as if they were unstable members of
    the set; use it for negative controls.
    """
    n, p = gens.n, gens.p
    rep = LemmaReport()
    for fact in ("generators", "i", "ii", "iii"):
        rep.checked[fact] = 0
        rep.counterexamples[fact] = []

    for w, b in gens:
        if w.length == 0 and w.base.code == 0:
            continue
        rep._add("generators", None if is_unstable(b) else f"{w} at {b}")
        if w.length == 1 or w == BROWDER_EE:
            rep._add("i", None if is_unstable(b) else f"{w} at {b}")

    pool = sorted({b for _, b in gens if is_unstable(b)} | set(injected))
    for src in pool:
        for s in admissible_s(src, n):
            for bock in (False, True):
                app = DLApplication(bock, s)
                out = apply_dl(app, src, p, n)
                rep._add("ii", None if is_unstable(out) else f"{app} on {src} -> {out}")
    for a, b in combinations_with_replacement(pool, 2):
        out = product_bigrading(a, b)
        rep._add("iii", None if is_unstable(out) else f"{a} * {b} -> {out}")
    return rep


def empirical_range(table: HilbertTable, k: int) -> int:
    """Largest i such that multiplication by e onto weight k+1 is onto in degrees <= i.

    Clamped to the table's degree bound when no cokernel is visible.
    """
    if not 0 <= k or k + 1 > table.valid_weight:
        raise OutOfBounds(f"need k + 1 <= {table.valid_weight}, got k = {k}")
    for i in range(table.valid_degree + 1):
        if table.dim(i, k + 1) > table.dim(i, k):
            return i - 1
    return table.valid_degree


def empirical_ranges(table: HilbertTable) -> RangeFunction:
    r, clamped = {}, set()
    for k in range(table.valid_weight):
        r[k] = empirical_range(table, k)
        if r[k] == table.valid_degree:
            clamped.add(k)
    return RangeFunction(r, EMPIRICAL, frozenset(clamped))


def monotonicity_violations(table: HilbertTable):
    """Entries with dim(i, k) > dim(i, k+1); injectivity of t_* says none exist."""
    bad = []
    for k in range(table.valid_weight):
        for i in range(table.valid_degree + 1):
            if table.dim(i, k) > table.dim(i, k + 1):
                bad.append((i, k))
    return bad


def monotone_range_drops(ranges: RangeFunction):
    """Weights where r(k+1) < r(k).  An observation to report, never an error."""
    ks = sorted(ranges.r)
    return [k for k, k1 in zip(ks, ks[1:]) if ranges.r[k1] < ranges.r[k] and k1 not in ranges.clamped]


def _coeff_label(c):
    return "Q" if c == "Q" else f"F_{c}"


@dataclass
class StabilityReport:
    claim: str
    grid: dict
    passed: bool
    counterexamples: List[dict] = field(default_factory=list)
    caveats: List[str] = field(default_factory=list)
    ranges: Optional[RangeFunction] = None

    def __bool__(self):
        return self.passed

    def to_dict(self):
        d = {
            "claim": self.claim,
            "grid": self.grid,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
            "caveats": self.caveats,
        }
        if self.ranges is not None:
            d["ranges"] = {str(k): v for k, v in self.ranges.r.items()}
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _required(k, slope: Fraction) -> int:
    return math.floor(slope * k)


def check_theorem_range(table: HilbertTable, slope=Fraction(1)) -> StabilityReport:
    """Does t_* hit every class of weight k+1 in degrees <= slope*k?

    Checked for all k with k + 1 <= K and k <= D.
    """
    slope = Fraction(slope)
    ranges = empirical_ranges(table)
    bad = []
    for k in range(min(table.valid_weight - 1, table.valid_degree) + 1):
        need = _required(k, slope)
        if ranges.r[k] < need:
            bad.append({"k": k, "i": ranges.r[k] + 1, "required": need, "range": ranges.r[k]})
    label = "i <= k" if slope == 1 else f"i <= {slope}*k"
    rep = StabilityReport(
        claim=f"H_i(C_k(R^{table.n}); {_coeff_label(table.coeff)}) -> H_i(C_k+1) onto for {label}",
        grid={"n": table.n, "coeff": table.coeff, "D": table.valid_degree, "K": table.valid_weight},
        passed=not bad,
        counterexamples=bad,
        ranges=ranges,
    )
    if table.caveat:
        rep.caveats.append(table.caveat)
    if bad and slope == 1:
        half = check_theorem_range(table, Fraction(1, 2))
        rep.caveats.append(
            "slope 1/2 fallback (i <= k/2): " + ("holds" if half.passed else "also fails") + " on this table"
        )
    return rep


def z_half_report(tables: Sequence[HilbertTable]) -> StabilityReport:
    """Combine F_p and rational range checks into the Z[1/2] statement."""
    tables = list(tables)
    if not tables:
        raise ValueError("no tables given")
    shapes = {(t.n, t.valid_degree, t.valid_weight) for t in tables}
    if len(shapes) != 1:
        raise MismatchedBounds(f"tables disagree on (n, D, K): {sorted(shapes)}")
    (n, D, K), = shapes
    bad, caveats = [], [SAMPLED_PRIMES_CAVEAT]
    for t in tables:
        rep = check_theorem_range(t)
        if not rep.passed:
            bad.append({"coeff": t.coeff, "counterexamples": rep.counterexamples})
    for c in sorted({t.caveat for t in tables if t.caveat}):
        caveats.append(c)
    coeffs = [t.coeff for t in tables]
    return StabilityReport(
        claim=f"H_i(C_k(R^{n}); Z[1/2]) -> H_i(C_k+1) iso for i <= k",
        grid={"n": n, "D": D, "K": K, "coefficients": coeffs},
        passed=not bad,
        counterexamples=bad,
        caveats=caveats,
    )


def prime_table(n, p, bounds: EnumerationBounds, workers=1) -> HilbertTable:
    return hilbert_by_product(enumerate_generators(n, p, bounds, workers=workers))


def z_half_check(n, bounds: EnumerationBounds, primes=DEFAULT_PRIMES, rational=True) -> StabilityReport:
    tables = [prime_table(n, p, bounds) for p in primes]
    if rational:
        tables.append(rational_table(n, bounds))
    return z_half_report(tables)
