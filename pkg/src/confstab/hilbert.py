"""Bigraded dimensions of the free graded commutative algebra on a generator set.

Two independent engines: explicit monomial enumeration and coefficient
extraction from the truncated product

    prod_{g even} (1 - x^deg t^wt)^-1 * prod_{g odd} (1 + x^deg t^wt).

Weight 0 is included in every table (the empty monomial).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .errors import OutOfBounds
from .generators import EnumerationBounds, GeneratorSet, base_classes
from .operations import OperationWord, base_bigrading, check_dim

ENUMERATION = "enumeration"
PRODUCT = "product"
RATIONAL = "rational-closed-form"

RATIONAL_NOTE = "rational homology from the closed form: e, plus L(e,e) when n is even"

Coeff = Union[int, str]


@dataclass(frozen=True)
class HilbertTable:
    """Sparse map (degree, weight) -> dimension; missing entries are zero."""

    entries: Dict[Tuple[int, int], int]
    valid_degree: int
    valid_weight: int
    provenance: str
    n: int
    coeff: Coeff
    mode: str = "formal"
    caveat: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "entries", {key: v for key, v in sorted(self.entries.items()) if v})

    def dim(self, i: int, k: int) -> int:
        if not (0 <= i <= self.valid_degree and 0 <= k <= self.valid_weight):
            raise OutOfBounds(f"({i}, {k}) outside table bounds ({self.valid_degree}, {self.valid_weight})")
        return self.entries.get((i, k), 0)

    def column(self, k: int) -> Dict[int, int]:
        if not 0 <= k <= self.valid_weight:
            raise OutOfBounds(f"weight {k} outside table bounds")
        return {i: d for (i, kk), d in self.entries.items() if kk == k}

    def same_entries(self, other: "HilbertTable") -> bool:
        return (
            self.entries == other.entries
            and self.valid_degree == other.valid_degree
            and self.valid_weight == other.valid_weight
        )

    def diff(self, other: "HilbertTable") -> List[Tuple[int, int, int, int]]:
        keys = sorted(set(self.entries) | set(other.entries))
        return [(i, k, self.entries.get((i, k), 0), other.entries.get((i, k), 0))
                for i, k in keys if self.entries.get((i, k), 0) != other.entries.get((i, k), 0)]

    def rows(self):
        """(i, k, dim) for nonzero entries, sorted by (k, i)."""
        return [(i, k, d) for (i, k), d in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))]

    def to_tsv(self) -> str:
        return "".join(f"{i}\t{k}\t{d}\n" for i, k, d in self.rows())

    def metadata(self) -> dict:
        return {
            "n": self.n,
            "p": self.coeff,
            "D": self.valid_degree,
            "K": self.valid_weight,
            "mode": self.mode,
            "provenance": self.provenance,
            "caveat": self.caveat,
        }

    def to_json(self) -> str:
        data = {
            "metadata": self.metadata(),
            "entries": [{"i": i, "k": k, "dim": d} for i, k, d in self.rows()],
        }
        return json.dumps(data, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "HilbertTable":
        data = json.loads(text)
        meta = data["metadata"]
        return cls(
            {(e["i"], e["k"]): e["dim"] for e in data["entries"]},
            meta["D"], meta["K"], meta["provenance"], meta["n"], meta["p"], meta["mode"], meta["caveat"],
        )


@dataclass(frozen=True)
class Monomial:
    """Product of generators, with multiplicities; odd generators appear at most once."""

    factors: Tuple[Tuple[OperationWord, int], ...]
    degree: int = field(compare=False)
    weight: int = field(compare=False)

    def multiplicity(self, word: OperationWord) -> int:
        for w, m in self.factors:
            if w == word:
                return m
        return 0

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"({w})" + (f"^{m}" if m > 1 else "") for w, m in self.factors)


def _check_bounds(gens: GeneratorSet, i: int, k: int):
    if not (0 <= i <= gens.bounds.max_degree and 0 <= k <= gens.bounds.max_weight):
        raise OutOfBounds(f"({i}, {k}) outside generator bounds")


def _monomials(gens, i, k):
    """Yield factor tuples of total bigrading exactly (i, k)."""
    items = list(gens)

    def rec(idx, deg, wt, acc):
        if deg == 0 and wt == 0:
            yield tuple(acc)
            return
        if idx == len(items):
            return
        word, b = items[idx]
        max_mult = wt // b.weight
        if b.is_odd:
            max_mult = min(max_mult, 1)
        if b.degree:
            max_mult = min(max_mult, deg // b.degree)
        for m in range(max_mult, 0, -1):
            acc.append((word, m))
            yield from rec(idx + 1, deg - m * b.degree, wt - m * b.weight, acc)
            acc.pop()
        yield from rec(idx + 1, deg, wt, acc)

    yield from rec(0, i, k, [])


def monomial_basis(gens: GeneratorSet, i: int, k: int) -> List[Monomial]:
    _check_bounds(gens, i, k)
    basis = [Monomial(f, i, k) for f in _monomials(gens, i, k)]
    basis.sort(key=lambda mono: [(w.encoding(), m) for w, m in mono.factors])
    return basis


def _caveat(gens):
    return gens.mode.caveat


def hilbert_by_enumeration(gens: GeneratorSet) -> HilbertTable:
    """Count every monomial within the bounds by depth-first search."""
    D, K = gens.bounds.max_degree, gens.bounds.max_weight
    items = list(gens)
    counts: Dict[Tuple[int, int], int] = {}

    def rec(idx, deg, wt):
        if idx == len(items):
            counts[(deg, wt)] = counts.get((deg, wt), 0) + 1
            return
        _, b = items[idx]
        m = 0
        while deg + m * b.degree <= D and wt + m * b.weight <= K:
            rec(idx + 1, deg + m * b.degree, wt + m * b.weight)
            m += 1
            if b.is_odd and m > 1:
                break

    rec(0, 0, 0)
    return HilbertTable(counts, D, K, ENUMERATION, gens.n, gens.p, gens.mode.name, _caveat(gens))


def _truncated_product(factors, D, K):
    # c[k][i]; exact Python ints
    c = [[0] * (D + 1) for _ in range(K + 1)]
    c[0][0] = 1
    for deg, wt, odd in factors:
        if odd:
            # multiply by (1 + x^deg t^wt): descending so each term is used once
            for k in range(K, wt - 1, -1):
                row, src = c[k], c[k - wt]
                for i in range(D, deg - 1, -1):
                    row[i] += src[i - deg]
        else:
            # divide by (1 - x^deg t^wt): ascending accumulates the geometric series
            for k in range(wt, K + 1):
                row, src = c[k], c[k - wt]
                for i in range(deg, D + 1):
                    row[i] += src[i - deg]
    return c


def hilbert_by_product(gens: GeneratorSet) -> HilbertTable:
    D, K = gens.bounds.max_degree, gens.bounds.max_weight
    factors = [(b.degree, b.weight, b.is_odd) for _, b in gens]
    c = _truncated_product(factors, D, K)
    entries = {(i, k): c[k][i] for k in range(K + 1) for i in range(D + 1) if c[k][i]}
    return HilbertTable(entries, D, K, PRODUCT, gens.n, gens.p, gens.mode.name, _caveat(gens))


def rational_table(n: int, bounds: EnumerationBounds) -> HilbertTable:
    check_dim(n)
    D, K = bounds.max_degree, bounds.max_weight
    entries = {(0, k): 1 for k in range(K + 1)}
    if n % 2 == 0 and n - 1 <= D:
        entries.update({(n - 1, k): 1 for k in range(2, K + 1)})
    return HilbertTable(entries, D, K, RATIONAL, n, "Q", "rational", RATIONAL_NOTE)


def rational_by_product(n: int, bounds: EnumerationBounds) -> HilbertTable:
    """The rational table recomputed as a free algebra on the base classes alone."""
    D, K = bounds.max_degree, bounds.max_weight
    factors = []
    for w in base_classes(n):
        b = base_bigrading(w.base, n)
        factors.append((b.degree, b.weight, b.is_odd))
    c = _truncated_product(factors, D, K)
    entries = {(i, k): c[k][i] for k in range(K + 1) for i in range(D + 1) if c[k][i]}
    return HilbertTable(entries, D, K, PRODUCT, n, "Q", "rational", RATIONAL_NOTE)
