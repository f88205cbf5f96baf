"""Enumeration of formal operation words up to degree and weight bounds."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Tuple

from .operations import (
    BROWDER_EE,
    E,
    Bigrading,
    DLApplication,
    OperationWord,
    admissible_s,
    apply_dl,
    base_bigrading,
    check_dim,
    check_prime,
    parse_word,
    word_bigrading,
)

FORMAL_S_CAVEAT = (
    "basis model: all formal Dyer-Lashof words passing the per-application "
    "constraints; dimensions at weight >= p^2 may overcount the true basis, "
    "stability ranges are unaffected"
)


@dataclass(frozen=True)
class EnumerationBounds:
    max_degree: int
    max_weight: int

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        if self.max_weight < 1:
            raise ValueError("max_weight must be >= 1")

    def contains(self, b: Bigrading) -> bool:
        return b.degree <= self.max_degree and b.weight <= self.max_weight

    def __le__(self, other: "EnumerationBounds") -> bool:
        return self.max_degree <= other.max_degree and self.max_weight <= other.max_weight


@dataclass(frozen=True)
class AdmissibilityMode:
    """Which formal words count as generators.

    ``predicate`` sees the whole word and its bigrading; ``None`` keeps every
    word that passes the per-application constraints.  Base classes are
    always kept.
    """

    name: str
    predicate: Optional[Callable[[OperationWord, Bigrading], bool]] = field(default=None, compare=False)

    @property
    def caveat(self) -> str:
        if self.predicate is None:
            return FORMAL_S_CAVEAT
        return f"basis model: caller-supplied predicate '{self.name}'"


FORMAL_S = AdmissibilityMode("formal")


def custom_mode(predicate, name="custom") -> AdmissibilityMode:
    return AdmissibilityMode(name, predicate)


def base_classes(n: int) -> Tuple[OperationWord, ...]:
    check_dim(n)
    return (E,) if n % 2 else (E, BROWDER_EE)


def sort_key(item):
    word, b = item
    return (b.weight, b.degree, word.encoding())


@dataclass(frozen=True)
class GeneratorSet:
    generators: Tuple[Tuple[OperationWord, Bigrading], ...]
    n: int
    p: int
    bounds: EnumerationBounds
    mode: AdmissibilityMode = FORMAL_S

    def __iter__(self) -> Iterator[Tuple[OperationWord, Bigrading]]:
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __contains__(self, word) -> bool:
        return any(w == word for w, _ in self.generators)

    @property
    def words(self):
        return [w for w, _ in self.generators]

    def bigrading(self, word: OperationWord) -> Bigrading:
        for w, b in self.generators:
            if w == word:
                return b
        raise KeyError(str(word))

    def restrict(self, bounds: EnumerationBounds) -> "GeneratorSet":
        if not bounds <= self.bounds:
            raise ValueError("can only restrict to smaller bounds")
        kept = tuple(g for g in self.generators if bounds.contains(g[1]))
        return GeneratorSet(kept, self.n, self.p, bounds, self.mode)

    def to_text(self, header: bool = True) -> str:
        lines = ["weight\tdegree\tword"] if header else []
        lines += [f"{b.weight}\t{b.degree}\t{w}" for w, b in self.generators]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "bounds": {"max_degree": self.bounds.max_degree, "max_weight": self.bounds.max_weight},
            "mode": self.mode.name,
            "caveat": self.mode.caveat,
            "generators": [
                {"word": str(w), "weight": b.weight, "degree": b.degree, "parity": b.parity}
                for w, b in self.generators
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict, mode: AdmissibilityMode = FORMAL_S) -> "GeneratorSet":
        n, p = data["n"], data["p"]
        gens = []
        for g in data["generators"]:
            w = parse_word(g["word"])
            gens.append((w, word_bigrading(w, n, p)))
        bounds = EnumerationBounds(data["bounds"]["max_degree"], data["bounds"]["max_weight"])
        return cls(tuple(sorted(gens, key=sort_key)), n, p, bounds, mode)


def _extend(word, b, n, p, bounds, out):
    # every operation raises both degree and weight, so pruning a prefix
    # outside the bounds never loses a word
    out.append((word, b))
    if p * b.weight > bounds.max_weight:
        return
    for s in admissible_s(b, n):
        for bock in (True, False):
            app = DLApplication(bock, s)
            nb = apply_dl(app, b, p)
            if nb.degree <= bounds.max_degree:
                _extend(word.then(app), nb, n, p, bounds, out)


def _first_steps(n, p, bounds):
    for base in base_classes(n):
        b = base_bigrading(base.base, n)
        if not bounds.contains(b):
            continue
        yield base, b, None
        if p * b.weight > bounds.max_weight:
            continue
        for s in admissible_s(b, n):
            for bock in (True, False):
                app = DLApplication(bock, s)
                nb = apply_dl(app, b, p)
                if nb.degree <= bounds.max_degree:
                    yield base.then(app), nb, app


def enumerate_generators(
    n: int,
    p: int,
    bounds: EnumerationBounds,
    mode: AdmissibilityMode = FORMAL_S,
    workers: int = 1,
) -> GeneratorSet:
    """All words over the base classes whose bigrading lies within ``bounds``.

    The search is split on the first application; ``workers > 1`` runs the
    branches in a thread pool.  Output order is by weight, degree, encoding.
    """
    check_dim(n)
    check_prime(p)
    found = []
    branches = []
    for word, b, first in _first_steps(n, p, bounds):
        if first is None:
            found.append((word, b))
        else:
            branches.append((word, b))

    def run(branch):
        out = []
        _extend(branch[0], branch[1], n, p, bounds, out)
        return out

    if workers > 1 and len(branches) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, branches))
    else:
        parts = [run(br) for br in branches]
    for part in parts:
        found.extend(part)

    if mode.predicate is not None:
        found = [(w, b) for w, b in found if w.length == 0 or mode.predicate(w, b)]
    gens = tuple(sorted(set(found), key=sort_key))
    return GeneratorSet(gens, n, p, bounds, mode)
