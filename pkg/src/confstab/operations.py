"""Bigrading arithmetic for the homology operations on H_*(C(R^n); F_p).

Classes are tracked only through their bigrading (homological degree,
number of particles).  The operations are

* the Pontryagin product, adding degrees and weights;
* Q^s and beta Q^s, defined on H_q when 2s > q and 2s - q <= n, raising the
  degree by 2s(p-1) (resp. 2s(p-1) - 1) and multiplying the weight by p;
* the Browder bracket, adding degrees plus n - 1 and adding weights.

All integers are Python ints, so nothing overflows.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Tuple

from .errors import ConstraintViolation, InvalidBase, InvalidDimension, InvalidPrime

EVEN = "even"
ODD = "odd"


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def check_prime(p) -> int:
    """Return ``p`` if it is an odd prime, else raise InvalidPrime."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidPrime(f"prime must be an integer, got {p!r}")
    if p == 2:
        raise InvalidPrime("p = 2 is not supported: only odd primes")
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    return p


def check_dim(n, minimum: int = 2) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidDimension(f"ambient dimension must be an integer, got {n!r}")
    if n < minimum:
        raise InvalidDimension(f"ambient dimension must be >= {minimum}, got {n}")
    return n


@dataclass(frozen=True, order=True)
class Bigrading:
    degree: int
    weight: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"negative degree {self.degree}")
        if self.weight < 1:
            raise ValueError(f"weight must be positive, got {self.weight}")

    @property
    def parity(self) -> str:
        return ODD if self.degree % 2 else EVEN

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1

    def __iter__(self):
        return iter((self.degree, self.weight))

    def __str__(self):
        return f"({self.degree}, {self.weight}, {self.parity})"


class Base(enum.Enum):
    POINT = "e"
    BROWDER = "L(e,e)"

    @property
    def code(self) -> int:
        return 0 if self is Base.POINT else 1


@dataclass(frozen=True, order=True)
class DLApplication:
    """Q^s, or beta Q^s when ``bockstein`` is set."""

    bockstein: bool
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")

    def __str__(self):
        return ("bQ" if self.bockstein else "Q") + str(self.s)


@dataclass(frozen=True)
class OperationWord:
    """A base class with Dyer-Lashof applications listed innermost-first."""

    base: Base
    applications: Tuple[DLApplication, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "applications", tuple(self.applications))

    def then(self, app: DLApplication) -> "OperationWord":
        return OperationWord(self.base, self.applications + (app,))

    @property
    def length(self) -> int:
        return len(self.applications)

    def encoding(self):
        """Sort key: base, then applications innermost-first as (beta, s)."""
        return (self.base.code, tuple((int(a.bockstein), a.s) for a in self.applications))

    def __str__(self):
        parts = [str(a) for a in reversed(self.applications)]
        parts.append(self.base.value)
        return " ".join(parts)


E = OperationWord(Base.POINT)
BROWDER_EE = OperationWord(Base.BROWDER)

_APP_RE = re.compile(r"^(b?)Q(\d+)$")


def parse_word(text: str) -> OperationWord:
    """Inverse of ``str(word)``, e.g. ``"bQ2 Q1 e"``."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty word")
    try:
        base = Base(tokens[-1])
    except ValueError:
        raise ValueError(f"unknown base symbol {tokens[-1]!r}") from None
    apps = []
    for tok in reversed(tokens[:-1]):
        m = _APP_RE.match(tok)
        if not m:
            raise ValueError(f"cannot parse application {tok!r}")
        apps.append(DLApplication(bool(m.group(1)), int(m.group(2))))
    return OperationWord(base, tuple(apps))


def base_bigrading(base: Base, n: int) -> Bigrading:
    check_dim(n)
    if base is Base.POINT:
        return Bigrading(0, 1)
    if n % 2:
        raise InvalidBase(f"L(e,e) is not a generator for odd n = {n}")
    return Bigrading(n - 1, 2)


def check_application(app: DLApplication, source: Bigrading, n: int, p: int) -> bool:
    # 2s = q is the p-th power, represented as a product instead
    return 2 * app.s > source.degree and 2 * app.s - source.degree <= n


def admissible_s(source: Bigrading, n: int) -> range:
    """All s with 2s > q and 2s - q <= n."""
    return range(source.degree // 2 + 1, (source.degree + n) // 2 + 1)


def apply_dl(app: DLApplication, source: Bigrading, p: int, n: int | None = None) -> Bigrading:
    """Bigrading of Q^s x or beta Q^s x.

    Without ``n`` only the 2s > q half of the constraint can be checked.
    """
    check_prime(p)
    if n is None:
        ok = 2 * app.s > source.degree
    else:
        ok = check_application(app, source, n, p)
    if not ok:
        raise ConstraintViolation(f"{app} is not defined on degree {source.degree}" + (f" for n = {n}" if n else ""))
    degree = source.degree + 2 * app.s * (p - 1) - (1 if app.bockstein else 0)
    return Bigrading(degree, p * source.weight)


def product_bigrading(a: Bigrading, b: Bigrading) -> Bigrading:
    return Bigrading(a.degree + b.degree, a.weight + b.weight)


def browder_bigrading(a: Bigrading, b: Bigrading, n: int) -> Bigrading:
    return Bigrading(a.degree + b.degree + n - 1, a.weight + b.weight)


def word_bigrading(w: OperationWord, n: int, p: int) -> Bigrading:
    check_prime(p)
    b = base_bigrading(w.base, n)
    for idx, app in enumerate(w.applications):
        if not check_application(app, b, n, p):
            raise ConstraintViolation(
                f"application {idx} ({app}) of '{w}' is not defined on {b} for n = {n}", index=idx
            )
        b = apply_dl(app, b, p)
    return b


def is_unstable(b: Bigrading) -> bool:
    return b.degree >= b.weight

