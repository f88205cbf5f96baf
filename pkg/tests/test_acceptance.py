"""Exit criteria.  Each test records one PASS/FAIL line, printed at the end of the module.

Run alone with ``pytest tests/test_acceptance.py``.
"""

import time
from fractions import Fraction

import pytest

from confstab import (
    ComplementProfile,
    EnumerationBounds,
    RangeFunction,
    certify_range,
    certify_range_by_induction,
    check_theorem_range,
    empirical_range,
    empirical_ranges,
    enumerate_generators,
    hilbert_by_enumeration,
    hilbert_by_product,
    is_unstable,
    rational_table,
    verify_unstable_facts,
)
from confstab.operations import E
from confstab.oracle import c2_oracle
from confstab.stability import SAMPLED_PRIMES_CAVEAT, monotonicity_violations, z_half_check

GRID_N = range(3, 9)
GRID_P = (3, 5, 7)
GRID_BOUNDS = EnumerationBounds(30, 30)

_results = []


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    lines = [f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}" for name, ok, detail in _results]
    if reporter is not None:
        reporter.write_line("")
        reporter.write_line("acceptance summary")
        for line in lines:
            reporter.write_line(line)
    else:
        print("\n".join(lines))


def record(name, ok, detail=""):
    _results.append((name, ok, detail))
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def grid():
    return {(n, p): enumerate_generators(n, p, GRID_BOUNDS) for n in GRID_N for p in GRID_P}


@pytest.fixture(scope="module")
def grid_tables(grid):
    return {key: hilbert_by_product(gens) for key, gens in grid.items()}


def test_ac1_dual_engine_equivalence():
    start = time.perf_counter()
    bad = []
    for n in (3, 4, 5, 6):
        for p in (3, 5):
            gens = enumerate_generators(n, p, EnumerationBounds(20, 20))
            a, b = hilbert_by_enumeration(gens), hilbert_by_product(gens)
            if not a.same_entries(b):
                bad.append((n, p, a.diff(b)[:3]))
    elapsed = time.perf_counter() - start
    record("AC1 dual-engine equivalence", not bad and elapsed < 60,
           f"8 tables at D=K=20, mismatches={bad}, {elapsed:.2f}s (< 60s)")


def test_ac2_unstable_lemma_suite(grid):
    bad = []
    for (n, p), gens in grid.items():
        nontrivial = [(w, b) for w, b in gens if w != E]
        bad += [(n, p, str(w)) for w, b in nontrivial if not is_unstable(b)]
        rep = verify_unstable_facts(gens)
        for fact in ("i", "ii", "iii"):
            if rep.counterexamples[fact]:
                bad.append((n, p, fact, rep.counterexamples[fact][:2]))
    record("AC2 unstable-lemma suite", not bad,
           f"n in 3..8, p in {GRID_P}, D=K=30, counterexamples={bad}")


def test_ac3_slope_one_at_rn(grid_tables):
    bad = []
    for (n, p), t in grid_tables.items():
        for k in range(20):
            r = empirical_range(t, k)
            if r < k:
                bad.append((n, p, k, r))
        mono = monotonicity_violations(t)
        if mono:
            bad.append((n, p, "monotonicity", mono[:3]))
    record("AC3 range i <= k at R^n and dimension monotonicity", not bad,
           f"k <= 19 on {len(grid_tables)} tables, failures={bad}")


def test_ac4_rp_oracle(grid_tables):
    bad = []
    for n in GRID_N:
        for coeff in (3, 5, 7, "Q"):
            t = grid_tables[(n, coeff)] if coeff != "Q" else rational_table(n, GRID_BOUNDS)
            if t.column(2) != c2_oracle(n, coeff):
                bad.append((n, coeff, t.column(2)))
    record("AC4 weight-2 column equals H_*(RP^(n-1))", not bad, f"n in 3..8, coeff in 3,5,7,Q, mismatches={bad}")


def test_ac5_certifier_recovers_slope_one(grid_tables):
    ident = RangeFunction.linear(1, 100)
    bad = []
    for n in (3, 4, 6, 8):
        cert = certify_range(ident, ComplementProfile.from_codim(n, 1), 100)
        if cert.certified.to_list() != list(range(101)):
            bad.append(("closed form", n))
    inputs = [ident, RangeFunction.linear(Fraction(5, 2), 30), RangeFunction.linear(Fraction(7, 5), 30),
              empirical_ranges(grid_tables[(4, 3)]), empirical_ranges(grid_tables[(6, 5)])]
    for rf in inputs:
        for n, q in ((3, 1), (4, 2), (6, 2), (6, 5)):
            prof = ComplementProfile.from_codim(n, q)
            a, b = certify_range(rf, prof, 29), certify_range_by_induction(rf, prof, 29)
            if a.certified.r != b.certified.r:
                bad.append(("induction", n, q))
    for q in (1, 2):
        prof = ComplementProfile.from_codim(6, q)
        if certify_range(ident, prof, 30).certified.r != certify_range_by_induction(ident, prof, 30).certified.r:
            bad.append(("induction k<=30", q))
    record("AC5 certifier gives r(k)=k; closed form == downward induction", not bad, f"failures={bad}")


def test_ac6_remark_slopes():
    start = time.perf_counter()
    prof = ComplementProfile.from_codim(6, 2)
    rational = certify_range(RangeFunction.linear(Fraction(5, 2), 10_000), prof, 10_000).slope_at(10_000)
    modp = certify_range(RangeFunction.linear(Fraction(3, 3), 10_000), prof, 10_000).slope_at(10_000)
    elapsed = time.perf_counter() - start
    ok = abs(rational - 2) <= 0.02 and abs(modp - 1) <= 0.01 and elapsed < 5
    record("AC6 codimension-2 slopes", ok,
           f"rational {rational:.4f} (target 2), F_3 {modp:.4f} (target 1) at k=10^4, {elapsed:.2f}s (< 5s)")


def test_ac7_dimension_two_half_slope():
    t = rational_table(2, EnumerationBounds(30, 30))
    one = check_theorem_range(t)
    fails_at_1_1 = any(c["i"] == 1 and c["k"] == 1 for c in one.counterexamples)
    half_ok = all(empirical_range(t, k) >= k // 2 for k in range(20))
    record("AC7 n=2 rational: i <= k fails at (1,1), i <= k/2 holds", (not one.passed) and fails_at_1_1 and half_ok,
           f"slope-1 counterexamples={one.counterexamples}, half-slope k<=19 {'ok' if half_ok else 'fails'}")


def test_ac8_z_half_assembly():
    details, ok = [], True
    for n in (3, 4):
        rep = z_half_check(n, EnumerationBounds(20, 20), primes=(3, 5, 7, 11))
        has_caveat = SAMPLED_PRIMES_CAVEAT in rep.caveats and "sampled primes only" in rep.caveats[0]
        ok = ok and rep.passed and has_caveat
        details.append(f"n={n} pass={rep.passed} caveat={has_caveat}")
    record("AC8 Z[1/2] report over primes 3,5,7,11 + Q", ok, ", ".join(details))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
