import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from confstab import (
    BROWDER_EE,
    EnumerationBounds,
    HilbertTable,
    OutOfBounds,
    enumerate_generators,
    hilbert_by_enumeration,
    hilbert_by_product,
    monomial_basis,
    rational_table,
)
from confstab.hilbert import rational_by_product
from confstab.oracle import c2_oracle


def brute_force_table(gens):
    """Dimensions from every multiplicity vector, exterior generators capped at 1."""
    D, K = gens.bounds.max_degree, gens.bounds.max_weight
    items = [b for _, b in gens]
    ranges = [range(2) if b.is_odd else range(K // b.weight + 1) for b in items]
    counts = {}
    for mult in itertools.product(*ranges):
        i = sum(m * b.degree for m, b in zip(mult, items))
        k = sum(m * b.weight for m, b in zip(mult, items))
        if i <= D and k <= K:
            counts[(i, k)] = counts.get((i, k), 0) + 1
    return counts


def test_monomial_basis_examples():
    gens = enumerate_generators(4, 3, EnumerationBounds(10, 6))
    basis = monomial_basis(gens, 3, 3)
    assert {tuple((str(w), m) for w, m in mono.factors) for mono in basis} == {
        (("e", 1), ("L(e,e)", 1)),
        (("bQ1 e", 1),),
    }
    assert [str(m) for m in monomial_basis(gens, 0, 5)] == ["(e)^5"]
    assert monomial_basis(gens, 6, 4) == []
    assert [str(m) for m in monomial_basis(gens, 0, 0)] == ["1"]
    with pytest.raises(OutOfBounds):
        monomial_basis(gens, 11, 1)
    with pytest.raises(OutOfBounds):
        monomial_basis(gens, 0, 7)


def test_exterior_square_excluded():
    gens = enumerate_generators(4, 3, EnumerationBounds(12, 6))
    for i in range(13):
        for k in range(7):
            for mono in monomial_basis(gens, i, k):
                for w, m in mono.factors:
                    if gens.bigrading(w).is_odd:
                        assert m == 1
    assert BROWDER_EE in gens
    assert not any(mono.multiplicity(BROWDER_EE) == 2 for mono in monomial_basis(gens, 6, 4))


def test_enumeration_columns():
    t = hilbert_by_enumeration(enumerate_generators(3, 3, EnumerationBounds(20, 9)))
    assert t.column(3) == {0: 1, 3: 1, 4: 1}
    t5 = hilbert_by_enumeration(enumerate_generators(5, 3, EnumerationBounds(20, 9)))
    assert t5.column(2) == {0: 1}
    t4 = hilbert_by_enumeration(enumerate_generators(4, 3, EnumerationBounds(20, 9)))
    assert t4.column(2) == {0: 1, 3: 1} == c2_oracle(4, 3)


def test_product_examples():
    only_e = enumerate_generators(3, 3, EnumerationBounds(5, 2))
    assert hilbert_by_product(only_e).entries == {(0, 0): 1, (0, 1): 1, (0, 2): 1}
    t = rational_by_product(4, EnumerationBounds(10, 8))
    assert t.entries == {**{(0, k): 1 for k in range(9)}, **{(3, k): 1 for k in range(2, 9)}}


@pytest.mark.parametrize("n,p,D,K", [(3, 3, 10, 9), (3, 3, 20, 20), (4, 3, 14, 10), (6, 5, 30, 15), (5, 5, 30, 15), (8, 5, 30, 15)])
def test_engines_match_brute_force(n, p, D, K):
    gens = enumerate_generators(n, p, EnumerationBounds(D, K))
    expected = brute_force_table(gens)
    assert hilbert_by_enumeration(gens).entries == expected
    assert hilbert_by_product(gens).entries == expected


def test_n3_p3_frozen_values():
    # values frozen from brute_force_table on the (20, 20) generator set
    t = hilbert_by_product(enumerate_generators(3, 3, EnumerationBounds(20, 20)))
    assert t.column(6) == {0: 1, 3: 1, 4: 1, 7: 1, 8: 1}
    assert t.column(9) == {0: 1, 3: 1, 4: 1, 7: 1, 8: 1, 10: 1, 11: 2, 12: 1, 14: 1, 15: 2, 16: 1}
    assert t.column(10) == t.column(9)
    assert t.dim(13, 10) == 0


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("p", [3, 5])
def test_table_invariants(n, p, gens_cache):
    gens = gens_cache(n, p, 20, 20)
    t = hilbert_by_product(gens)
    assert t.same_entries(hilbert_by_enumeration(gens))
    for k in range(21):
        assert t.dim(0, k) == 1
    for (i, k), d in t.entries.items():
        assert d > 0 and i <= n * k
    for k in range(20):
        for i in range(21):
            assert t.dim(i, k) <= t.dim(i, k + 1)
    assert t.caveat and "overcount" in t.caveat


def test_rational_table():
    t5 = rational_table(5, EnumerationBounds(20, 10))
    assert set(t5.entries) == {(0, k) for k in range(11)}
    t4 = rational_table(4, EnumerationBounds(20, 10))
    assert t4.column(2) == {0: 1, 3: 1} == c2_oracle(4, "Q")
    assert t4.column(1) == {0: 1}
    for n in range(2, 10):
        b = EnumerationBounds(3 * n, 12)
        assert rational_table(n, b).same_entries(rational_by_product(n, b))


def test_truncation_stability(gens_cache):
    big = hilbert_by_product(gens_cache(6, 3, 30, 30))
    small = hilbert_by_product(gens_cache(6, 3, 30, 30).restrict(EnumerationBounds(18, 14)))
    for (i, k), d in small.entries.items():
        assert big.dim(i, k) == d
    for (i, k), d in big.entries.items():
        if i <= 18 and k <= 14:
            assert small.dim(i, k) == d


def test_serialization():
    t = hilbert_by_product(enumerate_generators(4, 3, EnumerationBounds(8, 2)))
    assert t.to_tsv() == "0\t0\t1\n0\t1\t1\n0\t2\t1\n3\t2\t1\n"
    data = json.loads(t.to_json())
    assert data["metadata"] == {
        "n": 4, "p": 3, "D": 8, "K": 2, "mode": "formal", "provenance": "product", "caveat": t.caveat,
    }
    assert HilbertTable.from_json(t.to_json()).same_entries(t)
    assert json.loads(rational_table(4, EnumerationBounds(8, 2)).to_json())["metadata"]["p"] == "Q"


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8), st.sampled_from([3, 5, 7]), st.integers(0, 30), st.integers(1, 30))
def test_dual_engine_property(n, p, D, K):
    gens = enumerate_generators(n, p, EnumerationBounds(D, K))
    assert hilbert_by_enumeration(gens).same_entries(hilbert_by_product(gens))
