import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rulehide import (
    ContractError, MiningParams, ParameterError, TransactionDB, apriori, apriori_gen,
    brute_force_frequent, parse_basket,
)
from rulehide.apriori import FrequentItemset

import oracles

# frozen from oracles.frequent(D5, 2)
D5_FREQUENT = {"A": 4, "B": 4, "C": 4, "AB": 3, "AC": 3, "BC": 3, "ABC": 2}

small_rows = st.lists(st.sets(st.sampled_from("abcdefgh"), max_size=8), max_size=12)


def named(db, freq):
    return {"".join(db.names(f.itemset)): f.support for f in freq}


def test_d5_oracle_value(d5):
    got = {"".join(sorted(s)): c for s, c in oracles.frequent(oracles.rows_of(d5), 2).items()}
    assert got == D5_FREQUENT


def test_d5_count_two(d5):
    freq = apriori(d5, MiningParams(min_count=2))
    assert named(d5, freq) == D5_FREQUENT
    assert len(freq) == 7
    assert freq.scan_count == 4
    assert [[f.itemset for f in level] for level in freq.levels] == [
        [(0,), (1,), (2,)], [(0, 1), (0, 2), (1, 2)], [(0, 1, 2)]]


def test_d5_full_support_is_empty(d5):
    freq = apriori(d5, MiningParams(min_support=1.0))
    assert len(freq) == 0
    assert freq.scan_count == 1


def test_d5_zero_support_floors_at_one(d5):
    freq = apriori(d5, MiningParams(min_support=0))
    assert freq.threshold == 1
    assert named(d5, freq) == {"".join(sorted(s)): c for s, c in
                               oracles.frequent(oracles.rows_of(d5), 1).items()}


@pytest.mark.parametrize("s, n, expected", [
    (Fraction(1, 2), 12, 6), (0.5, 11, 6), (0.7, 10, 7), (0.3, 10, 3), (0, 5, 1), (1, 5, 5),
])
def test_threshold_resolution(s, n, expected):
    assert MiningParams(min_support=s).threshold(n) == expected


@pytest.mark.parametrize("kwargs", [
    {"min_support": 1.5}, {"min_support": -0.1}, {}, {"min_support": 0.5, "min_count": 2},
    {"min_count": -1}, {"min_support": float("nan")},
])
def test_bad_params(kwargs):
    with pytest.raises(ParameterError):
        MiningParams(**kwargs)


def test_apriori_gen_examples():
    assert apriori_gen([(0,), (1,), (2,)]) == [(0, 1), (0, 2), (1, 2)]
    assert apriori_gen([(0, 1), (0, 2), (1, 2)]) == [(0, 1, 2)]
    assert apriori_gen([(0, 1), (2, 3)]) == []
    # join without prune would keep (0, 1, 2)
    assert apriori_gen([(0, 1), (0, 2)]) == []
    assert apriori_gen([FrequentItemset((0,), 3), FrequentItemset((1,), 3)]) == [(0, 1)]


def test_apriori_gen_rejects_mixed_sizes():
    with pytest.raises(ContractError):
        apriori_gen([(0,), (1, 2)])


def test_brute_force_edges():
    assert len(brute_force_frequent(parse_basket(""), MiningParams(min_count=1))) == 0
    single = brute_force_frequent(parse_basket("A\n"), MiningParams(min_count=1))
    assert [(f.itemset, f.support) for f in single] == [((0,), 1)]
    wide = TransactionDB.from_names([[f"i{k}" for k in range(21)]])
    with pytest.raises(ParameterError):
        brute_force_frequent(wide, MiningParams(min_count=1))


@settings(max_examples=150)
@given(small_rows, st.integers(1, 5))
def test_apriori_matches_brute_force(rows, threshold):
    db = TransactionDB.from_names(rows)
    params = MiningParams(min_count=threshold)
    freq = apriori(db, params)
    expected = brute_force_frequent(db, params)
    assert [list(level) for level in freq.levels] == [list(level) for level in expected.levels]
    k_max = freq.max_size
    assert freq.scan_count == (k_max + 1 if k_max else 1)
    members = freq.supports
    for itemset in members:
        for sub in oracles.powerset(itemset):
            assert tuple(sorted(sub)) in members
    for level in freq.levels:
        assert level == sorted(level)


@settings(max_examples=60)
@given(small_rows, st.integers(1, 4))
def test_candidates_cover_next_level(rows, threshold):
    db = TransactionDB.from_names(rows)
    freq = apriori(db, MiningParams(min_count=threshold))
    for k in range(2, freq.max_size + 1):
        cands = set(apriori_gen(freq.level(k - 1)))
        assert {f.itemset for f in freq.level(k)} <= cands


def test_order_and_renaming_invariance():
    rng = random.Random(3)
    for _ in range(30):
        rows = oracles.random_rows(rng)
        base = named(TransactionDB.from_names(rows), apriori(
            TransactionDB.from_names(rows), MiningParams(min_count=2)))
        shuffled = rows[:]
        rng.shuffle(shuffled)
        db2 = TransactionDB.from_names(shuffled)
        assert named(db2, apriori(db2, MiningParams(min_count=2))) == base
        rename = {c: c.upper() for c in "abcdefgh"}
        db3 = TransactionDB.from_names([{rename[x] for x in r} for r in rows])
        got = {k.lower(): v for k, v in named(db3, apriori(db3, MiningParams(min_count=2))).items()}
        assert got == base
