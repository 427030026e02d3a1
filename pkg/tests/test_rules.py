from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rulehide import (
    ContractError, MiningParams, ParameterError, ParseError, RuleParams, TransactionDB, apriori,
    brute_force_frequent, confidence, mine_rules, parse_rules,
)
from rulehide.rules import format_rules

import oracles

small_rows = st.lists(st.sets(st.sampled_from("abcdef"), max_size=6), max_size=12)
alphas = st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(1)])


def as_dict(db, rules):
    return {(frozenset(db.names(r.antecedent)), frozenset(db.names(r.consequent))):
            (r.conf_num, r.conf_den) for r in rules}


def d5_rules(d5, alpha):
    params = RuleParams(MiningParams(min_count=2), alpha)
    return mine_rules(apriori(d5, params.mining), d5, params)


def test_d5_alpha_07(d5):
    rules = d5_rules(d5, 0.7)
    got = {(x, y): c for (x, y), c in as_dict(d5, rules).items()}
    expected = oracles.rules(oracles.rows_of(d5), 2, Fraction(7, 10))
    assert got == expected
    assert len(rules) == 6
    assert all(r.confidence == Fraction(3, 4) for r in rules)
    assert [(d5.names(r.antecedent), d5.names(r.consequent)) for r in rules] == [
        (("A",), ("B",)), (("A",), ("C",)), (("B",), ("A",)),
        (("B",), ("C",)), (("C",), ("A",)), (("C",), ("B",))]


def test_d5_alpha_zero_and_one(d5):
    assert len(d5_rules(d5, 0)) == 12
    assert d5_rules(d5, 1.0) == []


def test_confidence(d5):
    assert confidence(d5, d5.itemset("A"), d5.itemset("B")) == Fraction(3, 4)
    db = TransactionDB.from_names([["A", "B"], ["C"]])
    assert confidence(db, db.itemset("A"), db.itemset("B")) == 1
    db2 = TransactionDB.from_names([["A"], ["B"]], items=["A", "B", "Z"])
    with pytest.raises(ContractError):
        confidence(db2, db2.itemset("Z"), db2.itemset("A"))
    with pytest.raises(ContractError):
        confidence(d5, d5.itemset("A"), d5.itemset("A"))


def test_bad_alpha():
    with pytest.raises(ParameterError):
        RuleParams(MiningParams(min_count=1), 1.1)


def test_stale_frequents_rejected(d5):
    params = RuleParams(MiningParams(min_count=2), 0.5)
    freq = apriori(d5, params.mining)
    d5.delete_item(1, 0)
    with pytest.raises(ContractError):
        mine_rules(freq, d5, params)


def test_parse_rules(d5):
    assert parse_rules("A -> B\n", d5) == [((0,), (1,))]
    assert parse_rules("A B -> C\n# note\n", d5) == [((0, 1), (2,))]


@pytest.mark.parametrize("text, line", [
    ("A -> A\n", 1), ("A -> B\n -> C\n", 2), ("A -> Q\n", 1), ("A B\n", 1), ("A -> B -> C\n", 1),
])
def test_parse_rules_errors(d5, text, line):
    with pytest.raises(ParseError) as info:
        parse_rules(text, d5)
    assert info.value.line == line


def test_format_rules(d5):
    text = format_rules(d5, d5_rules(d5, 0.7)[:1], decimals=True)
    assert text == "A -> B support=3 conf=3/4 (0.7500)\n"


@settings(max_examples=120)
@given(small_rows, st.integers(1, 4), alphas)
def test_rules_match_brute_force(rows, threshold, alpha):
    db = TransactionDB.from_names(rows)
    params = RuleParams(MiningParams(min_count=threshold), alpha)
    fast = mine_rules(apriori(db, params.mining), db, params)
    slow = mine_rules(apriori(db, params.mining), db, params, shortcut=False)
    from_oracle = mine_rules(brute_force_frequent(db, params.mining), db, params)
    assert fast == slow == from_oracle
    assert as_dict(db, fast) == oracles.rules(oracles.rows_of(db), threshold, alpha)
    assert fast == sorted(fast, key=lambda r: r.sort_key())
    for r in fast:
        assert r.support >= threshold and r.confidence >= alpha


@settings(max_examples=50)
@given(small_rows)
def test_rule_count_per_itemset_at_alpha_zero(rows):
    db = TransactionDB.from_names(rows)
    params = RuleParams(MiningParams(min_count=1), 0)
    freq = apriori(db, params.mining)
    rules = mine_rules(freq, db, params)
    assert len(rules) == sum(2 ** len(f.itemset) - 2 for f in freq if len(f.itemset) >= 2)
