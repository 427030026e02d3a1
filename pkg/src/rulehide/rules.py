"""Association rules X => Y from frequent itemsets, and the rules-file format."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from rulehide.apriori import FrequentCollection, MiningParams, apriori, apriori_gen, as_fraction
from rulehide.errors import ContractError, ParameterError, ParseError, UndefinedConfidenceError
from rulehide.transactions import Itemset, TransactionDB


class RuleSpec(NamedTuple):
    antecedent: Itemset
    consequent: Itemset

    @property
    def itemset(self) -> Itemset:
        return tuple(sorted(self.antecedent + self.consequent))


@dataclass(frozen=True)
class AssociationRule:
    """A rule with its support count and unreduced confidence pair.

    ``conf_num`` is support(X u Y) and ``conf_den`` is support(X), so
    ``2/4`` stays ``2/4`` when rendered.
    """

    antecedent: Itemset
    consequent: Itemset
    support: int
    conf_num: int
    conf_den: int

    @property
    def confidence(self) -> Fraction:
        return Fraction(self.conf_num, self.conf_den)

    @property
    def spec(self) -> RuleSpec:
        return RuleSpec(self.antecedent, self.consequent)

    @property
    def itemset(self) -> Itemset:
        return tuple(sorted(self.antecedent + self.consequent))

    def sort_key(self):
        return rule_key(self.spec)


def rule_key(spec: RuleSpec):
    x, y = spec
    return (len(x) + len(y), tuple(x), tuple(y))


@dataclass(frozen=True)
class RuleParams:
    mining: MiningParams
    min_confidence: Fraction | float = Fraction(0)

    def __post_init__(self):
        alpha = as_fraction(self.min_confidence)
        if not 0 <= alpha <= 1:
            raise ParameterError(f"min_confidence {self.min_confidence} outside [0, 1]")
        object.__setattr__(self, "min_confidence", alpha)


def confidence(db: TransactionDB, x: Itemset, y: Itemset) -> Fraction:
    if not x or not y or set(x) & set(y):
        raise ContractError("rule sides must be non-empty and disjoint")
    num, den = db.support_counts([tuple(sorted(set(x) | set(y))), x])
    if den == 0:
        raise UndefinedConfidenceError(f"antecedent {x} has zero support")
    return Fraction(num, den)


def _meets(num: int, den: int, alpha: Fraction) -> bool:
    return num * alpha.denominator >= alpha.numerator * den


def _split(itemset: Itemset, consequent: Itemset) -> Itemset:
    drop = set(consequent)
    return tuple(i for i in itemset if i not in drop)


def _rules_from(itemset: Itemset, support: int, supports: dict[Itemset, int],
                alpha: Fraction, shortcut: bool) -> list[AssociationRule]:
    def lookup(x):
        try:
            return supports[x]
        except KeyError:
            raise ContractError(f"subset {x} of frequent {itemset} is not frequent") from None

    out = []
    if not shortcut:
        for k in range(1, len(itemset)):
            for x in combinations(itemset, k):
                den = lookup(x)
                if _meets(support, den, alpha):
                    out.append(AssociationRule(x, _split(itemset, x), support, support, den))
        return out
    # grow consequents; a failing consequent rules out all its supersets
    consequents = [(i,) for i in itemset]
    while consequents and len(consequents[0]) < len(itemset):
        kept = []
        for y in consequents:
            x = _split(itemset, y)
            den = lookup(x)
            if _meets(support, den, alpha):
                kept.append(y)
                out.append(AssociationRule(x, y, support, support, den))
        consequents = apriori_gen(kept) if kept else []
    return out


def mine_rules(freq: FrequentCollection, db: TransactionDB, params: RuleParams,
               shortcut: bool = True) -> list[AssociationRule]:
    """Every rule x => I - x over frequent I with confidence >= min_confidence.

    ``shortcut`` enables consequent pruning; the output is the same either way.
    """
    supports = freq.supports
    itemsets = list(supports)
    if itemsets and db.support_counts(itemsets) != list(supports.values()):
        raise ContractError("frequent itemsets are stale for this database")
    alpha = params.min_confidence
    rules = []
    for f in freq:
        if len(f.itemset) >= 2:
            rules.extend(_rules_from(f.itemset, f.support, supports, alpha, shortcut))
    rules.sort(key=AssociationRule.sort_key)
    return rules


def strong_rules(db: TransactionDB, params: RuleParams) -> list[AssociationRule]:
    return mine_rules(apriori(db, params.mining), db, params)


def parse_rules(text: str, db: TransactionDB) -> list[RuleSpec]:
    """Parse ``A B -> C`` lines; ``#`` lines and blank lines are skipped."""
    specs = []
    for lineno, line in enumerate(text.split("\n"), 1):
        if line.startswith("#") or not line.strip():
            continue
        lhs, arrow, rhs = line.partition("->")
        if not arrow or "->" in rhs:
            raise ParseError("expected exactly one '->'", lineno)
        x_names, y_names = lhs.split(), rhs.split()
        if not x_names or not y_names:
            raise ParseError("empty rule side", lineno)
        try:
            x, y = db.itemset(x_names), db.itemset(y_names)
        except ContractError as exc:
            raise ParseError(str(exc), lineno) from None
        if set(x) & set(y):
            raise ParseError("antecedent and consequent overlap", lineno)
        specs.append(RuleSpec(x, y))
    return specs


def format_rule(db: TransactionDB, rule: RuleSpec | AssociationRule) -> str:
    return f"{' '.join(db.names(rule.antecedent))} -> {' '.join(db.names(rule.consequent))}"


def format_rules(db: TransactionDB, rules: list[AssociationRule], decimals: bool = False) -> str:
    lines = []
    for r in rules:
        line = f"{format_rule(db, r)} support={r.support} conf={r.conf_num}/{r.conf_den}"
        if decimals:
            line += f" ({float(r.confidence):.4f})"
        lines.append(line + "\n")
    return "".join(lines)
