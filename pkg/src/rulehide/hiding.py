"""Weight-based sorting distortion: hide sensitive rules by deleting items.

For each sensitive rule X => Y still minable, the transactions supporting
X u Y are ranked by how much non-sensitive strong-rule weight they carry,
and the first antecedent item is deleted from the lowest-ranked ones until
the rule's confidence drops under ``min_confidence - safety_margin`` or its
support under the mining threshold.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from rulehide.apriori import MiningParams, as_fraction
from rulehide.errors import ContractError, ParameterError, ParseError
from rulehide.rules import AssociationRule, RuleParams, RuleSpec, format_rule, strong_rules
from rulehide.transactions import TransactionDB

WEIGHT_MODES = ("confidence", "unit")


@dataclass(frozen=True)
class HidingParams:
    mining: MiningParams
    min_confidence: Fraction | float
    safety_margin: Fraction | float = Fraction(0)
    weight: str = "confidence"

    def __post_init__(self):
        alpha = as_fraction(self.min_confidence)
        margin = as_fraction(self.safety_margin)
        if not 0 <= alpha <= 1:
            raise ParameterError(f"min_confidence {self.min_confidence} outside [0, 1]")
        if margin < 0:
            raise ParameterError(f"safety_margin {self.safety_margin} is negative")
        if alpha - margin <= 0:
            raise ParameterError(
                f"hiding target min_confidence - safety_margin = {alpha - margin} must be > 0")
        if self.weight not in WEIGHT_MODES:
            raise ParameterError(f"weight must be one of {WEIGHT_MODES}, got {self.weight!r}")
        object.__setattr__(self, "min_confidence", alpha)
        object.__setattr__(self, "safety_margin", margin)

    @property
    def target(self) -> Fraction:
        return self.min_confidence - self.safety_margin

    @property
    def rule_params(self) -> RuleParams:
        return RuleParams(self.mining, self.min_confidence)


@dataclass(frozen=True, order=True)
class TransactionPriority:
    priority: Fraction
    tid: int


@dataclass(frozen=True)
class Modification:
    step: int
    tid: int
    item: int
    rule: RuleSpec


@dataclass
class HidingStep:
    """One selection pass: the ranked candidates and the chosen prefix."""

    rule_index: int
    sweep: int
    ranking: list[TransactionPriority]
    selected: list[int]


@dataclass
class RuleOutcome:
    rule: RuleSpec
    initial: tuple[int, int]
    final: tuple[int, int]
    touched: list[int] = field(default_factory=list)
    already_hidden: bool = False


@dataclass
class SanitizationResult:
    db: TransactionDB
    modifications: list[Modification]
    outcomes: list[RuleOutcome]
    steps: list[HidingStep]

    @property
    def already_hidden(self) -> list[RuleSpec]:
        return [o.rule for o in self.outcomes if o.already_hidden]


def _is_hidden(a: int, b: int, target: Fraction, threshold: int) -> bool:
    # 0/0 means the rule no longer exists
    return a < threshold or b == 0 or a * target.denominator < target.numerator * b


def hiding_count(db: TransactionDB, rule: RuleSpec, target, threshold: int = 1) -> int:
    """Fewest antecedent deletions (among X u Y supporters) that hide ``rule``.

    Each deletion lowers both support(X u Y) and support(X) by one, so the
    confidence (a - k) / (b - k) never increases and k = a always works.
    """
    target = as_fraction(target)
    if target <= 0:
        raise ParameterError(f"hiding target {target} must be > 0")
    x, _ = rule
    a, b = db.support_counts([RuleSpec(*rule).itemset, x])
    if b == 0:
        raise ContractError(f"antecedent {x} has zero support")
    for k in range(a + 1):
        if _is_hidden(a - k, b - k, target, threshold):
            return k
    raise AssertionError("unreachable: k = a always hides the rule")


def rule_weight(rule: AssociationRule, mode: str = "confidence") -> Fraction:
    """Strength of a rule: its confidence, or 1 for every rule in ``unit`` mode."""
    return rule.confidence if mode == "confidence" else Fraction(1)


def transaction_priorities(db: TransactionDB, strong: Iterable[AssociationRule],
                           sensitive: Iterable[RuleSpec], candidate_tids: Sequence[int],
                           weight: str = "confidence") -> list[TransactionPriority]:
    """Rank candidates by summed weight of non-sensitive strong rules they support."""
    skip = {RuleSpec(*s) for s in sensitive}
    totals = {tid: Fraction(0) for tid in candidate_tids}
    for rule in strong:
        if rule.spec in skip:
            continue
        w = rule_weight(rule, weight)
        for tid in db.supporting_tids(rule.itemset):
            if tid in totals:
                totals[tid] += w
    return sorted(TransactionPriority(p, tid) for tid, p in totals.items())


def sanitize(db: TransactionDB, sensitive: Sequence[RuleSpec],
             params: HidingParams) -> SanitizationResult:
    """Return a sanitized copy of ``db`` in which no sensitive rule is minable.

    Rules are processed in order against the current state of the copy, and
    strong rules are re-mined after every rule that caused deletions. Passes
    over the rule list repeat until one makes no deletion.
    """
    sensitive = [RuleSpec(*s) for s in sensitive]
    for s in sensitive:
        if not s.antecedent or not s.consequent or set(s.antecedent) & set(s.consequent):
            raise ParseError(f"malformed sensitive rule {s}")
        for item in s.itemset:
            if not 0 <= item < db.m:
                raise ParseError(f"sensitive rule {s} references unknown item id {item}")
    work = db.copy()
    threshold = params.mining.threshold(db.n)
    target = params.target
    strong = strong_rules(work, params.rule_params)
    mods: list[Modification] = []
    outcomes: list[RuleOutcome] = []
    steps: list[HidingStep] = []

    for rule in sensitive:
        a, b = work.support_counts([rule.itemset, rule.antecedent])
        outcomes.append(RuleOutcome(rule, (a, b), (a, b)))

    # later rules can lift an earlier rule back over the target by deleting a
    # shared antecedent item, so sweep until a full pass deletes nothing
    changed, sweep = True, 0
    while changed:
        changed, sweep = False, sweep + 1
        for index, rule in enumerate(sensitive):
            outcome = outcomes[index]
            victim = rule.antecedent[0]
            touched = len(outcome.touched)
            while not _is_hidden(*work.support_counts([rule.itemset, rule.antecedent]),
                                 target, threshold):
                k = hiding_count(work, rule, target, threshold)
                ranking = transaction_priorities(
                    work, strong, sensitive, work.supporting_tids(rule.itemset), params.weight)
                chosen = [p.tid for p in ranking[:k]]
                steps.append(HidingStep(index, sweep, ranking, chosen))
                for tid in chosen:
                    work.delete_item(tid, victim)
                    mods.append(Modification(len(mods) + 1, tid, victim, rule))
                    outcome.touched.append(tid)
            if len(outcome.touched) > touched:
                changed = True
                strong = strong_rules(work, params.rule_params)

    for outcome in outcomes:
        rule = outcome.rule
        outcome.final = tuple(work.support_counts([rule.itemset, rule.antecedent]))
        outcome.already_hidden = not outcome.touched
    return SanitizationResult(work, mods, outcomes, steps)


def unhidden_rules(db: TransactionDB, sensitive: Iterable[RuleSpec],
                   params: HidingParams) -> list[RuleSpec]:
    """Sensitive rules still minable at (threshold, min_confidence - margin)."""
    threshold = params.mining.threshold(db.n)
    out = []
    for rule in sensitive:
        rule = RuleSpec(*rule)
        a, b = db.support_counts([rule.itemset, rule.antecedent])
        if not _is_hidden(a, b, params.target, threshold):
            out.append(rule)
    return out


def replay(db: TransactionDB, modifications: Iterable[Modification]) -> TransactionDB:
    out = db.copy()
    for mod in modifications:
        out.delete_item(mod.tid, mod.item)
    return out


LOG_HEADER = "# step\ttid\titem\trule\n"


def format_log(db: TransactionDB, modifications: Iterable[Modification]) -> str:
    lines = [LOG_HEADER]
    for mod in modifications:
        lines.append(f"{mod.step}\t{mod.tid}\t{db.items[mod.item]}\t{format_rule(db, mod.rule)}\n")
    return "".join(lines)


def parse_log(text: str, db: TransactionDB) -> list[Modification]:
    from rulehide.rules import parse_rules

    mods = []
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise ParseError("expected 4 tab-separated fields", lineno)
        try:
            step, tid = int(fields[0]), int(fields[1])
            (item,) = db.itemset([fields[2]])
            (rule,) = parse_rules(fields[3], db)
        except (ValueError, ContractError) as exc:
            raise ParseError(str(exc), lineno) from None
        mods.append(Modification(step, tid, item, rule))
    return mods
