"""Side effects of sanitization: hidden, lost and new (ghost) rules."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from rulehide.apriori import apriori
from rulehide.errors import ContractError, ParseError
from rulehide.hiding import HidingParams
from rulehide.rules import AssociationRule, RuleSpec, mine_rules
from rulehide.transactions import TransactionDB

SECTIONS = ("hidden", "failed", "lost", "new")


@dataclass
class SideEffectReport:
    items: tuple[str, ...] = ()
    hidden_rules: list[AssociationRule] = field(default_factory=list)
    failed_rules: list[AssociationRule] = field(default_factory=list)
    lost_rules: list[AssociationRule] = field(default_factory=list)
    new_rules: list[AssociationRule] = field(default_factory=list)
    # frequent-itemset counts per level, index 0 is level 1
    levels_before: list[int] = field(default_factory=list)
    levels_after: list[int] = field(default_factory=list)
    deletions: int = 0
    total_items: int = 0

    @property
    def distortion_ratio(self) -> Fraction:
        return Fraction(self.deletions, self.total_items) if self.total_items else Fraction(0)

    def section(self, name: str) -> list[AssociationRule]:
        return getattr(self, f"{name}_rules")


def compare(original: TransactionDB, sanitized: TransactionDB, params: HidingParams,
            sensitive: Iterable[RuleSpec] = ()) -> SideEffectReport:
    """Mine both databases at the public thresholds and diff the results.

    Sensitive rules never minable from ``original`` land in no section.
    """
    if original.items != sanitized.items:
        raise ContractError("databases have different item dictionaries")
    if original.n != sanitized.n:
        raise ContractError(f"databases differ in size: {original.n} vs {sanitized.n}")
    deletions = 0
    for tid, (before, after) in enumerate(zip(original, sanitized), 1):
        if not set(after) <= set(before):
            raise ContractError(f"transaction {tid} gained items")
        deletions += len(before) - len(after)

    rule_params = params.rule_params
    freq_before = apriori(original, params.mining)
    freq_after = apriori(sanitized, params.mining)
    before = {r.spec: r for r in mine_rules(freq_before, original, rule_params)}
    after = {r.spec: r for r in mine_rules(freq_after, sanitized, rule_params)}
    secret = {RuleSpec(*s) for s in sensitive}

    report = SideEffectReport(
        items=original.items,
        levels_before=[len(level) for level in freq_before.levels],
        levels_after=[len(level) for level in freq_after.levels],
        deletions=deletions,
        total_items=original.total_items(),
    )
    for spec, rule in before.items():
        if spec in after:
            if spec in secret:
                report.failed_rules.append(after[spec])
        elif spec in secret:
            report.hidden_rules.append(rule)
        else:
            report.lost_rules.append(rule)
    report.new_rules = [r for spec, r in after.items() if spec not in before]
    # a sensitive rule absent before but minable after is also a failure
    report.failed_rules.extend(r for r in report.new_rules if r.spec in secret)
    for name in SECTIONS:
        report.section(name).sort(key=AssociationRule.sort_key)
    return report


def _rule_line(items: Sequence[str], rule: AssociationRule) -> str:
    x = " ".join(items[i] for i in rule.antecedent)
    y = " ".join(items[i] for i in rule.consequent)
    return f"{x} -> {y} support={rule.support} conf={rule.conf_num}/{rule.conf_den}\n"


def render_report(report: SideEffectReport) -> str:
    """Header of ``key=value`` lines, then one ``# <section>`` block per rule set.

    Hidden and lost rules carry their original counts; failed and new rules
    carry the sanitized ones.
    """
    out = [f"{name}={len(report.section(name))}\n" for name in SECTIONS]
    out.append(f"deletions={report.deletions}\n")
    out.append(f"distortion_ratio={float(report.distortion_ratio):.6f}\n")
    out.append(f"frequent_before={sum(report.levels_before)}\n")
    out.append(f"frequent_after={sum(report.levels_after)}\n")
    for k in range(max(len(report.levels_before), len(report.levels_after))):
        b = report.levels_before[k] if k < len(report.levels_before) else 0
        a = report.levels_after[k] if k < len(report.levels_after) else 0
        out.append(f"level_{k + 1}={b}/{a}\n")
    for name in SECTIONS:
        out.append(f"# {name}\n")
        out.extend(_rule_line(report.items, r) for r in report.section(name))
    return "".join(out)


def parse_report(text: str) -> tuple[dict[str, str], dict[str, list[tuple]]]:
    """Inverse of :func:`render_report` at the level of item names.

    Rule entries come back as ``(x_names, y_names, support, (num, den))``.
    """
    header: dict[str, str] = {}
    sections: dict[str, list[tuple]] = {name: [] for name in SECTIONS}
    current = None
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line:
            continue
        if line.startswith("# "):
            current = line[2:]
            if current not in sections:
                raise ParseError(f"unknown section {current!r}", lineno)
            continue
        if current is None:
            key, eq, value = line.partition("=")
            if not eq:
                raise ParseError("expected key=value", lineno)
            header[key] = value
            continue
        body, support, conf = line.rsplit(" ", 2)
        lhs, _, rhs = body.partition(" -> ")
        num, den = conf.removeprefix("conf=").split("/")
        sections[current].append((tuple(lhs.split()), tuple(rhs.split()),
                                  int(support.removeprefix("support=")), (int(num), int(den))))
    return header, sections
