"""Frequent itemset mining and sensitive association rule hiding."""
from rulehide.apriori import (
    FrequentCollection, FrequentItemset, MiningParams, apriori, apriori_gen, brute_force_frequent,
)
from rulehide.errors import (
    ContractError, HidingFailure, ParameterError, ParseError, RulehideError,
    UndefinedConfidenceError,
)
from rulehide.hiding import (
    HidingParams, Modification, SanitizationResult, TransactionPriority, hiding_count, replay,
    rule_weight, sanitize, transaction_priorities,
)
from rulehide.impact import SideEffectReport, compare, render_report
from rulehide.kernels import BACKEND
from rulehide.rules import AssociationRule, RuleParams, RuleSpec, confidence, mine_rules, parse_rules
from rulehide.transactions import TransactionDB, parse_basket, serialize_basket

__version__ = "0.1.0"
