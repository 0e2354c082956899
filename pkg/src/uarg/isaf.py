"""Rule-incomplete and premise-incomplete structured frameworks.

A rule-incomplete framework fixes the knowledge base and leaves a subset of
rules uncertain; a premise-incomplete framework does the opposite.  Each
subset of the uncertain part induces a completion (a plain structured
framework); lifting every completion to its abstract defeat graph and
deduplicating yields the completion set all expressivity comparisons run on.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from .aspic import (
    SAF,
    ArgumentationTheory,
    Rule,
    StructuredArgument,
    _argument_of_theory,
    associated_af,
    defeats,
    generate_arguments,
    validate_theory,
)
from .config import DEFAULT_LIMITS, Limits
from .core import AbstractAF
from .errors import (
    ArgumentNotOfTheoryError,
    InvalidTheoryError,
    PreferenceUnknownArgumentError,
    UncertaintyBoundExceededError,
)
from .incomplete import ArgIAF, CompletionSet, DepArgIAF


@dataclass(frozen=True)
class RulISAF:
    """Structured framework whose rule set splits into certain and
    uncertain parts; theory.rules holds the union."""

    theory: ArgumentationTheory
    uncertain_rules: frozenset[Rule]
    preferences: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        stray = self.uncertain_rules - self.theory.rules
        if stray:
            raise InvalidTheoryError(
                f"uncertain rules not in the rule set: {sorted(map(repr, stray))}")

    @property
    def fixed_rules(self) -> frozenset[Rule]:
        return self.theory.rules - self.uncertain_rules


@dataclass(frozen=True)
class PremISAF:
    """Structured framework whose knowledge base splits into certain and
    uncertain parts; axiom/ordinary status is fixed metadata."""

    theory: ArgumentationTheory
    uncertain_axioms: frozenset[str] = field(default_factory=frozenset)
    uncertain_premises: frozenset[str] = field(default_factory=frozenset)
    preferences: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        stray = (self.uncertain_axioms - self.theory.axioms) | (
            self.uncertain_premises - self.theory.premises)
        if stray:
            raise InvalidTheoryError(
                f"uncertain knowledge not in the knowledge base: {sorted(stray)}")

    @property
    def fixed_axioms(self) -> frozenset[str]:
        return self.theory.axioms - self.uncertain_axioms

    @property
    def fixed_premises(self) -> frozenset[str]:
        return self.theory.premises - self.uncertain_premises

    @property
    def uncertain_knowledge(self) -> frozenset[str]:
        return self.uncertain_axioms | self.uncertain_premises


def _check_bound(count: int, limits: Limits) -> None:
    if count > limits.max_uncertain:
        raise UncertaintyBoundExceededError(
            f"{count} uncertain elements exceed the bound {limits.max_uncertain}")


def _restrict_preferences(preferences: frozenset[tuple[str, str]],
                          arguments: tuple[StructuredArgument, ...],
                          ) -> frozenset[tuple[str, str]]:
    texts = {arg.text for arg in arguments}
    return frozenset((a, b) for a, b in preferences
                     if a in texts and b in texts)


def _validate_base(theory: ArgumentationTheory,
                   preferences: frozenset[tuple[str, str]],
                   arguments: tuple[StructuredArgument, ...]) -> None:
    texts = {arg.text for arg in arguments}
    for a, b in preferences:
        if a not in texts or b not in texts:
            missing = a if a not in texts else b
            raise PreferenceUnknownArgumentError(
                f"declared preference names an argument outside the maximal "
                f"completion: {missing!r}")


def saf_max(x: RulISAF | PremISAF, limits: Limits = DEFAULT_LIMITS,
            validate: bool = True) -> SAF:
    """Maximal completion: all uncertain rules/premises accepted."""
    if validate:
        validate_theory(x.theory)
    arguments = generate_arguments(x.theory, limits, validate=False)
    if validate:
        _validate_base(x.theory, x.preferences, arguments)
    return SAF(x.theory, _restrict_preferences(x.preferences, arguments))


def _completion_theory(x: RulISAF | PremISAF, chosen: frozenset,
                       ) -> ArgumentationTheory:
    if isinstance(x, RulISAF):
        rules = x.fixed_rules | chosen
        naming = {rule: name for rule, name in x.theory.naming.items()
                  if rule in rules}
        return replace(x.theory, rules=frozenset(rules), naming=naming)
    axioms = x.fixed_axioms | (chosen & x.uncertain_axioms)
    premises = x.fixed_premises | (chosen & x.uncertain_premises)
    # The naming function stays untouched for premise-completions.
    return replace(x.theory, axioms=frozenset(axioms),
                   premises=frozenset(premises))


def _uncertain_elements(x: RulISAF | PremISAF) -> list:
    if isinstance(x, RulISAF):
        return sorted(x.uncertain_rules, key=Rule.sort_key)
    return sorted(x.uncertain_knowledge)


def _completion_items(x: RulISAF | PremISAF, limits: Limits,
                      validate: bool = True,
                      ) -> list[tuple[SAF, tuple[StructuredArgument, ...]]]:
    """One (completion, generated arguments) pair per uncertainty subset,
    in subset-mask order."""
    if validate:
        validate_theory(x.theory)
        args_max = generate_arguments(x.theory, limits, validate=False)
        _validate_base(x.theory, x.preferences, args_max)
    elements = _uncertain_elements(x)
    _check_bound(len(elements), limits)
    items = []
    for mask in range(1 << len(elements)):
        chosen = frozenset(elements[i] for i in range(len(elements))
                           if mask >> i & 1)
        theory = _completion_theory(x, chosen)
        arguments = generate_arguments(theory, limits, validate=False)
        saf = SAF(theory, _restrict_preferences(x.preferences, arguments))
        items.append((saf, arguments))
    return items


def rule_completions(r: RulISAF, limits: Limits = DEFAULT_LIMITS) -> tuple[SAF, ...]:
    """All 2^|uncertain rules| completions, with naming restricted to the
    surviving rules and preferences to the generated arguments."""
    return tuple(saf for saf, _ in _completion_items(r, limits))


def premise_completions(p: PremISAF,
                        limits: Limits = DEFAULT_LIMITS) -> tuple[SAF, ...]:
    """One completion per pair of subsets of the uncertain axioms and the
    uncertain ordinary premises (status is preserved)."""
    return tuple(saf for saf, _ in _completion_items(p, limits))


def saf_fixed(x: RulISAF | PremISAF, limits: Limits = DEFAULT_LIMITS) -> SAF:
    """Minimal completion: all uncertainty discarded."""
    validate_theory(x.theory)
    theory = _completion_theory(x, frozenset())
    arguments = generate_arguments(theory, limits, validate=False)
    return SAF(theory, _restrict_preferences(x.preferences, arguments))


def _abstract_completions(x: RulISAF | PremISAF, limits: Limits,
                          ) -> list[AbstractAF]:
    return [associated_af(saf, arguments, limits, validate=False)
            for saf, arguments in _completion_items(x, limits)]


def completions_rul(r: RulISAF, limits: Limits = DEFAULT_LIMITS) -> CompletionSet:
    """Abstract completion set; distinct rule subsets may induce the same
    graph, so the set can be smaller than 2^|uncertain rules|."""
    return CompletionSet(_abstract_completions(r, limits))


def completions_prem(p: PremISAF,
                     limits: Limits = DEFAULT_LIMITS) -> CompletionSet:
    return CompletionSet(_abstract_completions(p, limits))


def _as_argument_group(x) -> tuple[StructuredArgument, ...]:
    if isinstance(x, StructuredArgument):
        return (x,)
    return tuple(x)


def uncertain_rules_of(r: RulISAF,
                       x: StructuredArgument | Iterable[StructuredArgument],
                       ) -> frozenset[Rule]:
    """Uncertain rules occurring in the argument (or in any argument of the
    group)."""
    out: set[Rule] = set()
    for argument in _as_argument_group(x):
        if not _argument_of_theory(r.theory, argument):
            raise ArgumentNotOfTheoryError(
                f"argument {argument.text} is not generated by the maximal "
                "completion")
        out.update(argument.rules_used & r.uncertain_rules)
    return frozenset(out)


def uncertain_premises_of(p: PremISAF,
                          x: StructuredArgument | Iterable[StructuredArgument],
                          ) -> frozenset[str]:
    """Uncertain knowledge-base formulas among the argument's premises."""
    out: set[str] = set()
    for argument in _as_argument_group(x):
        if not _argument_of_theory(p.theory, argument):
            raise ArgumentNotOfTheoryError(
                f"argument {argument.text} is not generated by the maximal "
                "completion")
        out.update(argument.premises & p.uncertain_knowledge)
    return frozenset(out)


def is_tidy(p: PremISAF) -> bool:
    """No formula is both in the knowledge base and the head of a rule with
    an empty body."""
    premiseless_heads = {rule.head for rule in p.theory.rules if not rule.body}
    return not (p.theory.knowledge_base & premiseless_heads)


def defeat_coherence_check(x: RulISAF | PremISAF,
                           limits: Limits = DEFAULT_LIMITS) -> bool:
    """Any two completions agree on defeats between shared arguments.

    This always holds for valid frameworks; the operation exists as an
    executable oracle for that claim.
    """
    afs = _abstract_completions(x, limits)
    for i, left in enumerate(afs):
        left_args = left.arg_set
        for right in afs[i + 1:]:
            shared = left_args & right.arg_set
            left_shared = {(s, t) for s, t in left.defeats
                           if s in shared and t in shared}
            right_shared = {(s, t) for s, t in right.defeats
                            if s in shared and t in shared}
            if left_shared != right_shared:
                return False
    return True


def completion_set_of(framework, limits: Limits = DEFAULT_LIMITS) -> CompletionSet:
    """Completion set of any supported framework kind."""
    from .incomplete import completions_arg_iaf, completions_dep

    if isinstance(framework, AbstractAF):
        return CompletionSet([framework])
    if isinstance(framework, ArgIAF):
        return completions_arg_iaf(framework, limits)
    if isinstance(framework, DepArgIAF):
        return completions_dep(framework, limits)
    if isinstance(framework, RulISAF):
        return completions_rul(framework, limits)
    if isinstance(framework, PremISAF):
        return completions_prem(framework, limits)
    if isinstance(framework, SAF):
        return CompletionSet([associated_af(framework, limits=limits)])
    raise TypeError(f"unsupported framework type: {type(framework).__name__}")
