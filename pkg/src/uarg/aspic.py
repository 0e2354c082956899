"""Structured argumentation core: argumentation theories, inductive
argument generation, attacks, preference-filtered defeats, and the lifting
of a structured framework to its abstract defeat graph.

Canonical argument serialization (injective and APX-safe):

* a premise argument is its formula token;
* an inference argument is ``[`` + sub-argument serializations joined by
  ``;`` in sorted order + ``]`` + ``=s>`` or ``=d>`` + head token.

Sub-arguments are compared as sets, so the sorted form is canonical.  The
delimiters ``[ ] ;`` are excluded from formula tokens, which keeps the
serialization injective and lets serialized arguments double as abstract
argument identifiers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    ArgumentNotOfTheoryError,
    GenerationLimitExceededError,
    InvalidTheoryError,
    PreferenceUnknownArgumentError,
)

STRICT = "strict"
DEFEASIBLE = "defeasible"

UNDERMINE = "undermine"
REBUT = "rebut"
UNDERCUT = "undercut"

_FORBIDDEN_FORMULA_CHARS = set("(),.[];")


def is_valid_formula(token: str) -> bool:
    if not token or not token.isprintable():
        return False
    return not any(ch.isspace() or ch in _FORBIDDEN_FORMULA_CHARS
                   for ch in token)


def check_formula(token: str) -> str:
    if not is_valid_formula(token):
        raise ValueError(f"invalid formula token: {token!r}")
    return token


def negate(token: str) -> str:
    """Classical-negation convention on tokens: a leading ~ is negation."""
    return token[1:] if token.startswith("~") else "~" + token


@dataclass(frozen=True)
class Rule:
    body: frozenset[str]
    head: str
    kind: str

    def __init__(self, body: Iterable[str], head: str, kind: str):
        if kind not in (STRICT, DEFEASIBLE):
            raise ValueError(f"rule kind must be strict or defeasible: {kind!r}")
        object.__setattr__(self, "body", frozenset(body))
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "kind", kind)

    @property
    def is_strict(self) -> bool:
        return self.kind == STRICT

    def sort_key(self) -> tuple:
        return (self.kind, self.head, tuple(sorted(self.body)))

    def __repr__(self) -> str:
        arrow = "=s>" if self.is_strict else "=d>"
        return f"[{';'.join(sorted(self.body))}]{arrow}{self.head}"


@dataclass(frozen=True, eq=True)
class ArgumentationTheory:
    """Language, contrariness, rules, rule naming, and the split knowledge
    base (axioms are not underminable; ordinary premises are)."""

    formulas: frozenset[str]
    contraries: frozenset[tuple[str, str]]  # (phi, psi): phi in contrary-set of psi
    rules: frozenset[Rule]
    naming: Mapping[Rule, str]
    axioms: frozenset[str]
    premises: frozenset[str]

    @property
    def knowledge_base(self) -> frozenset[str]:
        return self.axioms | self.premises

    def contrary_sets(self) -> dict[str, frozenset[str]]:
        """Map each formula to its contrary-set {phi : phi contrary of it}."""
        out: dict[str, set[str]] = {}
        for phi, psi in self.contraries:
            out.setdefault(psi, set()).add(phi)
        return {k: frozenset(v) for k, v in out.items()}


def make_theory(contraries: Iterable[tuple[str, str]] = (),
                rules: Iterable[Rule] = (),
                naming: Mapping[Rule, str] | None = None,
                axioms: Iterable[str] = (),
                premises: Iterable[str] = (),
                formulas: Iterable[str] = (),
                close_negation: bool = False) -> ArgumentationTheory:
    """Assemble a theory, inferring the language from everything referenced.
    close_negation adds the classical contradictory pair (phi,~phi) for each
    formula, extending the language with the missing negations."""
    naming = dict(naming or {})
    rules = frozenset(rules)
    contraries = set(contraries)
    referenced: set[str] = set(formulas)
    referenced.update(axioms)
    referenced.update(premises)
    referenced.update(naming.values())
    for rule in rules:
        referenced.add(rule.head)
        referenced.update(rule.body)
    for phi, psi in contraries:
        referenced.update((phi, psi))
    if close_negation:
        for phi in list(referenced):
            referenced.add(negate(phi))
            contraries.add((phi, negate(phi)))
            contraries.add((negate(phi), phi))
    theory = ArgumentationTheory(
        formulas=frozenset(referenced),
        contraries=frozenset(contraries),
        rules=rules,
        naming=naming,
        axioms=frozenset(axioms),
        premises=frozenset(premises),
    )
    validate_theory(theory)
    return theory


def validate_theory(theory: ArgumentationTheory) -> None:
    for phi in theory.formulas:
        if not is_valid_formula(phi):
            raise InvalidTheoryError(f"invalid formula token: {phi!r}")
    overlap = theory.axioms & theory.premises
    if overlap:
        raise InvalidTheoryError(
            f"formulas cannot be both axiom and ordinary premise: "
            f"{sorted(overlap)}")
    referenced = set(theory.axioms) | set(theory.premises)
    for rule in theory.rules:
        referenced.add(rule.head)
        referenced.update(rule.body)
    for rule, name in theory.naming.items():
        if rule not in theory.rules or rule.is_strict:
            raise InvalidTheoryError(
                f"naming is only defined for defeasible rules of the theory: "
                f"{rule!r}")
        referenced.add(name)
    for phi, psi in theory.contraries:
        referenced.update((phi, psi))
    stray = referenced - theory.formulas
    if stray:
        raise InvalidTheoryError(
            f"formulas referenced but not in the language: {sorted(stray)}")
    pairs = theory.contraries
    for phi in theory.formulas:
        if not any((phi, psi) in pairs and (psi, phi) in pairs
                   for psi in theory.formulas):
            raise InvalidTheoryError(
                f"formula {phi!r} has no contradictory; add contrary pairs "
                "or enable close_negation")


class StructuredArgument:
    """Finite inference tree: a premise leaf or an inference node applying
    a rule to one sub-argument per body formula."""

    __slots__ = ("premise", "rule", "subs", "text", "conc", "height",
                 "_prems", "_sub_closure", "_rules")

    def __init__(self, premise: str | None, rule: Rule | None,
                 subs: tuple["StructuredArgument", ...]):
        self.premise = premise
        self.rule = rule
        self.subs = subs
        if premise is not None:
            self.text = premise
            self.conc = premise
            self.height = 1
        else:
            inner = ";".join(sub.text for sub in subs)
            arrow = "=s>" if rule.is_strict else "=d>"
            self.text = f"[{inner}]{arrow}{rule.head}"
            self.conc = rule.head
            self.height = 1 + max((sub.height for sub in subs), default=0)
        self._prems = None
        self._sub_closure = None
        self._rules = None

    @property
    def is_premise(self) -> bool:
        return self.premise is not None

    @property
    def top_rule(self) -> Rule | None:
        return self.rule

    @property
    def premises(self) -> frozenset[str]:
        if self._prems is None:
            if self.is_premise:
                self._prems = frozenset((self.premise,))
            else:
                out: set[str] = set()
                for sub in self.subs:
                    out.update(sub.premises)
                self._prems = frozenset(out)
        return self._prems

    @property
    def sub_arguments(self) -> frozenset["StructuredArgument"]:
        """The closure Sub(A): this argument plus all nested sub-arguments."""
        if self._sub_closure is None:
            out: set[StructuredArgument] = {self}
            for sub in self.subs:
                out.update(sub.sub_arguments)
            self._sub_closure = frozenset(out)
        return self._sub_closure

    @property
    def rules_used(self) -> frozenset[Rule]:
        if self._rules is None:
            out: set[Rule] = set()
            for sub in self.sub_arguments:
                if sub.rule is not None:
                    out.add(sub.rule)
            self._rules = frozenset(out)
        return self._rules

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StructuredArgument) and self.text == other.text

    def __hash__(self) -> int:
        return hash(self.text)

    def __lt__(self, other: "StructuredArgument") -> bool:
        return self.text < other.text

    def __repr__(self) -> str:
        return self.text


def premise_argument(formula: str) -> StructuredArgument:
    return StructuredArgument(formula, None, ())


def inference_argument(rule: Rule,
                       subs: Iterable[StructuredArgument]) -> StructuredArgument:
    subs = tuple(sorted(subs, key=lambda a: a.text))
    concs = {sub.conc for sub in subs}
    if concs != rule.body or len(subs) != len(rule.body):
        raise ValueError(
            f"sub-argument conclusions {sorted(concs)} do not fit rule body "
            f"{sorted(rule.body)}")
    return StructuredArgument(None, rule, subs)


def is_premiseless(argument: StructuredArgument) -> bool:
    return not argument.premises


def is_simple(argument: StructuredArgument) -> bool:
    """A bare premise, or a single empty-body rule application."""
    return argument.is_premise or not argument.subs


def generate_arguments(theory: ArgumentationTheory,
                       limits: Limits = DEFAULT_LIMITS,
                       validate: bool = True) -> tuple[StructuredArgument, ...]:
    """Least fixpoint of the formation clauses, sorted by serialization.

    Inference nodes take exactly one sub-argument per body formula.  Hitting
    max_arguments or max_depth raises: a silently truncated argument set
    would corrupt every completion-level result downstream.
    """
    if validate:
        validate_theory(theory)
    known: dict[str, StructuredArgument] = {}
    by_conc: dict[str, list[StructuredArgument]] = {}

    def add(arg: StructuredArgument) -> bool:
        if arg.text in known:
            return False
        if arg.height > limits.max_depth:
            raise GenerationLimitExceededError(
                f"argument height exceeds max_depth={limits.max_depth}; the "
                "rule set admits unboundedly deep arguments")
        known[arg.text] = arg
        by_conc.setdefault(arg.conc, []).append(arg)
        if len(known) > limits.max_arguments:
            raise GenerationLimitExceededError(
                f"more than max_arguments={limits.max_arguments} arguments")
        return True

    new_round: list[StructuredArgument] = []
    for phi in sorted(theory.knowledge_base):
        arg = premise_argument(phi)
        if add(arg):
            new_round.append(arg)
    rules = sorted(theory.rules, key=Rule.sort_key)
    for rule in rules:
        if not rule.body:
            arg = StructuredArgument(None, rule, ())
            if add(arg):
                new_round.append(arg)
    body_rules = [(rule, sorted(rule.body)) for rule in rules if rule.body]
    while new_round:
        fresh = {arg.text for arg in new_round}
        new_round = []
        for rule, body in body_rules:
            provers = [by_conc.get(phi) for phi in body]
            if not all(provers):
                continue
            for combo in _product(provers):
                if not any(sub.text in fresh for sub in combo):
                    continue
                arg = StructuredArgument(
                    None, rule, tuple(sorted(combo, key=lambda a: a.text)))
                if add(arg):
                    new_round.append(arg)
    return tuple(known[text] for text in sorted(known))


def _product(pools: list[list[StructuredArgument]]):
    # itertools.product over snapshots: pools grow while iterating rounds,
    # so freeze them first.
    from itertools import product

    return product(*[list(pool) for pool in pools])


@dataclass(frozen=True)
class AttackInstance:
    attacker: StructuredArgument
    attacked: StructuredArgument
    kind: str
    locus: StructuredArgument


def _argument_of_theory(theory: ArgumentationTheory,
                        argument: StructuredArgument) -> bool:
    if argument.is_premise:
        return argument.premise in theory.knowledge_base
    if argument.rule not in theory.rules:
        return False
    return all(_argument_of_theory(theory, sub) for sub in argument.subs)


def _check_of_theory(theory: ArgumentationTheory,
                     argument: StructuredArgument) -> None:
    if not _argument_of_theory(theory, argument):
        raise ArgumentNotOfTheoryError(
            f"argument {argument.text} is not generated by the theory")


def _vulnerable_loci(theory: ArgumentationTheory,
                     attacked: StructuredArgument,
                     ) -> list[tuple[str, StructuredArgument, str]]:
    """(kind, locus, guarded formula) triples: the points where the argument
    can be attacked and the formula whose contrary-set matters there."""
    loci = []
    for phi in sorted(attacked.premises):
        if phi in theory.premises:
            loci.append((UNDERMINE, premise_argument(phi), phi))
    for part in sorted(attacked.sub_arguments, key=lambda a: a.text):
        if part.rule is not None and not part.rule.is_strict:
            loci.append((REBUT, part, part.conc))
            name = theory.naming.get(part.rule)
            if name is not None:
                loci.append((UNDERCUT, part, name))
    return loci


def attacks(theory: ArgumentationTheory, attacker: StructuredArgument,
            attacked: StructuredArgument) -> frozenset[AttackInstance]:
    """All attack instances from attacker onto attacked, with their loci."""
    _check_of_theory(theory, attacker)
    _check_of_theory(theory, attacked)
    contrary = theory.contrary_sets()
    out = []
    for kind, locus, guard in _vulnerable_loci(theory, attacked):
        if attacker.conc in contrary.get(guard, ()):
            out.append(AttackInstance(attacker, attacked, kind, locus))
    return frozenset(out)


@dataclass(frozen=True, eq=True)
class SAF:
    """Structured argumentation framework: a theory plus a preference
    preorder given as pairs of canonical serializations (a, b) meaning
    a is at most as preferred as b."""

    theory: ArgumentationTheory
    preferences: frozenset[tuple[str, str]] = field(default_factory=frozenset)


def defeats(saf: SAF, arguments: tuple[StructuredArgument, ...] | None = None,
            limits: Limits = DEFAULT_LIMITS, validate: bool = True,
            ) -> frozenset[tuple[StructuredArgument, StructuredArgument]]:
    """Defeat pairs: undercuts always defeat; undermining and rebutting
    defeat unless the attacker is strictly less preferred than the locus."""
    theory = saf.theory
    if arguments is None:
        arguments = generate_arguments(theory, limits, validate=validate)
    texts = {arg.text for arg in arguments}
    for a, b in saf.preferences:
        if a not in texts or b not in texts:
            missing = a if a not in texts else b
            raise PreferenceUnknownArgumentError(
                f"preference pair names a non-generated argument: {missing!r}")
    pref = saf.preferences

    def strictly_less(a: str, b: str) -> bool:
        return (a, b) in pref and (b, a) not in pref

    contrary = theory.contrary_sets()
    by_conc: dict[str, list[StructuredArgument]] = {}
    for arg in arguments:
        by_conc.setdefault(arg.conc, []).append(arg)

    def attackers_of(guard: str) -> list[StructuredArgument]:
        out = []
        for phi in contrary.get(guard, ()):
            out.extend(by_conc.get(phi, ()))
        return out

    result = set()
    for attacked in arguments:
        for kind, locus, guard in _vulnerable_loci(theory, attacked):
            for attacker in attackers_of(guard):
                if kind == UNDERCUT or not strictly_less(attacker.text,
                                                         locus.text):
                    result.add((attacker, attacked))
    return frozenset(result)


def associated_af(saf: SAF,
                  arguments: tuple[StructuredArgument, ...] | None = None,
                  limits: Limits = DEFAULT_LIMITS, validate: bool = True):
    """Abstract framework over canonical serializations of the generated
    arguments, with the defeat relation as edges."""
    from .core import AbstractAF

    if arguments is None:
        arguments = generate_arguments(saf.theory, limits, validate=validate)
    pairs = defeats(saf, arguments, limits, validate=False)
    return AbstractAF((arg.text for arg in arguments),
                      ((a.text, b.text) for a, b in pairs))
