"""Document formats: the theory JSON schema, completion-set documents, and
kind-dispatched framework loading for the CLI.

A completion-set document is a concatenation of AF texts, each section
terminated by a line containing only ``---`` (the terminator after the last
section may be omitted for hand-written files).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .aspic import (
    DEFEASIBLE,
    STRICT,
    SAF,
    Rule,
    is_valid_formula,
    make_theory,
)
from .core import AbstractAF, parse_af, serialize_af
from .errors import InvalidTheoryError, MixedUncertaintyError, ParseError
from .incomplete import ArgIAF, CompletionSet, DepArgIAF, parse_iaf, serialize_iaf
from .isaf import PremISAF, RulISAF
from .translate import PRIME_SUFFIX

FRAMEWORK_KINDS = ("af", "arg-iaf", "dep-arg-iaf", "rul-isaf", "prem-isaf", "saf")


@dataclass
class RuleSpec:
    body: list[str]
    head: str
    kind: str
    status: str = "fixed"
    name: str | None = None


@dataclass
class TheoryDocument:
    contraries: list[tuple[str, str]] = field(default_factory=list)
    close_negation: bool = False
    rules: list[RuleSpec] = field(default_factory=list)
    axioms_fixed: list[str] = field(default_factory=list)
    axioms_uncertain: list[str] = field(default_factory=list)
    premises_fixed: list[str] = field(default_factory=list)
    premises_uncertain: list[str] = field(default_factory=list)
    preferences: list[tuple[str, str]] = field(default_factory=list)
    formulas: list[str] = field(default_factory=list)

    @property
    def has_rule_uncertainty(self) -> bool:
        return any(spec.status == "uncertain" for spec in self.rules)

    @property
    def has_premise_uncertainty(self) -> bool:
        return bool(self.axioms_uncertain or self.premises_uncertain)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidTheoryError(message)


def _str_list(obj: Any, where: str) -> list[str]:
    _require(isinstance(obj, list) and all(isinstance(x, str) for x in obj),
             f"{where} must be a list of strings")
    return list(obj)


def load_theory_document(source: str | dict,
                         allow_primed: bool = False) -> TheoryDocument:
    if isinstance(source, str):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno,
                             exc.colno) from None
    else:
        obj = source
    _require(isinstance(obj, dict), "theory document must be a JSON object")

    doc = TheoryDocument()
    doc.close_negation = bool(obj.get("close_negation", False))
    doc.formulas = _str_list(obj.get("formulas", []), "formulas")
    for pair in obj.get("contraries", []):
        _require(isinstance(pair, list) and len(pair) == 2,
                 "contraries entries must be [phi, psi] pairs")
        doc.contraries.append((pair[0], pair[1]))
    for entry in obj.get("rules", []):
        _require(isinstance(entry, dict), "rules entries must be objects")
        kind = entry.get("kind", DEFEASIBLE)
        _require(kind in (STRICT, DEFEASIBLE),
                 f"rule kind must be strict or defeasible: {kind!r}")
        status = entry.get("status", "fixed")
        _require(status in ("fixed", "uncertain"),
                 f"rule status must be fixed or uncertain: {status!r}")
        doc.rules.append(RuleSpec(
            body=_str_list(entry.get("body", []), "rule body"),
            head=entry["head"],
            kind=kind,
            status=status,
            name=entry.get("name"),
        ))
    kb = obj.get("kb", {})
    _require(isinstance(kb, dict), "kb must be an object")
    doc.axioms_fixed = _str_list(kb.get("axioms_fixed", []), "kb.axioms_fixed")
    doc.axioms_uncertain = _str_list(kb.get("axioms_uncertain", []),
                                     "kb.axioms_uncertain")
    doc.premises_fixed = _str_list(kb.get("premises_fixed", []),
                                   "kb.premises_fixed")
    doc.premises_uncertain = _str_list(kb.get("premises_uncertain", []),
                                       "kb.premises_uncertain")
    for pair in obj.get("preferences", []):
        _require(isinstance(pair, list) and len(pair) == 2,
                 "preferences entries must be [a, b] pairs")
        doc.preferences.append((pair[0], pair[1]))

    mentioned = set(doc.formulas)
    mentioned.update(doc.axioms_fixed + doc.axioms_uncertain)
    mentioned.update(doc.premises_fixed + doc.premises_uncertain)
    for spec in doc.rules:
        mentioned.add(spec.head)
        mentioned.update(spec.body)
        if spec.name is not None:
            mentioned.add(spec.name)
    for phi, psi in doc.contraries:
        mentioned.update((phi, psi))
    for phi in mentioned:
        _require(is_valid_formula(phi), f"invalid formula token: {phi!r}")
        if not allow_primed:
            _require(PRIME_SUFFIX not in phi,
                     f"formula {phi!r} contains the reserved prime character")
    return doc


def _theory_of(doc: TheoryDocument):
    rules: list[Rule] = []
    naming: dict[Rule, str] = {}
    uncertain: set[Rule] = set()
    for spec in doc.rules:
        rule = Rule(spec.body, spec.head, spec.kind)
        rules.append(rule)
        if spec.name is not None:
            naming[rule] = spec.name
        if spec.status == "uncertain":
            uncertain.add(rule)
    theory = make_theory(
        contraries=doc.contraries,
        rules=rules,
        naming=naming,
        axioms=doc.axioms_fixed + doc.axioms_uncertain,
        premises=doc.premises_fixed + doc.premises_uncertain,
        formulas=doc.formulas,
        close_negation=doc.close_negation,
    )
    return theory, frozenset(uncertain)


def document_kind(doc: TheoryDocument) -> str:
    if doc.has_rule_uncertainty and doc.has_premise_uncertainty:
        raise MixedUncertaintyError(
            "a document may not declare both rule and premise uncertainty")
    if doc.has_rule_uncertainty:
        return "rul-isaf"
    if doc.has_premise_uncertainty:
        return "prem-isaf"
    return "saf"


def build_saf(doc: TheoryDocument) -> SAF:
    if doc.has_rule_uncertainty or doc.has_premise_uncertainty:
        raise MixedUncertaintyError(
            "document declares uncertainty; load it as rul-isaf or prem-isaf")
    theory, _ = _theory_of(doc)
    return SAF(theory, frozenset(doc.preferences))


def build_rul_isaf(doc: TheoryDocument) -> RulISAF:
    if doc.has_premise_uncertainty:
        raise MixedUncertaintyError(
            "rule-incomplete documents may not declare uncertain knowledge")
    theory, uncertain = _theory_of(doc)
    return RulISAF(theory, uncertain, frozenset(doc.preferences))


def build_prem_isaf(doc: TheoryDocument) -> PremISAF:
    if doc.has_rule_uncertainty:
        raise MixedUncertaintyError(
            "premise-incomplete documents may not declare uncertain rules")
    theory, _ = _theory_of(doc)
    return PremISAF(
        theory,
        uncertain_axioms=frozenset(doc.axioms_uncertain),
        uncertain_premises=frozenset(doc.premises_uncertain),
        preferences=frozenset(doc.preferences),
    )


def theory_document_of(framework: SAF | RulISAF | PremISAF) -> dict:
    """Deterministic JSON form of a structured framework."""
    if isinstance(framework, SAF):
        theory, uncertain_rules = framework.theory, frozenset()
        uncertain_axioms: frozenset[str] = frozenset()
        uncertain_premises: frozenset[str] = frozenset()
    elif isinstance(framework, RulISAF):
        theory, uncertain_rules = framework.theory, framework.uncertain_rules
        uncertain_axioms, uncertain_premises = frozenset(), frozenset()
    else:
        theory, uncertain_rules = framework.theory, frozenset()
        uncertain_axioms = framework.uncertain_axioms
        uncertain_premises = framework.uncertain_premises
    rules = []
    for rule in sorted(theory.rules, key=Rule.sort_key):
        rules.append({
            "body": sorted(rule.body),
            "head": rule.head,
            "kind": rule.kind,
            "status": "uncertain" if rule in uncertain_rules else "fixed",
            "name": theory.naming.get(rule),
        })
    return {
        "formulas": sorted(theory.formulas),
        "contraries": [list(pair) for pair in sorted(theory.contraries)],
        "close_negation": False,
        "rules": rules,
        "kb": {
            "axioms_fixed": sorted(theory.axioms - uncertain_axioms),
            "axioms_uncertain": sorted(uncertain_axioms),
            "premises_fixed": sorted(theory.premises - uncertain_premises),
            "premises_uncertain": sorted(uncertain_premises),
        },
        "preferences": [list(pair)
                        for pair in sorted(framework.preferences)],
    }


def parse_completion_set(text: str) -> CompletionSet:
    sections: list[str] = []
    current: list[str] = []
    for line in text.splitlines():
        if line.strip() == "---":
            sections.append("\n".join(current))
            current = []
        else:
            current.append(line)
    tail = "\n".join(current)
    if tail.strip():
        sections.append(tail)
    return CompletionSet(parse_af(section) for section in sections)


def serialize_completion_set(completions: CompletionSet) -> str:
    parts = []
    for af in completions:
        parts.append(serialize_af(af))
        parts.append("---\n")
    return "".join(parts)


def load_framework(text: str, kind: str):
    """Parse a framework document of the declared kind."""
    if kind == "af":
        return parse_af(text)
    if kind in ("arg-iaf", "dep-arg-iaf"):
        diaf = parse_iaf(text)
        if kind == "arg-iaf":
            if diaf.deps:
                raise ParseError(
                    "document declares dependencies; load it as dep-arg-iaf",
                    1, 1)
            return diaf.base
        return diaf
    if kind in ("rul-isaf", "prem-isaf", "saf"):
        doc = load_theory_document(text)
        if kind == "rul-isaf":
            return build_rul_isaf(doc)
        if kind == "prem-isaf":
            return build_prem_isaf(doc)
        return build_saf(doc)
    raise ValueError(f"unknown framework kind {kind!r}; "
                     f"expected one of {FRAMEWORK_KINDS}")


def serialize_framework(framework) -> str:
    if isinstance(framework, AbstractAF):
        return serialize_af(framework)
    if isinstance(framework, (ArgIAF, DepArgIAF)):
        return serialize_iaf(framework)
    return json.dumps(theory_document_of(framework), indent=2,
                      sort_keys=True) + "\n"
