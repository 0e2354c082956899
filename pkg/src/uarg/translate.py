"""Constructive translations between the uncertainty formalisms.

Each translation returns the target framework together with an explicit
witness: the bijection between the argument universes of the two completion
sets that certifies their equivalence.  Witnesses are materialized tables,
so certification is replayable without re-running the construction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Mapping

from .aspic import (
    DEFEASIBLE,
    STRICT,
    ArgumentationTheory,
    Rule,
    StructuredArgument,
    generate_arguments,
    inference_argument,
    is_valid_formula,
    validate_theory,
)
from .config import DEFAULT_LIMITS, Limits
from .core import AbstractAF
from .errors import InvalidTheoryError, UncertaintyBoundExceededError
from .incomplete import ArgIAF, CompletionSet, DepArgIAF, ImplyDisj
from .isaf import PremISAF, RulISAF, is_tidy, saf_max

PRIME_SUFFIX = "'"


@dataclass(frozen=True)
class Witness:
    """Bijection between two finite argument-identifier sets, stored as
    sorted (source, target) pairs."""

    pairs: tuple[tuple[str, str], ...]

    def __init__(self, mapping: Mapping[str, str] | Iterable[tuple[str, str]]):
        items = sorted(mapping.items() if isinstance(mapping, Mapping)
                       else mapping)
        seen = set()
        for src, _ in items:
            if src in seen:
                raise ValueError(f"witness maps {src!r} twice")
            seen.add(src)
        object.__setattr__(self, "pairs", tuple(items))

    @classmethod
    def identity(cls, names: Iterable[str]) -> "Witness":
        return cls({name: name for name in names})

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.pairs)

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(src for src, _ in self.pairs)

    @property
    def codomain(self) -> frozenset[str]:
        return frozenset(dst for _, dst in self.pairs)

    @property
    def is_bijective(self) -> bool:
        return len(self.codomain) == len(self.pairs)

    def invert(self) -> "Witness":
        if not self.is_bijective:
            raise ValueError("witness is not injective; cannot invert")
        return Witness({dst: src for src, dst in self.pairs})

    def compose(self, then: "Witness") -> "Witness":
        """First apply self, then ``then`` (domains must chain)."""
        second = then.mapping
        return Witness({src: second[mid] for src, mid in self.pairs})

    def apply_af(self, af: AbstractAF) -> AbstractAF:
        m = self.mapping
        return AbstractAF((m[a] for a in af.args),
                          ((m[s], m[t]) for s, t in af.defeats))

    def apply(self, completions: CompletionSet) -> CompletionSet:
        return CompletionSet(self.apply_af(af) for af in completions)

    def to_json(self) -> dict:
        return {"map": [list(pair) for pair in self.pairs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Witness":
        return cls([(src, dst) for src, dst in obj["map"]])


def _formula_names(names: Iterable[str]) -> dict[str, str]:
    """Deterministic argument-name -> formula-token map: p_<name> when every
    name is a valid formula token, positional p<i> otherwise."""
    ordered = sorted(names)
    if all(is_valid_formula(name) for name in ordered):
        return {name: f"p_{name}" for name in ordered}
    return {name: f"p{i}" for i, name in enumerate(ordered)}


def _lifted_contraries(iaf: ArgIAF, token: dict[str, str],
                       ) -> set[tuple[str, str]]:
    # Classical pairs keep every formula contradicted; defeat pairs encode
    # the graph: token(x) is a contrary of token(y) iff x defeats y.
    contraries: set[tuple[str, str]] = set()
    for name in iaf.all_args:
        contraries.add((token[name], "~" + token[name]))
        contraries.add(("~" + token[name], token[name]))
    for s, t in iaf.defeats:
        contraries.add((token[s], token[t]))
    return contraries


def arg_iaf_to_rul_isaf(iaf: ArgIAF) -> tuple[RulISAF, Witness]:
    """Encode fixed arguments as ordinary premises and uncertain arguments
    as uncertain empty-bodied defeasible rules."""
    from .aspic import make_theory

    token = _formula_names(iaf.all_args)
    uncertain_rules = frozenset(Rule((), token[name], DEFEASIBLE)
                                for name in iaf.uncertain_args)
    theory = make_theory(
        contraries=_lifted_contraries(iaf, token),
        rules=uncertain_rules,
        premises=[token[name] for name in iaf.fixed_args],
    )
    target = RulISAF(theory, uncertain_rules)
    witness = Witness({
        name: token[name] if name in set(iaf.fixed_args)
        else f"[]=d>{token[name]}"
        for name in iaf.all_args
    })
    return target, witness


def arg_iaf_to_prem_isaf(iaf: ArgIAF) -> tuple[PremISAF, Witness]:
    """Encode fixed arguments as certain and uncertain arguments as
    uncertain ordinary premises; no rules at all."""
    from .aspic import make_theory

    token = _formula_names(iaf.all_args)
    theory = make_theory(
        contraries=_lifted_contraries(iaf, token),
        premises=[token[name] for name in iaf.all_args],
    )
    target = PremISAF(
        theory,
        uncertain_premises=frozenset(token[name]
                                     for name in iaf.uncertain_args),
    )
    witness = Witness({name: token[name] for name in iaf.all_args})
    return target, witness


def _minimal_covers(needed: frozenset, profiles: list[tuple[str, frozenset]],
                    ) -> list[frozenset[str]]:
    """All subset-minimal argument sets whose combined profiles cover
    ``needed``.  Arguments with the same needed-restricted profile are
    interchangeable, so covers are enumerated over profile classes (as
    bitmasks over the needed elements) and expanded over representatives."""
    from itertools import product

    bit = {element: 1 << i for i, element in enumerate(needed)}
    full = (1 << len(needed)) - 1
    groups: dict[int, list[str]] = {}
    for name, profile in profiles:
        mask = sum(bit[e] for e in profile & needed)
        if mask:
            groups.setdefault(mask, []).append(name)
    masks = sorted(groups)
    found: set[frozenset[int]] = set()

    def search(uncovered: int, chosen: tuple[int, ...]) -> None:
        if not uncovered:
            # keep only irredundant selections: every chosen class must
            # contribute a private element
            for mask in chosen:
                others = 0
                for other in chosen:
                    if other != mask:
                        others |= other
                if not mask & ~others:
                    return
            found.add(frozenset(chosen))
            return
        pivot = uncovered & -uncovered
        for mask in masks:
            if mask & pivot and mask not in chosen:
                search(uncovered & ~mask, chosen + (mask,))

    search(full, ())
    covers: set[frozenset[str]] = set()
    for classes in found:
        pools = [groups[mask] for mask in sorted(classes)]
        for combo in product(*pools):
            covers.add(frozenset(combo))
    return sorted(covers, key=sorted)


def _implicative_dependencies(uncertain_ids: list[str],
                              load: dict[str, frozenset],
                              full: bool) -> list[ImplyDisj]:
    """Dependencies forcing each uncertain argument whenever a set of
    arguments jointly carrying all of its uncertain load is present."""
    deps: list[ImplyDisj] = []
    if full:
        from itertools import combinations

        for x in uncertain_ids:
            others = uncertain_ids
            for size in range(1, len(others) + 1):
                for combo in combinations(others, size):
                    union = frozenset().union(*(load[y] for y in combo))
                    if load[x] <= union:
                        deps.append(ImplyDisj(combo, (x,)))
        return deps
    for x in uncertain_ids:
        profiles = [(y, load[y]) for y in uncertain_ids if y != x]
        for cover in _minimal_covers(load[x], profiles):
            deps.append(ImplyDisj(cover, (x,)))
    return deps


def _structured_to_imp_arg_iaf(x: RulISAF | PremISAF, load_of,
                               limits: Limits,
                               full_delta: bool) -> tuple[DepArgIAF, Witness]:
    validate_theory(x.theory)
    args_max = generate_arguments(x.theory, limits, validate=False)
    saf = saf_max(x, limits, validate=True)
    from .aspic import defeats as saf_defeats

    defeat_pairs = saf_defeats(saf, args_max, limits, validate=False)
    load = {arg.text: frozenset(load_of(arg)) for arg in args_max}
    fixed_ids = sorted(t for t, l in load.items() if not l)
    uncertain_ids = sorted(t for t, l in load.items() if l)
    if full_delta and len(uncertain_ids) > limits.max_uncertain:
        raise UncertaintyBoundExceededError(
            f"full dependency generation over {len(uncertain_ids)} uncertain "
            f"arguments exceeds the bound {limits.max_uncertain}")
    base = ArgIAF(fixed_ids, uncertain_ids,
                  [(a.text, b.text) for a, b in defeat_pairs])
    deps = _implicative_dependencies(uncertain_ids, load, full_delta)
    target = DepArgIAF(base, deps)
    witness = Witness.identity(load)
    return target, witness


def rul_isaf_to_imp_arg_iaf(r: RulISAF, limits: Limits = DEFAULT_LIMITS,
                            full_delta: bool = False,
                            ) -> tuple[DepArgIAF, Witness]:
    """Abstract the maximal completion; an argument is uncertain iff it uses
    an uncertain rule, and implicative dependencies tie each uncertain
    argument to the argument sets that jointly exhibit its uncertain rules.

    By default one dependency per subset-minimal antecedent is emitted;
    supersets are semantically entailed.  full_delta=True materializes every
    covering antecedent for oracle comparison.
    """
    return _structured_to_imp_arg_iaf(
        r, lambda arg: arg.rules_used & r.uncertain_rules, limits, full_delta)


def prem_isaf_to_imp_arg_iaf(p: PremISAF, limits: Limits = DEFAULT_LIMITS,
                             full_delta: bool = False,
                             ) -> tuple[DepArgIAF, Witness]:
    """Same construction with uncertain premises as the uncertain load."""
    return _structured_to_imp_arg_iaf(
        p, lambda arg: arg.premises & p.uncertain_knowledge, limits, full_delta)


def _prime(formula: str) -> str:
    return formula + PRIME_SUFFIX


def _check_preference_domain(preferences, tau: dict[str, str]) -> None:
    from .errors import PreferenceUnknownArgumentError

    for a, b in preferences:
        if a not in tau or b not in tau:
            missing = a if a not in tau else b
            raise PreferenceUnknownArgumentError(
                f"declared preference names an argument outside the maximal "
                f"completion: {missing!r}")


def tidy(p: PremISAF, limits: Limits = DEFAULT_LIMITS,
         ) -> tuple[PremISAF, Witness]:
    """Remove premise/premiseless-rule head clashes by renaming the clashing
    heads into a fresh primed copy of the language.

    Every rule body containing clashing formulas gets patched variants (each
    clashing body formula independently primed or not): an argument may
    derive such a formula either from the premise or through the renamed
    empty-bodied rule, and both derivations must keep a rule to attach to.
    Already-tidy frameworks come back unchanged with an identity witness.
    """
    validate_theory(p.theory)
    theory = p.theory
    args_max = generate_arguments(theory, limits, validate=False)
    premiseless_heads = {rule.head for rule in theory.rules if not rule.body}
    rep = theory.knowledge_base & premiseless_heads
    if not rep:
        return p, Witness.identity(arg.text for arg in args_max)

    primed_language = {_prime(phi) for phi in theory.formulas}
    clash = primed_language & theory.formulas
    if clash:
        raise InvalidTheoryError(
            f"priming is not fresh for this language: {sorted(clash)}")

    contraries = set(theory.contraries)
    for phi, psi in theory.contraries:
        contraries.add((phi, _prime(psi)))
        contraries.add((_prime(phi), psi))
        contraries.add((_prime(phi), _prime(psi)))

    def patched_variants(rule: Rule) -> list[Rule]:
        if not rule.body:
            if rule.head in rep:
                return [Rule((), _prime(rule.head), rule.kind)]
            return [rule]
        from itertools import combinations

        clashing = sorted(rule.body & rep)
        variants = []
        for size in range(len(clashing) + 1):
            for subset in combinations(clashing, size):
                body = (rule.body - set(subset)) | {_prime(phi)
                                                    for phi in subset}
                variants.append(Rule(body, rule.head, rule.kind))
        return variants

    new_rules: set[Rule] = set()
    naming: dict[Rule, str] = {}
    for rule in theory.rules:
        variants = patched_variants(rule)
        new_rules.update(variants)
        name = theory.naming.get(rule)
        if name is not None:
            for variant in variants:
                naming[variant] = name

    new_theory = ArgumentationTheory(
        formulas=frozenset(theory.formulas | primed_language),
        contraries=frozenset(contraries),
        rules=frozenset(new_rules),
        naming=naming,
        axioms=theory.axioms,
        premises=theory.premises,
    )

    rename_cache: dict[str, StructuredArgument] = {}

    def rename(argument: StructuredArgument) -> StructuredArgument:
        cached = rename_cache.get(argument.text)
        if cached is not None:
            return cached
        if argument.is_premise:
            out = argument
        elif not argument.subs:
            rule = argument.rule
            if rule.head in rep:
                out = StructuredArgument(
                    None, Rule((), _prime(rule.head), rule.kind), ())
            else:
                out = argument
        else:
            subs = tuple(rename(sub) for sub in argument.subs)
            rule = Rule((sub.conc for sub in subs), argument.rule.head,
                        argument.rule.kind)
            out = inference_argument(rule, subs)
        rename_cache[argument.text] = out
        return out

    tau = {arg.text: rename(arg).text for arg in args_max}
    _check_preference_domain(p.preferences, tau)
    new_args_max = generate_arguments(new_theory, limits, validate=True)
    new_texts = {arg.text for arg in new_args_max}
    preferences = set()
    for a, b in p.preferences:
        for left in (a, tau[a]):
            for right in (b, tau[b]):
                if left in new_texts and right in new_texts:
                    preferences.add((left, right))

    result = PremISAF(new_theory, uncertain_axioms=p.uncertain_axioms,
                      uncertain_premises=p.uncertain_premises,
                      preferences=frozenset(preferences))
    assert is_tidy(result)
    return result, Witness(tau)


def prem_isaf_to_rul_isaf(p: PremISAF, limits: Limits = DEFAULT_LIMITS,
                          ) -> tuple[RulISAF, Witness]:
    """Turn uncertain axioms/premises into uncertain empty-bodied strict/
    defeasible rules.  The framework is tidied first, which is exactly what
    keeps the rewrite injective (a formula may not already be derivable by a
    premiseless rule)."""
    tidied, first = tidy(p, limits)
    theory = tidied.theory
    new_strict = {Rule((), phi, STRICT) for phi in tidied.uncertain_axioms}
    new_defeasible = {Rule((), phi, DEFEASIBLE)
                      for phi in tidied.uncertain_premises}
    new_rules = frozenset(new_strict | new_defeasible)
    overlap = new_rules & theory.rules
    assert not overlap, "tidying must have removed premiseless clashes"

    target_theory = replace(
        theory,
        rules=frozenset(theory.rules | new_rules),
        axioms=frozenset(tidied.fixed_axioms),
        premises=frozenset(tidied.fixed_premises),
    )

    uncertain_axioms = tidied.uncertain_axioms
    uncertain_premises = tidied.uncertain_premises
    rewrite_cache: dict[str, StructuredArgument] = {}

    def rewrite(argument: StructuredArgument) -> StructuredArgument:
        cached = rewrite_cache.get(argument.text)
        if cached is not None:
            return cached
        if argument.is_premise:
            phi = argument.premise
            if phi in uncertain_axioms:
                out = StructuredArgument(None, Rule((), phi, STRICT), ())
            elif phi in uncertain_premises:
                out = StructuredArgument(None, Rule((), phi, DEFEASIBLE), ())
            else:
                out = argument
        elif not argument.subs:
            out = argument
        else:
            subs = tuple(rewrite(sub) for sub in argument.subs)
            out = inference_argument(argument.rule, subs)
        rewrite_cache[argument.text] = out
        return out

    args_max = generate_arguments(theory, limits, validate=False)
    tau = {arg.text: rewrite(arg).text for arg in args_max}
    _check_preference_domain(tidied.preferences, tau)
    preferences = frozenset((tau[a], tau[b]) for a, b in tidied.preferences)
    target = RulISAF(target_theory, uncertain_rules=new_rules,
                     preferences=preferences)
    return target, first.compose(Witness(tau))
