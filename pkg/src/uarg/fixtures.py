"""Registry of small named instances used across the documentation, the
CLI, and the acceptance suite.  Each entry reproduces a known completion
count exactly, which the acceptance tests pin down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .aspic import DEFEASIBLE, STRICT, Rule, make_theory
from .core import AbstractAF
from .incomplete import ArgIAF, DepArgIAF, ImplyDisj, Nand, Or
from .isaf import PremISAF, RulISAF


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    description: str
    build: Callable[[], object]


def _example1() -> ArgIAF:
    return ArgIAF(fixed_args=["a"], uncertain_args=["b", "c"],
                  defeats=[("b", "a"), ("c", "a")])


def _example2() -> DepArgIAF:
    return DepArgIAF(_example1(), [ImplyDisj(["b"], ["c"])])


def _example2_or() -> DepArgIAF:
    return DepArgIAF(_example1(), [Or(["b", "c"])])


def _example2_nand() -> DepArgIAF:
    return DepArgIAF(_example1(), [Nand(["b", "c"])])


def _example3_theory():
    rule_pq = Rule(["p"], "q", DEFEASIBLE)
    theory = make_theory(
        rules=[
            Rule(["u"], "~s", STRICT),
            rule_pq,
            Rule(["w"], "r", DEFEASIBLE),
            Rule(["s"], "~r", DEFEASIBLE),
        ],
        naming={rule_pq: "r"},
        axioms=["p", "u"],
        premises=["s", "w"],
        close_negation=True,
    )
    preferences = frozenset({("[s]=d>~r", "[w]=d>r")})
    return theory, preferences


def _example3():
    from .aspic import SAF

    theory, preferences = _example3_theory()
    return SAF(theory, preferences)


def _example4() -> RulISAF:
    theory, preferences = _example3_theory()
    uncertain = frozenset({Rule(["u"], "~s", STRICT), Rule(["p"], "q", DEFEASIBLE)})
    return RulISAF(theory, uncertain, preferences)


def _example5() -> PremISAF:
    theory, preferences = _example3_theory()
    return PremISAF(theory, uncertain_premises=frozenset({"w"}),
                    preferences=preferences)


def _thm3_rul() -> RulISAF:
    uncertain = frozenset({Rule(["p"], "q", DEFEASIBLE)})
    theory = make_theory(
        rules=[Rule(["q"], "r", DEFEASIBLE), Rule(["p"], "q", DEFEASIBLE)],
        premises=["p"],
        close_negation=True,
    )
    return RulISAF(theory, uncertain)


def _thm5_imp() -> DepArgIAF:
    base = ArgIAF(uncertain_args=["a", "b", "c"])
    return DepArgIAF(base, [ImplyDisj(["a", "b"], ["c"])])


def _thm7_prem() -> PremISAF:
    theory = make_theory(
        rules=[Rule(["q"], "r", DEFEASIBLE)],
        premises=["p", "q"],
        close_negation=True,
    )
    return PremISAF(theory, uncertain_premises=frozenset({"q"}))


def _thm9_imp() -> DepArgIAF:
    base = ArgIAF(uncertain_args=["a", "b", "c"])
    return DepArgIAF(base, [ImplyDisj(["a"], ["b"]), ImplyDisj(["c"], ["b"])])


def _thm10_rul() -> RulISAF:
    rules = frozenset({
        Rule([], "p_b", DEFEASIBLE),
        Rule(["p_b"], "p_a", DEFEASIBLE),
        Rule(["p_b"], "p_c", DEFEASIBLE),
    })
    theory = make_theory(rules=rules, close_negation=True)
    return RulISAF(theory, rules)


def _remark_weak_equiv():
    """The two framework sets that a per-framework-isomorphism notion would
    wrongly call equivalent: a mutual-conflict pair over one universe versus
    two one-way conflicts over disjoint universes."""
    from .incomplete import CompletionSet

    left = CompletionSet([
        AbstractAF(["a", "b"], [("a", "b")]),
        AbstractAF(["a", "b"], [("b", "a")]),
    ])
    right = CompletionSet([
        AbstractAF(["a", "b"], [("a", "b")]),
        AbstractAF(["c", "d"], [("d", "c")]),
    ])
    return left, right


REGISTRY: dict[str, Fixture] = {
    fixture.name: fixture
    for fixture in [
        Fixture("example1", "arg-iaf",
                "one fixed argument defeated by two uncertain ones; "
                "four completions", _example1),
        Fixture("example2", "dep-arg-iaf",
                "example1 plus imply([b],[c]); three completions", _example2),
        Fixture("example2_or", "dep-arg-iaf",
                "example1 plus or([b,c]); three completions", _example2_or),
        Fixture("example2_nand", "dep-arg-iaf",
                "example1 plus nand([b,c]); three completions",
                _example2_nand),
        Fixture("example3", "saf",
                "six-formula structured framework with one preference; "
                "eight arguments, four defeats", _example3),
        Fixture("example4", "rul-isaf",
                "example3 with one strict and one defeasible rule uncertain; "
                "four abstract completions", _example4),
        Fixture("example5", "prem-isaf",
                "example3 with ordinary premise w uncertain; two abstract "
                "completions", _example5),
        Fixture("thm3_rul", "rul-isaf",
                "chained defeasible rules with the first uncertain; two "
                "completions no plain arg-iaf can match", _thm3_rul),
        Fixture("thm5_imp", "dep-arg-iaf",
                "three uncertain arguments with imply([a,b],[c]); no "
                "rule-incomplete framework matches it", _thm5_imp),
        Fixture("thm7_prem", "prem-isaf",
                "one uncertain premise feeding a defeasible rule; two "
                "completions no plain arg-iaf can match", _thm7_prem),
        Fixture("thm9_imp", "dep-arg-iaf",
                "imply([a],[b]) and imply([c],[b]); five completions no "
                "premise-incomplete framework matches", _thm9_imp),
        Fixture("thm10_rul", "rul-isaf",
                "three uncertain defeasible rules whose eight rule-"
                "completions collapse to five graphs", _thm10_rul),
        Fixture("remark_weak_equiv", "completion-set-pair",
                "two framework sets distinguishable only by the global-"
                "bijection notion of equivalence", _remark_weak_equiv),
    ]
}


def get(name: str):
    if name not in REGISTRY:
        raise KeyError(f"unknown fixture {name!r}; see `uarg fixtures list`")
    return REGISTRY[name].build()
