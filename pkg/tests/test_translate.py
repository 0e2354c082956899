import random

import pytest

from uarg import (
    DEFEASIBLE,
    STRICT,
    ArgIAF,
    PremISAF,
    Rule,
    Witness,
    arg_iaf_to_prem_isaf,
    arg_iaf_to_rul_isaf,
    check_witness,
    completion_set_of,
    completions_dep,
    fixtures,
    generate_arguments,
    is_implicative,
    is_tidy,
    make_theory,
    prem_isaf_to_imp_arg_iaf,
    prem_isaf_to_rul_isaf,
    rul_isaf_to_imp_arg_iaf,
    tidy,
)
from uarg.incomplete import DepArgIAF, ImplyDisj

from framework_gen import random_arg_iaf, random_prem_isaf, random_rul_isaf


def certify(source, target, witness) -> bool:
    return check_witness(completion_set_of(source), completion_set_of(target),
                         witness)


class TestWitness:
    def test_identity_and_inverse(self):
        w = Witness({"a": "x", "b": "y"})
        assert w.invert().mapping == {"x": "a", "y": "b"}
        assert Witness.identity(["a"]).mapping == {"a": "a"}

    def test_compose(self):
        w1 = Witness({"a": "m"})
        w2 = Witness({"m": "z"})
        assert w1.compose(w2).mapping == {"a": "z"}

    def test_duplicate_source_rejected(self):
        with pytest.raises(ValueError):
            Witness([("a", "x"), ("a", "y")])

    def test_json_round_trip(self):
        w = Witness({"a": "x"})
        assert Witness.from_json(w.to_json()) == w


class TestArgIafToRulIsaf:
    def test_example1_construction(self):
        iaf = fixtures.get("example1")
        target, witness = arg_iaf_to_rul_isaf(iaf)
        assert target.theory.premises == {"p_a"}
        assert target.uncertain_rules == frozenset({
            Rule([], "p_b", DEFEASIBLE), Rule([], "p_c", DEFEASIBLE)})
        assert ("p_b", "p_a") in target.theory.contraries
        assert ("p_c", "p_a") in target.theory.contraries
        assert certify(iaf, target, witness)

    def test_no_uncertain_arguments(self):
        iaf = ArgIAF(["a", "b"], [], [("a", "b")])
        target, witness = arg_iaf_to_rul_isaf(iaf)
        assert not target.uncertain_rules
        assert len(completion_set_of(target)) == 1
        assert certify(iaf, target, witness)

    def test_randomized_certification(self):
        rng = random.Random(53)
        for _ in range(40):
            iaf = random_arg_iaf(rng)
            target, witness = arg_iaf_to_rul_isaf(iaf)
            assert certify(iaf, target, witness)


class TestArgIafToPremIsaf:
    def test_example1_construction(self):
        iaf = fixtures.get("example1")
        target, witness = arg_iaf_to_prem_isaf(iaf)
        assert target.fixed_premises == {"p_a"}
        assert target.uncertain_premises == {"p_b", "p_c"}
        assert not target.theory.rules
        assert certify(iaf, target, witness)

    def test_empty_framework(self):
        iaf = ArgIAF()
        target, witness = arg_iaf_to_prem_isaf(iaf)
        completions = completion_set_of(target)
        assert len(completions) == 1
        assert list(completions)[0].args == ()
        assert certify(iaf, target, witness)

    def test_randomized_certification(self):
        rng = random.Random(59)
        for _ in range(40):
            iaf = random_arg_iaf(rng)
            target, witness = arg_iaf_to_prem_isaf(iaf)
            assert certify(iaf, target, witness)


class TestRulIsafToImpArgIaf:
    def test_chain_fixture_dependencies(self):
        t3 = fixtures.get("thm3_rul")
        target, witness = rul_isaf_to_imp_arg_iaf(t3)
        assert target.base.fixed_args == ("p",)
        assert set(target.base.uncertain_args) == {"[p]=d>q",
                                                   "[[p]=d>q]=d>r"}
        assert ImplyDisj(["[p]=d>q"], ["[[p]=d>q]=d>r"]) in target.deps
        assert ImplyDisj(["[[p]=d>q]=d>r"], ["[p]=d>q"]) in target.deps
        assert is_implicative(target)
        assert certify(t3, target, witness)

    def test_no_uncertain_rules(self):
        ex3 = fixtures.get("example3")
        from uarg import RulISAF

        isaf = RulISAF(ex3.theory, frozenset(), ex3.preferences)
        target, witness = rul_isaf_to_imp_arg_iaf(isaf)
        assert not target.base.uncertain_args and not target.deps
        assert certify(isaf, target, witness)

    def test_example4_certification(self):
        ex4 = fixtures.get("example4")
        target, witness = rul_isaf_to_imp_arg_iaf(ex4)
        assert len(completions_dep(target)) == 4
        assert certify(ex4, target, witness)

    def test_minimal_delta_matches_full_delta(self):
        rng = random.Random(61)
        checked = 0
        while checked < 15:
            isaf = random_rul_isaf(rng, max_uncertain=2, max_args=12)
            minimal, _ = rul_isaf_to_imp_arg_iaf(isaf)
            if len(minimal.base.uncertain_args) > 4:
                continue
            full, _ = rul_isaf_to_imp_arg_iaf(isaf, full_delta=True)
            assert completions_dep(minimal) == completions_dep(full)
            assert minimal.deps <= full.deps
            checked += 1

    def test_randomized_certification(self):
        rng = random.Random(67)
        for _ in range(25):
            isaf = random_rul_isaf(rng)
            target, witness = rul_isaf_to_imp_arg_iaf(isaf)
            assert is_implicative(target)
            assert certify(isaf, target, witness)


class TestPremIsafToImpArgIaf:
    def test_thm7_dependencies(self):
        t7 = fixtures.get("thm7_prem")
        target, witness = prem_isaf_to_imp_arg_iaf(t7)
        assert target.base.fixed_args == ("p",)
        assert ImplyDisj(["q"], ["[q]=d>r"]) in target.deps
        assert ImplyDisj(["[q]=d>r"], ["q"]) in target.deps
        assert certify(t7, target, witness)

    def test_example5_certification(self):
        ex5 = fixtures.get("example5")
        target, witness = prem_isaf_to_imp_arg_iaf(ex5)
        assert len(completions_dep(target)) == 2
        assert certify(ex5, target, witness)

    def test_randomized_certification(self):
        rng = random.Random(71)
        for _ in range(25):
            isaf = random_prem_isaf(rng)
            target, witness = prem_isaf_to_imp_arg_iaf(isaf)
            assert certify(isaf, target, witness)


class TestTidy:
    def test_single_clash(self):
        theory = make_theory(rules=[Rule([], "p", DEFEASIBLE)],
                             premises=["p"], close_negation=True)
        source = PremISAF(theory)
        target, witness = tidy(source)
        assert is_tidy(target)
        assert Rule([], "p'", DEFEASIBLE) in target.theory.rules
        assert target.theory.knowledge_base == {"p"}
        texts = {a.text for a in generate_arguments(target.theory)}
        assert texts == {"p", "[]=d>p'"}
        assert certify(source, target, witness)

    def test_identity_on_tidy_input(self):
        t7 = fixtures.get("thm7_prem")
        target, witness = tidy(t7)
        assert target == t7
        assert all(src == dst for src, dst in witness.pairs)

    def test_idempotent_up_to_identity_witness(self):
        theory = make_theory(rules=[Rule([], "p", STRICT)],
                             premises=["p"], close_negation=True)
        once, _ = tidy(PremISAF(theory))
        twice, inner = tidy(once)
        assert twice == once
        assert all(src == dst for src, dst in inner.pairs)

    def test_multi_clash_rule_body(self):
        # body with two clashing formulas: mixed premise/rule derivations
        # need the partially patched rule variants
        theory = make_theory(
            rules=[Rule([], "a", STRICT), Rule([], "b", STRICT),
                   Rule(["a", "b"], "d", DEFEASIBLE)],
            premises=["a", "b"], close_negation=True)
        source = PremISAF(theory)
        n_source = len(generate_arguments(theory))
        target, witness = tidy(source)
        assert is_tidy(target)
        assert len(generate_arguments(target.theory)) == n_source == 8
        assert certify(source, target, witness)

    def test_undercut_survives_tidying(self):
        named = Rule(["p"], "q", DEFEASIBLE)
        theory = make_theory(
            rules=[named, Rule([], "p", DEFEASIBLE), Rule([], "~n", STRICT)],
            naming={named: "n"},
            premises=["p"], close_negation=True)
        source = PremISAF(theory)
        target, witness = tidy(source)
        assert certify(source, target, witness)

    def test_randomized_nontidy_certification(self):
        rng = random.Random(73)
        for _ in range(20):
            source = random_prem_isaf(rng, max_uncertain=2, force_clash=True)
            assert not is_tidy(source)
            target, witness = tidy(source)
            assert is_tidy(target)
            assert certify(source, target, witness)


class TestPremIsafToRulIsaf:
    def test_thm7_translation(self):
        t7 = fixtures.get("thm7_prem")
        target, witness = prem_isaf_to_rul_isaf(t7)
        assert target.theory.knowledge_base == {"p"}
        assert Rule([], "q", DEFEASIBLE) in target.uncertain_rules
        completions = completion_set_of(target)
        assert sorted(tuple(af.args) for af in completions) == [
            ("[[]=d>q]=d>r", "[]=d>q", "p"), ("p",)]
        assert certify(t7, target, witness)

    def test_no_uncertain_knowledge(self):
        ex3 = fixtures.get("example3")
        source = PremISAF(ex3.theory, preferences=ex3.preferences)
        target, witness = prem_isaf_to_rul_isaf(source)
        assert not target.uncertain_rules
        assert all(src == dst for src, dst in witness.pairs)
        assert certify(source, target, witness)

    def test_example5_translation(self):
        ex5 = fixtures.get("example5")
        target, witness = prem_isaf_to_rul_isaf(ex5)
        assert Rule([], "w", DEFEASIBLE) in target.uncertain_rules
        assert len(completion_set_of(target)) == 2
        assert certify(ex5, target, witness)

    def test_uncertain_axiom_becomes_strict_rule(self):
        theory = make_theory(axioms=["a"], premises=["p"],
                             close_negation=True)
        source = PremISAF(theory, uncertain_axioms=frozenset({"a"}))
        target, witness = prem_isaf_to_rul_isaf(source)
        assert Rule([], "a", STRICT) in target.uncertain_rules
        assert certify(source, target, witness)

    def test_randomized_including_nontidy(self):
        rng = random.Random(79)
        for i in range(20):
            source = random_prem_isaf(rng, max_uncertain=3,
                                      force_clash=(i % 2 == 0))
            target, witness = prem_isaf_to_rul_isaf(source)
            assert certify(source, target, witness)
