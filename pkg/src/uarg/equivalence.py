"""Completion-set equivalence: one global bijection over argument
identifiers that maps one set of frameworks exactly onto another.

The decision runs a complete backtracking search over bijections, pruned by
occurrence signatures (for each argument, the multiset of per-framework
shapes it occurs in, refined by defeat degrees).  Negative certification for
small framework spaces is exhaustive with isomorphism-aware pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .config import DEFAULT_LIMITS, Limits
from .core import AbstractAF
from .errors import DomainMismatchError, SearchBoundExceededError
from .incomplete import ArgIAF, CompletionSet, completions_arg_iaf
from .translate import Witness

EQUIVALENT = "equivalent"
NOT_EQUIVALENT = "not_equivalent"


@dataclass(frozen=True)
class EquivalenceResult:
    verdict: str
    witness: Witness | None
    nodes: int = 0
    prunes: int = 0

    @property
    def equivalent(self) -> bool:
        return self.verdict == EQUIVALENT


def check_witness(source: CompletionSet, target: CompletionSet,
                  witness: Witness) -> bool:
    """True iff the witness is bijective and maps the source set exactly
    onto the target set."""
    if witness.domain != source.argument_union():
        raise DomainMismatchError(
            "witness domain differs from the union of source arguments")
    if witness.codomain != target.argument_union():
        raise DomainMismatchError(
            "witness codomain differs from the union of target arguments")
    if not witness.is_bijective:
        return False
    return witness.apply(source) == target


def _signatures(completions: CompletionSet) -> dict[str, tuple]:
    """Per-argument occurrence signature: for every framework containing the
    argument, the framework's size profile plus the argument's local defeat
    degrees.  Invariant under renaming, so it soundly prunes bijections."""
    sigs: dict[str, list] = {}
    for af in completions:
        shape = (len(af.args), len(af.defeats))
        indeg: dict[str, int] = dict.fromkeys(af.args, 0)
        outdeg: dict[str, int] = dict.fromkeys(af.args, 0)
        selfdef: dict[str, int] = dict.fromkeys(af.args, 0)
        for s, t in af.defeats:
            outdeg[s] += 1
            indeg[t] += 1
            if s == t:
                selfdef[s] += 1
        for a in af.args:
            sigs.setdefault(a, []).append(
                (shape, indeg[a], outdeg[a], selfdef[a]))
    return {a: tuple(sorted(entries)) for a, entries in sigs.items()}


def equivalent(source: CompletionSet, target: CompletionSet,
               limits: Limits = DEFAULT_LIMITS,
               identity_only: bool = False) -> EquivalenceResult:
    """Decide equivalence and return a verified witness on success.

    identity_only skips the search and tests the identity mapping alone,
    for callers that know both sets share one argument universe.
    """
    src_union = source.argument_union()
    tgt_union = target.argument_union()
    if max(len(src_union), len(tgt_union)) > limits.max_equiv_args:
        raise SearchBoundExceededError(
            f"argument union exceeds max_equiv_args={limits.max_equiv_args}")
    if len(source) != len(target) or len(src_union) != len(tgt_union):
        return EquivalenceResult(NOT_EQUIVALENT, None)
    shapes = sorted((len(af.args), len(af.defeats)) for af in source)
    if shapes != sorted((len(af.args), len(af.defeats)) for af in target):
        return EquivalenceResult(NOT_EQUIVALENT, None)

    if identity_only:
        if src_union != tgt_union:
            return EquivalenceResult(NOT_EQUIVALENT, None)
        witness = Witness.identity(src_union)
        if witness.apply(source) == target:
            return EquivalenceResult(EQUIVALENT, witness, nodes=1)
        return EquivalenceResult(NOT_EQUIVALENT, None, nodes=1)

    src_sig = _signatures(source)
    tgt_sig = _signatures(target)
    tgt_by_sig: dict[tuple, list[str]] = {}
    for name in sorted(tgt_union):
        tgt_by_sig.setdefault(tgt_sig[name], []).append(name)
    src_by_sig: dict[tuple, list[str]] = {}
    for name in sorted(src_union):
        src_by_sig.setdefault(src_sig[name], []).append(name)
    if {sig: len(v) for sig, v in src_by_sig.items()} != \
            {sig: len(v) for sig, v in tgt_by_sig.items()}:
        return EquivalenceResult(NOT_EQUIVALENT, None)

    order = sorted(src_union, key=lambda a: (src_sig[a], a))
    target_afs = list(target)
    assignment: dict[str, str] = {}
    used: set[str] = set()
    stats = {"nodes": 0, "prunes": 0}

    def partial_consistent() -> bool:
        assigned = set(assignment)
        mapped = set(assignment.values())
        for af in source:
            pres = [a for a in af.args if a in assigned]
            img = {assignment[a] for a in pres}
            img_edges = {(assignment[s], assignment[t]) for s, t in af.defeats
                         if s in assigned and t in assigned}
            shape = (len(af.args), len(af.defeats))
            for caf in target_afs:
                if (len(caf.args), len(caf.defeats)) != shape:
                    continue
                if caf.arg_set & mapped != img:
                    continue
                if {(s, t) for s, t in caf.defeats
                        if s in mapped and t in mapped} == img_edges:
                    break
            else:
                return False
        return True

    def search(pos: int) -> Witness | None:
        if pos == len(order):
            witness = Witness(assignment)
            if witness.apply(source) == target:
                return witness
            stats["prunes"] += 1
            return None
        name = order[pos]
        for candidate in tgt_by_sig.get(src_sig[name], ()):
            if candidate in used:
                continue
            stats["nodes"] += 1
            assignment[name] = candidate
            used.add(candidate)
            if partial_consistent():
                found = search(pos + 1)
                if found is not None:
                    return found
            else:
                stats["prunes"] += 1
            del assignment[name]
            used.discard(candidate)
        return None

    witness = search(0)
    if witness is None:
        return EquivalenceResult(NOT_EQUIVALENT, None,
                                 stats["nodes"], stats["prunes"])
    return EquivalenceResult(EQUIVALENT, witness,
                             stats["nodes"], stats["prunes"])


def no_equivalent_arg_iaf(target: CompletionSet, max_args: int,
                          limits: Limits = DEFAULT_LIMITS) -> bool:
    """True iff no argument-incomplete framework over at most max_args
    arguments (any fixed/uncertain split, any defeat relation, modulo
    renaming) has a completion set equivalent to the target.

    Sound necessary conditions prune the space hard: a plain framework has
    exactly 2^k distinct completions, its maximal completion contains every
    argument, and every other completion is an induced restriction of it.
    Surviving candidates are enumerated as relabelings of the maximal
    member and checked with the full equivalence search.
    """
    if max_args > limits.max_search_args:
        raise SearchBoundExceededError(
            f"max_args={max_args} exceeds max_search_args="
            f"{limits.max_search_args}")
    if len(target) == 0:
        return True  # completion sets are never empty
    union = sorted(target.argument_union())
    n = len(union)
    if n > max_args:
        return True
    count = len(target)
    if count & (count - 1):
        return True  # completion counts of plain frameworks are powers of two
    k = count.bit_length() - 1
    if k > n:
        return True
    max_members = [af for af in target if len(af.args) == n]
    if len(max_members) != 1:
        return True
    max_member = max_members[0]

    seen: set[tuple] = set()
    for perm in permutations(range(n)):
        relabel = {max_member.args[i]: union[perm[i]] for i in range(n)}
        defeats = tuple(sorted((relabel[s], relabel[t])
                               for s, t in max_member.defeats))
        if defeats in seen:
            continue
        seen.add(defeats)
        for uncertain in combinations(union, k):
            candidate = ArgIAF(set(union) - set(uncertain), uncertain, defeats)
            completions = completions_arg_iaf(candidate, limits)
            if equivalent(completions, target, limits).equivalent:
                return False
    return True


def equivalence_properties_check(s: CompletionSet, t: CompletionSet,
                                 u: CompletionSet,
                                 limits: Limits = DEFAULT_LIMITS) -> bool:
    """Instance-level sanity of the equivalence relation: reflexivity with
    an identity witness, symmetry via witness inversion, transitivity via
    witness composition."""
    refl = equivalent(s, s, limits)
    if not (refl.equivalent and check_witness(s, s, refl.witness)):
        return False
    st = equivalent(s, t, limits)
    if st.equivalent and not check_witness(t, s, st.witness.invert()):
        return False
    tu = equivalent(t, u, limits)
    if tu.equivalent and not check_witness(u, t, tu.witness.invert()):
        return False
    if st.equivalent and tu.equivalent:
        composed = st.witness.compose(tu.witness)
        if not check_witness(s, u, composed):
            return False
    return True
