"""Argument-incomplete frameworks, dependency semantics, completion
enumeration, and dependency synthesis from a target completion set.

A completion keeps all fixed arguments, any subset of the uncertain ones,
and the induced defeats.  Dependencies filter which subsets are admissible:

* ImplyDisj(all_of, any_of): if every member of all_of is present, at least
  one member of any_of must be present;
* Or(any_of): at least one member must be present;
* Nand(not_all_of): not all members may be present together.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .config import DEFAULT_LIMITS, Limits
from .core import AbstractAF, check_argument_id, restrict
from .errors import (
    TargetNotRepresentableError,
    TargetNotSubsetError,
    UncertaintyBoundExceededError,
)

# Subset filtering switches from plain enumeration to closure-based
# enumeration above this width when every dependency is implicative.
_HORN_THRESHOLD = 14


@dataclass(frozen=True)
class ArgIAF:
    """Framework whose arguments are split into fixed and uncertain parts;
    defeats are certain and may touch both parts."""

    fixed_args: tuple[str, ...]
    uncertain_args: tuple[str, ...]
    defeats: tuple[tuple[str, str], ...]

    def __init__(self, fixed_args: Iterable[str] = (),
                 uncertain_args: Iterable[str] = (),
                 defeats: Iterable[tuple[str, str]] = ()):
        fixed = {check_argument_id(a) for a in fixed_args}
        uncertain = {check_argument_id(a) for a in uncertain_args}
        overlap = fixed & uncertain
        if overlap:
            raise ValueError(
                f"arguments cannot be both fixed and uncertain: {sorted(overlap)}")
        full = fixed | uncertain
        defeat_set = {(s, t) for s, t in defeats}
        for s, t in defeat_set:
            if s not in full or t not in full:
                raise ValueError(
                    f"defeat ({s},{t}) has an endpoint outside the framework")
        object.__setattr__(self, "fixed_args", tuple(sorted(fixed)))
        object.__setattr__(self, "uncertain_args", tuple(sorted(uncertain)))
        object.__setattr__(self, "defeats", tuple(sorted(defeat_set)))

    @property
    def all_args(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.fixed_args) | set(self.uncertain_args)))

    def full_af(self) -> AbstractAF:
        return AbstractAF(self.all_args, self.defeats)


class Dependency:
    """Base for the three dependency variants."""

    __slots__ = ()

    def sort_key(self) -> tuple:
        raise NotImplementedError


def _nonempty_id_set(values: Iterable[str], what: str) -> frozenset[str]:
    out = frozenset(check_argument_id(v) for v in values)
    if not out:
        raise ValueError(f"{what} must be non-empty")
    return out


@dataclass(frozen=True)
class ImplyDisj(Dependency):
    all_of: frozenset[str]
    any_of: frozenset[str]

    def __init__(self, all_of: Iterable[str], any_of: Iterable[str]):
        object.__setattr__(self, "all_of",
                           _nonempty_id_set(all_of, "ImplyDisj.all_of"))
        object.__setattr__(self, "any_of",
                           _nonempty_id_set(any_of, "ImplyDisj.any_of"))

    def sort_key(self) -> tuple:
        return (0, tuple(sorted(self.all_of)), tuple(sorted(self.any_of)))


@dataclass(frozen=True)
class Or(Dependency):
    any_of: frozenset[str]

    def __init__(self, any_of: Iterable[str]):
        object.__setattr__(self, "any_of", _nonempty_id_set(any_of, "Or.any_of"))

    def sort_key(self) -> tuple:
        return (1, tuple(sorted(self.any_of)))


@dataclass(frozen=True)
class Nand(Dependency):
    not_all_of: frozenset[str]

    def __init__(self, not_all_of: Iterable[str]):
        object.__setattr__(self, "not_all_of",
                           _nonempty_id_set(not_all_of, "Nand.not_all_of"))

    def sort_key(self) -> tuple:
        return (2, tuple(sorted(self.not_all_of)))


def satisfies(args_present: Iterable[str], dep: Dependency) -> bool:
    present = frozenset(args_present)
    if isinstance(dep, ImplyDisj):
        return not dep.all_of <= present or bool(dep.any_of & present)
    if isinstance(dep, Or):
        return bool(dep.any_of & present)
    if isinstance(dep, Nand):
        return not dep.not_all_of <= present
    raise TypeError(f"unknown dependency type: {dep!r}")


@dataclass(frozen=True)
class DepArgIAF:
    base: ArgIAF
    deps: frozenset[Dependency]

    def __init__(self, base: ArgIAF, deps: Iterable[Dependency] = ()):
        deps = frozenset(deps)
        uncertain = set(base.uncertain_args)
        for dep in deps:
            for member_set in _dependency_sets(dep):
                stray = member_set - uncertain
                if stray:
                    raise ValueError(
                        "dependency mentions arguments that are not "
                        f"uncertain: {sorted(stray)}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "deps", deps)


def _dependency_sets(dep: Dependency) -> tuple[frozenset[str], ...]:
    if isinstance(dep, ImplyDisj):
        return (dep.all_of, dep.any_of)
    if isinstance(dep, Or):
        return (dep.any_of,)
    if isinstance(dep, Nand):
        return (dep.not_all_of,)
    raise TypeError(f"unknown dependency type: {dep!r}")


class CompletionSet:
    """Canonical, deduplicated set of frameworks with deterministic order."""

    __slots__ = ("_members", "_index")

    def __init__(self, members: Iterable[AbstractAF] = ()):
        unique = {(af.args, af.defeats): af for af in members}
        self._members = tuple(unique[key] for key in sorted(unique))
        self._index = frozenset(unique)

    @property
    def members(self) -> tuple[AbstractAF, ...]:
        return self._members

    def argument_union(self) -> frozenset[str]:
        out: set[str] = set()
        for af in self._members:
            out.update(af.args)
        return frozenset(out)

    def __iter__(self) -> Iterator[AbstractAF]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, af: object) -> bool:
        return isinstance(af, AbstractAF) and (af.args, af.defeats) in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CompletionSet) and self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"CompletionSet({len(self._members)} frameworks)"


def _check_uncertain_bound(count: int, limits: Limits) -> None:
    if count > limits.max_uncertain:
        raise UncertaintyBoundExceededError(
            f"{count} uncertain elements exceed the bound "
            f"{limits.max_uncertain} (2^{count} subsets)")


def _subset(order: list[str], mask: int) -> list[str]:
    return [order[i] for i in range(len(order)) if mask >> i & 1]


def completions_arg_iaf(iaf: ArgIAF,
                        limits: Limits = DEFAULT_LIMITS) -> CompletionSet:
    """All 2^|uncertain| completions; distinct subsets give distinct
    argument sets, so the count is exact."""
    order = list(iaf.uncertain_args)
    _check_uncertain_bound(len(order), limits)
    full = iaf.full_af()
    fixed = set(iaf.fixed_args)
    out = []
    for mask in range(1 << len(order)):
        out.append(restrict(full, fixed | set(_subset(order, mask))))
    return CompletionSet(out)


def is_implicative(diaf: DepArgIAF) -> bool:
    return all(isinstance(dep, ImplyDisj) and len(dep.any_of) == 1
               for dep in diaf.deps)


def _encode_deps(deps: Iterable[Dependency],
                 index: dict[str, int]) -> list[tuple[int, int, int]]:
    encoded = []
    for dep in sorted(deps, key=lambda d: d.sort_key()):
        if isinstance(dep, ImplyDisj):
            xmask = sum(1 << index[a] for a in dep.all_of)
            ymask = sum(1 << index[a] for a in dep.any_of)
            encoded.append((kernels.DEP_IMPLY, xmask, ymask))
        elif isinstance(dep, Or):
            encoded.append((kernels.DEP_OR,
                            sum(1 << index[a] for a in dep.any_of), 0))
        else:
            encoded.append((kernels.DEP_NAND,
                            sum(1 << index[a] for a in dep.not_all_of), 0))
    return encoded


def _horn_closed_masks(n: int, deps: list[tuple[int, int, int]],
                       cap: int) -> list[int]:
    """Closure-based enumeration of satisfying subsets when all dependencies
    are implications with singleton consequents (definite Horn clauses).
    Output-sensitive: cost scales with the number of satisfying subsets, not
    with 2^n."""
    rules = [(x, y) for _, x, y in deps]

    def close(mask: int) -> int:
        changed = True
        while changed:
            changed = False
            for xmask, ymask in rules:
                if mask & xmask == xmask and mask & ymask != ymask:
                    mask |= ymask
                    changed = True
        return mask

    start = close(0)
    seen = {start}
    stack = [start]
    full = (1 << n) - 1
    while stack:
        mask = stack.pop()
        free = full & ~mask
        while free:
            low = free & -free
            free ^= low
            closed = close(mask | low)
            if closed not in seen:
                seen.add(closed)
                if len(seen) > cap:
                    raise UncertaintyBoundExceededError(
                        f"more than {cap} dependency-satisfying subsets")
                stack.append(closed)
    return sorted(seen)


def completions_dep(diaf: DepArgIAF,
                    limits: Limits = DEFAULT_LIMITS) -> CompletionSet:
    """Completions of the base framework whose argument sets satisfy every
    dependency."""
    base = diaf.base
    order = list(base.uncertain_args)
    n = len(order)
    index = {a: i for i, a in enumerate(order)}
    encoded = _encode_deps(diaf.deps, index)
    if not encoded:
        return completions_arg_iaf(base, limits)
    if n > _HORN_THRESHOLD and is_implicative(diaf):
        # Wide implicative frameworks (the translation targets) stay
        # tractable through closure enumeration instead of 2^n scans.
        masks = _horn_closed_masks(n, encoded, 1 << limits.max_uncertain)
    else:
        _check_uncertain_bound(n, limits)
        masks = kernels.dependency_masks(n, encoded)
    full = base.full_af()
    fixed = set(base.fixed_args)
    return CompletionSet(restrict(full, fixed | set(_subset(order, mask)))
                         for mask in masks)


def parse_iaf(text: str) -> DepArgIAF:
    """Parse the IAF text format.

    Extends the AF format with ?arg(x). for uncertain arguments and
    imply([..],[..]). / or([..]). / nand([..]). dependency lines; list
    items are comma-separated identifiers.
    """
    from .errors import ParseError, UndeclaredArgumentError

    fixed: set[str] = set()
    uncertain: set[str] = set()
    atts: list[tuple[int, str, str]] = []
    dep_lines: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("%"):
            continue
        column = raw.index(stripped[0]) + 1
        for prefix in ("?arg(", "arg(", "att(", "imply(", "or(", "nand("):
            if stripped.startswith(prefix):
                kind = prefix[:-1]
                break
        else:
            raise ParseError(f"unrecognized line: {stripped!r}", lineno, column)
        if not stripped.endswith(")."):
            raise ParseError(f"line does not end with ').': {stripped!r}",
                             lineno, column)
        body = stripped[len(prefix):-2]
        if kind in ("arg", "?arg"):
            if not is_valid_token_body(body):
                raise ParseError(f"invalid identifier {body!r}", lineno, column)
            (uncertain if kind == "?arg" else fixed).add(body)
        elif kind == "att":
            parts = [p.strip() for p in body.split(",")]
            if len(parts) != 2 or not all(map(is_valid_token_body, parts)):
                raise ParseError(f"malformed att(...) line: {stripped!r}",
                                 lineno, column)
            atts.append((lineno, parts[0], parts[1]))
        else:
            dep_lines.append((lineno, kind, body))

    declared = fixed | uncertain
    clash = fixed & uncertain
    if clash:
        raise ParseError(
            f"arguments declared both fixed and uncertain: {sorted(clash)}",
            min(no for no, *_ in atts) if atts else 1, 1)
    defeats = set()
    for lineno, s, t in atts:
        if s not in declared or t not in declared:
            missing = s if s not in declared else t
            raise UndeclaredArgumentError(
                f"line {lineno}: att references undeclared argument {missing!r}")
        defeats.add((s, t))
    base = ArgIAF(fixed, uncertain, defeats)

    deps: list[Dependency] = []
    for lineno, kind, body in dep_lines:
        lists = _parse_bracket_lists(body, kind, lineno)
        try:
            if kind == "imply":
                if len(lists) != 2:
                    raise ParseError("imply needs exactly two lists", lineno, 1)
                deps.append(ImplyDisj(lists[0], lists[1]))
            elif kind == "or":
                if len(lists) != 1:
                    raise ParseError("or needs exactly one list", lineno, 1)
                deps.append(Or(lists[0]))
            else:
                if len(lists) != 1:
                    raise ParseError("nand needs exactly one list", lineno, 1)
                deps.append(Nand(lists[0]))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, 1) from None
    try:
        return DepArgIAF(base, deps)
    except ValueError as exc:
        raise UndeclaredArgumentError(str(exc)) from None


def is_valid_token_body(token: str) -> bool:
    from .core import is_valid_argument_id

    return is_valid_argument_id(token)


def _parse_bracket_lists(body: str, kind: str, lineno: int) -> list[list[str]]:
    from .errors import ParseError

    if not body.startswith("[") or not body.endswith("]"):
        raise ParseError(f"{kind} arguments must be bracketed lists: {body!r}",
                         lineno, 1)
    # Identifiers cannot contain commas, so '],[' splits top-level lists
    # unambiguously even though ids may contain brackets.
    parts = body[1:-1].split("],[")
    lists = []
    for part in parts:
        items = [p.strip() for p in part.split(",")]
        if not all(map(is_valid_token_body, items)):
            raise ParseError(f"invalid identifier in list: {part!r}", lineno, 1)
        lists.append(items)
    return lists


def serialize_dependency(dep: Dependency) -> str:
    def fmt(values: frozenset[str]) -> str:
        return "[" + ",".join(sorted(values)) + "]"

    if isinstance(dep, ImplyDisj):
        return f"imply({fmt(dep.all_of)},{fmt(dep.any_of)})."
    if isinstance(dep, Or):
        return f"or({fmt(dep.any_of)})."
    if isinstance(dep, Nand):
        return f"nand({fmt(dep.not_all_of)})."
    raise TypeError(f"unknown dependency type: {dep!r}")


def serialize_iaf(value: DepArgIAF | ArgIAF) -> str:
    diaf = value if isinstance(value, DepArgIAF) else DepArgIAF(value)
    base = diaf.base
    lines = [f"arg({a})." for a in base.fixed_args]
    lines += [f"?arg({a})." for a in base.uncertain_args]
    lines += [f"att({s},{t})." for s, t in base.defeats]
    lines += sorted(serialize_dependency(dep) for dep in diaf.deps)
    return "\n".join(lines) + ("\n" if lines else "")


def synthesize_dependencies(iaf: ArgIAF, target: CompletionSet,
                            minimize: bool = False,
                            limits: Limits = DEFAULT_LIMITS,
                            ) -> frozenset[Dependency]:
    """Build a dependency set whose filtered completions are exactly
    ``target``.

    One dependency per excluded completion: the clause over the uncertain
    arguments that negates the excluded subset, rendered as Or when every
    literal is positive, Nand when every literal is negative, and ImplyDisj
    (present part implies one absent member) for mixed clauses.
    """
    all_comps = completions_arg_iaf(iaf, limits)
    stray = [af for af in target if af not in all_comps]
    if stray:
        raise TargetNotSubsetError(
            f"{len(stray)} target frameworks are not completions of the "
            "framework")
    uncertain = frozenset(iaf.uncertain_args)
    deps: list[Dependency] = []
    for af in all_comps:
        if af in target:
            continue
        present = af.arg_set & uncertain
        absent = uncertain - present
        if not present and not absent:
            raise TargetNotRepresentableError(
                "cannot exclude the unique completion of a framework "
                "without uncertain arguments")
        if not present:
            deps.append(Or(absent))
        elif not absent:
            deps.append(Nand(present))
        else:
            deps.append(ImplyDisj(present, absent))
    if minimize:
        kept = sorted(deps, key=lambda d: d.sort_key())
        for dep in list(kept):
            trial = [d for d in kept if d != dep]
            if completions_dep(DepArgIAF(iaf, trial), limits) == target:
                kept = trial
        deps = kept
    return frozenset(deps)
