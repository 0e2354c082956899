"""Abstract argumentation frameworks: canonical storage, restriction,
extension semantics, and the APX-style text format.

An argument identifier is a non-empty printable token without whitespace,
parentheses, commas or periods, so every identifier can appear verbatim in
arg(...)/att(...) lines.  Frameworks are stored canonically (sorted argument
and defeat tuples): structural equality is set equality and frameworks are
hashable, which is what keeps completion-set deduplication cheap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .config import DEFAULT_LIMITS, Limits
from .errors import MemberNotInAFError, ParseError, UndeclaredArgumentError

_FORBIDDEN_ID_CHARS = set("(),.")

SEMANTICS = ("admissible", "complete", "grounded", "preferred", "stable")


def is_valid_argument_id(name: str) -> bool:
    if not name or not name.isprintable():
        return False
    return not any(ch.isspace() or ch in _FORBIDDEN_ID_CHARS for ch in name)


def check_argument_id(name: str) -> str:
    if not is_valid_argument_id(name):
        raise ValueError(f"invalid argument identifier: {name!r}")
    return name


@dataclass(frozen=True)
class AbstractAF:
    """Finite directed defeat graph over argument identifiers."""

    args: tuple[str, ...]
    defeats: tuple[tuple[str, str], ...]

    def __init__(self, args: Iterable[str] = (),
                 defeats: Iterable[tuple[str, str]] = ()):
        arg_set = {check_argument_id(a) for a in args}
        defeat_set = {(s, t) for s, t in defeats}
        for s, t in defeat_set:
            if s not in arg_set or t not in arg_set:
                raise UndeclaredArgumentError(
                    f"defeat ({s},{t}) has an endpoint outside the framework")
        object.__setattr__(self, "args", tuple(sorted(arg_set)))
        object.__setattr__(self, "defeats", tuple(sorted(defeat_set)))

    @property
    def arg_set(self) -> frozenset[str]:
        return frozenset(self.args)

    @property
    def defeat_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.defeats)

    def restrict(self, keep: Iterable[str]) -> "AbstractAF":
        return restrict(self, keep)

    def __repr__(self) -> str:
        return f"AbstractAF(args={list(self.args)}, defeats={list(self.defeats)})"


def restrict(af: AbstractAF, keep: Iterable[str]) -> AbstractAF:
    """Sub-framework induced by ``af.args & keep``; extra names in keep are
    ignored."""
    keep = set(keep)
    kept = [a for a in af.args if a in keep]
    kept_set = set(kept)
    return AbstractAF(kept, [(s, t) for s, t in af.defeats
                             if s in kept_set and t in kept_set])


def af_equal(x: AbstractAF, y: AbstractAF) -> bool:
    return x.args == y.args and x.defeats == y.defeats


def _check_members(af: AbstractAF, members: Iterable[str]) -> frozenset[str]:
    members = frozenset(members)
    stray = members - af.arg_set
    if stray:
        raise MemberNotInAFError(
            f"extension members not in framework: {sorted(stray)}")
    return members


def is_conflict_free(af: AbstractAF, members: Iterable[str]) -> bool:
    members = _check_members(af, members)
    return not any(s in members and t in members for s, t in af.defeats)


def is_admissible(af: AbstractAF, members: Iterable[str]) -> bool:
    """Conflict-free and self-defending: every defeater of a member is
    defeated by some member."""
    members = _check_members(af, members)
    if not is_conflict_free(af, members):
        return False
    defeated = {t for s, t in af.defeats if s in members}
    return all(s in defeated for s, t in af.defeats if t in members)


def _index_masks(af: AbstractAF) -> tuple[list[str], list[int], list[int]]:
    order = list(af.args)
    index = {a: i for i, a in enumerate(order)}
    attackers = [0] * len(order)
    targets = [0] * len(order)
    for s, t in af.defeats:
        attackers[index[t]] |= 1 << index[s]
        targets[index[s]] |= 1 << index[t]
    return order, attackers, targets


def _mask_to_extension(mask: int, order: list[str]) -> frozenset[str]:
    return frozenset(order[i] for i in range(len(order)) if mask >> i & 1)


def _grounded_mask(n: int, attackers: list[int], targets: list[int]) -> int:
    mask = 0
    while True:
        attacked = 0
        for i in range(n):
            if mask >> i & 1:
                attacked |= targets[i]
        new = 0
        for i in range(n):
            if not (attackers[i] & ~attacked):
                new |= 1 << i
        if new == mask:
            return mask
        mask = new


def _maximal_masks(masks: list[int]) -> list[int]:
    masks = sorted(masks, key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in masks:
        if not any(m | k == k for k in kept):
            kept.append(m)
    return kept


def extensions(af: AbstractAF, sigma: str,
               limits: Limits = DEFAULT_LIMITS) -> tuple[frozenset[str], ...]:
    """All sigma-extensions, canonically ordered.

    Computed by subset enumeration with conflict-free pruning; fine at desk
    scale (the format targets frameworks of at most ~20 arguments).
    """
    if sigma not in SEMANTICS:
        raise ValueError(f"unknown semantics {sigma!r}; pick one of {SEMANTICS}")
    order, attackers, targets = _index_masks(af)
    n = len(order)
    if sigma == "grounded":
        masks = [_grounded_mask(n, attackers, targets)]
    elif sigma == "admissible":
        masks = kernels.semantics_masks(n, attackers, targets,
                                        kernels.MODE_ADMISSIBLE)
    elif sigma == "complete":
        masks = kernels.semantics_masks(n, attackers, targets,
                                        kernels.MODE_COMPLETE)
    elif sigma == "stable":
        masks = kernels.semantics_masks(n, attackers, targets,
                                        kernels.MODE_STABLE)
    else:  # preferred = maximal complete (equivalently maximal admissible)
        complete = kernels.semantics_masks(n, attackers, targets,
                                           kernels.MODE_COMPLETE)
        masks = _maximal_masks(complete)
    exts = [_mask_to_extension(m, order) for m in masks]
    return tuple(sorted(exts, key=sorted))


_ARG_LINE = re.compile(r"arg\(([^\s(),.]+)\)\.")
_ATT_LINE = re.compile(r"att\(([^\s(),.]+),\s*([^\s(),.]+)\)\.")


def _match_line(line: str, lineno: int,
                patterns: dict[str, re.Pattern]) -> tuple[str, tuple[str, ...]]:
    stripped = line.strip()
    column = line.index(stripped[0]) + 1
    for kind, pattern in patterns.items():
        if stripped.startswith(kind):
            m = pattern.fullmatch(stripped)
            if not m:
                raise ParseError(f"malformed {kind}(...) line: {stripped!r}",
                                 lineno, column)
            return kind, m.groups()
    raise ParseError(f"unrecognized line: {stripped!r}", lineno, column)


def parse_af(text: str) -> AbstractAF:
    """Parse the AF text format: arg(x). / att(x,y). lines, % comments."""
    args: set[str] = set()
    defeats: set[tuple[str, str]] = set()
    patterns = {"arg": _ARG_LINE, "att": _ATT_LINE}
    pending: list[tuple[int, str, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        kind, groups = _match_line(line, lineno, patterns)
        if kind == "arg":
            args.add(groups[0])
        else:
            pending.append((lineno, groups[0], groups[1]))
    for lineno, s, t in pending:
        if s not in args or t not in args:
            missing = s if s not in args else t
            raise UndeclaredArgumentError(
                f"line {lineno}: att references undeclared argument {missing!r}")
        defeats.add((s, t))
    return AbstractAF(args, defeats)


def serialize_af(af: AbstractAF) -> str:
    lines = [f"arg({a})." for a in af.args]
    lines += [f"att({s},{t})." for s, t in af.defeats]
    return "\n".join(lines) + ("\n" if lines else "")
