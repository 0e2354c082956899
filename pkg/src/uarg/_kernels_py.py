"""Pure-Python bitmask kernels.

Subsets of an n-element universe are integers with bit i standing for
element i.  These loops are the hot spots of semantics enumeration and
completion filtering; uarg._kernels_cy holds the compiled twin with the
same contract.
"""

from __future__ import annotations

MODE_CONFLICT_FREE = 0
MODE_ADMISSIBLE = 1
MODE_COMPLETE = 2
MODE_STABLE = 3

DEP_IMPLY = 0
DEP_OR = 1
DEP_NAND = 2


def semantics_masks(n: int, attackers: list[int], targets: list[int],
                    mode: int) -> list[int]:
    """All subset masks satisfying the selected extension condition.

    attackers[i] / targets[i]: masks of defeaters of i / of arguments
    defeated by i.  Results are ascending.
    """
    full = (1 << n) - 1
    out = []
    for mask in range(1 << n):
        attacked = 0
        rest = mask
        ok = True
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if attackers[i] & mask:
                ok = False
                break
            attacked |= targets[i]
        if not ok:
            continue
        if mode == MODE_CONFLICT_FREE:
            out.append(mask)
            continue
        if mode == MODE_STABLE:
            if (mask | attacked) == full:
                out.append(mask)
            continue
        defended_ok = True
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if attackers[i] & ~attacked:
                defended_ok = False
                break
        if not defended_ok:
            continue
        if mode == MODE_ADMISSIBLE:
            out.append(mask)
            continue
        # complete: every defended argument is already in
        closed = True
        rest = full & ~mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if not (attackers[i] & ~attacked):
                closed = False
                break
        if closed:
            out.append(mask)
    return out


def dependency_masks(n: int, deps: list[tuple[int, int, int]]) -> list[int]:
    """All subset masks satisfying every dependency.

    Each dependency is (kind, xmask, ymask); ymask is 0 except for
    DEP_IMPLY.  Results are ascending.
    """
    out = []
    for mask in range(1 << n):
        for kind, xmask, ymask in deps:
            if kind == DEP_IMPLY:
                if (mask & xmask) == xmask and not (mask & ymask):
                    break
            elif kind == DEP_OR:
                if not (mask & xmask):
                    break
            else:  # DEP_NAND
                if (mask & xmask) == xmask:
                    break
        else:
            out.append(mask)
    return out
