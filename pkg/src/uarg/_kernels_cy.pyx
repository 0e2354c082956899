# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled bitmask kernels; contract identical to uarg._kernels_py.

Masks fit in 64 bits (n <= 62 enforced by the dispatching wrapper).
"""

from libc.stdlib cimport free, malloc

MODE_CONFLICT_FREE = 0
MODE_ADMISSIBLE = 1
MODE_COMPLETE = 2
MODE_STABLE = 3

DEP_IMPLY = 0
DEP_OR = 1
DEP_NAND = 2


def semantics_masks(int n, attackers, targets, int mode):
    cdef unsigned long long full = ((<unsigned long long>1) << n) - 1
    cdef unsigned long long mask, attacked, rest, low
    cdef unsigned long long *att
    cdef unsigned long long *tgt
    cdef int i, ok
    cdef list out = []

    att = <unsigned long long *>malloc(n * sizeof(unsigned long long))
    tgt = <unsigned long long *>malloc(n * sizeof(unsigned long long))
    if att == NULL or tgt == NULL:
        free(att)
        free(tgt)
        raise MemoryError()
    try:
        for i in range(n):
            att[i] = attackers[i]
            tgt[i] = targets[i]
        mask = 0
        while mask <= full:
            attacked = 0
            rest = mask
            ok = 1
            while rest:
                low = rest & (~rest + 1)
                i = _bit_index(low)
                rest ^= low
                if att[i] & mask:
                    ok = 0
                    break
                attacked |= tgt[i]
            if ok:
                if mode == 0:
                    out.append(mask)
                elif mode == 3:
                    if (mask | attacked) == full:
                        out.append(mask)
                else:
                    rest = mask
                    while rest:
                        low = rest & (~rest + 1)
                        i = _bit_index(low)
                        rest ^= low
                        if att[i] & ~attacked:
                            ok = 0
                            break
                    if ok:
                        if mode == 1:
                            out.append(mask)
                        else:
                            rest = full & ~mask
                            while rest:
                                low = rest & (~rest + 1)
                                i = _bit_index(low)
                                rest ^= low
                                if not (att[i] & ~attacked):
                                    ok = 0
                                    break
                            if ok:
                                out.append(mask)
            if mask == full:
                break
            mask += 1
    finally:
        free(att)
        free(tgt)
    return out


cdef inline int _bit_index(unsigned long long low):
    cdef int i = 0
    while low > 1:
        low >>= 1
        i += 1
    return i


def dependency_masks(int n, deps):
    cdef unsigned long long full = ((<unsigned long long>1) << n) - 1
    cdef unsigned long long mask
    cdef int ndeps = len(deps)
    cdef int j, ok
    cdef int *kind
    cdef unsigned long long *xs
    cdef unsigned long long *ys
    cdef list out = []

    kind = <int *>malloc(ndeps * sizeof(int)) if ndeps else NULL
    xs = <unsigned long long *>malloc(ndeps * sizeof(unsigned long long)) if ndeps else NULL
    ys = <unsigned long long *>malloc(ndeps * sizeof(unsigned long long)) if ndeps else NULL
    if ndeps and (kind == NULL or xs == NULL or ys == NULL):
        free(kind)
        free(xs)
        free(ys)
        raise MemoryError()
    try:
        for j in range(ndeps):
            kind[j] = deps[j][0]
            xs[j] = deps[j][1]
            ys[j] = deps[j][2]
        mask = 0
        while mask <= full:
            ok = 1
            for j in range(ndeps):
                if kind[j] == 0:
                    if (mask & xs[j]) == xs[j] and not (mask & ys[j]):
                        ok = 0
                        break
                elif kind[j] == 1:
                    if not (mask & xs[j]):
                        ok = 0
                        break
                else:
                    if (mask & xs[j]) == xs[j]:
                        ok = 0
                        break
            if ok:
                out.append(mask)
            if mask == full:
                break
            mask += 1
    finally:
        if ndeps:
            free(kind)
            free(xs)
            free(ys)
    return out
