"""Backend parity: the compiled kernels and the pure-Python fallback must
return identical mask lists, and both must agree with the definition-literal
oracle."""

import random

import pytest

from uarg import AbstractAF, extensions, kernels
from uarg._kernels_py import (
    MODE_ADMISSIBLE,
    MODE_COMPLETE,
    MODE_CONFLICT_FREE,
    MODE_STABLE,
)
from uarg import _kernels_py

from oracles import naive_extensions

try:
    from uarg import _kernels_cy
except ImportError:
    _kernels_cy = None

MODES = (MODE_CONFLICT_FREE, MODE_ADMISSIBLE, MODE_COMPLETE, MODE_STABLE)


def random_masks(rng, n, density=0.3):
    attackers = [0] * n
    targets = [0] * n
    for i in range(n):
        for j in range(n):
            if rng.random() < density:
                targets[i] |= 1 << j
                attackers[j] |= 1 << i
    return attackers, targets


@pytest.mark.skipif(_kernels_cy is None, reason="compiled kernels not built")
class TestBackendParity:
    def test_semantics_masks_agree(self):
        rng = random.Random(103)
        for _ in range(40):
            n = rng.randint(0, 7)
            attackers, targets = random_masks(rng, n)
            for mode in MODES:
                assert _kernels_cy.semantics_masks(n, attackers, targets, mode) \
                    == _kernels_py.semantics_masks(n, attackers, targets, mode)

    def test_dependency_masks_agree(self):
        rng = random.Random(107)
        for _ in range(40):
            n = rng.randint(0, 7)
            deps = []
            for _ in range(rng.randint(0, 4)):
                kind = rng.randint(0, 2)
                x = rng.randrange(1, 1 << n) if n else 0
                y = rng.randrange(1, 1 << n) if (kind == 0 and n) else 0
                if n == 0:
                    continue
                deps.append((kind, x, y))
            assert _kernels_cy.dependency_masks(n, deps) == \
                _kernels_py.dependency_masks(n, deps)


class TestKernelCorrectness:
    def test_against_definition_literal_oracle(self):
        rng = random.Random(109)
        names = ["a", "b", "c", "d", "e"]
        for _ in range(40):
            n = rng.randint(0, 5)
            defeats = [(names[i], names[j]) for i in range(n)
                       for j in range(n) if rng.random() < 0.3]
            af = AbstractAF(names[:n], defeats)
            for sigma in ("admissible", "complete", "stable"):
                assert set(extensions(af, sigma)) == naive_extensions(af, sigma)

    def test_backend_name_reported(self):
        assert kernels.backend_name() in ("cython", "python")
