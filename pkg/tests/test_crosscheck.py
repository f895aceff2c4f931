"""End-to-end agreement of the two independent routes to the distance.

For random qubit stabilizer codes, the enumerative certificate d must sit
exactly at the Knill-Laflamme boundary of the dense oracle: every error of
weight d-1 is handled, some error of weight d is not.
"""

from __future__ import annotations

import random

from stabforge.code import EXACT, symplectic_code
from stabforge.gf import field_make
from stabforge.pauli import weights
from stabforge.stabilizer import IMPURE, PURE, certify_stabilizer
from stabforge.statevec import generator_set, kl_verify

from conftest import random_generator_set

F2 = field_make(2, 1)


def test_certified_distance_sits_on_the_kl_boundary():
    rng = random.Random(60402)
    checked = 0
    while checked < 20:
        n = rng.randrange(3, 6)
        g = rng.randrange(1, n)
        G = random_generator_set(n, g, rng)
        C = symplectic_code(F2, G.rows, half=n)
        if C.k_dim != g:
            continue
        stab = certify_stabilizer(C)
        p = stab.params
        assert p.k == n - g > 0
        assert p.d.status == EXACT
        gen = generator_set(C)
        below = kl_verify(gen, p.d.value - 1)
        at = kl_verify(gen, p.d.value)
        assert below.passed, (G.rows, p.d)
        assert not at.passed, (G.rows, p.d)
        assert weights(at.witness.op)[0] == p.d.value
        checked += 1


def test_purity_matches_oracle_degeneracy():
    # impure means some stabilizer element is lighter than the distance;
    # the dual minimum then undercuts the certified d
    from stabforge.code import min_weight

    def check(stab):
        dual_min = min_weight(stab.dual, "quantum").value
        if stab.params.pure == PURE:
            assert dual_min == stab.params.d.value
        else:
            assert dual_min < stab.params.d.value

    # a known degenerate code: three repetition blocks, weight-2 stabilizers
    shor_rows = [
        (1, 1, 1, 1, 1, 1, 0, 0, 0) + (0,) * 9,
        (0, 0, 0, 1, 1, 1, 1, 1, 1) + (0,) * 9,
    ] + [
        (0,) * 9 + tuple(1 if j in (i, i + 1) else 0 for j in range(9))
        for i in (0, 1, 3, 4, 6, 7)
    ]
    shor = certify_stabilizer(symplectic_code(F2, shor_rows))
    assert shor.params.pure == IMPURE
    check(shor)

    rng = random.Random(77001)
    seen = {PURE: 0, IMPURE: 0}
    for _ in range(400):
        n = rng.randrange(3, 6)
        g = rng.randrange(2, n)
        G = random_generator_set(n, g, rng)
        C = symplectic_code(F2, G.rows, half=n)
        if C.k_dim != g or n - g == 0:
            continue
        stab = certify_stabilizer(C)
        if stab.params.pure not in seen:
            continue
        check(stab)
        seen[stab.params.pure] += 1
    # degenerate codes are rare at this scale but must appear
    assert seen[PURE] >= 10 and seen[IMPURE] >= 2
