"""Fast cross-oracle suites, runnable from the CLI before any command.

Each suite pits independent computation paths against each other on a small
fixed panel of groups; any disagreement raises ConsistencyError.  The full
test suite runs the same comparisons at much larger sizes — this module is
the quick in-binary version.
"""

from __future__ import annotations

import random

from .cyclotomic import ConsistencyError, cyclotomic_polynomial, get_context
from .klein import (
    BinaryDihedral,
    BinaryTetrahedral,
    Cyclic,
    build_group,
    character_table,
    cyclic_weight_indices,
)
from .cyclic import monomial_weights, syzygy_action_check
from .sympow import (
    molien_coefficients,
    multiplicity_series,
    sym_character_eigen,
    sym_character_series,
)

_PANEL = (Cyclic(5, 2), Cyclic(6, 5), BinaryDihedral(3), BinaryTetrahedral)


def _check_cyclotomic() -> None:
    for m in (12, 60):
        prod = [1]
        for d in range(1, m + 1):
            if m % d == 0:
                phi = cyclotomic_polynomial(d)
                out = [0] * (len(prod) + len(phi) - 1)
                for i, a in enumerate(prod):
                    for j, b in enumerate(phi):
                        out[i + j] += a * b
                prod = out
        expect = [-1] + [0] * (m - 1) + [1]
        if prod != expect:
            raise ConsistencyError(f"product of cyclotomic polynomials fails at m={m}")
    rng = random.Random(20260816)
    ctx = get_context(24)
    for _ in range(25):
        x = ctx.from_coeffs([rng.randint(-9, 9) for _ in range(ctx.degree)])
        y = ctx.from_coeffs([rng.randint(-9, 9) for _ in range(ctx.degree)])
        if (x + y) * (x + y) != x * x + 2 * (x * y) + y * y:
            raise ConsistencyError("ring identity failed in Q(zeta_24)")
        if not x.is_zero and x * x.inv() != ctx.one:
            raise ConsistencyError("inverse failed in Q(zeta_24)")


def _check_characters() -> None:
    for kind in _PANEL:
        G = build_group(kind)
        character_table(G).validate()
        series = sym_character_series(G, 16)
        molien = [molien_coefficients(G, c, 16) for c in range(G.num_classes)]
        for q in range(17):
            eig = sym_character_eigen(G, q)
            if series[q].values != eig.values:
                raise ConsistencyError(f"recurrence != eigen oracle at {kind}, q={q}")
            for c in range(G.num_classes):
                if molien[c][q] != series[q].values[c]:
                    raise ConsistencyError(f"Molien oracle disagrees at {kind}, q={q}")


def _check_monomial_oracle() -> None:
    for n, a in ((2, 1), (3, 2), (5, 2), (6, 5)):
        G = build_group(Cyclic(n, a))
        idx = cyclic_weight_indices(G)
        rows = multiplicity_series(G, 32)
        for q in range(33):
            counts = monomial_weights(n, a, q).counts
            for s in range(n):
                if counts[s] != rows[q][idx[s]]:
                    raise ConsistencyError(
                        f"monomial oracle disagrees at n={n}, a={a}, q={q}, s={s}"
                    )


def _check_syzygies() -> None:
    for n in range(2, 6):
        if not syzygy_action_check(n).passed:
            raise ConsistencyError(f"syzygy check failed at n={n}")


SUITES = (
    ("cyclotomic field axioms", _check_cyclotomic),
    ("triple character oracles", _check_characters),
    ("monomial weight oracle", _check_monomial_oracle),
    ("syzygy relations", _check_syzygies),
)


def run_selfcheck() -> list[str]:
    """Run every suite; return one line per suite, raising on any failure."""
    lines = []
    for name, fn in SUITES:
        fn()
        lines.append(f"selfcheck: {name}: ok")
    return lines
