"""Characters of Sym^q(V) and their decompositions into irreducibles.

Three independent routes compute the character of the q-th symmetric power of
the fundamental 2-dimensional representation, cross-checking each other:

* the three-term recurrence  chi_(q+1) = chi_q * chi_1 - det * chi_(q-1)
  (det is the determinant character; it is trivial for the SL(2) families,
  recovering the classical recurrence, and a weight character for the general
  cyclic embeddings) — the default, evaluated per class in eigenvalue-exponent
  coordinates where multiplying by a trace is just two cyclic shifts;
* the eigenvalue formula  chi(g) = sum_t lambda_1^t lambda_2^(q-t)
  with the eigenvalues re-derived from each representative by exhaustive
  search over roots of unity;
* Molien series coefficients, expanding 1/det(I - t*rho(g)) with the
  determinant polynomial computed from the matrix entries.

Decompositions push the same recurrence through the decomposition map: with
T[i][j] the multiplicity of chi_i in chi_V * chi_j (an exact inner product,
computed once), the multiplicity vectors satisfy a_(q+1) = T a_q - P a_(q-1)
where P permutes indices by tensoring with the determinant character.  The
literal inner-product evaluation is kept as `decompose_inner` and serves as
the oracle for the fast route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import ConsistencyError, CycloElement
from .klein import (
    Character,
    KleinGroup,
    character_table,
    fundamental_character,
    _values_inner,
)


# ---------------------------------------------------------------------------
# symmetric-power characters


def _sym_value_counts(G: KleinGroup, q_max: int) -> list[list[list[int]]]:
    """Per q, per class: the value of chi_Sym^q as exponent counts.

    counts[e] is the number of eigenvalue products equal to zeta^e, so the
    character value is sum_e counts[e] * zeta^e.  The recurrence multiplies by
    the trace zeta^e1 + zeta^e2 (two shifts) and subtracts the determinant
    twist zeta^(e1+e2) of the previous row (one shift).
    """
    m = G.m
    r = G.num_classes
    prev = [[0] * m for _ in range(r)]
    for c in range(r):
        prev[c][0] = 1
    rows = [prev]
    if q_max == 0:
        return rows
    cur = []
    for c in range(r):
        e1, e2 = G.class_eigen[c]
        vec = [0] * m
        vec[e1] += 1
        vec[e2] += 1
        cur.append(vec)
    rows.append(cur)
    for _ in range(q_max - 1):
        nxt = []
        for c in range(r):
            e1, e2 = G.class_eigen[c]
            ed = (e1 + e2) % m
            pc, qc = rows[-1][c], rows[-2][c]
            vec = [
                pc[(e - e1) % m] + pc[(e - e2) % m] - qc[(e - ed) % m]
                for e in range(m)
            ]
            nxt.append(vec)
        rows.append(nxt)
    return rows


def sym_character_series(G: KleinGroup, q_max: int) -> list[Character]:
    """Characters of Sym^q(V) for q = 0..q_max via the recurrence."""
    rows = _sym_value_counts(G, q_max)
    out = []
    for row in rows:
        out.append(Character(G, tuple(G.ctx.from_counts(vec) for vec in row)))
    return out


def sym_character(G: KleinGroup, q: int) -> Character:
    """The character of Sym^q(V) (recurrence route, the default)."""
    if q < 0:
        raise ValueError("q must be non-negative")
    return sym_character_series(G, q)[q]


def _eigen_pair_search(G: KleinGroup, c: int) -> tuple[int, int]:
    """Re-derive eigenvalue exponents of a class representative from scratch."""
    ctx = G.ctx
    m = G.m
    rep = G.elements[G.classes[c].rep]
    if rep.det() == ctx.one:
        tau = rep.trace()
        for j in range(m):
            if ctx.zeta(j) + ctx.zeta(-j) == tau:
                return (j, (m - j) % m)
        raise ConsistencyError(
            f"no root of unity zeta^j has zeta^j + zeta^-j equal to the trace "
            f"of class {c} of {G.kind}"
        )
    # Outside SL(2) only the diagonal cyclic embeddings occur.
    if not rep.is_diagonal:
        raise ConsistencyError("non-diagonal representative outside SL(2)")
    found = []
    for entry in (rep.a, rep.d):
        for j in range(m):
            if ctx.zeta(j) == entry:
                found.append(j)
                break
        else:
            raise ConsistencyError("diagonal entry is not a root of unity")
    return (found[0], found[1])


def sym_character_eigen(G: KleinGroup, q: int) -> Character:
    """Independent oracle: evaluate sum_t lambda_1^t lambda_2^(q-t) directly."""
    if q < 0:
        raise ValueError("q must be non-negative")
    m = G.m
    values = []
    for c in range(G.num_classes):
        e1, e2 = _eigen_pair_search(G, c)
        counts = [0] * m
        for t in range(q + 1):
            counts[(e1 * t + e2 * (q - t)) % m] += 1
        values.append(G.ctx.from_counts(counts))
    return Character(G, tuple(values))


def molien_coefficients(G: KleinGroup, class_index: int, q_max: int) -> list[CycloElement]:
    """Coefficients 0..q_max of 1/det(I - t*rho(g)) for the class representative.

    The determinant polynomial is computed from the matrix entries (for the
    SL(2) families it is 1 - tau*t + t^2) and inverted as a formal power
    series with exact cyclotomic coefficients.
    """
    if q_max < 0:
        raise ValueError("q_max must be non-negative")
    ctx = G.ctx
    rep = G.elements[G.classes[class_index].rep]
    # det(I - t*M) = 1 - trace(M) t + det(M) t^2
    den = [ctx.one, -rep.trace(), rep.det()]
    if den[0] != ctx.one:
        raise ConsistencyError("determinant polynomial must have constant term 1")
    coeffs: list[CycloElement] = [ctx.one]
    for k in range(1, q_max + 1):
        acc = ctx.zero
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc + den[j] * coeffs[k - j]
        coeffs.append(-acc)
    return coeffs


# ---------------------------------------------------------------------------
# decomposition into irreducibles


@dataclass(frozen=True)
class Decomposition:
    group: KleinGroup
    q: int
    multiplicities: tuple[int, ...]

    def dimension(self) -> int:
        degrees = character_table(self.group).degrees
        return sum(a * d for a, d in zip(self.multiplicities, degrees))


def _check_multiplicity_row(G: KleinGroup, q: int, row: tuple[int, ...]) -> None:
    degrees = character_table(G).degrees
    if any(a < 0 for a in row):
        raise ConsistencyError(f"negative multiplicity at q={q} for {G.kind}")
    total = sum(a * d for a, d in zip(row, degrees))
    if total != q + 1:
        raise ConsistencyError(
            f"dimension conservation fails at q={q} for {G.kind}: {total} != {q + 1}"
        )


def decompose_inner(G: KleinGroup, q: int) -> Decomposition:
    """Oracle route: literal inner products of chi_Sym^q against the table."""
    table = character_table(G)
    chi = sym_character(G, q)
    mults = []
    for irr in table:
        a = _values_inner(G, chi.values, irr.values)
        if a.denominator != 1 or a < 0:
            raise ConsistencyError(
                f"multiplicity <Sym^{q}, chi> = {a} is not a non-negative integer"
            )
        mults.append(int(a))
    row = tuple(mults)
    _check_multiplicity_row(G, q, row)
    return Decomposition(G, q, row)


def _tensor_matrix(G: KleinGroup) -> list[list[int]]:
    """T[i][j] = multiplicity of chi_i in chi_V * chi_j (exact, non-negative)."""
    table = character_table(G)
    fund = fundamental_character(G)
    r = len(table)
    T = [[0] * r for _ in range(r)]
    for j in range(r):
        prod = tuple(x * y for x, y in zip(fund.values, table[j].values))
        for i in range(r):
            a = _values_inner(G, prod, table[i].values)
            if a.denominator != 1 or a < 0:
                raise ConsistencyError(
                    f"tensor multiplicity {a} is not a non-negative integer"
                )
            T[i][j] = int(a)
    return T


def _det_permutation(G: KleinGroup) -> list[int]:
    """perm[j] = index of det_character * chi_j in the table."""
    table = character_table(G)
    dets = tuple(G.class_det(c) for c in range(G.num_classes))
    if all(d == G.ctx.one for d in dets):
        return list(range(len(table)))
    by_values = {chi.values: i for i, chi in enumerate(table)}
    perm = []
    for chi in table:
        target = tuple(d * v for d, v in zip(dets, chi.values))
        i = by_values.get(target)
        if i is None:
            raise ConsistencyError(
                "determinant twist of an irreducible is missing from the table"
            )
        perm.append(i)
    return perm


def multiplicity_series(G: KleinGroup, q_max: int) -> list[tuple[int, ...]]:
    """Multiplicity vectors of Sym^q(V) for q = 0..q_max (table order).

    Pushes the character recurrence through the decomposition map, so each
    step is one integer matrix-vector product; every row is hard-checked for
    non-negativity and dimension conservation.  Rows are cached on the group,
    so sweeping several irreducibles at one horizon costs a single pass.
    """
    if q_max < 0:
        raise ValueError("q_max must be non-negative")
    rows: list[tuple[int, ...]] | None = getattr(G, "_sym_mult_rows", None)
    if rows is None:
        table = character_table(G)
        r = len(table)
        prev = tuple(1 if i == 0 else 0 for i in range(r))  # Sym^0 = trivial
        _check_multiplicity_row(G, 0, prev)
        rows = [prev]
        G._sym_mult_rows = rows
    if q_max >= len(rows):
        table = character_table(G)
        r = len(table)
        T = _tensor_matrix(G)
        perm = _det_permutation(G)
        if len(rows) == 1:
            cur = tuple(T[i][0] for i in range(r))  # Sym^1 = V
            _check_multiplicity_row(G, 1, cur)
            rows.append(cur)
        for q in range(len(rows), q_max + 1):
            prev, cur = rows[-2], rows[-1]
            nxt = [0] * r
            for i in range(r):
                Ti = T[i]
                nxt[i] = sum(Ti[j] * cur[j] for j in range(r) if cur[j])
            for j in range(r):
                if prev[j]:
                    nxt[perm[j]] -= prev[j]
            nxt = tuple(nxt)
            _check_multiplicity_row(G, q, nxt)
            rows.append(nxt)
    return rows[: q_max + 1]


def decompose(G: KleinGroup, q: int) -> Decomposition:
    """Multiplicities alpha_(i,q) of each irreducible in Sym^q(V)."""
    if q < 0:
        raise ValueError("q must be non-negative")
    return Decomposition(G, q, multiplicity_series(G, q)[q])


def springer_series(G: KleinGroup, i: int, q_max: int) -> list[int]:
    """Coefficients of (1/|G|) sum_c size_c conj(chi_i(c)) / det(I - t*rho(c)).

    A third, generating-function route to the multiplicity sequence of the
    i-th irreducible; every coefficient must come out a non-negative integer.
    """
    table = character_table(G)
    chi = table[i]
    ctx = G.ctx
    acc = [ctx.zero] * (q_max + 1)
    for c, cls in enumerate(G.classes):
        weight = cls.size * chi.values[c].conjugate()
        series = molien_coefficients(G, c, q_max)
        for q in range(q_max + 1):
            acc[q] = acc[q] + weight * series[q]
    out = []
    for q, v in enumerate(acc):
        val = v.to_rational()
        if val is None:
            raise ConsistencyError(f"series coefficient {q} is not rational")
        val = val / G.order
        if val.denominator != 1 or val < 0:
            raise ConsistencyError(
                f"series coefficient {q} = {val} is not a non-negative integer"
            )
        out.append(int(val))
    return out
