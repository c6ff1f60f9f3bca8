"""Finite subgroups of SL(2) and their character tables, built from scratch.

The five families — cyclic, binary dihedral, binary tetrahedral, binary
octahedral, binary icosahedral — are constructed as explicit 2x2 matrix
groups over one cyclotomic field per group (the field of the group exponent,
so every eigenvalue of every element lives there).  Generator matrices are
data, not trusted facts: enumeration re-derives the order, determinants,
element orders and conjugacy classes, and hard-fails if anything disagrees
with the advertised family.

Cyclic(n, a) supports any weight a coprime to n.  For a = n-1 the group lies
in SL(2) (the A_{n-1} case, invariant ring k[u,v]^G with equation y^n = xz);
other weights give the general cyclic quotient embedded in GL(2), which all
the character machinery handles uniformly.  The remaining families are honest
SL(2) subgroups; their invariant rings are the classical D and E hypersurfaces
(recorded here for orientation only — nothing in the code manipulates them):

    binary dihedral BD_n   (order 4n)  : x(y^2 - x^n) - z^2
    binary tetrahedral     (order 24)  : x^4 + y^3 + z^2
    binary octahedral      (order 48)  : x^3 y + y^3 + z^2
    binary icosahedral     (order 120) : x^5 + y^3 + z^2

Character tables are computed, never transcribed.  Cyclic tables come from
the explicit weight characters; the non-abelian families run a tensor-peeling
loop seeded with the fundamental character and with characters induced from
the cyclic subgroups generated by class representatives (plain tensor-peeling
alone stalls on clumped remainders, e.g. the three linear characters of the
quaternion group arrive as one norm-3 remainder).  Every table is validated
against both orthogonality relations before it is returned.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import (
    ConsistencyError,
    CycloContext,
    CycloElement,
    get_context,
)


# ---------------------------------------------------------------------------
# group kinds


@dataclass(frozen=True)
class GroupKind:
    """One of the five families, with parameters where the family has them."""

    family: str  # "cyclic" | "BD" | "BT" | "BO" | "BI"
    n: int | None = None
    a: int | None = None

    def __str__(self) -> str:
        if self.family == "cyclic":
            return f"cyclic:{self.n},{self.a}"
        if self.family == "BD":
            return f"BD:{self.n}"
        return self.family


def Cyclic(n: int, a: int) -> GroupKind:
    return GroupKind("cyclic", n, a)


def BinaryDihedral(n: int) -> GroupKind:
    return GroupKind("BD", n)


BinaryTetrahedral = GroupKind("BT")
BinaryOctahedral = GroupKind("BO")
BinaryIcosahedral = GroupKind("BI")


def validate_kind(kind: GroupKind) -> None:
    if kind.family == "cyclic":
        if kind.n is None or kind.a is None or kind.n < 2:
            raise ValueError(f"cyclic needs n >= 2 and a weight, got {kind}")
        if math.gcd(kind.a, kind.n) != 1:
            raise ValueError(
                f"cyclic weight a={kind.a} must be coprime to n={kind.n} "
                "(otherwise the representation is not faithful)"
            )
    elif kind.family == "BD":
        if kind.n is None or kind.n < 2:
            raise ValueError(f"binary dihedral needs n >= 2, got {kind}")
    elif kind.family not in ("BT", "BO", "BI"):
        raise ValueError(f"unknown group family {kind.family!r}")


def expected_order(kind: GroupKind) -> int:
    return {
        "cyclic": lambda: kind.n,
        "BD": lambda: 4 * kind.n,
        "BT": lambda: 24,
        "BO": lambda: 48,
        "BI": lambda: 120,
    }[kind.family]()


def kind_conductor(kind: GroupKind) -> int:
    """Group exponent per family; re-validated against enumerated orders."""
    if kind.family == "cyclic":
        return kind.n
    if kind.family == "BD":
        return math.lcm(2 * kind.n, 4)
    return {"BT": 12, "BO": 24, "BI": 60}[kind.family]


# ---------------------------------------------------------------------------
# 2x2 matrices over a fixed cyclotomic field


class Matrix2:
    """A 2x2 matrix with CycloElement entries (a b / c d)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: CycloElement, b: CycloElement, c: CycloElement, d: CycloElement):
        self.a, self.b, self.c, self.d = a, b, c, d

    @staticmethod
    def identity(ctx: CycloContext) -> "Matrix2":
        return Matrix2(ctx.one, ctx.zero, ctx.zero, ctx.one)

    def __mul__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> CycloElement:
        return self.a * self.d - self.b * self.c

    def trace(self) -> CycloElement:
        return self.a + self.d

    def adjugate(self) -> "Matrix2":
        """The inverse, provided det = 1 (true in the SL(2) families)."""
        return Matrix2(self.d, -self.b, -self.c, self.a)

    @property
    def is_diagonal(self) -> bool:
        return self.b.is_zero and self.c.is_zero

    def key(self):
        return (
            self.a.num, self.a.den, self.b.num, self.b.den,
            self.c.num, self.c.den, self.d.num, self.d.den,
        )

    def __eq__(self, o):
        return isinstance(o, Matrix2) and self.key() == o.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


# ---------------------------------------------------------------------------
# generator data (validated, not trusted — see build_group post-conditions)


def _generators(kind: GroupKind, ctx: CycloContext) -> list[Matrix2]:
    m = ctx.m
    zero, one = ctx.zero, ctx.one

    def rot():
        return Matrix2(zero, one, -one, zero)  # [[0,1],[-1,0]], order 4

    if kind.family == "cyclic":
        return [Matrix2(ctx.zeta(1), zero, zero, ctx.zeta(kind.a))]

    if kind.family == "BD":
        z = ctx.zeta(m // (2 * kind.n))  # a primitive 2n-th root
        return [Matrix2(z, zero, zero, z.inv()), rot()]

    if kind.family == "BT":
        i = ctx.zeta(m // 4)
        half = ctx.rational(Fraction(1, 2))
        omega = Matrix2(
            (i - 1) * half, (i + 1) * half,
            (i - 1) * half, (-1 - i) * half,
        )  # the Hurwitz unit (-1+i+j+k)/2
        return [Matrix2(i, zero, zero, -i), rot(), omega]

    if kind.family == "BO":
        e8 = ctx.zeta(m // 8)
        i = e8 * e8
        half = ctx.rational(Fraction(1, 2))
        omega = Matrix2(
            (i - 1) * half, (i + 1) * half,
            (i - 1) * half, (-1 - i) * half,
        )
        return [Matrix2(e8, zero, zero, e8.inv()), rot(), omega]

    if kind.family == "BI":
        z5 = ctx.zeta(m // 5)
        # 2*z5^3 + 2*z5^2 + 1 is a square root of 5 (up to sign); dividing the
        # symmetric generator by it lands back in SL(2).
        root5 = 2 * z5 ** 3 + 2 * z5 ** 2 + 1
        s = root5.inv()
        p = (z5 ** 4 - z5) * s
        r = (z5 ** 2 - z5 ** 3) * s
        return [
            Matrix2(z5 ** 3, zero, zero, z5 ** 2),
            rot(),
            Matrix2(p, r, r, -p),
        ]

    raise ValueError(f"unknown family {kind.family!r}")


# ---------------------------------------------------------------------------
# the group object


@dataclass(frozen=True)
class ConjugacyClass:
    rep: int                 # element index of the representative
    members: tuple[int, ...]
    size: int


class KleinGroup:
    """An enumerated matrix group with conjugacy data.

    Built only through :func:`build_group`.  All fields are set once during
    construction and never mutated afterwards (the cached character table is
    attached lazily but is itself immutable).
    """

    def __init__(self, kind, ctx, elements, index, generators, element_orders,
                 classes, class_of, class_eigen, conj_rows, in_sl2):
        self.kind = kind
        self.ctx = ctx
        self.m = ctx.m
        self.elements = elements            # tuple[Matrix2], identity first
        self.index = index                  # matrix key -> element index
        self.generators = generators
        self.order = len(elements)
        self.element_orders = element_orders
        self.classes = classes              # tuple[ConjugacyClass]
        self.class_of = class_of            # element index -> class index
        self.class_eigen = class_eigen      # class index -> (e1, e2): eigenvalues zeta^e1, zeta^e2
        self.conj_rows = conj_rows          # class index -> tuple over g of index(g * rep * g^-1)
        self.in_sl2 = in_sl2
        self._fundamental = None
        self._table = None

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_order(self, c: int) -> int:
        """Order of the elements in class c."""
        return self.element_orders[self.classes[c].rep]

    def class_trace(self, c: int) -> CycloElement:
        return self.elements[self.classes[c].rep].trace()

    def class_det(self, c: int) -> CycloElement:
        return self.elements[self.classes[c].rep].det()

    def __repr__(self):
        return f"KleinGroup({self.kind}, order={self.order}, m={self.m})"


@lru_cache(maxsize=None)
def build_group(kind: GroupKind) -> KleinGroup:
    """Enumerate the group and its conjugacy classes; hard-validate everything."""
    validate_kind(kind)
    target = expected_order(kind)
    ctx = get_context(kind_conductor(kind))
    gens = _generators(kind, ctx)

    in_sl2 = kind.family != "cyclic" or (kind.a + 1) % kind.n == 0
    if in_sl2:
        for g in gens:
            if g.det() != ctx.one:
                raise ConsistencyError(f"generator of {kind} has determinant != 1")

    # Breadth-first closure under right multiplication by the generators.
    identity = Matrix2.identity(ctx)
    elements = [identity]
    index = {identity.key(): 0}
    queue = deque([identity])
    bound = 2 * target
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            k = y.key()
            if k not in index:
                if len(elements) >= bound:
                    raise ConsistencyError(
                        f"closure of {kind} exceeded {bound} elements; corrupted generators"
                    )
                index[k] = len(elements)
                elements.append(y)
                queue.append(y)
    if len(elements) != target:
        raise ConsistencyError(
            f"{kind} enumerated {len(elements)} elements, expected {target}"
        )

    # Eigenvalue exponents per element come from the diagonal (cyclic case)
    # or from the trace via exhaustive search over roots of unity (SL(2) case,
    # where the eigenvalues are zeta^e and zeta^-e).
    m = ctx.m
    monomial_exp = {ctx.zeta(e): e for e in range(m)}
    trace_exp = {}
    for e in range(m // 2 + 1):
        tau = ctx.zeta(e) + ctx.zeta(-e)
        trace_exp.setdefault(tau, e)

    def eigen_exponents(mat: Matrix2) -> tuple[int, int]:
        if mat.is_diagonal:
            e1 = monomial_exp.get(mat.a)
            e2 = monomial_exp.get(mat.d)
            if e1 is None or e2 is None:
                raise ConsistencyError("diagonal entry is not a root of unity")
            return (e1, e2)
        if mat.det() != ctx.one:
            raise ConsistencyError("non-diagonal element outside SL(2)")
        e = trace_exp.get(mat.trace())
        if e is None:
            raise ConsistencyError(
                f"no eigenvalue zeta^j with zeta^j + zeta^-j matching a trace in {kind}"
            )
        return (e, (m - e) % m)

    element_orders = []
    for i, el in enumerate(elements):
        if in_sl2 and el.det() != ctx.one:
            raise ConsistencyError(f"element {i} of {kind} has determinant != 1")
        e1, e2 = eigen_exponents(el)
        order = m // math.gcd(m, e1, e2)
        if order == 1 and i != 0:
            raise ConsistencyError(
                f"non-identity element with both eigenvalues 1 in {kind} (not small)"
            )
        element_orders.append(order)
    if math.lcm(*element_orders) != m:
        raise ConsistencyError(
            f"conductor mismatch for {kind}: field has m={m}, "
            f"element orders give lcm={math.lcm(*element_orders)}"
        )

    # Conjugacy classes: orbits of conjugation, identity class first, then by
    # minimal unplaced element index.  Abelian groups skip the matrix work.
    classes: list[ConjugacyClass] = []
    class_of = [-1] * target
    class_eigen: list[tuple[int, int]] = []
    conj_rows: list[tuple[int, ...]] = []
    if kind.family == "cyclic":
        for i, el in enumerate(elements):
            classes.append(ConjugacyClass(rep=i, members=(i,), size=1))
            class_of[i] = i
            class_eigen.append(eigen_exponents(el))
            conj_rows.append((i,) * target)
    else:
        inverses = [el.adjugate() for el in elements]
        for i in range(target):
            if class_of[i] != -1:
                continue
            rep = elements[i]
            row = []
            for g, ginv in zip(elements, inverses):
                row.append(index[(g * rep * ginv).key()])
            members = tuple(sorted(set(row)))
            ci = len(classes)
            for j in members:
                if class_of[j] not in (-1, ci):
                    raise ConsistencyError("conjugacy orbits are not a partition")
                class_of[j] = ci
            classes.append(ConjugacyClass(rep=i, members=members, size=len(members)))
            class_eigen.append(eigen_exponents(rep))
            conj_rows.append(tuple(row))
        if sum(c.size for c in classes) != target:
            raise ConsistencyError("conjugacy classes do not partition the group")
    if classes[0].size != 1 or classes[0].rep != 0:
        raise ConsistencyError("identity class is not the leading singleton")

    return KleinGroup(
        kind=kind,
        ctx=ctx,
        elements=tuple(elements),
        index=index,
        generators=tuple(gens),
        element_orders=tuple(element_orders),
        classes=tuple(classes),
        class_of=tuple(class_of),
        class_eigen=tuple(class_eigen),
        conj_rows=tuple(conj_rows),
        in_sl2=in_sl2,
    )


def conjugacy_classes(G: KleinGroup) -> tuple[ConjugacyClass, ...]:
    return G.classes


# ---------------------------------------------------------------------------
# characters


class Character:
    """A class function presented by its values, one per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group: KleinGroup, values):
        values = tuple(values)
        if len(values) != group.num_classes:
            raise ValueError("need one value per conjugacy class")
        self.group = group
        self.values = values

    @property
    def degree(self) -> int:
        d = self.values[0].to_rational()
        if d is None or d.denominator != 1 or d <= 0:
            raise ConsistencyError(f"character degree {d!r} is not a positive integer")
        return int(d)

    def __mul__(self, other: "Character") -> "Character":
        if other.group is not self.group:
            raise ValueError("characters belong to different groups")
        return Character(self.group, tuple(x * y for x, y in zip(self.values, other.values)))

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and self.group is other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.group), self.values))

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)

    def __repr__(self):
        return f"Character({self.group.kind}, deg={self.values[0]})"


def fundamental_character(G: KleinGroup) -> Character:
    """Trace of the defining representation on each class (degree 2)."""
    if G._fundamental is None:
        chi = Character(G, tuple(G.class_trace(c) for c in range(G.num_classes)))
        if chi.degree != 2:
            raise ConsistencyError("fundamental character must have degree 2")
        G._fundamental = chi
    return G._fundamental


def _values_inner(G: KleinGroup, phi, psi) -> Fraction:
    """<phi, psi> = (1/|G|) sum over classes of size * conj(phi) * psi."""
    acc = G.ctx.zero
    for c, cls in enumerate(G.classes):
        acc = acc + cls.size * (phi[c].conjugate() * psi[c])
    r = acc.to_rational()
    if r is None:
        raise ConsistencyError(
            "inner product of class functions is not rational; inputs are not characters"
        )
    return r / G.order


def inner_product(phi: Character, psi: Character) -> Fraction:
    if phi.group is not psi.group:
        raise ValueError("characters belong to different groups")
    return _values_inner(phi.group, phi.values, psi.values)


class CharacterTable:
    """The complete list of irreducible characters, trivial first."""

    __slots__ = ("group", "irreducibles")

    def __init__(self, group: KleinGroup, irreducibles):
        self.group = group
        self.irreducibles = tuple(irreducibles)

    def __len__(self):
        return len(self.irreducibles)

    def __iter__(self):
        return iter(self.irreducibles)

    def __getitem__(self, i) -> Character:
        return self.irreducibles[i]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(chi.degree for chi in self.irreducibles)

    def validate(self) -> None:
        """Hard-check completeness and both orthogonality relations."""
        G = self.group
        r = G.num_classes
        if len(self.irreducibles) != r:
            raise ConsistencyError(
                f"{len(self.irreducibles)} irreducibles for {r} classes"
            )
        if sum(d * d for d in self.degrees) != G.order:
            raise ConsistencyError("sum of squared degrees differs from |G|")
        for i, chi in enumerate(self.irreducibles):
            for j in range(i, r):
                got = inner_product(chi, self.irreducibles[j])
                want = 1 if i == j else 0
                if got != want:
                    raise ConsistencyError(
                        f"<chi_{i}, chi_{j}> = {got}, expected {want}"
                    )
        # Column (second) orthogonality: sum_i conj(chi_i(c)) chi_i(c') is
        # |G|/size(c) on the diagonal and 0 off it.
        for c in range(r):
            for cp in range(c, r):
                acc = G.ctx.zero
                for chi in self.irreducibles:
                    acc = acc + chi.values[c].conjugate() * chi.values[cp]
                want = (
                    G.ctx.rational(Fraction(G.order, G.classes[c].size))
                    if c == cp
                    else G.ctx.zero
                )
                if acc != want:
                    raise ConsistencyError(
                        f"column orthogonality fails at classes ({c}, {cp})"
                    )
        # The table separates classes: no two identical columns.
        cols = {tuple(chi.values[c] for chi in self.irreducibles) for c in range(r)}
        if len(cols) != r:
            raise ConsistencyError("two conjugacy classes have identical columns")


def _trivial_values(G: KleinGroup):
    return (G.ctx.one,) * G.num_classes


def _cyclic_table(G: KleinGroup) -> list[tuple[CycloElement, ...]]:
    # Classes of the cyclic group are the generator powers in discovery order,
    # so class k is generated by g^k and the weight-t character is zeta^(t*k).
    n = G.order
    return [
        tuple(G.ctx.zeta(t * k) for k in range(n))
        for t in range(n)
    ]


def _induced_from_cyclic(G: KleinGroup, c: int) -> list[tuple[CycloElement, ...]]:
    """Characters induced from all linear characters of <rep of class c>.

    Frobenius reciprocity makes this pool rich enough to separate every
    irreducible: the restriction of any irreducible to a cyclic subgroup
    contains some linear character, so the irreducible appears in the
    corresponding induced character.
    """
    ctx = G.ctx
    rep = G.elements[G.classes[c].rep]
    d = G.element_orders[G.classes[c].rep]
    # enumerate the subgroup <rep> with exponents
    power = Matrix2.identity(ctx)
    exponent_of = {}
    for s in range(d):
        exponent_of[G.index[power.key()]] = s
        power = power * rep
    if len(exponent_of) != d:
        raise ConsistencyError("cyclic subgroup enumeration is inconsistent")
    # For each class c', count how often a conjugate of its representative
    # lands on each subgroup exponent.
    hit_counts = []
    for cp in range(G.num_classes):
        counts = [0] * d
        for target in G.conj_rows[cp]:
            s = exponent_of.get(target)
            if s is not None:
                counts[s] += 1
        hit_counts.append(counts)
    step = G.m // d
    out = []
    for t in range(d):
        values = []
        for cp in range(G.num_classes):
            acc = ctx.zero
            for s, cnt in enumerate(hit_counts[cp]):
                if cnt:
                    acc = acc + cnt * ctx.zeta(step * t * s)
            values.append(acc * Fraction(1, d))
        out.append(tuple(values))
    return out


def _peel(G, vec, found, allow_negative):
    """Subtract integer multiples of the found irreducibles from vec."""
    out = vec
    for chi in found:
        coeff = _values_inner(G, out, chi)
        if coeff.denominator != 1:
            raise ConsistencyError(
                f"non-integer multiplicity {coeff} while peeling a character"
            )
        if coeff < 0 and not allow_negative:
            raise ConsistencyError(
                f"negative multiplicity {coeff} while peeling a genuine character"
            )
        if coeff:
            out = tuple(x - int(coeff) * y for x, y in zip(out, chi))
    return out


def _discover_table(G: KleinGroup) -> list[tuple[CycloElement, ...]]:
    """Tensor-peeling with induced-character seeds and remainder splitting."""
    r = G.num_classes
    fund = tuple(fundamental_character(G).values)
    found: list[tuple[CycloElement, ...]] = [_trivial_values(G)]
    residuals: list[tuple[CycloElement, ...]] = []
    queue = deque([fund])
    for c in range(r):
        queue.extend(_induced_from_cyclic(G, c))
    budget = 60 * r * r

    def norm(vec) -> Fraction:
        return _values_inner(G, vec, vec)

    def register(vec) -> None:
        deg = vec[0].to_rational()
        if deg is None or deg.denominator != 1 or deg <= 0:
            raise ConsistencyError(f"norm-1 remainder with bad degree {deg!r}")
        found.append(vec)
        queue.append(tuple(x * y for x, y in zip(vec, fund)))

    processed = 0
    while len(found) < r:
        made_progress = False
        while queue and len(found) < r:
            processed += 1
            if processed > budget:
                raise ConsistencyError(
                    f"character discovery for {G.kind} exceeded its budget"
                )
            vec = _peel(G, queue.popleft(), found, allow_negative=False)
            if all(v.is_zero for v in vec):
                continue
            n = norm(vec)
            if n == 1:
                register(vec)
                made_progress = True
            else:
                residuals.append(vec)
                queue.append(tuple(x * y for x, y in zip(vec, fund)))
        if len(found) == r:
            break
        # Splitting phase: re-peel stashed remainders and try small integer
        # combinations; any norm-1 virtual character with positive degree is
        # an irreducible.
        kept = []
        for vec in residuals:
            vec = _peel(G, vec, found, allow_negative=True)
            if all(v.is_zero for v in vec):
                continue
            deg = vec[0].to_rational()
            if deg is not None and deg < 0:
                vec = tuple(-v for v in vec)
            if norm(vec) == 1:
                register(vec)
                made_progress = True
            else:
                kept.append(vec)
        residuals = kept
        for i in range(len(residuals)):
            if len(found) == r:
                break
            for j in range(i + 1, len(residuals)):
                for sign in (1, -1):
                    combo = tuple(
                        x + sign * y for x, y in zip(residuals[i], residuals[j])
                    )
                    combo = _peel(G, combo, found, allow_negative=True)
                    if all(v.is_zero for v in combo):
                        continue
                    deg = combo[0].to_rational()
                    if deg is not None and deg < 0:
                        combo = tuple(-v for v in combo)
                        deg = -deg
                    if deg and deg > 0 and norm(combo) == 1:
                        register(combo)
                        made_progress = True
                        break
        if not made_progress and not queue:
            raise ConsistencyError(
                f"character discovery stalled for {G.kind}: "
                f"{len(found)} of {r} irreducibles found"
            )
    return found


def cyclic_weight_indices(G: KleinGroup) -> dict[int, int]:
    """For a cyclic group, map each weight s to the table row of V_s.

    V_s is the character taking the value zeta_n^s on the distinguished
    generator diag(zeta_n, zeta_n^a); the map identifies weight-counting
    decompositions with table-ordered multiplicity vectors.
    """
    if G.kind.family != "cyclic":
        raise ValueError("weight indices only make sense for cyclic groups")
    table = character_table(G)
    n = G.kind.n
    step = G.m // n  # zeta_n = zeta_m^step
    gen_eigen = sorted((step % G.m, (step * G.kind.a) % G.m))
    gen_class = None
    for c in range(G.num_classes):
        if sorted(G.class_eigen[c]) == gen_eigen:
            gen_class = c
            break
    if gen_class is None:
        raise ConsistencyError(f"generator class not found for {G.kind}")
    indices = {}
    for s in range(n):
        target = G.ctx.zeta(step * s)
        hits = [i for i, chi in enumerate(table) if chi.values[gen_class] == target]
        if len(hits) != 1:
            raise ConsistencyError(
                f"weight {s} matches {len(hits)} table rows for {G.kind}"
            )
        indices[s] = hits[0]
    return indices


def character_table(G: KleinGroup) -> CharacterTable:
    """Discover, order, and validate the full character table."""
    if G._table is not None:
        return G._table
    if G.kind.family == "cyclic":
        vectors = _cyclic_table(G)
    else:
        vectors = _discover_table(G)
    chars = [Character(G, vec) for vec in vectors]
    trivial = _trivial_values(G)
    head = [chi for chi in chars if chi.values == trivial]
    if len(head) != 1:
        raise ConsistencyError("expected exactly one trivial character")
    rest = sorted(
        (chi for chi in chars if chi.values != trivial),
        key=lambda chi: (chi.degree, chi.sort_key()),
    )
    table = CharacterTable(G, head + rest)
    table.validate()
    G._table = table
    return table
