"""The Burnside ring A(G) of a finite group.

Elements are integer vectors over the canonical basis [G/H], one class per
conjugacy class of subgroups.  The mark homomorphism (fixed-point counts at
every subgroup class) is injective and the table of marks is lower
triangular with positive diagonal in the canonical order, so products and
class decompositions reduce to exact integer back-substitution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import CellSpace
from .errors import InvariantViolation, UsageError
from .gsets import BiSet, biset_from_single_action
from .groups import FiniteGroup, SubgroupLattice, subgroup_lattice


class BurnsideRing:
    """A(G) with the table of marks precomputed over the canonical basis."""

    def __init__(self, G: FiniteGroup, lattice: SubgroupLattice,
                 marks_rows=None):
        self.group = G
        self.lattice = lattice
        self.n = len(lattice.classes)
        if marks_rows is None:
            marks_rows = tuple(
                tuple(self._mark(K, H) for H in lattice.classes)
                for K in lattice.classes)
        self.marks_rows = tuple(tuple(row) for row in marks_rows)
        for i, row in enumerate(self.marks_rows):
            if row[i] <= 0 or any(row[j] for j in range(i + 1, self.n)):
                raise InvariantViolation("table of marks is not lower triangular")
        self._zeta: dict = {}
        self._full_actions: dict = {}

    def _mark(self, K, H) -> int:
        """|(G/K)^H| = number of cosets gK with g^-1 H g contained in K."""
        G = self.group
        kset = set(K.elements)
        count = 0
        seen: set[int] = set()
        for g in G.elements():
            if g in seen:
                continue
            seen.update(G.mul(g, k) for k in K.elements)
            gi = G.inv(g)
            if all(G.mul(G.mul(gi, h), g) in kset for h in H.generators):
                count += 1
        return count

    # -- elements ------------------------------------------------------------

    def element(self, coeffs) -> BurnsideElement:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.n:
            raise UsageError(f"need {self.n} coefficients, got {len(coeffs)}")
        return BurnsideElement(self, coeffs)

    def basis(self, i: int) -> BurnsideElement:
        return self.element(tuple(1 if j == i else 0 for j in range(self.n)))

    @property
    def zero(self) -> BurnsideElement:
        return self.element((0,) * self.n)

    @property
    def unit(self) -> BurnsideElement:
        """[G/G]: the one-point G-set."""
        return self.basis(self.n - 1)

    @property
    def regular(self) -> BurnsideElement:
        """[G/e]: the free orbit."""
        return self.basis(0)

    def from_marks(self, marks) -> BurnsideElement:
        """Invert the mark map by back-substitution; exactness is an invariant."""
        marks = list(marks)
        coeffs = [0] * self.n
        for i in range(self.n - 1, -1, -1):
            residue = marks[i] - sum(coeffs[l] * self.marks_rows[l][i]
                                     for l in range(i + 1, self.n))
            q, r = divmod(residue, self.marks_rows[i][i])
            if r:
                raise InvariantViolation(
                    f"mark vector {tuple(marks)} is not integral over the basis")
            coeffs[i] = q
        return self.element(coeffs)

    def basis_name(self, i: int) -> str:
        if i == self.n - 1:
            return "[G/G]"
        if i == 0:
            return "[G/e]"
        return f"[G/H{i}]"

    # -- G-sets attached to basis classes ------------------------------------

    def coset_biset(self, i: int) -> BiSet:
        """The transitive G-set G/H_i (B side), used for λ-ring generators."""
        key = ("coset", i)
        if key not in self._zeta:
            G = self.group
            K = self.lattice.classes[i]
            reps: list[int] = []
            seen: set[int] = set()
            for g in G.elements():
                if g in seen:
                    continue
                coset = [G.mul(g, k) for k in K.elements]
                seen.update(coset)
                reps.append(min(coset))
            rep_index = {r: j for j, r in enumerate(reps)}
            coset_of = {}
            for j, r in enumerate(reps):
                for k in K.elements:
                    coset_of[G.mul(r, k)] = j
            perms = [tuple(coset_of[G.mul(s, r)] for r in reps)
                     for s in G.generators]
            self._zeta[key] = biset_from_single_action(
                len(reps), G, perms, side="B", labels=reps)
        return self._zeta[key]

    def symmetric_power_class(self, i: int, k: int) -> BurnsideElement:
        """class_of(S^k(G/H_i)), the t^k coefficient of the Kapranov zeta of
        the basis class."""
        key = ("sym", i, k)
        if key not in self._zeta:
            from .gsets import symmetric_power
            self._zeta[key] = class_of(symmetric_power(self.coset_biset(i), k))
        return self._zeta[key]

    def full_action(self, X: BiSet) -> list[tuple[int, ...]]:
        """Permutation of X for every element of G, composed along the
        generator-word spanning tree."""
        G = self.group
        prev = G._word_table()
        perms: list[tuple[int, ...] | None] = [None] * G.order
        perms[0] = tuple(range(X.size))

        def perm_of(y: int) -> tuple[int, ...]:
            p = perms[y]
            if p is None:
                x, i = prev[y]
                base = perm_of(x)
                gen = X.actB[i]
                p = tuple(base[gen[q]] for q in range(X.size))
                perms[y] = p
            return p

        return [perm_of(y) for y in range(G.order)]

    def __repr__(self) -> str:
        return f"<BurnsideRing A({self.group.label}) rank={self.n}>"


@dataclass(frozen=True)
class BurnsideElement:
    ring: BurnsideRing
    coeffs: tuple[int, ...]

    def marks(self) -> tuple[int, ...]:
        rows = self.ring.marks_rows
        return tuple(sum(c * rows[i][j] for i, c in enumerate(self.coeffs))
                     for j in range(self.ring.n))

    def _check(self, other: BurnsideElement) -> None:
        if self.ring is not other.ring:
            raise UsageError("elements of different Burnside rings")

    def __add__(self, other: BurnsideElement) -> BurnsideElement:
        self._check(other)
        return BurnsideElement(self.ring, tuple(a + b for a, b in
                                                zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BurnsideElement:
        return BurnsideElement(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other: BurnsideElement) -> BurnsideElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BurnsideElement(self.ring,
                                   tuple(other * a for a in self.coeffs))
        self._check(other)
        marks = tuple(a * b for a, b in zip(self.marks(), other.marks()))
        return self.ring.from_marks(marks)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def render(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            name = self.ring.basis_name(i)
            terms.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"<A({self.ring.group.label}) {self.render()}>"


def burnside_ring(G: FiniteGroup) -> BurnsideRing:
    ring = G._cache.get("burnside_ring")
    if ring is None:
        ring = BurnsideRing(G, subgroup_lattice(G))
        G._cache["burnside_ring"] = ring
    return ring


def table_of_marks(G: FiniteGroup) -> list[list[int]]:
    """Row per basis class [G/K], column per class [H], entry |(G/K)^H|."""
    return [list(row) for row in burnside_ring(G).marks_rows]


def _require_b_set(X: BiSet) -> None:
    if X.gO.order != 1 and any(p != tuple(range(X.size)) for p in X.actO):
        raise UsageError("O-side action must be trivial; quotient it away first")


def class_of(X: BiSet) -> BurnsideElement:
    """Decompose a finite B-side G-set into the basis of orbit types."""
    _require_b_set(X)
    ring = burnside_ring(X.gB)
    marks = []
    for H in ring.lattice.classes:
        fixed = range(X.size)
        for g in H.generators:
            fixed = [p for p in fixed if X.act("B", g, p) == p]
        marks.append(len(list(fixed)))
    return ring.from_marks(marks)


def chi_equivariant(X: BiSet | CellSpace) -> BurnsideElement:
    """Equivariant Euler characteristic in A(G_B): points (cells carry the
    sign (-1)^dim) are classified by exact isotropy subgroup, and each
    isotropy stratum contributes its orbit count to the matching [G/H]."""
    if isinstance(X, CellSpace):
        ring = burnside_ring(X.gB)
        total = ring.zero
        for d, F in X.cells:
            total = total + (-1) ** d * chi_equivariant(F)
        return total
    _require_b_set(X)
    ring = burnside_ring(X.gB)
    G = X.gB
    full = ring.full_action(X)
    strata: dict[int, list[int]] = {}
    for p in range(X.size):
        iso = frozenset(g for g in G.elements() if full[g][p] == p)
        strata.setdefault(ring.lattice.index_of(iso), []).append(p)
    coeffs = [0] * ring.n
    for h, points in strata.items():
        coeffs[h] = len(X.orbits_on("B", G.generators, points))
    return ring.element(coeffs)


def cardinality_hom(x: BurnsideElement) -> int:
    """Underlying point count: the mark at the trivial subgroup."""
    return x.marks()[0]
