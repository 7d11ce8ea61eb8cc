"""Finite groups on dense integer indices, identity always at index 0.

Groups are built structurally (cyclic, symmetric, dihedral, product, wreath,
permutation closure); multiplication stays structural and a flat Cayley table
is only materialized on demand for small orders.  Conjugacy classes,
centralizers and commuting tuples are computed by orbit expansion under
conjugation by generators, never by all-pairs scans.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import factorial

from .errors import InvariantViolation, ResourceLimitError, UsageError

TABLE_LIMIT = 4096          # flat Cayley tables only at or below this order
SUBGROUP_BUDGET = 1024      # subgroup-lattice enumeration cap
PERM_CLOSURE_BUDGET = 250_000
SYMMETRIC_DEGREE_LIMIT = 8  # 8! = 40320 permutations materialized
CENTRALIZER_SCAN_LIMIT = 1024  # direct element scan below, Schreier above


class FiniteGroup:
    """Group on indices 0..order-1; subclasses provide mul and inv."""

    def __init__(self, order: int, generators: tuple[int, ...], label: str,
                 descriptor: dict | None = None):
        self.order = order
        self.identity = 0
        self.generators = tuple(generators)
        self.label = label
        self.descriptor = descriptor
        self._words: list[tuple[int, int]] | None = None
        self._table: tuple[tuple[int, ...], ...] | None = None
        self._cache: dict = {}

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, g: int) -> int:
        n, x = 1, g
        while x != 0:
            x = self.mul(x, g)
            n += 1
        return n

    # -- word machinery: BFS spanning tree over right multiplication --------

    def _word_table(self) -> list[tuple[int, int]]:
        if self._words is None:
            prev: list[tuple[int, int] | None] = [None] * self.order
            prev[0] = (-1, -1)
            frontier = [0]
            while frontier:
                nxt = []
                for x in frontier:
                    for i, s in enumerate(self.generators):
                        y = self.mul(x, s)
                        if prev[y] is None:
                            prev[y] = (x, i)
                            nxt.append(y)
                frontier = nxt
            if any(p is None for p in prev):
                raise InvariantViolation(
                    f"generators do not generate {self.label}")
            self._words = prev  # type: ignore[assignment]
        return self._words  # type: ignore[return-value]

    def word(self, g: int) -> tuple[int, ...]:
        """Generator positions w with g = gens[w0]·gens[w1]·...·gens[w-1]."""
        prev = self._word_table()
        out = []
        while g != 0:
            g, i = prev[g]
            out.append(i)
        out.reverse()
        return tuple(out)

    # -- optional flat table -------------------------------------------------

    def cayley_table(self) -> tuple[tuple[int, ...], ...]:
        if self._table is None:
            if self.order > TABLE_LIMIT:
                raise ResourceLimitError(
                    f"Cayley table for {self.label}",
                    size=self.order, budget=TABLE_LIMIT)
            self._table = tuple(
                tuple(self.mul(a, b) for b in range(self.order))
                for a in range(self.order))
        return self._table

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label} order={self.order}>"


class CyclicGroup(FiniteGroup):
    def __init__(self, n: int, label: str | None = None,
                 descriptor: dict | None = None):
        if n <= 0:
            raise UsageError(f"cyclic group needs n >= 1, got {n}")
        gens = (1,) if n > 1 else ()
        super().__init__(n, gens, label or f"C{n}",
                         descriptor or {"type": "cyclic", "n": n})
        self.n = n

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def inv(self, a: int) -> int:
        return (-a) % self.n


class SymmetricGroup(FiniteGroup):
    """S_n on permutation ranks, lexicographic order; identity is rank 0."""

    def __init__(self, n: int):
        if n < 0:
            raise UsageError(f"symmetric group needs n >= 0, got {n}")
        if n > SYMMETRIC_DEGREE_LIMIT:
            raise ResourceLimitError(
                f"symmetric group degree {n}",
                size=n, budget=SYMMETRIC_DEGREE_LIMIT)
        self.degree = n
        self.perms = tuple(itertools.permutations(range(n)))
        self.rank = {p: i for i, p in enumerate(self.perms)}
        gens: list[int] = []
        if n >= 2:
            swap = (1, 0) + tuple(range(2, n))
            cycle = tuple(range(1, n)) + (0,)
            gens.append(self.rank[swap])
            if cycle != swap:
                gens.append(self.rank[cycle])
        super().__init__(factorial(n), tuple(gens), f"S{n}",
                         {"type": "symmetric", "n": n})
        self._inv_perms: tuple[tuple[int, ...], ...] | None = None

    def inverse_perms(self) -> tuple[tuple[int, ...], ...]:
        if self._inv_perms is None:
            out = []
            for p in self.perms:
                q = [0] * self.degree
                for i, pi in enumerate(p):
                    q[pi] = i
                out.append(tuple(q))
            self._inv_perms = tuple(out)
        return self._inv_perms

    def mul(self, a: int, b: int) -> int:
        pa, pb = self.perms[a], self.perms[b]
        return self.rank[tuple(pa[j] for j in pb)]

    def inv(self, a: int) -> int:
        return self.rank[self.inverse_perms()[a]]


class DihedralGroup(FiniteGroup):
    """Order 2n; element f*n + r is rotation r followed by optional flip f."""

    def __init__(self, n: int):
        if n <= 0:
            raise UsageError(f"dihedral group needs n >= 1, got {n}")
        self.n = n
        if n == 1:
            gens: tuple[int, ...] = (1,)
        else:
            gens = (1, n)
        super().__init__(2 * n, gens, f"D{n}", {"type": "dihedral", "n": n})

    def mul(self, a: int, b: int) -> int:
        n = self.n
        f1, r1 = divmod(a, n)
        f2, r2 = divmod(b, n)
        r = (r1 - r2) % n if f1 else (r1 + r2) % n
        return (f1 ^ f2) * n + r

    def inv(self, a: int) -> int:
        n = self.n
        f, r = divmod(a, n)
        return a if f else (-r) % n


class ProductGroup(FiniteGroup):
    """Direct product, mixed-radix indexing with the last factor fastest."""

    def __init__(self, factors: tuple[FiniteGroup, ...],
                 descriptor: dict | None = None):
        self.factors = tuple(factors)
        order = 1
        for f in self.factors:
            order *= f.order
        self._radices = tuple(f.order for f in self.factors)
        gens = []
        for pos, f in enumerate(self.factors):
            for s in f.generators:
                vec = [0] * len(self.factors)
                vec[pos] = s
                gens.append(self._encode(vec))
        label = "x".join(f.label for f in self.factors) if self.factors else "triv"
        super().__init__(order, tuple(gens), label, descriptor)

    def _encode(self, vec) -> int:
        x = 0
        for v, r in zip(vec, self._radices):
            x = x * r + v
        return x

    def _decode(self, x: int) -> list[int]:
        out = [0] * len(self._radices)
        for i in range(len(self._radices) - 1, -1, -1):
            x, out[i] = divmod(x, self._radices[i])
        return out

    def mul(self, a: int, b: int) -> int:
        va, vb = self._decode(a), self._decode(b)
        return self._encode([f.mul(x, y)
                             for f, x, y in zip(self.factors, va, vb)])

    def inv(self, a: int) -> int:
        return self._encode([f.inv(x)
                             for f, x in zip(self.factors, self._decode(a))])


class PermGroup(FiniteGroup):
    """Closure of explicit permutation generators; elements sorted lexicographically."""

    def __init__(self, degree: int, gen_perms: list[tuple[int, ...]],
                 descriptor: dict | None = None,
                 budget: int = PERM_CLOSURE_BUDGET):
        ident = tuple(range(degree))
        for p in gen_perms:
            if len(p) != degree or sorted(p) != list(range(degree)):
                raise UsageError(f"not a permutation of degree {degree}: {p}")
        elems = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gen_perms:
                    y = tuple(x[j] for j in s)  # x∘s
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            if len(elems) > budget:
                raise ResourceLimitError("permutation closure",
                                         size=len(elems), budget=budget)
            frontier = nxt
        self.degree = degree
        self.perms = tuple(sorted(elems))
        self.rank = {p: i for i, p in enumerate(self.perms)}
        gens = tuple(self.rank[p] for p in gen_perms)
        super().__init__(len(self.perms), gens, f"perm{degree}:{len(self.perms)}",
                         descriptor)

    def mul(self, a: int, b: int) -> int:
        pa, pb = self.perms[a], self.perms[b]
        return self.rank[tuple(pa[j] for j in pb)]

    def inv(self, a: int) -> int:
        p = self.perms[a]
        q = [0] * self.degree
        for i, pi in enumerate(p):
            q[pi] = i
        return self.rank[tuple(q)]


class WreathGroup(FiniteGroup):
    """G ≀ S_n: pairs (vector of n inner elements, permutation of n slots).

    Index = vector-code * n! + permutation rank.  Multiplication follows
    (a,σ)(b,τ) = (a·(b∘σ⁻¹), στ) so the natural action on n-tuples is a left
    action: ((a,σ)·x)_i = a_i · x_{σ⁻¹(i)}.
    """

    _VEC_TABLE_LIMIT = 200_000

    def __init__(self, inner: FiniteGroup, n: int,
                 descriptor: dict | None = None):
        if n < 0:
            raise UsageError(f"wreath product needs n >= 0, got {n}")
        self.inner = inner
        self.n = n
        self.top = SymmetricGroup(n)
        self.nfact = self.top.order
        order = inner.order ** n * self.nfact
        m = inner.order
        # dense digit tables keep mul cheap for the sizes we enumerate over
        self._vecs: tuple[tuple[int, ...], ...] | None = None
        self._vec_rank: dict[tuple[int, ...], int] | None = None
        if m ** n <= self._VEC_TABLE_LIMIT:
            self._vecs = tuple(itertools.product(range(m), repeat=n))
            self._vec_rank = {v: i for i, v in enumerate(self._vecs)}
        # flat inner multiplication/inverse tables keep mul allocation-light
        self._itab: list[int] | None = None
        self._iinv: list[int] | None = None
        if m <= 64:
            self._itab = [inner.mul(a, b) for a in range(m) for b in range(m)]
            self._iinv = [inner.inv(a) for a in range(m)]
        gens = []
        if n > 0:
            for s in inner.generators:
                vec = [0] * n
                vec[0] = s
                gens.append(self._encode(vec, 0))
            zero = [0] * n
            for t in self.top.generators:
                gens.append(self._encode(zero, t))
        label = f"{inner.label}wrS{n}"
        super().__init__(order, tuple(gens), label, descriptor)

    def _vec_of(self, q: int) -> tuple[int, ...]:
        if self._vecs is not None:
            return self._vecs[q]
        m = self.inner.order
        out = [0] * self.n
        for i in range(self.n - 1, -1, -1):
            q, out[i] = divmod(q, m)
        return tuple(out)

    def _vec_code(self, vec) -> int:
        if self._vec_rank is not None:
            return self._vec_rank[tuple(vec)]
        m = self.inner.order
        x = 0
        for v in vec:
            x = x * m + v
        return x

    def _encode(self, vec, perm_rank: int) -> int:
        return self._vec_code(vec) * self.nfact + perm_rank

    def decode(self, x: int) -> tuple[tuple[int, ...], int]:
        """(inner vector, top permutation rank)."""
        q, r = divmod(x, self.nfact)
        return self._vec_of(q), r

    def encode(self, vec, perm_rank: int) -> int:
        return self._encode(vec, perm_rank)

    def mul(self, a: int, b: int) -> int:
        nf = self.nfact
        qa, ra = divmod(a, nf)
        qb, rb = divmod(b, nf)
        va, vb = self._vec_of(qa), self._vec_of(qb)
        top = self.top
        pa = top.perms[ra]
        pa_inv = top.inverse_perms()[ra]
        itab, m = self._itab, self.inner.order
        if itab is not None:
            w = tuple(itab[va[i] * m + vb[pa_inv[i]]] for i in range(self.n))
        else:
            imul = self.inner.mul
            w = tuple(imul(va[i], vb[pa_inv[i]]) for i in range(self.n))
        pb = top.perms[rb]
        rc = top.rank[tuple(pa[j] for j in pb)]
        return self._vec_code(w) * nf + rc

    def inv(self, a: int) -> int:
        q, r = divmod(a, self.nfact)
        v = self._vec_of(q)
        p = self.top.perms[r]
        iinv = self._iinv
        if iinv is not None:
            w = tuple(iinv[v[p[i]]] for i in range(self.n))
        else:
            w = tuple(self.inner.inv(v[p[i]]) for i in range(self.n))
        return self._vec_code(w) * self.nfact + self.top.inv(r)


class SubgroupGroup(FiniteGroup):
    """A subgroup repackaged as a standalone group on local indices."""

    def __init__(self, parent: FiniteGroup, elements: tuple[int, ...],
                 generators: tuple[int, ...]):
        elements = tuple(sorted(elements))
        if not elements or elements[0] != parent.identity:
            raise UsageError("subgroup must contain the identity")
        self.parent = parent
        self.to_parent = elements
        self.to_local = {e: i for i, e in enumerate(elements)}
        gens = tuple(self.to_local[g] for g in generators)
        super().__init__(len(elements), gens,
                         f"sub{len(elements)}of{parent.label}")

    def mul(self, a: int, b: int) -> int:
        return self.to_local[self.parent.mul(self.to_parent[a], self.to_parent[b])]

    def inv(self, a: int) -> int:
        return self.to_local[self.parent.inv(self.to_parent[a])]


# ---------------------------------------------------------------------------
# descriptors

_GROUP_CACHE: dict[str, FiniteGroup] = {}


def make_group(descriptor: dict) -> FiniteGroup:
    """Build (and cache) a group from a JSON-style descriptor.

    Supported: {"type": "trivial"}, {"type": "cyclic", "n": k},
    {"type": "symmetric", "n": k}, {"type": "dihedral", "n": k},
    {"type": "product", "factors": [d, ...]},
    {"type": "perm", "degree": d, "generators": [[...], ...]},
    {"type": "wreath", "inner": d, "n": k}.
    """
    if not isinstance(descriptor, dict) or "type" not in descriptor:
        raise UsageError(f"bad group descriptor: {descriptor!r}")
    key = json.dumps(descriptor, sort_keys=True)
    cached = _GROUP_CACHE.get(key)
    if cached is not None:
        return cached
    kind = descriptor["type"]
    if kind == "trivial":
        g: FiniteGroup = CyclicGroup(1, label="triv",
                                     descriptor={"type": "trivial"})
    elif kind == "cyclic":
        g = CyclicGroup(_int_field(descriptor, "n", minimum=1))
    elif kind == "symmetric":
        g = SymmetricGroup(_int_field(descriptor, "n", minimum=0))
    elif kind == "dihedral":
        g = DihedralGroup(_int_field(descriptor, "n", minimum=1))
    elif kind == "product":
        factors = descriptor.get("factors")
        if not isinstance(factors, list):
            raise UsageError("product descriptor needs a 'factors' list")
        g = ProductGroup(tuple(make_group(f) for f in factors), descriptor)
    elif kind == "perm":
        degree = _int_field(descriptor, "degree", minimum=0)
        gens = descriptor.get("generators")
        if not isinstance(gens, list):
            raise UsageError("perm descriptor needs a 'generators' list")
        g = PermGroup(degree, [tuple(p) for p in gens], descriptor)
    elif kind == "wreath":
        n = _int_field(descriptor, "n", minimum=0)
        inner = make_group(descriptor["inner"])
        g = WreathGroup(inner, n, descriptor)
    else:
        raise UsageError(f"unknown group type {kind!r}")
    _GROUP_CACHE[key] = g
    return g


def _int_field(d: dict, name: str, minimum: int) -> int:
    v = d.get(name)
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise UsageError(f"descriptor field {name!r} must be an integer >= {minimum}")
    return v


def trivial_group() -> FiniteGroup:
    return make_group({"type": "trivial"})


def cyclic(n: int) -> FiniteGroup:
    return make_group({"type": "cyclic", "n": n})


def symmetric(n: int) -> FiniteGroup:
    return make_group({"type": "symmetric", "n": n})


def dihedral(n: int) -> FiniteGroup:
    return make_group({"type": "dihedral", "n": n})


def product(*descriptors: dict) -> FiniteGroup:
    return make_group({"type": "product", "factors": list(descriptors)})


def wreath(inner: FiniteGroup, n: int) -> FiniteGroup:
    if inner.descriptor is not None:
        return make_group({"type": "wreath", "inner": inner.descriptor, "n": n})
    return WreathGroup(inner, n)


def same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    if a is b:
        return True
    return (a.descriptor is not None and a.descriptor == b.descriptor)


# ---------------------------------------------------------------------------
# subgroups

@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a parent group: sorted element indices plus a small
    generating set (at most log2 of the order after reduction)."""

    parent: FiniteGroup
    elements: tuple[int, ...]
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def as_group(self) -> SubgroupGroup:
        return SubgroupGroup(self.parent, self.elements, self.generators)

    def validate(self) -> None:
        s = set(self.elements)
        if self.parent.identity not in s:
            raise InvariantViolation("subgroup lacks identity")
        for a in self.elements:
            if self.parent.inv(a) not in s:
                raise InvariantViolation("subgroup not closed under inverse")
            for b in self.elements:
                if self.parent.mul(a, b) not in s:
                    raise InvariantViolation("subgroup not closed under product")
        if closure(self.parent, self.generators) != self.elements:
            raise InvariantViolation("stored generators do not generate subgroup")


def closure(G: FiniteGroup, gens) -> tuple[int, ...]:
    """Sorted element tuple of the subgroup generated by gens."""
    seen = {G.identity}
    frontier = [G.identity]
    gens = tuple(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = G.mul(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def whole_subgroup(G: FiniteGroup) -> Subgroup:
    h = G._cache.get("whole")
    if h is None:
        h = Subgroup(G, tuple(range(G.order)), G.generators)
        G._cache["whole"] = h
    return h


def subgroup_from_generators(G: FiniteGroup, gens) -> Subgroup:
    """Closure plus greedy reduction to a small generating set."""
    elems = closure(G, gens)
    small = _reduce_generators(G, list(gens), len(elems))
    return Subgroup(G, elems, small)


def _reduce_generators(G: FiniteGroup, candidates: list[int],
                       target: int) -> tuple[int, ...]:
    """Pick a short generating subsequence; each kept generator at least
    doubles the closure, so at most log2(target) survive."""
    small: list[int] = []
    current: set[int] = {G.identity}
    for c in candidates:
        if c in current:
            continue
        small.append(c)
        current = set(closure(G, small))
        if len(current) == target:
            break
    return tuple(small)


# ---------------------------------------------------------------------------
# conjugacy

def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    """Partition of all element indices; the identity class comes first and
    classes are ordered by their minimal member."""
    return conjugacy_classes_in(whole_subgroup(G))


def conjugacy_classes_in(H: Subgroup) -> list[list[int]]:
    """Conjugacy classes of the subgroup H, as sorted parent-index lists."""
    key = ("classes", H.elements)
    cached = H.parent._cache.get(key)
    if cached is not None:
        return cached
    G = H.parent
    gens = H.generators
    inv_gens = [G.inv(s) for s in gens]
    seen: set[int] = set()
    out: list[list[int]] = []
    for x0 in H.elements:
        if x0 in seen:
            continue
        cls = [x0]
        seen.add(x0)
        frontier = [x0]
        while frontier:
            nxt = []
            for x in frontier:
                for s, si in zip(gens, inv_gens):
                    y = G.mul(G.mul(si, x), s)
                    if y not in seen:
                        seen.add(y)
                        cls.append(y)
                        nxt.append(y)
            frontier = nxt
        cls.sort()
        out.append(cls)
    H.parent._cache[key] = out
    return out


def centralizer(G: FiniteGroup, tup) -> Subgroup:
    """Centralizer of a commuting tuple (or single element, or iterable)."""
    if isinstance(tup, CommutingTuple):
        entries = tup.entries
    elif isinstance(tup, int):
        entries = (tup,)
    else:
        entries = tuple(tup)
    H = whole_subgroup(G)
    for g in entries:
        H = centralizer_in(H, g)
    return H


def centralizer_in(H: Subgroup, g: int) -> Subgroup:
    """C_H(g) for g in H, with a small generating set.

    Small subgroups use a direct commutation scan; past the scan limit the
    conjugation-orbit of g under H's generators is expanded with transversal
    witnesses and the stabilizer is rebuilt from Schreier generators, stopping
    as soon as the known order |H|/|orbit| is reached.
    """
    G = H.parent
    if g == G.identity:
        return H
    key = ("cent", H.elements, g)
    cached = G._cache.get(key)
    if cached is not None:
        return cached
    if H.order <= CENTRALIZER_SCAN_LIMIT:
        elems = tuple(h for h in H.elements
                      if G.mul(h, g) == G.mul(g, h))
        sub = Subgroup(G, elems, _reduce_generators(G, list(elems), len(elems)))
    else:
        sub = _centralizer_schreier(H, g)
    G._cache[key] = sub
    return sub


def _centralizer_schreier(H: Subgroup, g: int) -> Subgroup:
    G = H.parent
    gens = H.generators
    inv_gens = [G.inv(s) for s in gens]
    witness = {g: G.identity}  # x -> u with u^-1 g u = x
    order_list = [g]
    frontier = [g]
    while frontier:
        nxt = []
        for x in frontier:
            u = witness[x]
            for s, si in zip(gens, inv_gens):
                y = G.mul(G.mul(si, x), s)
                if y not in witness:
                    witness[y] = G.mul(u, s)
                    order_list.append(y)
                    nxt.append(y)
        frontier = nxt
    target, rem = divmod(H.order, len(witness))
    if rem:
        raise InvariantViolation("orbit size does not divide subgroup order")
    small: list[int] = []
    current: set[int] = {G.identity}
    done = len(current) == target
    for x in order_list:
        if done:
            break
        u = witness[x]
        for s in gens:
            t = G.mul(u, s)
            y = G.conj(g, t)  # = s^-1 x s
            c = G.mul(t, G.inv(witness[y]))
            if c not in current:
                small.append(c)
                current = set(closure(G, small))
                if len(current) == target:
                    done = True
                    break
    if len(current) != target:
        raise InvariantViolation("Schreier generators failed to reach stabilizer")
    return Subgroup(G, tuple(sorted(current)), tuple(small))


# ---------------------------------------------------------------------------
# commuting tuples

@dataclass(frozen=True)
class CommutingTuple:
    """Pairwise-commuting element indices of a parent group."""

    parent: FiniteGroup
    entries: tuple[int, ...]

    def __post_init__(self):
        G = self.parent
        es = self.entries
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                if G.mul(es[i], es[j]) != G.mul(es[j], es[i]):
                    raise UsageError(f"entries {es[i]},{es[j]} do not commute")

    def __len__(self) -> int:
        return len(self.entries)


def commuting_tuple_classes(G: FiniteGroup, k: int,
                            budget: int = 1_000_000
                            ) -> list[tuple[CommutingTuple, int]]:
    """Orbit representatives of commuting k-tuples under simultaneous
    conjugation, with orbit sizes.  k=0 yields the single empty tuple."""
    if k < 0:
        raise UsageError(f"tuple order must be >= 0, got {k}")
    raw = _ctuple_classes(whole_subgroup(G), k, budget)
    return [(CommutingTuple(G, t), size) for t, size in raw]


def _ctuple_classes(H: Subgroup, k: int,
                    budget: int) -> list[tuple[tuple[int, ...], int]]:
    if k == 0:
        return [((), 1)]
    key = ("ctuples", H.elements, k)
    cached = H.parent._cache.get(key)
    if cached is not None:
        return cached
    out: list[tuple[tuple[int, ...], int]] = []
    for cls in conjugacy_classes_in(H):
        g = cls[0]
        C = centralizer_in(H, g)
        for rest, size in _ctuple_classes(C, k - 1, budget):
            out.append(((g,) + rest, len(cls) * size))
            if len(out) > budget:
                raise ResourceLimitError("commuting tuple classes",
                                         size=len(out), budget=budget)
    H.parent._cache[key] = out
    return out


def commuting_tuples_naive(G: FiniteGroup, k: int,
                           budget: int = 2_000_000) -> list[tuple[int, ...]]:
    """All commuting k-tuples by brute force (test oracle for small groups)."""
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], pool: list[int]):
        if len(prefix) == k:
            out.append(prefix)
            if len(out) > budget:
                raise ResourceLimitError("commuting tuples",
                                         size=len(out), budget=budget)
            return
        for g in pool:
            sub = [h for h in pool if G.mul(g, h) == G.mul(h, g)]
            extend(prefix + (g,), sub)

    extend((), list(G.elements()))
    return out


def commuting_tuple_classes_naive(G: FiniteGroup, k: int
                                  ) -> list[tuple[tuple[int, ...], int]]:
    """Orbits of commuting k-tuples under conjugation by every group element;
    quadratic test oracle."""
    tuples = commuting_tuples_naive(G, k)
    index = {t: i for i, t in enumerate(tuples)}
    parent = list(range(len(tuples)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for t, i in index.items():
        for g in G.elements():
            u = tuple(G.conj(x, g) for x in t)
            j = find(index[u])
            ri = find(i)
            if ri != j:
                parent[max(ri, j)] = min(ri, j)
    groups: dict[int, list[tuple[int, ...]]] = {}
    for t, i in index.items():
        groups.setdefault(find(i), []).append(t)
    out = [(min(ts), len(ts)) for ts in groups.values()]
    out.sort()
    return out


# ---------------------------------------------------------------------------
# subgroup lattice

@dataclass(frozen=True)
class SubgroupLattice:
    """Conjugacy classes of subgroups in canonical order: ascending order,
    then lexicographically smallest conjugate element tuple."""

    group: FiniteGroup
    classes: tuple[Subgroup, ...]
    class_index: dict[frozenset[int], int]

    def index_of(self, elements: frozenset[int]) -> int:
        try:
            return self.class_index[elements]
        except KeyError:
            raise UsageError("element set is not a subgroup of the group") from None


def subgroup_lattice(G: FiniteGroup,
                     budget: int = SUBGROUP_BUDGET) -> SubgroupLattice:
    cached = G._cache.get("lattice")
    if cached is not None:
        return cached
    if G.order > budget:
        raise ResourceLimitError("subgroup enumeration",
                                 size=G.order, budget=budget)
    # every subgroup is generated by cyclic subgroups: close upward from them
    cyclics: dict[frozenset[int], int] = {}
    for g in G.elements():
        fs = frozenset(closure(G, (g,)))
        if fs not in cyclics:
            cyclics[fs] = g
    gens_for: dict[frozenset[int], tuple[int, ...]] = {}
    trivial = frozenset((G.identity,))
    gens_for[trivial] = ()
    queue = [trivial]
    for fs, g in sorted(cyclics.items(), key=lambda kv: kv[1]):
        if fs not in gens_for:
            gens_for[fs] = (g,)
            queue.append(fs)
    head = 0
    while head < len(queue):
        fs = queue[head]
        head += 1
        if len(fs) == G.order:
            continue
        for cfs, cg in sorted(cyclics.items(), key=lambda kv: kv[1]):
            if cg in fs:
                continue
            new_gens = gens_for[fs] + (cg,)
            nfs = frozenset(closure(G, new_gens))
            if nfs not in gens_for:
                gens_for[nfs] = new_gens
                queue.append(nfs)
    # conjugation orbits over the subgroup sets
    inv_gens = [G.inv(s) for s in G.generators]
    class_index: dict[frozenset[int], int] = {}
    reps: list[Subgroup] = []
    for fs in gens_for:
        if fs in class_index:
            continue
        orbit = {fs}
        frontier = [fs]
        while frontier:
            nxt = []
            for cur in frontier:
                for s, si in zip(G.generators, inv_gens):
                    img = frozenset(G.mul(G.mul(si, x), s) for x in cur)
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        canon = min(tuple(sorted(m)) for m in orbit)
        idx = len(reps)
        for m in orbit:
            class_index[m] = idx
        rep_elems = canon
        reps.append(Subgroup(G, rep_elems,
                             _reduce_generators(G, list(rep_elems),
                                                len(rep_elems))))
    # canonical order: (order, lexicographic element tuple), then reindex
    order = sorted(range(len(reps)),
                   key=lambda i: (reps[i].order, reps[i].elements))
    remap = {old: new for new, old in enumerate(order)}
    reps = [reps[i] for i in order]
    class_index = {fs: remap[i] for fs, i in class_index.items()}
    lat = SubgroupLattice(G, tuple(reps), class_index)
    G._cache["lattice"] = lat
    return lat


def subgroups_up_to_conjugacy(G: FiniteGroup,
                              budget: int = SUBGROUP_BUDGET) -> list[Subgroup]:
    """Canonical subgroup-class representatives; trivial first, G last."""
    return list(subgroup_lattice(G, budget).classes)


# ---------------------------------------------------------------------------
# validation

def validate_group(G: FiniteGroup, samples: int = 100_000,
                   exhaustive_limit: int = 256, seed: int = 0) -> None:
    """Identity, inverses and associativity (exhaustive below the limit via
    the flat table, randomized triples above); generators must generate."""
    for a in list(G.elements())[:exhaustive_limit]:
        if G.mul(0, a) != a or G.mul(a, 0) != a:
            raise InvariantViolation(f"identity fails at {a}")
        if G.mul(a, G.inv(a)) != 0 or G.mul(G.inv(a), a) != 0:
            raise InvariantViolation(f"inverse fails at {a}")
    if G.order <= exhaustive_limit:
        import numpy as np
        t = np.array(G.cayley_table(), dtype=np.int64)
        # t[t][a,b,c] = (a·b)·c and t[:, t][a,b,c] = a·(b·c)
        if not (t[t] == t[:, t]).all():
            raise InvariantViolation("associativity fails")
    else:
        import random
        rng = random.Random(seed)
        for _ in range(samples):
            a = rng.randrange(G.order)
            b = rng.randrange(G.order)
            c = rng.randrange(G.order)
            if G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)):
                raise InvariantViolation(f"associativity fails at {(a, b, c)}")
    G._word_table()  # raises if generators do not generate
