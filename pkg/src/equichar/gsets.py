"""Finite sets with two commuting group actions.

A BiSet carries a left action of an "orbifold side" group gO and a left
action of a "Burnside side" group gB, stored as one permutation per group
generator.  Actions of arbitrary elements are evaluated through generator
words on demand; constructors that know more structure (wreath powers)
install a direct evaluator instead.
"""

from __future__ import annotations

import itertools

from .errors import InvariantViolation, ResourceLimitError, UsageError
from .groups import (
    CommutingTuple,
    FiniteGroup,
    Subgroup,
    centralizer,
    same_group,
    trivial_group,
    whole_subgroup,
    wreath,
)

POINT_BUDGET = 1_000_000


class BiSet:
    """Points 0..size-1 with commuting gO (O side) and gB (B side) actions."""

    def __init__(self, size: int, gO: FiniteGroup, gB: FiniteGroup,
                 actO, actB, labels=None,
                 act_direct_O=None, act_direct_B=None):
        actO = tuple(tuple(p) for p in actO)
        actB = tuple(tuple(p) for p in actB)
        if len(actO) != len(gO.generators):
            raise UsageError(
                f"need {len(gO.generators)} O-side permutations, got {len(actO)}")
        if len(actB) != len(gB.generators):
            raise UsageError(
                f"need {len(gB.generators)} B-side permutations, got {len(actB)}")
        for p in actO + actB:
            if len(p) != size or sorted(p) != list(range(size)):
                raise UsageError(f"not a permutation of {size} points: {p}")
        self.size = size
        self.gO = gO
        self.gB = gB
        self.actO = actO
        self.actB = actB
        self.labels = tuple(labels) if labels is not None else tuple(range(size))
        if len(self.labels) != size:
            raise UsageError("labels length must equal size")
        self._act_direct = {"O": act_direct_O, "B": act_direct_B}

    def _side(self, side: str):
        if side == "O":
            return self.gO, self.actO
        if side == "B":
            return self.gB, self.actB
        raise UsageError(f"side must be 'O' or 'B', not {side!r}")

    def act(self, side: str, g: int, p: int) -> int:
        """Image of point p under element g of the chosen side's group."""
        direct = self._act_direct[side]
        if direct is not None:
            return direct(g, p)
        group, perms = self._side(side)
        for i in reversed(group.word(g)):
            p = perms[i][p]
        return p

    def perm(self, side: str, g: int) -> tuple[int, ...]:
        return tuple(self.act(side, g, p) for p in range(self.size))

    def orbits(self, side: str, generators) -> list[list[int]]:
        """Orbits under the subgroup generated by the given element indices,
        ordered by minimal point; each orbit sorted."""
        return self.orbits_on(side, generators, range(self.size))

    def orbits_on(self, side: str, generators, points) -> list[list[int]]:
        gen_maps = [  # evaluate each generator once, on the points we have
            {p: self.act(side, g, p) for p in points}
            for g in generators]
        seen: set[int] = set()
        out: list[list[int]] = []
        for p0 in points:
            if p0 in seen:
                continue
            orb = [p0]
            seen.add(p0)
            frontier = [p0]
            while frontier:
                nxt = []
                for p in frontier:
                    for m in gen_maps:
                        q = m[p]
                        if q not in seen:
                            seen.add(q)
                            orb.append(q)
                            nxt.append(q)
                frontier = nxt
            orb.sort()
            out.append(orb)
        return out

    def validate(self, hom_budget: int = 2_000_000, samples: int = 100,
                 seed: int = 0) -> None:
        """Permutation well-formedness, commutation of the two actions, and
        the generator assignments extending to group homomorphisms
        (exhaustive on the Cayley relations when affordable, sampled above)."""
        for a in self.actO:
            for b in self.actB:
                if any(a[b[p]] != b[a[p]] for p in range(self.size)):
                    raise InvariantViolation("O and B actions do not commute")
        for side in ("O", "B"):
            group, _ = self._side(side)
            cost = group.order * max(1, len(group.generators)) * max(1, self.size)
            if cost <= hom_budget:
                pairs = ((x, s) for x in range(group.order)
                         for s in group.generators)
            else:
                import random
                rng = random.Random(seed)
                pairs = ((rng.randrange(group.order),
                          group.generators[rng.randrange(len(group.generators))])
                         for _ in range(samples))
            for x, s in pairs:
                y = group.mul(x, s)
                for p in range(self.size):
                    if self.act(side, y, p) != self.act(side, x,
                                                        self.act(side, s, p)):
                        raise InvariantViolation(
                            f"{side}-side action is not a homomorphism at "
                            f"({x}, {s})")

    def __repr__(self) -> str:
        return (f"<BiSet size={self.size} O={self.gO.label} "
                f"B={self.gB.label}>")


def biset_from_single_action(size: int, G: FiniteGroup, perms,
                             side: str = "B", labels=None) -> BiSet:
    """One-sided wrapper: the other side carries the trivial group."""
    triv = trivial_group()
    if side == "B":
        return BiSet(size, triv, G, (), perms, labels)
    if side == "O":
        return BiSet(size, G, triv, perms, (), labels)
    raise UsageError(f"side must be 'O' or 'B', not {side!r}")


def fixed_set(X: BiSet, phi, sub_group=None) -> BiSet:
    """Common fixed points of the O-side elements in phi, carrying the
    restricted centralizer action on the O side and the full B action.

    sub_group optionally supplies an already-built SubgroupGroup for the
    centralizer so that several fixed sets can share one acting group.
    """
    if isinstance(phi, CommutingTuple):
        if not same_group(phi.parent, X.gO):
            raise UsageError("tuple belongs to a different group than the O side")
        entries = phi.entries
    else:
        entries = tuple(phi)
    points = list(range(X.size))
    for g in entries:
        points = [p for p in points if X.act("O", g, p) == p]
    reindex = {p: i for i, p in enumerate(points)}
    sub = sub_group if sub_group is not None else centralizer(X.gO, entries).as_group()
    actO = []
    for li in sub.generators:
        g = sub.to_parent[li]
        actO.append(tuple(reindex[X.act("O", g, p)] for p in points))
    actB = []
    for i, _ in enumerate(X.gB.generators):
        old = X.actB[i]
        for p in points:
            if old[p] not in reindex:
                raise InvariantViolation("fixed set is not B-invariant")
        actB.append(tuple(reindex[old[p]] for p in points))
    labels = tuple(X.labels[p] for p in points)
    return BiSet(len(points), sub, X.gB, actO, actB, labels)


def quotient_by(X: BiSet, K: Subgroup | None = None) -> BiSet:
    """K-orbit space (K a subgroup of the O side; default the whole group)
    with the induced B action; the O side is trivialized."""
    if K is None:
        K = whole_subgroup(X.gO)
    elif not same_group(K.parent, X.gO):
        raise UsageError("subgroup belongs to a different group than the O side")
    orbs = X.orbits("O", K.generators)
    orbit_of = {}
    for i, orb in enumerate(orbs):
        for p in orb:
            orbit_of[p] = i
    actB = []
    for j, _ in enumerate(X.gB.generators):
        old = X.actB[j]
        actB.append(tuple(orbit_of[old[orb[0]]] for orb in orbs))
    labels = tuple(X.labels[orb[0]] for orb in orbs)
    return BiSet(len(orbs), trivial_group(), X.gB, (), actB, labels)


def symmetric_power(X: BiSet, k: int) -> BiSet:
    """Unordered k-element multisets with both diagonal actions."""
    if k < 0:
        raise UsageError(f"symmetric power needs k >= 0, got {k}")
    points = list(itertools.combinations_with_replacement(range(X.size), k))
    rank = {t: i for i, t in enumerate(points)}

    def lifted(side: str, gen_index: int):
        base = (X.actO if side == "O" else X.actB)[gen_index]
        return tuple(rank[tuple(sorted(base[p] for p in t))] for t in points)

    actO = [lifted("O", i) for i in range(len(X.gO.generators))]
    actB = [lifted("B", i) for i in range(len(X.gB.generators))]
    labels = tuple(tuple(X.labels[p] for p in t) for t in points)
    return BiSet(len(points), X.gO, X.gB, actO, actB, labels)


def wreath_power(X: BiSet, n: int, max_points: int = POINT_BUDGET) -> BiSet:
    """X^n with the wreath product gO≀S_n acting on the O side
    ((a,σ)·x)_i = a_i·x_{σ⁻¹(i)} and gB acting diagonally."""
    if n < 0:
        raise UsageError(f"wreath power needs n >= 0, got {n}")
    if n == 1:
        return X
    if X.size ** n > max_points:
        raise ResourceLimitError("wreath power points",
                                 size=X.size ** n, budget=max_points)
    W = wreath(X.gO, n)
    size = X.size ** n
    radix = X.size

    def encode(tup) -> int:
        x = 0
        for v in tup:
            x = x * radix + v
        return x

    tuples = list(itertools.product(range(X.size), repeat=n))

    def act_direct_O(g: int, p: int) -> int:
        vec, r = W.decode(g)
        sigma_inv = W.top.inverse_perms()[r]
        t = tuples[p]
        return encode(X.act("O", vec[i], t[sigma_inv[i]]) for i in range(n))

    actO = [tuple(act_direct_O(g, p) for p in range(size))
            for g in W.generators]

    def act_direct_B(g: int, p: int) -> int:
        return encode(X.act("B", g, v) for v in tuples[p])

    actB = []
    for j, _ in enumerate(X.gB.generators):
        base = X.actB[j]
        actB.append(tuple(encode(base[v] for v in t) for t in tuples))
    labels = tuple(tuple(X.labels[v] for v in t) for t in tuples)
    return BiSet(size, W, X.gB, actO, actB, labels,
                 act_direct_O=act_direct_O, act_direct_B=act_direct_B)


def product(X: BiSet, Y: BiSet) -> BiSet:
    """Cartesian product with both diagonal actions."""
    _require_same_groups(X, Y)
    size = X.size * Y.size

    def lifted(xacts, yacts):
        out = []
        for xa, ya in zip(xacts, yacts):
            out.append(tuple(xa[p] * Y.size + ya[q]
                             for p in range(X.size) for q in range(Y.size)))
        return out

    actO = lifted(X.actO, Y.actO)
    actB = lifted(X.actB, Y.actB)
    labels = tuple((X.labels[p], Y.labels[q])
                   for p in range(X.size) for q in range(Y.size))
    return BiSet(size, X.gO, X.gB, actO, actB, labels)


def disjoint_union(X: BiSet, Y: BiSet) -> BiSet:
    _require_same_groups(X, Y)
    size = X.size + Y.size

    def shifted(xacts, yacts):
        return [tuple(xa) + tuple(q + X.size for q in ya)
                for xa, ya in zip(xacts, yacts)]

    actO = shifted(X.actO, Y.actO)
    actB = shifted(X.actB, Y.actB)
    labels = tuple(("L", l) for l in X.labels) + tuple(("R", l) for l in Y.labels)
    return BiSet(size, X.gO, X.gB, actO, actB, labels)


def empty_biset(gO: FiniteGroup, gB: FiniteGroup) -> BiSet:
    return BiSet(0, gO, gB,
                 [()] * len(gO.generators), [()] * len(gB.generators))


def point_biset(gO: FiniteGroup, gB: FiniteGroup) -> BiSet:
    return BiSet(1, gO, gB,
                 [(0,)] * len(gO.generators), [(0,)] * len(gB.generators))


def _require_same_groups(X: BiSet, Y: BiSet) -> None:
    if not (same_group(X.gO, Y.gO) and same_group(X.gB, Y.gB)):
        raise UsageError("operands carry different groups")
