"""The hierarchy of orbifold and higher-order Euler characteristics.

Order k is defined by the recursion

    chi^(k)(X, G) = sum over conjugacy classes [g] of chi^(k-1)(X^g, C_G(g)),
    chi^(0)(X, G) = chi(X/G),

and the equivariant refinement replaces the base case by the equivariant
characteristic of the quotient in A(G_B).  Two independent evaluation routes
are kept: the centralizer recursion (production) and direct enumeration over
commuting tuples / averaging over commuting tuples (oracles, gated to small
groups); cross-checking is opt-in and any disagreement is fatal.
"""

from __future__ import annotations

from .burnside import BurnsideElement, BurnsideRing, burnside_ring, class_of
from .cells import CellSpace
from .errors import InvariantViolation, ResourceLimitError, UsageError
from .groups import (
    Subgroup,
    centralizer,
    centralizer_in,
    commuting_tuple_classes,
    conjugacy_classes_in,
    whole_subgroup,
)
from .gsets import BiSet, biset_from_single_action

ORACLE_GROUP_LIMIT = 400  # averaging / tuple-form oracles stay below this

_cross_check_default = False


def set_cross_check(enabled: bool) -> None:
    """Globally enable dual-path verification on every hierarchy call."""
    global _cross_check_default
    _cross_check_default = bool(enabled)


def _want_cross_check(flag) -> bool:
    return _cross_check_default if flag is None else bool(flag)


def _require_trivial_b(X) -> None:
    if X.gB.order != 1:
        raise UsageError("this characteristic needs a trivial B side; "
                         "use the equivariant variant instead")


# ---------------------------------------------------------------------------
# production recursion over (fixed subset, acting subgroup)

def _rec_equivariant(X: BiSet, S: tuple[int, ...], H: Subgroup, k: int,
                     ring: BurnsideRing, memo: dict) -> BurnsideElement:
    if not S:
        return ring.zero
    key = (S, H.elements, k)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if k == 0:
        res = _quotient_class(X, S, H, ring)
    else:
        res = ring.zero
        for cls in conjugacy_classes_in(H):
            g = cls[0]
            Sg = tuple(p for p in S if X.act("O", g, p) == p)
            C = centralizer_in(H, g)
            res = res + _rec_equivariant(X, Sg, C, k - 1, ring, memo)
    memo[key] = res
    return res


def _quotient_class(X: BiSet, S, H: Subgroup,
                    ring: BurnsideRing) -> BurnsideElement:
    """class_of(S/H) as a B-side G_B-set."""
    orbs = X.orbits_on("O", H.generators, S)
    orbit_of = {p: i for i, orb in enumerate(orbs) for p in orb}
    perms = []
    for j, _ in enumerate(X.gB.generators):
        base = X.actB[j]
        perms.append(tuple(orbit_of[base[orb[0]]] for orb in orbs))
    Q = biset_from_single_action(len(orbs), X.gB, perms)
    return class_of(Q)


# ---------------------------------------------------------------------------
# oracle routes

def tuple_class_strata(X: BiSet, k: int):
    """(tuple class rep, chi^{G_B}(X^phi / C(phi))) for every commuting
    k-tuple class [phi] of the O-side group; zero pieces are kept so callers
    see one stratum per class."""
    if X.gO.order > ORACLE_GROUP_LIMIT:
        raise ResourceLimitError("tuple-form oracle",
                                 size=X.gO.order, budget=ORACLE_GROUP_LIMIT)
    ring = burnside_ring(X.gB)
    out = []
    for tup, _ in commuting_tuple_classes(X.gO, k):
        S = tuple(range(X.size))
        for g in tup.entries:
            S = tuple(p for p in S if X.act("O", g, p) == p)
        piece = ring.zero if not S else \
            _quotient_class(X, S, centralizer(X.gO, tup), ring)
        out.append((tup, piece))
    return out


def chi_k_equivariant_tuples(X: BiSet, k: int) -> BurnsideElement:
    """Direct form: sum over commuting k-tuple classes [phi] of
    chi^{G_B}(X^phi / C(phi)).  Oracle, gated to small O-side groups."""
    ring = burnside_ring(X.gB)
    total = ring.zero
    for _, piece in tuple_class_strata(X, k):
        total = total + piece
    return total


def chi_k_averaging(X: BiSet, k: int) -> int:
    """Averaging form: (1/|G|) * sum over pairwise-commuting (k+1)-tuples of
    |X^tuple|.  Oracle, gated to small O-side groups; integrality asserted."""
    G = X.gO
    if G.order > ORACLE_GROUP_LIMIT:
        raise ResourceLimitError("averaging oracle",
                                 size=G.order, budget=ORACLE_GROUP_LIMIT)

    def rec(pool: list[int], S: list[int], depth: int) -> int:
        if depth == 0:
            return len(S)
        total = 0
        for g in pool:
            sub_pool = [h for h in pool if G.mul(g, h) == G.mul(h, g)]
            Sg = [p for p in S if X.act("O", g, p) == p]
            total += rec(sub_pool, Sg, depth - 1)
        return total

    grand = rec(list(G.elements()), list(range(X.size)), k + 1)
    q, r = divmod(grand, G.order)
    if r:
        raise InvariantViolation(
            f"averaging sum {grand} not divisible by |G|={G.order}")
    return q


# ---------------------------------------------------------------------------
# public hierarchy

def chi_k_equivariant(X: BiSet | CellSpace, k: int,
                      cross_check: bool | None = None) -> BurnsideElement:
    """Order-k equivariant Euler characteristic in A(G_B)."""
    if k < 0:
        raise UsageError(f"order must be >= 0, got {k}")
    if isinstance(X, CellSpace):
        ring = burnside_ring(X.gB)
        total = ring.zero
        for d, F in X.cells:
            total = total + (-1) ** d * chi_k_equivariant(F, k, cross_check)
        return total
    ring = burnside_ring(X.gB)
    memo = X.__dict__.setdefault("_chi_memo", {})
    value = _rec_equivariant(X, tuple(range(X.size)), whole_subgroup(X.gO),
                             k, ring, memo)
    if _want_cross_check(cross_check) and X.gO.order <= ORACLE_GROUP_LIMIT:
        other = chi_k_equivariant_tuples(X, k)
        if other != value:
            raise InvariantViolation(
                f"recursion {value.render()} != tuple form {other.render()} "
                f"(k={k}, O side {X.gO.label})")
    return value


def chi_k(X: BiSet | CellSpace, k: int,
          cross_check: bool | None = None) -> int:
    """Order-k Euler characteristic (trivial B side): chi^(0) is the orbit
    count of the quotient and order k recurses over centralizers."""
    if k < 0:
        raise UsageError(f"order must be >= 0, got {k}")
    if isinstance(X, CellSpace):
        _require_trivial_b(X)
        return sum((-1) ** d * chi_k(F, k, cross_check) for d, F in X.cells)
    _require_trivial_b(X)
    value = chi_k_equivariant(X, k, cross_check=False).coeffs[0]
    if _want_cross_check(cross_check) and X.gO.order <= ORACLE_GROUP_LIMIT:
        other = chi_k_averaging(X, k)
        if other != value:
            raise InvariantViolation(
                f"recursion {value} != averaging form {other} (k={k})")
    return value


def chi_orb(X: BiSet | CellSpace,
            cross_check: bool | None = None) -> int:
    """Orbifold Euler characteristic: sum over conjugacy classes [g] of
    chi(X^g / C(g)); equal to the commuting-pair average."""
    return chi_k(X, 1, cross_check)
