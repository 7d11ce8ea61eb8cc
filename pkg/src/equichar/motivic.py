"""Burnside coefficients extended by rational powers of a formal symbol L.

Elements of A(G)[L^{±1/D}] are finite sums of L^q * (Burnside class) with
qD integral.  The lambda-structure extends the Burnside one by the scaling
rule zeta_{L^q b}(t) = zeta_b(L^q t), which makes the substitution law
(A(L^s t))^m = (A(t))^m |_{t -> L^s t} hold for the factorization power.

Geometric classes (of varieties, quotients, fixed loci) are never computed
here: orbifold data carry user-supplied classes and shifts, and this module
only does the exact ring and series bookkeeping on top of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .burnside import BurnsideElement, BurnsideRing, burnside_ring
from .errors import UsageError
from .euler import tuple_class_strata
from .gsets import BiSet
from .groups import FiniteGroup
from .powerstruct import TruncatedSeries, power

TUPLE_LABEL_BUDGET = 100_000


# ---------------------------------------------------------------------------
# the extended ring

@dataclass(frozen=True)
class LExtElement:
    """Finite sum of L^q * c with c in A(G); terms sorted by exponent,
    no zero coefficients, D = lcm of exponent denominators."""

    ring: BurnsideRing
    D: int
    terms: tuple  # ((Fraction q, BurnsideElement), ...)

    def __add__(self, other: LExtElement) -> LExtElement:
        self._check(other)
        return lext(self.ring, self.terms + other.terms)

    def __neg__(self) -> LExtElement:
        return LExtElement(self.ring, self.D,
                           tuple((q, -c) for q, c in self.terms))

    def __sub__(self, other: LExtElement) -> LExtElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return lext(self.ring, ())
            return LExtElement(self.ring, self.D,
                               tuple((q, other * c) for q, c in self.terms))
        self._check(other)
        out = []
        for q, c in self.terms:
            for r, d in other.terms:
                out.append((q + r, c * d))
        return lext(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def exponent_coeff(self, q) -> BurnsideElement:
        q = Fraction(q)
        for r, c in self.terms:
            if r == q:
                return c
        return self.ring.zero

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for q, c in self.terms:
            if q == 0:
                parts.append(c.render())
            else:
                head = "L" if q == 1 else \
                    (f"L^{q}" if q.denominator == 1 else f"L^({q})")
                if c == self.ring.unit:
                    parts.append(head)
                else:
                    parts.append(f"{head}*({c.render()})")
        return " + ".join(parts)

    def _check(self, other) -> None:
        if not isinstance(other, LExtElement) or other.ring is not self.ring:
            raise UsageError("mixed L-extended rings")

    def __repr__(self) -> str:
        return f"<LExt {self.render()}>"


def lext(bring: BurnsideRing, pairs, D: int = 1) -> LExtElement:
    """Normalized element: merge exponents, drop zeros, sort, minimal D."""
    acc: dict = {}
    for q, c in pairs:
        q = Fraction(q)
        acc[q] = acc[q] + c if q in acc else c
    terms = tuple(sorted((q, c) for q, c in acc.items() if not c.is_zero()))
    denom = 1
    for q, _ in terms:
        denom = lcm(denom, q.denominator)
    return LExtElement(bring, lcm(denom, D) if D > 1 else denom, terms)


def embed(x, bring: BurnsideRing | None = None) -> LExtElement:
    """A Burnside class (or integer, given a ring) at exponent zero."""
    if isinstance(x, BurnsideElement):
        return lext(x.ring, ((Fraction(0), x),))
    if isinstance(x, int):
        if bring is None:
            raise UsageError("embedding an integer needs a Burnside ring")
        return lext(bring, ((Fraction(0), x * bring.unit),))
    raise UsageError(f"cannot embed {type(x).__name__}")


def L(bring: BurnsideRing, q=1) -> LExtElement:
    return lext(bring, ((Fraction(q), bring.unit),))


def specialize_L(a: LExtElement) -> BurnsideElement:
    """The ring map L -> 1 onto A(G)."""
    out = a.ring.zero
    for _, c in a.terms:
        out = out + c
    return out


# ---------------------------------------------------------------------------
# lambda-structure handle for the series engine

class LExtCoeffRing:
    """Generators are pairs (exponent q, basis class index); zeta of a
    generator is the symmetric-power series scaled by L^{qk} at t^k."""

    def __init__(self, bring: BurnsideRing):
        self.bring = bring
        self.zero = lext(bring, ())
        self.one = embed(bring.unit)
        self.label = f"A({bring.group.label})[L^Q]"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return embed(n, self.bring)

    def is_zero(self, a):
        return a.is_zero()

    def coords(self, a):
        out = []
        for q, c in a.terms:
            for i, n in enumerate(c.coeffs):
                if n:
                    out.append(((q, i), n))
        return tuple(out)

    def zeta_coeff(self, key, j):
        q, i = key
        return lext(self.bring,
                    ((q * j, self.bring.symmetric_power_class(i, j)),))


def lext_coeff_ring(bring: BurnsideRing) -> LExtCoeffRing:
    handle = bring._zeta.get("lext_coeff_ring")
    if handle is None:
        handle = LExtCoeffRing(bring)
        bring._zeta["lext_coeff_ring"] = handle
    return handle


def zeta_L(b: LExtElement, N: int) -> TruncatedSeries:
    """zeta of a single generator L^q*[G/H]: coefficient of t^k is
    L^{qk} * class_of(S^k(G/H))."""
    if len(b.terms) != 1:
        raise UsageError("zeta_L needs a single L^q*[G/H] generator")
    q, c = b.terms[0]
    hot = [i for i, n in enumerate(c.coeffs) if n]
    if len(hot) != 1 or c.coeffs[hot[0]] != 1:
        raise UsageError("zeta_L needs a single L^q*[G/H] generator")
    ring = lext_coeff_ring(b.ring)
    return TruncatedSeries(ring, tuple(
        ring.zeta_coeff((q, hot[0]), j) for j in range(N + 1)))


def power_L(A: TruncatedSeries, m) -> TruncatedSeries:
    """Factorization power over the L-extended coefficients."""
    if not isinstance(A.ring, LExtCoeffRing):
        raise UsageError("power_L expects a series over an L-extended ring")
    if isinstance(m, BurnsideElement):
        m = embed(m)
    if not isinstance(m, LExtElement):
        raise UsageError(f"unsupported exponent type {type(m).__name__}")
    return power(A, m)


# ---------------------------------------------------------------------------
# ages and shifts

def age(angles) -> Fraction:
    """Sum of the eigenvalue angles theta_j, each in [0, 1)."""
    total = Fraction(0)
    for theta in angles:
        theta = Fraction(theta)
        if not 0 <= theta < 1:
            raise UsageError(f"angle {theta} outside [0, 1)")
        total += theta
    return total


def phi_k(rs, phis) -> Fraction:
    """phi_1(r_1 - 1) + phi_2 r_1 (r_2 - 1) + ... +
    phi_k r_1...r_{k-1} (r_k - 1)."""
    rs = tuple(rs)
    phis = tuple(Fraction(p) for p in phis)
    if len(rs) != len(phis):
        raise UsageError(f"{len(rs)} indices vs {len(phis)} weights")
    total = Fraction(0)
    prefix = 1
    for r, p in zip(rs, phis):
        if r < 1:
            raise UsageError(f"indices must be >= 1, got {r}")
        total += p * prefix * (r - 1)
        prefix *= r
    return total


# ---------------------------------------------------------------------------
# orbifold data

@dataclass(frozen=True)
class OrbifoldDatum:
    """Order-k stratum data: each stratum is (commuting-tuple label,
    user-supplied quotient class, rational shift).  The acting group and
    the coefficient Burnside ring are carried for validation; classes are
    never derived from geometry here."""

    group: FiniteGroup
    bring: BurnsideRing
    k: int
    weights: tuple
    strata: tuple  # ((g-index tuple, LExtElement, Fraction shift), ...)

    def __post_init__(self):
        if self.k < 0:
            raise UsageError(f"order must be >= 0, got {self.k}")
        if len(self.weights) != self.k:
            raise UsageError(f"need {self.k} weights, got {len(self.weights)}")
        object.__setattr__(self, "weights",
                           tuple(Fraction(p) for p in self.weights))
        norm = []
        for tup, cls, shift in self.strata:
            if not isinstance(cls, LExtElement) or cls.ring is not self.bring:
                raise UsageError("stratum class not in the datum's ring")
            norm.append((tuple(tup), cls, Fraction(shift)))
        object.__setattr__(self, "strata", tuple(norm))
        if all(p >= 0 for p in self.weights):
            for _, _, shift in self.strata:
                if shift < 0:
                    raise UsageError(
                        f"negative shift {shift} with non-negative weights")


def orbifold_class_from_datum(datum: OrbifoldDatum) -> LExtElement:
    """Sum over strata of quotientClass * L^shift, after checking every
    stratum label is a genuine commuting-tuple class of the group."""
    total = lext(datum.bring, ())
    for tup, cls, shift in datum.strata:
        _check_tuple_label(datum.group, tup, datum.k)
        total = total + cls * L(datum.bring, shift)
    return total


def _check_tuple_label(G: FiniteGroup, tup, k: int) -> None:
    from .groups import commuting_tuple_classes
    if len(tup) != k:
        raise UsageError(f"unknown tuple-class label {tup}: wrong length")
    if not all(isinstance(g, int) and 0 <= g < G.order for g in tup):
        raise UsageError(f"unknown tuple-class label {tup}: bad indices")
    for i, g in enumerate(tup):
        for h in tup[i + 1:]:
            if G.mul(g, h) != G.mul(h, g):
                raise UsageError(
                    f"unknown tuple-class label {tup}: entries do not commute")
    reps = {t.entries for t, _ in
            commuting_tuple_classes(G, k, TUPLE_LABEL_BUDGET)}
    # walk the simultaneous-conjugation orbit until a class representative
    # shows up; commuting tuples always reach one
    seen = {tuple(tup)}
    frontier = [tuple(tup)]
    while frontier:
        if seen & reps:
            return
        nxt = []
        for t in frontier:
            for s in G.generators:
                image = tuple(G.conj(g, s) for g in t)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    if not seen & reps:
        raise UsageError(f"unknown tuple-class label {tup}")


def datum_from_biset(X: BiSet, k: int, weights=None) -> OrbifoldDatum:
    """Shift-zero datum whose strata are the commuting-tuple-class pieces of
    the order-k equivariant characteristic; its total class is the L-free
    embedding of chi_k_equivariant(X, k)."""
    if weights is None:
        weights = (1,) * k
    bring = burnside_ring(X.gB)
    strata = tuple((tup.entries, embed(piece, bring), Fraction(0))
                   for tup, piece in tuple_class_strata(X, k))
    return OrbifoldDatum(X.gO, bring, k, tuple(weights), strata)


# ---------------------------------------------------------------------------
# Macdonald right-hand side with L-weights

def rhs_theorem2(m, k: int, d, weights=None, N: int = 6) -> TruncatedSeries:
    """prod over r_1..r_k with product <= N of
    (1 - L^{Phi_k(r)d/2} t^{r_1...r_k})^{r_2 r_3^2 ... r_k^{k-1}},
    raised to -m under the L-extended power structure."""
    if k < 1:
        raise UsageError(f"order must be >= 1, got {k}")
    d = Fraction(d)
    if d < 0:
        raise UsageError(f"dimension must be >= 0, got {d}")
    if weights is None:
        weights = (1,) * k
    weights = tuple(Fraction(p) for p in weights)
    if len(weights) != k:
        raise UsageError(f"need {k} weights, got {len(weights)}")
    if isinstance(m, BurnsideElement):
        m = embed(m)
    if not isinstance(m, LExtElement):
        raise UsageError(f"unsupported exponent type {type(m).__name__}")
    ring = lext_coeff_ring(m.ring)
    base = TruncatedSeries.one(ring, N)
    for rs, prod, weight in _index_tuples(k, N):
        shift = phi_k(rs, weights) * d / 2
        factor = [ring.zero] * (N + 1)
        factor[0] = ring.one
        factor[prod] = -L(m.ring, shift)
        base = base.mul(TruncatedSeries(ring, tuple(factor)).pow_int(weight))
    return power(base, -m)


def _index_tuples(k: int, N: int):
    """(r_1..r_k, product, prod_{j>=2} r_j^{j-1}) with product <= N."""
    def rec(depth, rs, prod, weight):
        if depth == k:
            yield tuple(rs), prod, weight
            return
        r = 1
        while prod * r <= N:
            rs.append(r)
            yield from rec(depth + 1, rs, prod * r, weight * r ** depth)
            rs.pop()
            r += 1
    yield from rec(0, [], 1, 1)
