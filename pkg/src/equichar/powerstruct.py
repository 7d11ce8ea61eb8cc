"""Power structures on 1 + t·R[[t]] via lambda-ring factorization.

Every series with unit constant term factors uniquely as a product of
lambda-series prod_i zeta_{b_i}(t^i); raising to a ring exponent m rescales
every factor exponent to m·b_i.  The construction satisfies the power
structure axioms exactly, so the randomized axiom checks validate the
factorization engine rather than approximate identities.

Coefficient rings plug in through a small handle: exact integers, a Burnside
ring (generators = basis classes, zeta = symmetric-power series), and the
L-extended ring from the motivic module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .burnside import BurnsideElement, BurnsideRing, burnside_ring, class_of
from .errors import InvariantViolation, ResourceLimitError, UsageError
from .gsets import BiSet, biset_from_single_action

GEOMETRIC_CONFIG_BUDGET = 200_000


# ---------------------------------------------------------------------------
# coefficient-ring handles

class IntRing:
    """Exact integers; single lambda-generator 1 with zeta = 1/(1-t)."""

    zero = 0
    one = 1

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def from_int(n):
        return n

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def coords(a):
        return ((None, a),) if a else ()

    @staticmethod
    def zeta_coeff(key, j):
        return 1

    label = "Z"


INT_RING = IntRing()


class BurnsideCoeffRing:
    """Handle for A(G): generators are the basis classes, with
    zeta_{[G/H]}(t) = sum_k class_of(S^k(G/H)) t^k."""

    def __init__(self, bring: BurnsideRing):
        self.bring = bring
        self.zero = bring.zero
        self.one = bring.unit
        self.label = f"A({bring.group.label})"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return n * self.bring.unit

    def is_zero(self, a):
        return a.is_zero()

    def coords(self, a):
        return tuple((i, c) for i, c in enumerate(a.coeffs) if c)

    def zeta_coeff(self, key, j):
        return self.bring.symmetric_power_class(key, j)


def burnside_coeff_ring(bring: BurnsideRing) -> BurnsideCoeffRing:
    handle = bring._zeta.get("coeff_ring")
    if handle is None:
        handle = BurnsideCoeffRing(bring)
        bring._zeta["coeff_ring"] = handle
    return handle


# ---------------------------------------------------------------------------
# truncated series

@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_N over a coefficient-ring handle; all arithmetic
    is exact and eagerly truncated at N."""

    ring: object
    coeffs: tuple

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i]

    @staticmethod
    def from_list(ring, coeffs) -> TruncatedSeries:
        return TruncatedSeries(ring, tuple(coeffs))

    @staticmethod
    def one(ring, N: int) -> TruncatedSeries:
        return TruncatedSeries(ring, (ring.one,) + (ring.zero,) * N)

    def is_one(self) -> bool:
        r = self.ring
        return self.coeffs[0] == r.one and all(r.is_zero(c)
                                               for c in self.coeffs[1:])

    def add(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        r = self.ring
        return TruncatedSeries(r, tuple(r.add(a, b) for a, b in
                                        zip(self.coeffs, other.coeffs)))

    def mul(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        r = self.ring
        n = self.N
        out = []
        for j in range(n + 1):
            acc = r.zero
            for i in range(j + 1):
                a, b = self.coeffs[i], other.coeffs[j - i]
                if r.is_zero(a) or r.is_zero(b):
                    continue
                acc = r.add(acc, r.mul(a, b))
            out.append(acc)
        return TruncatedSeries(r, tuple(out))

    def invert(self) -> TruncatedSeries:
        r = self.ring
        if self.coeffs[0] != r.one:
            raise UsageError("inversion needs constant coefficient 1")
        out = [r.one]
        for j in range(1, self.N + 1):
            acc = r.zero
            for i in range(1, j + 1):
                if r.is_zero(self.coeffs[i]):
                    continue
                acc = r.add(acc, r.mul(self.coeffs[i], out[j - i]))
            out.append(r.neg(acc))
        return TruncatedSeries(r, tuple(out))

    def pow_int(self, n: int) -> TruncatedSeries:
        base = self if n >= 0 else self.invert()
        n = abs(n)
        result = TruncatedSeries.one(self.ring, self.N)
        while n:
            if n & 1:
                result = result.mul(base)
            base = base.mul(base)
            n >>= 1
        return result

    def substitute(self, c, r: int) -> TruncatedSeries:
        """t -> c * t^r."""
        if r < 1:
            raise UsageError(f"substitution power must be >= 1, got {r}")
        ring = self.ring
        out = [ring.zero] * (self.N + 1)
        cpow = ring.one
        for i in range(self.N + 1):
            if i * r > self.N:
                break
            out[i * r] = ring.mul(cpow, self.coeffs[i])
            cpow = ring.mul(cpow, c)
        return TruncatedSeries(ring, tuple(out))

    def truncate(self, M: int) -> TruncatedSeries:
        if M > self.N:
            raise UsageError(f"cannot extend truncation {self.N} to {M}")
        return TruncatedSeries(self.ring, self.coeffs[:M + 1])

    def map_coeffs(self, ring, f) -> TruncatedSeries:
        return TruncatedSeries(ring, tuple(f(c) for c in self.coeffs))

    def _check(self, other: TruncatedSeries) -> None:
        if self.ring is not other.ring or self.N != other.N:
            raise UsageError("series over different rings or truncations")

    def __repr__(self) -> str:
        return f"<series N={self.N} over {getattr(self.ring, 'label', '?')}>"


# ---------------------------------------------------------------------------
# lambda factorization and the power operation

def zeta_series(ring, key, N: int, step: int = 1) -> TruncatedSeries:
    """zeta_key(t^step) truncated at N."""
    coeffs = [ring.zero] * (N + 1)
    j = 0
    while j * step <= N:
        coeffs[j * step] = ring.zeta_coeff(key, j)
        j += 1
    return TruncatedSeries(ring, tuple(coeffs))


def lambda_term(ring, c, i: int, N: int) -> TruncatedSeries:
    """lambda_c(t^i) = prod over generator coordinates of zeta^coord."""
    out = TruncatedSeries.one(ring, N)
    for key, n in ring.coords(c):
        if n == 0:
            continue
        out = out.mul(zeta_series(ring, key, N, step=i).pow_int(n))
    return out


def lambda_factorize(A: TruncatedSeries) -> list:
    """Exponents b_1..b_N with A = prod_i lambda_{b_i}(t^i); unique because
    each step matches the lowest-degree coefficient and divides out."""
    ring = A.ring
    if A.coeffs[0] != ring.one:
        raise UsageError("factorization needs constant coefficient 1")
    residual = A
    out = []
    for i in range(1, A.N + 1):
        b = residual.coeffs[i]
        out.append(b)
        if not ring.is_zero(b):
            # lambda_{-b}(t^i) is the exact inverse of lambda_b(t^i)
            residual = residual.mul(lambda_term(ring, ring.neg(b), i, A.N))
    if not residual.is_one():
        raise InvariantViolation("lambda factorization left a residual")
    return out


def lambda_reconstruct(ring, bs, N: int) -> TruncatedSeries:
    out = TruncatedSeries.one(ring, N)
    for i, b in enumerate(bs, start=1):
        if not ring.is_zero(b):
            out = out.mul(lambda_term(ring, b, i, N))
    return out


def power(A: TruncatedSeries, m) -> TruncatedSeries:
    """A^m for a ring exponent m: rescale the lambda factorization."""
    ring = A.ring
    bs = lambda_factorize(A)
    out = TruncatedSeries.one(ring, A.N)
    for i, b in enumerate(bs, start=1):
        if ring.is_zero(b):
            continue
        e = ring.mul(m, b)
        if ring.is_zero(e):
            continue
        out = out.mul(lambda_term(ring, e, i, A.N))
    return out


# ---------------------------------------------------------------------------
# oracles

def integer_power_oracle(A: TruncatedSeries, m: int) -> TruncatedSeries:
    """Closed multinomial formula for (1 + sum a_i t^i)^m over the integers:
    the t^k coefficient is sum over partitions {i: k_i} of k of
    m(m-1)...(m - sum k_i + 1) / prod k_i! * prod a_i^{k_i}."""
    if A.ring is not INT_RING:
        raise UsageError("integer power oracle works over the integer ring")
    if A.coeffs[0] != 1:
        raise UsageError("oracle needs constant coefficient 1")
    N = A.N
    out = [1] + [0] * N
    for k in range(1, N + 1):
        total = Fraction(0)
        for counts in _partition_counts(k):
            s = sum(counts.values())
            ff = 1
            for j in range(s):
                ff *= (m - j)
            term = Fraction(ff)
            for part, cnt in counts.items():
                term /= factorial(cnt)
                term *= A.coeffs[part] ** cnt
            total += term
        if total.denominator != 1:
            raise InvariantViolation("multinomial coefficient not integral")
        out[k] = int(total)
    return TruncatedSeries(INT_RING, tuple(out))


def _partition_counts(k: int):
    """Partitions of k as {part: multiplicity} dicts, parts non-increasing."""
    def rec(remaining, max_part, acc):
        if remaining == 0:
            yield dict(acc)
            return
        for part in range(min(remaining, max_part), 0, -1):
            acc[part] = acc.get(part, 0) + 1
            yield from rec(remaining - part, part, acc)
            if acc[part] == 1:
                del acc[part]
            else:
                acc[part] -= 1
    yield from rec(k, k, {})


def geometric_power_oracle(a_sets: list[BiSet], M: BiSet, N: int,
                           budget: int = GEOMETRIC_CONFIG_BUDGET
                           ) -> TruncatedSeries:
    """(1 + [A_1]t + ... + [A_j]t^j)^{[M]} computed from configuration
    spaces: the t^k coefficient is the class of the G-set of pairs
    (finite subset K of M, labeling K -> union A_i) of total weight k."""
    if not a_sets:
        raise UsageError("need at least one coefficient G-set")
    G = M.gB
    for A in a_sets:
        if not _same_b_group(A, M):
            raise UsageError("coefficient sets and M must share the B-side group")
    bring = burnside_ring(G)
    ring = burnside_coeff_ring(bring)
    coeffs = [ring.one]
    for k in range(1, N + 1):
        configs = _weight_configs(a_sets, M, k, budget)
        if not configs:
            coeffs.append(ring.zero)
            continue
        rank = {c: i for i, c in enumerate(configs)}
        perms = []
        for s in G.generators:
            img = []
            for c in configs:
                moved = tuple(sorted((M.act("B", s, mp), i, A_i.act("B", s, a))
                                     for (mp, i, a) in c
                                     for A_i in (a_sets[i - 1],)))
                img.append(rank[moved])
            perms.append(tuple(img))
        X = biset_from_single_action(len(configs), G, perms)
        coeffs.append(class_of(X))
    return TruncatedSeries(ring, tuple(coeffs))


def _weight_configs(a_sets, M, k, budget):
    """All configurations of total weight k, canonically sorted."""
    out = []

    def rec(pos, weight, acc):
        if len(out) > budget:
            raise ResourceLimitError("geometric power configurations",
                                     size=len(out), budget=budget)
        if pos == M.size:
            if weight == k:
                out.append(tuple(acc))
            return
        rec(pos + 1, weight, acc)  # leave the point unused
        for i, A in enumerate(a_sets, start=1):
            if weight + i > k:
                continue
            for a in range(A.size):
                acc.append((pos, i, a))
                rec(pos + 1, weight + i, acc)
                acc.pop()

    rec(0, 0, [])
    out.sort()
    return out


def _same_b_group(X: BiSet, Y: BiSet) -> bool:
    from .groups import same_group
    return same_group(X.gB, Y.gB)


# ---------------------------------------------------------------------------
# Macdonald right-hand side

def exponent_tuples(k: int, N: int):
    """(product r_1...r_k, weight prod_{j>=2} r_j^(j-1)) over all tuples of
    positive integers with product at most N; k=0 yields the single empty
    tuple (1, 1)."""
    def rec(depth, prod, weight):
        if depth == k:
            yield prod, weight
            return
        r = 1
        while prod * r <= N:
            yield from rec(depth + 1, prod * r, weight * r ** depth)
            r += 1
    yield from rec(0, 1, 1)


def rhs_base_series(k: int, N: int) -> TruncatedSeries:
    """prod (1 - t^{r_1...r_k})^{r_2 r_3^2 ... r_k^{k-1}} over the integers."""
    out = TruncatedSeries.one(INT_RING, N)
    for a, e in exponent_tuples(k, N):
        factor = TruncatedSeries(INT_RING, tuple(
            1 if i == 0 else (-1 if i == a else 0) for i in range(N + 1)))
        out = out.mul(factor.pow_int(e))
    return out


def rhs_theorem1(m, k: int, N: int) -> TruncatedSeries:
    """The Macdonald right-hand side: the base product raised to -m under
    the power structure of m's ring (integers or a Burnside ring)."""
    if k < 0:
        raise UsageError(f"order must be >= 0, got {k}")
    base = rhs_base_series(k, N)
    if isinstance(m, int):
        return power(base, -m)
    if isinstance(m, BurnsideElement):
        ring = burnside_coeff_ring(m.ring)
        lifted = base.map_coeffs(ring, ring.from_int)
        return power(lifted, -m)
    raise UsageError(f"unsupported exponent type {type(m).__name__}")
