"""Degrees of generalized Severi varieties of nodal plane curves.

The variety V(d, delta)[alpha, beta] parametrizes reduced plane curves of
degree d with delta nodes and prescribed contact with a fixed line L:
alpha_k contacts of order k at assigned general points of L, beta_k
contacts of order k at unassigned points.  The profiles must account for
the full intersection with L,

    sum_k k * alpha_k  +  sum_k k * beta_k  =  d.

The degree N(d, delta, alpha, beta) of this variety (the number of its
members through dim-many general points) obeys the Caporaso-Harris
recursion, implemented here:

    N(d, delta, alpha, beta) =
        sum over j with beta_j > 0 of
            j * N(d, delta, alpha + e_j, beta - e_j)            (first sum)
      + sum over alpha' <= alpha and increments c of
            k^c * C(alpha, alpha') * C(beta + c, beta)
              * N(d - 1, delta', alpha', beta + c)              (second sum)

where k^c = prod_k k^(c_k), C(-, -) is the entrywise binomial, the
increment c runs over all profiles with

    weight(alpha') + weight(beta) + weight(c) = d - 1,

and delta' = delta - (d - 1) + |c| is kept only when 0 <= delta' <= delta.
The first sum specializes one unassigned contact to an assigned point at
fixed degree; the second degenerates the curve to contain L, dropping
the degree by one.  Base case: d = 1 has degree 1 (a line through two
points) when delta = 0.  Degrees vanish outside 0 <= delta <= d(d-1)/2.

All values are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import seqs


class WeightMismatch(ValueError):
    """Tangency profiles do not account for the full degree."""


class NonPositiveDegree(ValueError):
    """Curve degree d must be at least 1."""


@dataclass(frozen=True)
class SeveriIndex:
    """Canonical label (d, delta, alpha, beta) of a generalized Severi variety.

    Construction canonicalizes the profiles and enforces the weight
    constraint, so an index in hand is always valid; delta may be any
    integer (out-of-range values simply have degree 0).
    """

    d: int
    delta: int
    alpha: tuple[int, ...] = ()
    beta: tuple[int, ...] = ()

    def __post_init__(self):
        if self.d < 1:
            raise NonPositiveDegree("degree d must be >= 1, got %d" % self.d)
        object.__setattr__(self, "alpha", seqs.canon(self.alpha))
        object.__setattr__(self, "beta", seqs.canon(self.beta))
        got = seqs.weight(self.alpha) + seqs.weight(self.beta)
        if got != self.d:
            raise WeightMismatch(
                "profiles must satisfy sum(k*alpha_k) + sum(k*beta_k) = d: "
                "got weight %d for d = %d (alpha=%r, beta=%r)"
                % (got, self.d, self.alpha, self.beta)
            )

    def sort_key(self):
        return (self.d, self.delta, self.alpha, self.beta)


def validate(d: int, delta: int, alpha=(), beta=()) -> SeveriIndex:
    """Build a checked index; raises WeightMismatch or NonPositiveDegree."""
    return SeveriIndex(int(d), int(delta), tuple(alpha), tuple(beta))


def genus(index: SeveriIndex) -> int:
    """Geometric genus C(d-1, 2) - delta of the parametrized curves.

    May be negative for delta beyond the genus bound.
    """
    return comb(index.d - 1, 2) - index.delta


def dimension(index: SeveriIndex) -> int:
    """Dimension of the variety, equal to the number of point conditions.

    Computed from both closed forms

        d(d+3)/2 - delta - sum(k*alpha_k) - sum((k-1)*beta_k)
        2d + g - 1 + |beta|

    which agree whenever the weight constraint holds; a disagreement
    would mean an arithmetic bug, and raises.
    """
    d, delta, alpha, beta = index.d, index.delta, index.alpha, index.beta
    direct = (
        d * (d + 3) // 2
        - delta
        - seqs.weight(alpha)
        - (seqs.weight(beta) - seqs.size(beta))
    )
    via_genus = 2 * d + genus(index) - 1 + seqs.size(beta)
    if direct != via_genus:
        raise ArithmeticError(
            "dimension forms disagree at %r: %d vs %d" % (index, direct, via_genus)
        )
    return direct


@dataclass
class MemoStore:
    """Write-once memo of computed degrees, keyed by canonical index.

    A second put with the same value is a benign no-op (this makes
    concurrent shared use safe); a conflicting value raises, since the
    recursion is deterministic and a conflict means corruption.  Hit and
    miss counters are bookkeeping only.
    """

    _values: dict[SeveriIndex, int] = field(default_factory=dict)
    hits: int = 0
    misses: int = 0

    def get(self, index: SeveriIndex):
        value = self._values.get(index)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, index: SeveriIndex, value: int) -> None:
        stored = self._values.setdefault(index, value)
        if stored != value:
            raise RuntimeError(
                "memo conflict at %r: stored %d, recomputed %d"
                % (index, stored, value)
            )

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, index: SeveriIndex) -> bool:
        return index in self._values


def first_sum_terms(index: SeveriIndex) -> list[tuple[int, SeveriIndex]]:
    """Terms j * N(d, delta, alpha + e_j, beta - e_j) of the first sum.

    One term per j with beta_j > 0; the child keeps d and delta and
    satisfies the weight constraint automatically.
    """
    out = []
    for j, entry in enumerate(index.beta, start=1):
        if entry > 0:
            child = SeveriIndex(
                index.d,
                index.delta,
                seqs.add(index.alpha, seqs.unit(j)),
                seqs.sub(index.beta, seqs.unit(j)),
            )
            out.append((j, child))
    return out


def second_sum_terms(index: SeveriIndex) -> list[tuple[int, SeveriIndex]]:
    """Coefficient/child pairs of the degeneration sum, for d >= 2.

    Enumerates alpha' <= alpha, then increments c with
    weight(alpha') + weight(beta) + weight(c) = d - 1; the child is
    (d-1, delta', alpha', beta + c) with delta' = delta - (d-1) + |c|,
    kept only when 0 <= delta' <= delta.  Coefficient:
    k^c * C(alpha, alpha') * C(beta + c, beta).  Order is deterministic:
    alpha' lexicographic, then c in partition order.
    """
    d, delta, alpha, beta = index.d, index.delta, index.alpha, index.beta
    if d < 2:
        raise ValueError("degeneration terms need d >= 2, got d = %d" % d)
    out = []
    base_weight = seqs.weight(beta)
    for a_prime in seqs.subsequences(alpha):
        budget = (d - 1) - seqs.weight(a_prime) - base_weight
        if budget < 0:
            continue
        for c in seqs.partitions(budget):
            delta_child = delta - (d - 1) + seqs.size(c)
            if not 0 <= delta_child <= delta:
                continue
            b_prime = seqs.add(beta, c)
            coeff = (
                seqs.nat_power(c)
                * seqs.binomial(alpha, a_prime)
                * seqs.binomial(b_prime, beta)
            )
            if coeff == 0:
                continue
            child = SeveriIndex(d - 1, delta_child, a_prime, b_prime)
            out.append((coeff, child))
    return out


def severi_degree(index: SeveriIndex, memo: MemoStore | None = None) -> int:
    """Degree of the generalized Severi variety at the given index.

    Evaluates the recursion in the module docstring with memoization.
    Returns 0 outside 0 <= delta <= d(d-1)/2.  Termination: the first
    sum strictly decreases |beta| at fixed d, the second strictly
    decreases d.
    """
    if memo is None:
        memo = MemoStore()
    return _degree(index, memo)


def _degree(index: SeveriIndex, memo: MemoStore) -> int:
    d, delta = index.d, index.delta
    if delta < 0 or delta > d * (d - 1) // 2:
        return 0
    if d == 1:
        return 1  # delta is forced to 0 here; a line through two points
    cached = memo.get(index)
    if cached is not None:
        return cached
    total = 0
    for j, child in first_sum_terms(index):
        total += j * _degree(child, memo)
    for coeff, child in second_sum_terms(index):
        total += coeff * _degree(child, memo)
    memo.put(index, total)
    return total


@dataclass(frozen=True)
class DegreeRecord:
    """One table row: an index with its degree, dimension and genus."""

    index: SeveriIndex
    degree: int
    dim: int
    genus: int


def all_indices(d: int, delta_max: int | None = None) -> list[SeveriIndex]:
    """Every valid index of degree d with 0 <= delta <= min(delta_max, d(d-1)/2).

    Sorted by (delta, alpha, beta).
    """
    top = d * (d - 1) // 2
    if delta_max is not None:
        top = min(top, delta_max)
    out = []
    for delta in range(top + 1):
        for w_alpha in range(d + 1):
            for alpha in seqs.partitions(w_alpha):
                for beta in seqs.partitions(d - w_alpha):
                    out.append(SeveriIndex(d, delta, alpha, beta))
    out.sort(key=SeveriIndex.sort_key)
    return out


def severi_table(
    d_max: int, delta_max: int, memo: MemoStore | None = None
) -> list[DegreeRecord]:
    """Degree records for every valid index with d <= d_max.

    Rows are ordered by (d, delta, alpha, beta); a shared memo makes the
    whole table one recursion pass.
    """
    if d_max < 1:
        raise NonPositiveDegree("d_max must be >= 1, got %d" % d_max)
    if delta_max < 0:
        raise ValueError("delta_max must be >= 0, got %d" % delta_max)
    if memo is None:
        memo = MemoStore()
    out = []
    for d in range(1, d_max + 1):
        for index in all_indices(d, delta_max):
            out.append(
                DegreeRecord(
                    index=index,
                    degree=severi_degree(index, memo),
                    dim=dimension(index),
                    genus=genus(index),
                )
            )
    return out
