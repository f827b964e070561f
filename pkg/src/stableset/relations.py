"""Finite binary-relation algebra: construction, closure, maximal sets, cycles.

Relations are stored densely as one int bitmask per source index
(``rows[x]`` has bit ``y`` set iff ``x`` relates to ``y``), so closure and
restriction reduce to row-parallel integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bitset import Mask, full_mask, iter_bits
from .errors import EmptyGround, PosetViolation


@dataclass(frozen=True)
class Relation:
    """A binary relation on {0..n-1}."""

    n: int
    rows: tuple[Mask, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count must equal n")
        hi = full_mask(self.n)
        if any(row & ~hi for row in self.rows):
            raise ValueError("row refers to an index >= n")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * n
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Relation":
        return cls(n, (0,) * n)

    def has(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x in range(self.n):
            for y in iter_bits(self.rows[x]):
                yield x, y

    def columns(self) -> tuple[Mask, ...]:
        """cols[y] has bit x set iff x relates to y."""
        cols = [0] * self.n
        for x in range(self.n):
            row = self.rows[x]
            bit = 1 << x
            for y in iter_bits(row):
                cols[y] |= bit
        return tuple(cols)

    def transpose(self) -> "Relation":
        return Relation(self.n, self.columns())

    def is_irreflexive(self) -> bool:
        return all(not self.rows[x] >> x & 1 for x in range(self.n))

    def union(self, other: "Relation") -> "Relation":
        return Relation(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def is_subrelation_of(self, other: "Relation") -> bool:
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))


@dataclass(frozen=True)
class DecisionProblem:
    """A finite ground set with an irreflexive dominance relation."""

    rel: Relation
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.rel.n < 1:
            raise ValueError("a decision problem needs at least one alternative")
        if not self.rel.is_irreflexive():
            raise ValueError("dominance relation must be irreflexive")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.rel.n)))
        elif len(self.labels) != self.rel.n:
            raise ValueError("label count must equal n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Iterable[str] | None = None) -> "DecisionProblem":
        return cls(Relation.from_pairs(n, edges), tuple(labels) if labels else ())

    @property
    def n(self) -> int:
        return self.rel.n

    @property
    def all_mask(self) -> Mask:
        return full_mask(self.rel.n)


def asymmetric_part(r: Relation) -> Relation:
    """Strict part: keep (x,y) only when (y,x) is absent."""
    cols = r.columns()
    return Relation(r.n, tuple(r.rows[x] & ~cols[x] for x in range(r.n)))


def transitive_closure(r: Relation) -> Relation:
    """Reachability by chains of length >= 1 (loops appear exactly on cycles)."""
    rows = list(r.rows)
    for k in range(r.n):
        bit = 1 << k
        via = rows[k]
        for x in range(r.n):
            if rows[x] & bit:
                rows[x] |= via
        # rows[k] may have grown while k was the pivot; re-propagate is not
        # needed: Warshall's invariant covers intermediate nodes <= k.
    return Relation(r.n, tuple(rows))


def maximal_set(xs: Mask, r: Relation) -> Mask:
    """Weakly maximal members of xs: every dominator inside xs is dominated back."""
    if xs == 0:
        raise EmptyGround("maximal_set needs a non-empty carrier")
    cols = r.columns()
    out = 0
    for x in iter_bits(xs):
        ok = True
        for y in iter_bits(cols[x] & xs):
            if not r.has(x, y):
                ok = False
                break
        if ok:
            out |= 1 << x
    return out


def restrict(r: Relation, xs: Mask) -> Relation:
    """Clear every pair with an endpoint outside xs; index space is kept."""
    return Relation(r.n, tuple(r.rows[x] & xs if xs >> x & 1 else 0
                               for x in range(r.n)))


def is_acyclic(r: Relation) -> bool:
    closure = transitive_closure(r)
    return all(not closure.rows[x] >> x & 1 for x in range(r.n))


def trap_relation(p: DecisionProblem) -> Relation:
    """x traps y: strict domination that y cannot answer through the closure."""
    strict = asymmetric_part(p.rel)
    reaches_back = transitive_closure(strict).columns()
    return Relation(p.n, tuple(strict.rows[x] & ~reaches_back[x]
                               for x in range(p.n)))


def strict_poset_order(p: DecisionProblem) -> Relation:
    """Partial order induced by the strict closure: its strict part plus the diagonal."""
    closure = transitive_closure(asymmetric_part(p.rel))
    strict = asymmetric_part(closure)
    leq = Relation(p.n, tuple(strict.rows[x] | (1 << x) for x in range(p.n)))
    _check_poset(leq)
    return leq


def _check_poset(leq: Relation):
    n = leq.n
    for x in range(n):
        if not leq.rows[x] >> x & 1:
            raise PosetViolation(f"not reflexive at {x}")
    for x in range(n):
        for y in iter_bits(leq.rows[x]):
            if x != y and leq.rows[y] >> x & 1:
                raise PosetViolation(f"not antisymmetric on ({x},{y})")
            if leq.rows[y] & ~leq.rows[x]:
                raise PosetViolation(f"not transitive through ({x},{y})")
