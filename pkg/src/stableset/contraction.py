"""Strong components of the strict closure, their condensation, and the
component-mediated dominance relation built on top of them."""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import Mask, iter_bits
from .relations import (DecisionProblem, Relation, asymmetric_part,
                        transitive_closure)


@dataclass(frozen=True)
class Contraction:
    """Partition into strong components plus the induced acyclic relation.

    ``classes`` is ordered topologically for ``cond`` (dominating components
    first), so the iterated-maximal extraction below is a single pass.
    """

    classes: tuple[Mask, ...]
    class_of: tuple[int, ...]
    cond: Relation

    @property
    def k(self) -> int:
        return len(self.classes)


def equipotence_classes(p: DecisionProblem) -> Contraction:
    """Group alternatives that reach each other through the strict closure.

    Symmetric R-edges vanish in the strict part, so they never merge classes.
    """
    strict = asymmetric_part(p.rel)
    closure = transitive_closure(strict)
    n = p.n
    seen = 0
    raw_classes: list[Mask] = []
    for x in range(n):
        if seen >> x & 1:
            continue
        cls = 1 << x
        fwd = closure.rows[x]
        for y in iter_bits(fwd & ~seen):
            if closure.rows[y] >> x & 1:
                cls |= 1 << y
        raw_classes.append(cls)
        seen |= cls

    # Condensation edges from one-step strict dominance across classes.
    idx_of = [0] * n
    for i, cls in enumerate(raw_classes):
        for x in iter_bits(cls):
            idx_of[x] = i
    k = len(raw_classes)
    raw_cond = [0] * k
    for x in range(n):
        i = idx_of[x]
        for y in iter_bits(strict.rows[x] & ~raw_classes[i]):
            raw_cond[i] |= 1 << idx_of[y]

    order = _topological_order(k, raw_cond)
    rank = [0] * k
    for new_i, old_i in enumerate(order):
        rank[old_i] = new_i
    classes = tuple(raw_classes[old_i] for old_i in order)
    cond_rows = [0] * k
    for old_i in range(k):
        row = 0
        for old_j in iter_bits(raw_cond[old_i]):
            row |= 1 << rank[old_j]
        cond_rows[rank[old_i]] = row
    class_of = tuple(rank[idx_of[x]] for x in range(n))
    return Contraction(classes, class_of, Relation(k, tuple(cond_rows)))


def _topological_order(k: int, rows: list[Mask]) -> list[int]:
    """Kahn's algorithm; sources (undominated classes) come first.

    Ties break by ascending class index for deterministic output.
    """
    indeg = [0] * k
    for i in range(k):
        for j in iter_bits(rows[i]):
            indeg[j] += 1
    ready = [i for i in range(k) if indeg[i] == 0]
    out: list[int] = []
    while ready:
        ready.sort()
        i = ready.pop(0)
        out.append(i)
        for j in iter_bits(rows[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    if len(out) != k:
        raise AssertionError("condensation relation is cyclic")
    return out


def maximal_components(c: Contraction) -> Mask:
    """Class indices with no incoming condensation edge; never empty."""
    cols = c.cond.columns()
    out = 0
    for i in range(c.k):
        if cols[i] == 0:
            out |= 1 << i
    assert out != 0
    return out


def extended_dominance(p: DecisionProblem, literal: bool = False) -> Relation:
    """Component-mediated strict dominance between alternatives.

    The default excludes equipotent pairs, which is what makes the relation
    acyclic; ``literal=True`` keeps within-component pairs for comparison.
    """
    c = equipotence_classes(p)
    n = p.n
    rows = [0] * n
    for x in range(n):
        i = c.class_of[x]
        row = 0
        for j in iter_bits(c.cond.rows[i]):
            row |= c.classes[j]
        if literal and c.classes[i].bit_count() > 1 and _has_internal_edge(p, c, i):
            row |= c.classes[i]
        rows[x] = row
    return Relation(n, tuple(rows))


def _has_internal_edge(p: DecisionProblem, c: Contraction, i: int) -> bool:
    strict = asymmetric_part(p.rel)
    cls = c.classes[i]
    return any(strict.rows[x] & cls for x in iter_bits(cls))


def class_level_equivalence_check(p: DecisionProblem) -> bool:
    """Self-test: condensation edges coincide with uniform extended dominance
    between the member alternatives, computed from the raw definition."""
    c = equipotence_classes(p)
    strict = asymmetric_part(p.rel)
    closure = transitive_closure(strict)
    n = p.n

    def equipotent(x: int, y: int) -> bool:
        return x == y or (closure.has(x, y) and closure.has(y, x))

    def omega_dominates(x: int, y: int) -> bool:
        if equipotent(x, y):
            return False
        return any(equipotent(x, z) and strict.has(z, w) and equipotent(w, y)
                   for z in range(n) for w in range(n))

    for i in range(c.k):
        for j in range(c.k):
            if i == j:
                continue
            uniform = all(omega_dominates(x, y)
                          for x in iter_bits(c.classes[i])
                          for y in iter_bits(c.classes[j]))
            if bool(c.cond.rows[i] >> j & 1) != uniform:
                return False
    return True


def condensation_stable_set(c: Contraction) -> Mask:
    """The unique stable set of the acyclic condensation.

    Iterated-maximal construction: keep undominated classes, drop everything
    they dominate in one step, recurse on the remainder.
    """
    cols = c.cond.columns()
    remaining = (1 << c.k) - 1
    chosen = 0
    while remaining:
        layer = 0
        for i in iter_bits(remaining):
            if cols[i] & remaining == 0:
                layer |= 1 << i
        chosen |= layer
        dominated = 0
        for i in iter_bits(layer):
            dominated |= c.cond.rows[i]
        remaining &= ~(layer | dominated)
    return chosen
