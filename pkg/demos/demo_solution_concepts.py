"""Tour of the solution concepts on small hand-built instances.

Run with `python3 demos/demo_solution_concepts.py`.
"""

from stableset import (Concept, DecisionProblem, SociallyInterp, core,
                       duggan_set, schwartz_set, solve)
from stableset.bitset import members


def show(mask):
    return set(members(mask)) or "{}"


# A three-cycle with a trailing loser: 0 -> 1 -> 2 -> 0 and 0 -> 3.
# The cycle empties the core, which is exactly the situation the wider
# solution concepts are built for.
p = DecisionProblem.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)],
                               labels=["a", "b", "c", "d"])

print("instance:", sorted(p.rel.pairs()))
print("core:", show(core(p)))
print("schwartz set:", show(schwartz_set(p)))
print("duggan set:", show(duggan_set(p)))
print()

# Each family concept answers "which subsets count as a solution?"
# differently.  count()/contains() work without enumeration; iteration is
# deterministic.
for concept in Concept:
    family = solve(p, concept)
    print(f"{concept.value:12s} ({family.count()} sets):",
          [show(v) for v in family])
print()

# The socially stable set depends on how the restricted closure is read;
# the two readings genuinely differ on this instance.
for interp in SociallyInterp:
    family = solve(p, Concept.SOCIALLY, interp=interp)
    print(f"socially / {interp.value}:", [show(v) for v in family])
print()

# The 4-cycle is the classic instance with two stable sets and no core.
square = DecisionProblem.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("4-cycle vnm stable sets:",
      [show(v) for v in solve(square, Concept.VNM)])
