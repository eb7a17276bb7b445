#!/usr/bin/env python3
"""Tour of the bundled 4-point space.

This little matrix separates the two strict notions: arranged as the cycle
x, y, z, t it satisfies every strict quasi-circular quadruple condition, yet
fails the strict circular one; swapping the last two points fixes that and
gives the unique strictly circular compatible order.
"""

from circrob import (
    Quadruple,
    canonicalize,
    compatible_orders,
    counterexample_fixture,
    crossing_violation,
    scr,
    sqcr,
    verify,
)

D = counterexample_fixture()
print("distance matrix:")
print(D.values)

natural = canonicalize((0, 1, 2, 3))
chain = Quadruple(0, 1, 2, 3)
print(f"\nchain 0 < 1 < 2 < 3: sqcr={sqcr(D, chain)}, scr={scr(D, chain)}")

print("\nverify(natural cycle 0,1,2,3):")
rep = verify(D, natural)
for name in ("quasi", "strict_quasi", "circular", "strict_circular"):
    print(f"  {name:16s} {getattr(rep, name)}")

w = crossing_violation(D, natural, strict=True)
print(
    f"\nwhy not circular: farthest neighbors {w.x}->{w.x_prime} and"
    f" {w.y}->{w.y_prime} sit in the non-crossing pattern {w.pattern}"
)

swapped = canonicalize((0, 1, 3, 2))
rep = verify(D, swapped)
print(f"\nverify(swapped cycle 0,1,3,2): strict_circular={rep.strict_circular}")

orders = compatible_orders(D, "strict-quasi")
print("\nall strictly quasi-circular compatible orders (up to reversal):")
for o in orders.orders:
    print(f"  {','.join(map(str, o.seq))}")
N, F, delta = orders.bipartition
print(f"two orders <=> threshold bipartition: N={sorted(N)}, F={sorted(F)}, delta={delta}")
