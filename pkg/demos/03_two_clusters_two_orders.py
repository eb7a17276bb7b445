#!/usr/bin/env python3
"""The only way a strict space gets two compatible orders (besides reversal).

A strictly quasi-circular Robinson space has either one or two compatible
circular orders up to reversal.  Two happens exactly when a distance
threshold splits the points into two clusters: inside a cluster everything
is closer than the threshold, across clusters everything is farther.  One
cluster can then be flipped without breaking any quadruple condition.
"""

from circrob import bipartition_criterion, compatible_orders, two_cluster_instance

D = two_cluster_instance(4, 3, seed=1)
print(f"n = {D.n} points, two antipodal clusters\n")

result = compatible_orders(D, "strict-quasi")
print("compatible strict quasi-circular orders:")
for o in result.orders:
    print(f"  {','.join(map(str, o.seq))}")

N, F, delta = bipartition_criterion(D)
print(f"\nbipartition: N={sorted(N)}, F={sorted(F)}, threshold delta={delta:.4f}")
intra = max(D.values[u, v] for S in (N, F) for u in S for v in S if u != v)
cross = min(D.values[u, v] for u in N for v in F)
print(f"largest within-cluster distance:  {intra:.4f} (== delta)")
print(f"smallest cross-cluster distance:  {cross:.4f} (> delta)")

# the strictly circular notion is pickier: at most one order survives
circ = compatible_orders(D, "strict-circular")
print(f"\nstrictly circular compatible orders: {[o.seq for o in circ.orders]}")
