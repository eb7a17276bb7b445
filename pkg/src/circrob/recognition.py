"""Construction of compatible circular orders in O(n log n), plus order
enumeration and the two-orders bipartition criterion.

The construction partitions the points around a base point x and one of its
farthest neighbors x' into N = {u : d(u,x) <= d(u,x')} and its complement.
When some point is equidistant from x and x', the arc between x and x' is
recovered metrically through J-sets and the whole order is forced (up to
reversal).  Otherwise N and F each split into two arcs sorted by distance to
x resp. x', leaving exactly two candidate compositions; a linear number of
quadruple checks decides which one can be compatible.  On inputs that are not
strictly (quasi-)circular Robinson the output is arbitrary and must be vetted
with :func:`circrob.verification.verify`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Any, Optional, Sequence

import numpy as np

from .core import CircularOrder, DissimilarityMatrix, canonicalize, farthest_set
from .verification import verify

__all__ = [
    "TieWarning",
    "NearFarPartition",
    "OrderSet",
    "j_set",
    "near_far_partition",
    "orders_agree",
    "find_compatible_order",
    "compatible_orders",
    "bipartition_criterion",
]

STRICT_QUASI = "strict-quasi"
STRICT_CIRCULAR = "strict-circular"


class TieWarning(UserWarning):
    """Equal sort keys met while ordering points by distance; the instance is
    then not strict (or only through a two-point farthest pair)."""


@dataclass(frozen=True)
class NearFarPartition:
    """Split of the points by proximity to a base point vs. one of its
    farthest neighbors; `meet` holds the equidistant points."""

    x: int
    x_prime: int
    N: frozenset[int]
    F: frozenset[int]
    meet: frozenset[int]


@dataclass(frozen=True)
class OrderSet:
    """All compatible canonical orders (up to reversal) of one strictness."""

    orders: tuple[CircularOrder, ...]
    bipartition: Optional[tuple[frozenset[int], frozenset[int], float]]

    def to_json_dict(self) -> dict[str, Any]:
        bip = None
        if self.bipartition is not None:
            N, F, delta = self.bipartition
            bip = {"N": sorted(N), "F": sorted(F), "delta": delta}
        return {"orders": [list(o.seq) for o in self.orders], "bipartition": bip}


def _j_mask(values: np.ndarray, x: int, y: int, eps: float) -> np.ndarray:
    mask = (values[x, y] - np.maximum(values[x], values[y])) > eps
    mask[x] = True
    mask[y] = True
    return mask


def j_set(D: DissimilarityMatrix, x: int, y: int, eps: float = 0.0) -> frozenset[int]:
    """{x, y} plus every point strictly closer than d(x,y) to both x and y.

    On strict quasi-circular instances with d(x,y) <= min(d(x,z), d(y,z)) for
    a third point z, this is exactly the arc from x to y of any compatible
    order.
    """
    if x == y:
        raise ValueError("j_set needs two distinct points")
    for p in (x, y):
        if not 0 <= p < D.n:
            raise ValueError(f"index out of range: {p}")
    return frozenset(int(i) for i in np.flatnonzero(_j_mask(D.values, x, y, eps)))


def near_far_partition(
    D: DissimilarityMatrix, x: int, x_prime: int, eps: float = 0.0
) -> NearFarPartition:
    """Partition by proximity to x vs. x'; requires x' to be farthest from x."""
    r, _ = farthest_set(D, x)
    if not D.values[x, x_prime] >= r - eps:
        raise ValueError(f"{x_prime} is not a farthest neighbor of {x}")
    dN = D.values[:, x]
    dF = D.values[:, x_prime]
    in_N = (dN - dF) <= eps
    in_F = (dF - dN) <= eps
    to_set = lambda m: frozenset(int(i) for i in np.flatnonzero(m))
    return NearFarPartition(
        x=x,
        x_prime=x_prime,
        N=to_set(in_N),
        F=to_set(in_F),
        meet=to_set(in_N & in_F),
    )


def orders_agree(
    D: DissimilarityMatrix,
    X_N: Sequence[int],
    X_F: Sequence[int],
    eps: float = 0.0,
) -> bool:
    """Whether the composed circular order X_N ++ X_F can be compatible.

    Checks the four linear-size families of quadruple conditions that are
    sensitive to the relative orientation of the two arcs; O(|X_N| + |X_F|)
    evaluations.  Trivially true when either side is a single point.
    """
    xn = [int(p) for p in X_N]
    xf = [int(p) for p in X_F]
    if not xn or not xf:
        raise ValueError("both parts must be nonempty")
    if set(xn) & set(xf):
        raise ValueError("parts overlap")
    if len(xn) + len(xf) != D.n or set(xn) | set(xf) != set(range(D.n)):
        raise ValueError("parts must cover all points exactly once")
    k, l = len(xn), len(xf)
    if k == 1 or l == 1:
        return True

    v = D.values

    def holds(a: int, b: int, c: int, d: int) -> bool:
        # sqcr on the chain a < b < c < d and on its three rotations: a
        # violation of the 4-subset may surface at any rotation
        return (
            v[a, c] - min(v[b, c], v[d, c]) > eps
            and v[b, d] - min(v[c, d], v[a, d]) > eps
            and v[c, a] - min(v[d, a], v[b, a]) > eps
            and v[d, b] - min(v[a, b], v[c, b]) > eps
        )

    x1, x2, xk, xk1 = xn[0], xn[1], xn[-1], xn[-2]
    y1, y2, yl, yl1 = xf[0], xf[1], xf[-1], xf[-2]
    for i in range(k - 1):
        if not holds(xn[i], xk, y1, y2):
            return False
    for i in range(1, k):
        if not holds(xn[i], yl1, yl, x1):
            return False
    for j in range(l - 1):
        if not holds(xf[j], yl, x1, x2):
            return False
    for j in range(1, l):
        if not holds(xf[j], xk1, xk, y1):
            return False
    return True


def _dist_sorted(
    points: np.ndarray,
    key: np.ndarray,
    descending: bool = False,
    force_last: Optional[int] = None,
) -> np.ndarray:
    """Stable sort of `points` by key value then index; `force_last` moves
    that point behind its exact-tie group (it is the far arc extremity)."""
    if points.size <= 1:
        return points
    k = key[points]
    srt = np.lexsort((points, -k if descending else k))
    out = points[srt]
    ks = k[srt]
    if force_last is not None:
        pos = np.flatnonzero(out == force_last)
        if pos.size:
            p = int(pos[0])
            g0 = p
            while g0 > 0 and ks[g0 - 1] == ks[p]:
                g0 -= 1
            g1 = p
            while g1 + 1 < out.size and ks[g1 + 1] == ks[p]:
                g1 += 1
            if g1 > g0:
                grp = [int(q) for q in out[g0 : g1 + 1] if q != force_last]
                out = np.concatenate(
                    [out[:g0], np.array(grp + [force_last], dtype=out.dtype), out[g1 + 1 :]]
                )
    eq = ks[1:] == ks[:-1]
    if force_last is not None and eq.any():
        fl = out == force_last
        eq = eq & ~(fl[1:] | fl[:-1])
    if eq.any():
        warnings.warn(
            "equal distance keys while ordering points; instance may not be strict",
            TieWarning,
            stacklevel=3,
        )
    return out


def _candidates(D: DissimilarityMatrix, eps: float = 0.0) -> list[np.ndarray]:
    """The one or two candidate orders; the first is the algorithm's pick."""
    n = D.n
    if n == 1:
        return [np.zeros(1, dtype=np.intp)]
    v = D.values
    x = 0
    row = v[x].copy()
    row[x] = -np.inf
    x_prime = int(np.argmax(row))
    dN = v[:, x]
    dF = v[:, x_prime]
    in_N = (dN - dF) <= eps
    in_F = (dF - dN) <= eps
    meet = in_N & in_F
    idx = np.arange(n, dtype=np.intp)

    if meet.any():
        y = int(np.flatnonzero(meet)[0])
        x1_mask = _j_mask(v, x, y, eps) | _j_mask(v, y, x_prime, eps)
        part1 = _dist_sorted(idx[x1_mask], dN, force_last=x_prime)
        part2 = _dist_sorted(idx[~x1_mask], dN, descending=True)
        return [np.concatenate([part1, part2])]

    n_part = in_N
    f_part = ~in_N
    n_idx = idx[n_part]
    f_idx = idx[f_part]
    z = int(n_idx[np.argmax(dN[n_idx])])
    y = int(f_idx[np.argmax(dF[f_idx])])
    np_mask = (idx == x) if z == x else (_j_mask(v, x, z, eps) & n_part)
    fp_mask = (idx == x_prime) if y == x_prime else (_j_mask(v, x_prime, y, eps) & f_part)
    # Each half is traversed wing-desc, center, wing-asc so that distances to
    # the center rise away from it on both sides.
    xn = np.concatenate(
        [
            _dist_sorted(idx[n_part & ~np_mask], dN, descending=True),
            _dist_sorted(idx[np_mask], dN),
        ]
    )
    xf = np.concatenate(
        [
            _dist_sorted(idx[fp_mask], dF, descending=True),
            _dist_sorted(idx[f_part & ~fp_mask], dF),
        ]
    )
    straight = np.concatenate([xn, xf])
    flipped = np.concatenate([xn, xf[::-1]])
    if orders_agree(D, xn, xf, eps):
        return [straight, flipped]
    return [flipped, straight]


def find_compatible_order(D: DissimilarityMatrix, eps: float = 0.0) -> CircularOrder:
    """Construct a candidate circular order in O(n log n).

    The result is compatible whenever the space is strictly quasi-circular or
    strictly circular Robinson; otherwise it may be arbitrary and should be
    checked with verify().
    """
    return canonicalize(_candidates(D, eps)[0])


def compatible_orders(
    D: DissimilarityMatrix, strictness: str = STRICT_QUASI, eps: float = 0.0
) -> OrderSet:
    """All compatible canonical orders for the requested strict notion.

    Runs the construction, also tries the alternative composition when the
    equidistant set was empty, and keeps exactly the candidates that pass the
    full O(n^2) verification.  Empty result means the space is not strictly
    (quasi-)circular Robinson.
    """
    if strictness == STRICT_QUASI:
        flag = "strict_quasi"
    elif strictness == STRICT_CIRCULAR:
        flag = "strict_circular"
    else:
        raise ValueError(f"unknown strictness {strictness!r}")
    seen: list[CircularOrder] = []
    for cand in _candidates(D, eps):
        order = canonicalize(cand)
        if order not in seen:
            seen.append(order)
    kept = [o for o in seen if getattr(verify(D, o, eps), flag)]
    kept.sort(key=lambda o: o.seq)
    bip = bipartition_criterion(D, eps) if len(kept) == 2 else None
    return OrderSet(orders=tuple(kept), bipartition=bip)


def bipartition_criterion(
    D: DissimilarityMatrix, eps: float = 0.0
) -> Optional[tuple[frozenset[int], frozenset[int], float]]:
    """Threshold split into two clusters, if one exists.

    Looks for a partition X = N u F with |N|, |F| > 1 and a threshold delta
    such that d(u,v) > delta exactly when u and v are in different parts.
    Any such partition must separate a globally farthest pair (u*, v*), and
    each point's side is then forced by comparing d(., u*) with d(., v*), so
    one candidate split decides the question in O(n^2).
    """
    n = D.n
    if n < 4:
        return None
    v = D.values
    i, j = np.unravel_index(int(np.argmax(v)), v.shape)
    a = v[:, i]
    b = v[:, j]
    near_i = (a - b) < -eps
    near_j = (b - a) < -eps
    if not (near_i | near_j).all():
        return None  # some point is equidistant from both seeds
    if near_i.sum() < 2 or near_j.sum() < 2:
        return None
    N = np.flatnonzero(near_i)
    F = np.flatnonzero(near_j)
    intra = max(v[np.ix_(N, N)].max(), v[np.ix_(F, F)].max())
    cross = v[np.ix_(N, F)].min()
    if cross - intra <= eps:
        return None
    return (
        frozenset(int(p) for p in N),
        frozenset(int(p) for p in F),
        float(intra),
    )
