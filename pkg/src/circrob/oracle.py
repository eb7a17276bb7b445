"""Brute-force ground truth for small instances.

Enumerates every circular order up to rotation and reflection and classifies
it straight from the definitions: quadruple sweeps for the (quasi-)conditions
and per-pair arc checks for the circular notion.  Degenerate chain quadruples
(with coincident points) hold trivially for the non-strict conditions, so only
pairwise-distinct quadruples are enumerated; the strict conditions are defined
on those only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Any, Iterator

from .core import CircularOrder, DissimilarityMatrix
from .verification import is_linear_robinson

__all__ = [
    "OracleClassification",
    "enumerate_circular_orders",
    "pre_circular_by_quadruples",
    "quasi_circular_by_quadruples",
    "circular_robinson_by_arcs",
    "oracle_classify",
]

MAX_ENUMERATION_N = 10
MAX_CLASSIFY_N = 8


def enumerate_circular_orders(n: int) -> Iterator[CircularOrder]:
    """All max(1, (n-1)!/2) canonical circular orders on n points.

    Fixes point 0 first and keeps one of the two directions, so each
    rotation/reflection class appears exactly once.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"n must be in 1..{MAX_ENUMERATION_N}, got {n}")
    if n <= 2:
        yield CircularOrder(tuple(range(n)))
        return
    for rest in permutations(range(1, n)):
        if rest[0] < rest[-1]:
            yield CircularOrder((0,) + rest)


def _chain_quadruples(n: int) -> list[tuple[int, int, int, int]]:
    # every 4-subset of positions contributes its four cyclic rotations
    quads = []
    for a, b, c, d in combinations(range(n), 4):
        quads.append((a, b, c, d))
        quads.append((b, c, d, a))
        quads.append((c, d, a, b))
        quads.append((d, a, b, c))
    return quads


def pre_circular_by_quadruples(
    D: DissimilarityMatrix, order: CircularOrder, strict: bool = False, eps: float = 0.0
) -> bool:
    """Every distinct chain quadruple x < y < z < t satisfies the one-side
    condition d(x,z) >= min(max(d(x,y), d(y,z)), max(d(x,t), d(t,z)))
    (strict: >).  O(n^4)."""
    v = D.values
    seq = order.seq
    for a, b, c, d in _chain_quadruples(len(seq)):
        x, y, z, t = seq[a], seq[b], seq[c], seq[d]
        bound = min(max(v[x, y], v[y, z]), max(v[x, t], v[t, z]))
        if strict:
            if not v[x, z] - bound > eps:
                return False
        elif not v[x, z] - bound >= -eps:
            return False
    return True


def quasi_circular_by_quadruples(
    D: DissimilarityMatrix, order: CircularOrder, strict: bool = False, eps: float = 0.0
) -> bool:
    """Every distinct chain quadruple x < y < z < t satisfies
    d(x,z) >= min(d(y,z), d(t,z)) (strict: >).  O(n^4)."""
    v = D.values
    seq = order.seq
    for a, b, c, d in _chain_quadruples(len(seq)):
        x, y, z, t = seq[a], seq[b], seq[c], seq[d]
        bound = min(v[y, z], v[t, z])
        if strict:
            if not v[x, z] - bound > eps:
                return False
        elif not v[x, z] - bound >= -eps:
            return False
    return True


def circular_robinson_by_arcs(
    D: DissimilarityMatrix, order: CircularOrder, strict: bool = False, eps: float = 0.0
) -> bool:
    """For every pair (a,b), at least one of the two arcs between a and b is
    (strictly) linear Robinson under the order's restriction."""
    seq = order.seq
    n = len(seq)
    for pa in range(n):
        for pb in range(pa + 1, n):
            one = seq[pa : pb + 1]
            other = seq[pb:] + seq[: pa + 1]
            if not (
                is_linear_robinson(D, one, strict, eps)
                or is_linear_robinson(D, other, strict, eps)
            ):
                return False
    return True


@dataclass(frozen=True)
class OracleClassification:
    """Exact compatible-order sets for each definition, by exhaustion."""

    pre_circular: tuple[CircularOrder, ...]
    strict_pre_circular: tuple[CircularOrder, ...]
    quasi_circular: tuple[CircularOrder, ...]
    strict_quasi_circular: tuple[CircularOrder, ...]
    circular_by_arcs: tuple[CircularOrder, ...]
    strict_circular_by_arcs: tuple[CircularOrder, ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            name: [list(o.seq) for o in getattr(self, name)]
            for name in (
                "pre_circular",
                "strict_pre_circular",
                "quasi_circular",
                "strict_quasi_circular",
                "circular_by_arcs",
                "strict_circular_by_arcs",
            )
        }


def oracle_classify(D: DissimilarityMatrix, eps: float = 0.0) -> OracleClassification:
    """Classify against all six definitions by sweeping every canonical order."""
    if D.n > MAX_CLASSIFY_N:
        raise ValueError(f"oracle classification is capped at n <= {MAX_CLASSIFY_N}")
    buckets: dict[str, list[CircularOrder]] = {
        "pre_circular": [],
        "strict_pre_circular": [],
        "quasi_circular": [],
        "strict_quasi_circular": [],
        "circular_by_arcs": [],
        "strict_circular_by_arcs": [],
    }
    for order in enumerate_circular_orders(D.n):
        if pre_circular_by_quadruples(D, order, False, eps):
            buckets["pre_circular"].append(order)
        if pre_circular_by_quadruples(D, order, True, eps):
            buckets["strict_pre_circular"].append(order)
        if quasi_circular_by_quadruples(D, order, False, eps):
            buckets["quasi_circular"].append(order)
        if quasi_circular_by_quadruples(D, order, True, eps):
            buckets["strict_quasi_circular"].append(order)
        if circular_robinson_by_arcs(D, order, False, eps):
            buckets["circular_by_arcs"].append(order)
        if circular_robinson_by_arcs(D, order, True, eps):
            buckets["strict_circular_by_arcs"].append(order)
    return OracleClassification(**{k: tuple(v) for k, v in buckets.items()})
