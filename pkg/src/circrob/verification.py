"""O(n^2) verification of a circular order against the four compatibility notions.

Quasi-circular compatibility is equivalent to the reordered matrix being
unimodal: each row, read circularly starting after the diagonal, first rises,
plateaus at the row maximum, then falls.  The strict variant demands strict
rises and falls and a plateau of at most two (necessarily adjacent) entries.

Circular compatibility additionally forbids, for unimodal-compatible orders,
any pair x, y with farthest neighbors x', y' arranged as x < x' < y < y' or
x < y' < y < x' around the cycle (the farthest arcs must interleave).  In the
non-strict mode a witness only counts when x, x' avoid F_y and y, y' avoid
F_x.  The farthest set of every point is an arc of the order whenever the
matrix is unimodal, so the witness search works on arc extremities and costs
O(1) per pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from .core import CircularOrder, DissimilarityMatrix

__all__ = [
    "UnimodalityReport",
    "CrossingWitness",
    "ClassificationReport",
    "is_unimodal",
    "is_strictly_unimodal",
    "crossing_violation",
    "is_linear_robinson",
    "verify",
]

_BLOCK = 512


@dataclass(frozen=True)
class UnimodalityReport:
    """Outcome of the circular row scan.

    ``violating_positions`` are 0-based offsets into the circular row read
    (offset 0 is the entry just after the diagonal).  ``max_run_lengths[p]``
    counts the entries of row p attaining the row maximum.
    """

    ok: bool
    violating_row: Optional[int]
    violating_positions: Optional[tuple[int, int]]
    max_run_lengths: np.ndarray

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "violating_row": self.violating_row,
            "violating_positions": list(self.violating_positions)
            if self.violating_positions
            else None,
            "max_run_lengths": [int(c) for c in self.max_run_lengths],
        }


@dataclass(frozen=True)
class CrossingWitness:
    """Pair (x, y) with farthest neighbors laid out in a forbidden chain."""

    x: int
    y: int
    x_prime: int
    y_prime: int
    pattern: str  # "x<x'<y<y'" or "x<y'<y<x'"

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "x": self.x,
            "y": self.y,
            "x_prime": self.x_prime,
            "y_prime": self.y_prime,
            "pattern": self.pattern,
        }


@dataclass(frozen=True)
class ClassificationReport:
    quasi: bool
    strict_quasi: bool
    circular: bool
    strict_circular: bool
    witnesses: dict[str, Any] = field(default_factory=dict)

    def to_json_dict(self) -> dict[str, Any]:
        witness = None
        if self.witnesses:
            witness = {
                key: val.to_json_dict() if hasattr(val, "to_json_dict") else val
                for key, val in self.witnesses.items()
            }
        return {
            "quasi": self.quasi,
            "strict_quasi": self.strict_quasi,
            "circular": self.circular,
            "strict_circular": self.strict_circular,
            "witness": witness,
        }


@dataclass
class _RowScan:
    """Per-position scan results; s_off/e_off are the 1-based offsets of the
    first/last row-maximum entry in the circular read (the farthest arc)."""

    n: int
    weak_ok: np.ndarray
    strict_ok: np.ndarray
    max_count: np.ndarray
    s_off: np.ndarray
    e_off: np.ndarray
    weak_violation: Optional[tuple[int, tuple[int, int]]]
    strict_violation: Optional[tuple[int, tuple[int, int]]]


def _scan_block(
    values: np.ndarray, order_arr: np.ndarray, eps: float, start: int, stop: int
) -> dict:
    """Scan rows at positions start..stop-1; blocks are independent, so they
    may run concurrently and are merged in position order afterwards."""
    n = order_arr.size
    L = n - 1
    offs = np.arange(1, n)
    didx = np.arange(max(L - 1, 0))
    P = np.arange(start, stop)
    cols = order_arr[(P[:, None] + offs[None, :]) % n]
    v = values[order_arr[P][:, None], cols]  # (B, L) circular row reads
    m = v.max(axis=1)
    plateau = v >= (m[:, None] - eps)
    cnt = plateau.sum(axis=1)
    pf = plateau.argmax(axis=1)
    pl = (L - 1) - plateau[:, ::-1].argmax(axis=1)

    weak_viol = None
    strict_viol = None
    if L >= 2:
        diffs = v[:, 1:] - v[:, :-1]
        fall = diffs < -eps
        rise = diffs > eps
        first_fall = np.where(fall.any(axis=1), fall.argmax(axis=1), L)
        last_rise = np.where(
            rise.any(axis=1), (L - 2) - rise[:, ::-1].argmax(axis=1), -1
        )
        w_ok = ~(first_fall < last_rise)
        bad_rise = ((diffs <= eps) & (didx[None, :] < pf[:, None])).any(axis=1)
        bad_fall = ((diffs >= -eps) & (didx[None, :] >= pl[:, None])).any(axis=1)
        s_ok = (cnt <= 2) & ((pl - pf) == (cnt - 1)) & ~bad_rise & ~bad_fall
        if not w_ok.all():
            b = int(np.flatnonzero(~w_ok)[0])
            point = int(order_arr[start + b])
            weak_viol = (point, (int(first_fall[b]) + 1, int(last_rise[b]) + 1))
        if not s_ok.all():
            b = int(np.flatnonzero(~s_ok)[0])
            point = int(order_arr[start + b])
            if cnt[b] > 2 or (pl[b] - pf[b]) != (cnt[b] - 1):
                pos = (int(pf[b]), int(pl[b]))
            else:
                offending = np.flatnonzero(
                    ((diffs[b] <= eps) & (didx < pf[b]))
                    | ((diffs[b] >= -eps) & (didx >= pl[b]))
                )
                i = int(offending[0])
                pos = (i, i + 1)
            strict_viol = (point, pos)
    else:
        w_ok = np.ones(stop - start, dtype=bool)
        s_ok = w_ok.copy()

    return {
        "start": start,
        "stop": stop,
        "w_ok": w_ok,
        "s_ok": s_ok,
        "cnt": cnt,
        "pf": pf,
        "pl": pl,
        "weak_viol": weak_viol,
        "strict_viol": strict_viol,
    }


def _scan_rows(
    values: np.ndarray, order_arr: np.ndarray, eps: float, workers: int = 1
) -> _RowScan:
    n = order_arr.size
    weak_ok = np.ones(n, dtype=bool)
    strict_ok = np.ones(n, dtype=bool)
    max_count = np.zeros(n, dtype=np.intp)
    s_off = np.ones(n, dtype=np.intp)
    e_off = np.ones(n, dtype=np.intp)
    if n == 1:
        return _RowScan(n, weak_ok, strict_ok, max_count, s_off, e_off, None, None)

    spans = [(s, min(s + _BLOCK, n)) for s in range(0, n, _BLOCK)]
    if workers > 1 and len(spans) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(lambda sp: _scan_block(values, order_arr, eps, *sp), spans)
            )
    else:
        results = [_scan_block(values, order_arr, eps, *sp) for sp in spans]

    weak_violation = None
    strict_violation = None
    for res in results:  # blocks in position order: deterministic merge
        sl = slice(res["start"], res["stop"])
        weak_ok[sl] = res["w_ok"]
        strict_ok[sl] = res["s_ok"]
        max_count[sl] = res["cnt"]
        s_off[sl] = 1 + res["pf"]
        e_off[sl] = 1 + res["pl"]
        if weak_violation is None and res["weak_viol"] is not None:
            weak_violation = res["weak_viol"]
        if strict_violation is None and res["strict_viol"] is not None:
            strict_violation = res["strict_viol"]

    return _RowScan(
        n, weak_ok, strict_ok, max_count, s_off, e_off, weak_violation, strict_violation
    )


def _scan(
    D: DissimilarityMatrix, order: CircularOrder, eps: float, workers: int = 1
) -> tuple[np.ndarray, _RowScan]:
    order_arr = np.asarray(order.seq, dtype=np.intp)
    if order_arr.size != D.n:
        raise ValueError(f"order has {order_arr.size} points, matrix has {D.n}")
    return order_arr, _scan_rows(D.values, order_arr, eps, workers)


def _report_from_scan(order_arr: np.ndarray, scan: _RowScan, strict: bool) -> UnimodalityReport:
    counts = np.zeros(scan.n, dtype=np.intp)
    counts[order_arr] = scan.max_count
    viol = scan.strict_violation if strict else scan.weak_violation
    ok = bool(scan.strict_ok.all() if strict else scan.weak_ok.all())
    return UnimodalityReport(
        ok=ok,
        violating_row=None if ok else viol[0],
        violating_positions=None if ok else viol[1],
        max_run_lengths=counts,
    )


def is_unimodal(D: DissimilarityMatrix, order: CircularOrder, eps: float = 0.0) -> UnimodalityReport:
    """Each circular row read rises, plateaus at its maximum, then falls.

    Equivalent to: the order is compatible for quasi-circular Robinson.
    """
    order_arr, scan = _scan(D, order, eps)
    return _report_from_scan(order_arr, scan, strict=False)


def is_strictly_unimodal(
    D: DissimilarityMatrix, order: CircularOrder, eps: float = 0.0
) -> UnimodalityReport:
    """Strict rises and falls, plateau of at most two adjacent maxima.

    Equivalent to: the order is compatible for strict quasi-circular Robinson.
    """
    order_arr, scan = _scan(D, order, eps)
    return _report_from_scan(order_arr, scan, strict=True)


def _in_arc(coord, lo, hi):
    return (lo <= coord) & (coord <= hi)


def _crossing_from_scan(
    order_arr: np.ndarray, scan: _RowScan, strict: bool
) -> Optional[CrossingWitness]:
    n = scan.n
    if n < 4:
        return None
    # Cut coordinates relative to each point: the farthest arc of the point at
    # position p spans offsets S[p]..E[p] in 1..n-1 after cutting the cycle at p.
    S = scan.s_off
    E = scan.e_off
    qp = np.arange(1, n)
    for p in range(n):
        qpos = (p + qp) % n
        Sq = S[qpos]
        Eq = E[qpos]
        if strict:
            pat1 = (S[p] < qp) & (Sq < n - qp)
            pat2 = (Eq > n - qp) & (E[p] > qp)
        else:
            y_in_Fx = _in_arc(qp, S[p], E[p])
            x_in_Fy = _in_arc(n - qp, Sq, Eq)
            pair_ok = ~y_in_Fx & ~x_in_Fy
            # Pattern 1 needs x' in F_x strictly between x and y with x' not in
            # F_y, and y' in F_y strictly between y and x with y' not in F_x.
            # The candidate extremities of each intersection suffice: if both
            # lie in the other farthest arc, the whole intersection does.
            c1a = np.full(n - 1, S[p])
            c1b = np.minimum(E[p], qp - 1)
            x1ok = (S[p] < qp) & (
                ~_in_arc((c1a - qp) % n, Sq, Eq) | ~_in_arc((c1b - qp) % n, Sq, Eq)
            )
            d1a = Sq
            d1b = np.minimum(Eq, n - qp - 1)
            y1ok = (Sq < n - qp) & (
                ~_in_arc((d1a + qp) % n, S[p], E[p]) | ~_in_arc((d1b + qp) % n, S[p], E[p])
            )
            pat1 = pair_ok & x1ok & y1ok
            c2a = np.full(n - 1, E[p])
            c2b = np.maximum(S[p], qp + 1)
            x2ok = (E[p] > qp) & (
                ~_in_arc((c2a - qp) % n, Sq, Eq) | ~_in_arc((c2b - qp) % n, Sq, Eq)
            )
            d2a = Eq
            d2b = np.maximum(Sq, n - qp + 1)
            y2ok = (Eq > n - qp) & (
                ~_in_arc((d2a + qp) % n, S[p], E[p]) | ~_in_arc((d2b + qp) % n, S[p], E[p])
            )
            pat2 = pair_ok & x2ok & y2ok

        hits = pat1 | pat2
        if not hits.any():
            continue
        j = int(np.flatnonzero(hits)[0])
        q = int(qpos[j])
        qv = j + 1
        x = int(order_arr[p])
        y = int(order_arr[q])
        if pat1[j]:
            if strict:
                xc, yc = int(S[p]), int(S[q])
            else:
                xc = int(S[p]) if not _in_arc((S[p] - qv) % n, S[q], E[q]) else int(
                    min(E[p], qv - 1)
                )
                yc = int(S[q]) if not _in_arc((S[q] + qv) % n, S[p], E[p]) else int(
                    min(E[q], n - qv - 1)
                )
            return CrossingWitness(
                x=x,
                y=y,
                x_prime=int(order_arr[(p + xc) % n]),
                y_prime=int(order_arr[(q + yc) % n]),
                pattern="x<x'<y<y'",
            )
        if strict:
            xc, yc = int(E[p]), int(E[q])
        else:
            xc = int(E[p]) if not _in_arc((E[p] - qv) % n, S[q], E[q]) else int(
                max(S[p], qv + 1)
            )
            yc = int(E[q]) if not _in_arc((E[q] + qv) % n, S[p], E[p]) else int(
                max(S[q], n - qv + 1)
            )
        return CrossingWitness(
            x=x,
            y=y,
            x_prime=int(order_arr[(p + xc) % n]),
            y_prime=int(order_arr[(q + yc) % n]),
            pattern="x<y'<y<x'",
        )
    return None


def crossing_violation(
    D: DissimilarityMatrix, order: CircularOrder, strict: bool, eps: float = 0.0
) -> Optional[CrossingWitness]:
    """Search for farthest-neighbor chains that rule out circular compatibility.

    Requires the order to be (strictly) unimodal-compatible, so that farthest
    sets are arcs.  Returns None iff the order is compatible for (strict)
    circular Robinson, given that precondition.
    """
    order_arr, scan = _scan(D, order, eps)
    ok = scan.strict_ok.all() if strict else scan.weak_ok.all()
    if not ok:
        mode = "strictly unimodal" if strict else "unimodal"
        raise ValueError(f"crossing test requires a {mode} compatible order")
    return _crossing_from_scan(order_arr, scan, strict)


def is_linear_robinson(
    D: DissimilarityMatrix,
    linear_seq: Sequence[int],
    strict: bool = False,
    eps: float = 0.0,
) -> bool:
    """Whether the sequence is a compatible linear order of its points.

    Checks the 3-point condition d(x,z) >= max(d(x,y), d(y,z)) for x < y < z
    along the sequence (strict: >) via row monotonicity, O(m^2).
    """
    seq = np.asarray(linear_seq, dtype=np.intp)
    if len(set(int(s) for s in seq)) != seq.size:
        raise ValueError("sequence has repeated indices")
    m = seq.size
    if m <= 2:
        return True
    M = D.values[np.ix_(seq, seq)]
    diffs = M[:, 1:] - M[:, :-1]
    jj = np.arange(m - 1)[None, :]
    rr = np.arange(m)[:, None]
    right = jj >= rr  # moving right, away from the diagonal
    left = jj < rr  # moving right, toward the diagonal
    if strict:
        return bool((diffs[right] > eps).all() and (diffs[left] < -eps).all())
    return bool((diffs[right] >= -eps).all() and (diffs[left] <= eps).all())


def verify(
    D: DissimilarityMatrix, order: CircularOrder, eps: float = 0.0, workers: int = 1
) -> ClassificationReport:
    """Classify the order against all four compatibility notions at once.

    `workers` > 1 runs the row scan blocks in a thread pool; the result is
    identical to the sequential evaluation.
    """
    order_arr, scan = _scan(D, order, eps, workers)
    quasi = bool(scan.weak_ok.all())
    strict_quasi = bool(scan.strict_ok.all())
    witnesses: dict[str, Any] = {}

    if not quasi:
        point, pos = scan.weak_violation
        witnesses["quasi"] = {"row": point, "positions": list(pos)}
    if not strict_quasi:
        point, pos = scan.strict_violation
        witnesses["strict_quasi"] = {"row": point, "positions": list(pos)}

    if quasi:
        w = _crossing_from_scan(order_arr, scan, strict=False)
        circular = w is None
        if w is not None:
            witnesses["circular"] = w
    else:
        circular = False
        witnesses["circular"] = witnesses["quasi"]

    if strict_quasi:
        w = _crossing_from_scan(order_arr, scan, strict=True)
        strict_circular = w is None
        if w is not None:
            witnesses["strict_circular"] = w
    else:
        strict_circular = False
        witnesses["strict_circular"] = witnesses["strict_quasi"]

    return ClassificationReport(
        quasi=quasi,
        strict_quasi=strict_quasi,
        circular=circular,
        strict_circular=strict_circular,
        witnesses=witnesses,
    )
