"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines and the
measured numbers.  Criteria 5 and 6 build matrices up to n = 10000 and take
a few minutes in total.
"""

import statistics
import time
import warnings

import numpy as np
import pytest

from circrob import (
    TieWarning,
    bipartition_criterion,
    canonicalize,
    chain_holds,
    circle_instance,
    circular_robinson_by_arcs,
    compatible_orders,
    counterexample_fixture,
    cr,
    farthest_set,
    find_compatible_order,
    is_strictly_unimodal,
    is_unimodal,
    oracle_classify,
    perturb,
    pre_circular_by_quadruples,
    qcr,
    scr,
    sqcr,
    two_cluster_instance,
    verify,
)
from circrob.predicates import Quadruple
from conftest import mixed_small_space, random_space


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num} failed: {detail}"


@pytest.fixture(scope="module")
def chord_instances():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TieWarning)
        return {n: circle_instance(n, "chord") for n in (10, 100, 1000, 4000, 8000, 10000)}


def test_criterion_1_fixture_flags_and_runtime():
    D = counterexample_fixture()
    natural = canonicalize((0, 1, 2, 3))
    swapped = canonicalize((0, 1, 3, 2))
    rep_nat = verify(D, natural)
    rep_swp = verify(D, swapped)
    flags_ok = (
        rep_nat.strict_quasi
        and not rep_nat.strict_circular
        and rep_swp.strict_circular
    )
    best = min(
        _timed(lambda: (verify(D, natural), verify(D, swapped))) for _ in range(50)
    )
    _report(
        1,
        flags_ok and best < 1e-3,
        f"fixture flags ok={flags_ok}, both verifies in {best * 1e6:.0f} us (< 1 ms)",
    )


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def test_criterion_2_order_count_theorem():
    rng = np.random.default_rng(20250810)
    checked = 0
    violations = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TieWarning)
        while checked < 1050:
            pick = checked % 3
            n = int(rng.integers(4, 101))
            if pick == 0:
                metric = "arc" if rng.integers(2) else "chord"
                if rng.integers(3) == 0:
                    angles = np.sort(rng.uniform(0, 2 * np.pi, n))
                    if not (np.diff(angles) > 0).all():
                        continue
                    D = circle_instance(n, "chord", angles=angles)
                else:
                    D = circle_instance(n, metric)
            elif pick == 1:
                k = int(rng.integers(2, n - 1))
                D = two_cluster_instance(k, n - k, seed=int(rng.integers(1 << 30)))
            else:
                D = perturb(circle_instance(n, "chord"), 1e-4, seed=int(rng.integers(1 << 30)))
                if not verify(D, canonicalize(range(n))).strict_quasi:
                    continue  # only perturbed-accepted instances count
            checked += 1
            s = compatible_orders(D, "strict-quasi")
            two = len(s.orders) == 2
            bip = bipartition_criterion(D) is not None
            if len(s.orders) not in (1, 2) or two != bip:
                violations += 1
    _report(2, violations == 0, f"{checked} strict instances, {violations} violations")


def test_criterion_3_oracle_equivalence():
    rng = np.random.default_rng(30303)
    mismatches = 0
    total = 520
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TieWarning)
        for _ in range(total):
            D = mixed_small_space(rng, n_lo=3, n_hi=7)
            oracle_set = set(oracle_classify(D).strict_quasi_circular)
            got = set(compatible_orders(D, "strict-quasi").orders)
            if got != oracle_set:
                mismatches += 1
                continue
            if oracle_set and find_compatible_order(D) not in oracle_set:
                mismatches += 1
    _report(3, mismatches == 0, f"{total} matrices, {mismatches} mismatches")


def test_criterion_4_equivalence_theorem():
    rng = np.random.default_rng(40404)
    mismatches = 0
    total = 520
    for _ in range(total):
        D = mixed_small_space(rng, n_lo=3, n_hi=7)
        order = canonicalize(rng.permutation(D.n))
        for strict in (False, True):
            if pre_circular_by_quadruples(D, order, strict) != circular_robinson_by_arcs(
                D, order, strict
            ):
                mismatches += 1
    _report(4, mismatches == 0, f"{total} (matrix, order) pairs, {mismatches} mismatches")


def test_criterion_5_generator_roundtrip(chord_instances):
    failures = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TieWarning)
        for n in (10, 100, 1000, 10000):
            D = chord_instances[n]
            order = find_compatible_order(D)
            if order != canonicalize(range(n)):
                failures.append(f"n={n}: wrong order")
                continue
            if not verify(D, order).strict_circular:
                failures.append(f"n={n}: not certified strictly circular")
    _report(5, not failures, f"n in (10, 100, 1000, 10000) roundtrip; {failures or 'all exact'}")


def test_criterion_6_performance(chord_instances):
    def median_time(fn, reps=5):
        return statistics.median(_timed(fn) for _ in range(reps))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TieWarning)
        D10k = chord_instances[10000]
        construct_10k = median_time(lambda: find_compatible_order(D10k))
        t_full = _timed(lambda: verify(D10k, find_compatible_order(D10k)))

        D4, D8 = chord_instances[4000], chord_instances[8000]
        o4 = find_compatible_order(D4)
        o8 = find_compatible_order(D8)
        ver_ratio = median_time(lambda: verify(D8, o8)) / median_time(lambda: verify(D4, o4))
        con_ratio = median_time(lambda: find_compatible_order(D8), reps=9) / median_time(
            lambda: find_compatible_order(D4), reps=9
        )

    ok = (
        construct_10k < 1.0
        and t_full < 30.0
        and 3.2 <= ver_ratio <= 4.8
        and 1.8 <= con_ratio <= 2.8
    )
    _report(
        6,
        ok,
        f"construct(10000)={construct_10k * 1000:.1f} ms (< 1 s), "
        f"recognize(10000)={t_full:.1f} s (< 30 s), "
        f"verify x2 ratio={ver_ratio:.2f} (in [3.2, 4.8]), "
        f"construct x2 ratio={con_ratio:.2f} (in [1.8, 2.8])",
    )


def test_criterion_7_invariant_suites():
    cases = 0
    rng = np.random.default_rng(70707)

    # implication chain on random distinct quadruples
    for _ in range(4200):
        D = random_space(int(rng.integers(4, 8)), rng, ints=bool(rng.integers(2)))
        q = Quadruple(*(int(v) for v in rng.permutation(D.n)[:4]))
        if scr(D, q):
            assert cr(D, q) and sqcr(D, q)
        if sqcr(D, q):
            assert qcr(D, q)
        if cr(D, q):
            assert qcr(D, q)
        cases += 1

    # balls and their complements are arcs of unimodal-compatible orders
    pairs = 0
    while pairs < 30:
        D = mixed_small_space(rng, n_lo=4, n_hi=7)
        order = canonicalize(rng.permutation(D.n))
        if not is_unimodal(D, order).ok:
            continue
        pairs += 1
        pos = {p: i for i, p in enumerate(order.seq)}
        n = D.n
        for x in range(n):
            for r in np.unique(D.values):
                ball = [y for y in range(n) if D.values[x, y] <= r]
                if 0 < len(ball) < n:
                    spans = sorted((pos[y] - pos[x]) % n for y in ball)
                    gaps = [b - a for a, b in zip(spans, spans[1:])]
                    wrap = spans[0] + n - spans[-1]
                    assert sum(g > 1 for g in gaps + [wrap]) <= 1
                cases += 1

    # spheres of strictly compatible orders have at most two points
    pairs = 0
    while pairs < 60:
        D = mixed_small_space(rng, n_lo=4, n_hi=7)
        order = canonicalize(rng.permutation(D.n))
        if not is_strictly_unimodal(D, order).ok:
            continue
        pairs += 1
        for x in range(D.n):
            row = [D.values[x, y] for y in range(D.n) if y != x]
            assert all(row.count(v) <= 2 for v in set(row))
            cases += 1

    # distances from x are strictly monotone along both wings of every
    # returned compatible order
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TieWarning)
        orders_seen = 0
        while orders_seen < 60:
            D = mixed_small_space(rng, n_lo=4, n_hi=7)
            for order in compatible_orders(D, "strict-quasi").orders:
                orders_seen += 1
                n = D.n
                pos = {p: i for i, p in enumerate(order.seq)}
                for x in range(n):
                    _, fx = farthest_set(D, x)
                    offs = sorted((pos[y] - pos[x]) % n for y in fx)
                    ring = [D.values[x, order.seq[(pos[x] + k) % n]] for k in range(1, n)]
                    for k in range(1, offs[0]):
                        assert ring[k - 1] < ring[k]
                    for k in range(offs[-1], n - 1):
                        assert ring[k - 1] > ring[k]
                    cases += 1

    # canonical form: idempotent, rotation- and reversal-invariant
    for _ in range(3800):
        n = int(rng.integers(1, 11))
        perm = [int(v) for v in rng.permutation(n)]
        base = canonicalize(perm)
        assert canonicalize(base.seq) == base
        shift = int(rng.integers(n))
        rotated = perm[shift:] + perm[:shift]
        assert canonicalize(rotated) == base
        assert canonicalize(perm[::-1]) == base
        cases += 1

    # verify flags are reversal-invariant
    for _ in range(1000):
        D = mixed_small_space(rng, n_lo=3, n_hi=7)
        order = canonicalize(rng.permutation(D.n))
        a = verify(D, order)
        b = verify(D, order.reverse())
        assert (a.quasi, a.strict_quasi, a.circular, a.strict_circular) == (
            b.quasi,
            b.strict_quasi,
            b.circular,
            b.strict_circular,
        )
        cases += 1

    # chains of distinct points survive rotation (circular-order axiom)
    for _ in range(500):
        n = int(rng.integers(3, 9))
        order = canonicalize(rng.permutation(n))
        m = int(rng.integers(3, min(n, 5) + 1))
        pts = [int(v) for v in rng.permutation(n)[:m]]
        assert chain_holds(order, pts) == chain_holds(order, pts[1:] + pts[:1])
        cases += 1

    _report(7, cases >= 10_000, f"{cases} randomized property cases, all invariants held")
