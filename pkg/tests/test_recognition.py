import warnings

import numpy as np
import pytest

from circrob import (
    DissimilarityMatrix,
    TieWarning,
    bipartition_criterion,
    canonicalize,
    circle_instance,
    compatible_orders,
    find_compatible_order,
    j_set,
    near_far_partition,
    oracle_classify,
    orders_agree,
)
from conftest import mixed_small_space, random_space


class TestJSet:
    def test_fixture_no_interior(self, fixture4):
        assert j_set(fixture4, 0, 1) == {0, 1}

    def test_circle_interior(self, circle5):
        assert j_set(circle5, 0, 2) == {0, 1, 2}

    def test_contains_endpoints(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            D = random_space(int(rng.integers(2, 7)), rng)
            x, y = rng.permutation(D.n)[:2]
            assert {int(x), int(y)} <= j_set(D, int(x), int(y))

    def test_same_point_rejected(self, fixture4):
        with pytest.raises(ValueError):
            j_set(fixture4, 1, 1)


class TestNearFarPartition:
    def test_fixture(self, fixture4):
        p = near_far_partition(fixture4, 0, 3)
        assert (p.N, p.F, p.meet) == ({0, 1}, {2, 3}, frozenset())

    def test_circle(self, circle5):
        p = near_far_partition(circle5, 0, 2)
        assert (p.N, p.F, p.meet) == ({0, 1, 4}, {1, 2, 3}, {1})

    def test_two_points(self):
        D = DissimilarityMatrix([[0, 5], [5, 0]])
        p = near_far_partition(D, 0, 1)
        assert (p.N, p.F, p.meet) == ({0}, {1}, frozenset())

    def test_covers_everything(self):
        rng = np.random.default_rng(9)
        for _ in range(50):
            D = random_space(int(rng.integers(2, 8)), rng)
            from circrob import farthest_set

            _, fx = farthest_set(D, 0)
            p = near_far_partition(D, 0, min(fx))
            assert p.N | p.F == set(range(D.n))
            assert p.meet == p.N & p.F
            assert 0 in p.N and p.x_prime in p.F

    def test_not_farthest_rejected(self, circle5):
        with pytest.raises(ValueError, match="farthest"):
            near_far_partition(circle5, 0, 1)


class TestOrdersAgree:
    def test_fixture_straight(self, fixture4):
        assert orders_agree(fixture4, (0, 1), (2, 3))

    def test_fixture_flipped(self, fixture4):
        # (0,1,3,2) is the strictly circular order, also fine
        assert orders_agree(fixture4, (0, 1), (3, 2))

    def test_singleton_side(self, fixture4):
        assert orders_agree(fixture4, (0,), (1, 2, 3))

    def test_overlap_rejected(self, fixture4):
        with pytest.raises(ValueError, match="overlap"):
            orders_agree(fixture4, (0, 1), (1, 2, 3))

    def test_non_cover_rejected(self, fixture4):
        with pytest.raises(ValueError, match="cover"):
            orders_agree(fixture4, (0, 1), (2,))

    def test_rejects_wrong_composition_of_circle(self):
        # natural halves of the 6-circle, second half reversed: the straight
        # composition is wrong and must be flagged
        C = circle_instance(6, "arc")
        assert orders_agree(C, (0, 1, 2), (3, 4, 5))
        assert not orders_agree(C, (0, 1, 2), (5, 4, 3))


class TestFindCompatibleOrder:
    def test_fixture(self, fixture4):
        assert find_compatible_order(fixture4).seq == (0, 1, 2, 3)

    def test_circle5(self, circle5):
        assert find_compatible_order(circle5).seq == (0, 1, 2, 3, 4)

    def test_singleton(self):
        D = DissimilarityMatrix([[0.0]])
        assert find_compatible_order(D).seq == (0,)

    def test_pair(self):
        D = DissimilarityMatrix([[0, 2], [2, 0]])
        assert find_compatible_order(D).seq == (0, 1)

    def test_odd_circle_with_farthest_pair_tie(self):
        # n = 7 arc circle: both farthest neighbors of 0 fall into the sorted
        # arc and tie at the eccentricity; must still recover the cycle
        C = circle_instance(7, "arc")
        with warnings.catch_warnings():
            warnings.simplefilter("error")  # must not even warn
            order = find_compatible_order(C)
        assert order == canonicalize(range(7))

    def test_total_on_non_strict_input(self, equilateral4):
        order = find_compatible_order(equilateral4)
        assert sorted(order.seq) == [0, 1, 2, 3]

    def test_tie_warning_on_flat_input(self):
        EQ5 = DissimilarityMatrix(np.ones((5, 5)) - np.eye(5))
        with pytest.warns(TieWarning):
            find_compatible_order(EQ5)


class TestCompatibleOrders:
    def test_fixture_strict_quasi(self, fixture4):
        s = compatible_orders(fixture4, "strict-quasi")
        assert [o.seq for o in s.orders] == [(0, 1, 2, 3), (0, 1, 3, 2)]
        assert s.bipartition == (frozenset({0, 1}), frozenset({2, 3}), 1.0)

    def test_fixture_strict_circular(self, fixture4):
        s = compatible_orders(fixture4, "strict-circular")
        assert [o.seq for o in s.orders] == [(0, 1, 3, 2)]
        assert s.bipartition is None

    def test_equilateral_empty(self, equilateral4):
        assert compatible_orders(equilateral4, "strict-quasi").orders == ()

    def test_circle_unique_strict_circular(self, circle5):
        s = compatible_orders(circle5, "strict-circular")
        assert [o.seq for o in s.orders] == [(0, 1, 2, 3, 4)]

    def test_unknown_strictness(self, fixture4):
        with pytest.raises(ValueError):
            compatible_orders(fixture4, "quasi")

    def test_json_schema(self, fixture4):
        d = compatible_orders(fixture4, "strict-quasi").to_json_dict()
        assert d["orders"] == [[0, 1, 2, 3], [0, 1, 3, 2]]
        assert d["bipartition"] == {"N": [0, 1], "F": [2, 3], "delta": 1.0}


class TestBipartitionCriterion:
    def test_fixture(self, fixture4):
        assert bipartition_criterion(fixture4) == (
            frozenset({0, 1}),
            frozenset({2, 3}),
            1.0,
        )

    def test_circle_absent(self, circle5):
        assert bipartition_criterion(circle5) is None

    def test_small_n_absent(self):
        D = DissimilarityMatrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
        assert bipartition_criterion(D) is None

    def test_found_partition_is_valid(self):
        rng = np.random.default_rng(11)
        found = 0
        for _ in range(300):
            D = mixed_small_space(rng, n_lo=4, n_hi=7)
            res = bipartition_criterion(D)
            if res is None:
                continue
            found += 1
            N, F, delta = res
            assert len(N) > 1 and len(F) > 1 and N | F == set(range(D.n)) and not N & F
            for u in range(D.n):
                for v in range(u + 1, D.n):
                    crossing = (u in N) != (v in N)
                    assert (D.values[u, v] > delta) == crossing
        assert found  # the pool does contain two-cluster-like instances


class TestAgainstOracle:
    def test_sets_and_membership(self):
        rng = np.random.default_rng(20240810)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", TieWarning)
            for _ in range(150):
                D = mixed_small_space(rng)
                oc = oracle_classify(D)
                got_sq = compatible_orders(D, "strict-quasi")
                assert list(got_sq.orders) == sorted(
                    oc.strict_quasi_circular, key=lambda o: o.seq
                )
                got_sc = compatible_orders(D, "strict-circular")
                assert list(got_sc.orders) == sorted(
                    oc.strict_circular_by_arcs, key=lambda o: o.seq
                )
                if oc.strict_quasi_circular:
                    assert find_compatible_order(D) in oc.strict_quasi_circular


class TestStructureOfReturnedOrders:
    def _compatible_pairs(self, count, seed):
        rng = np.random.default_rng(seed)
        out = []
        while len(out) < count:
            D = mixed_small_space(rng, n_lo=4, n_hi=7)
            s = compatible_orders(D, "strict-quasi")
            for order in s.orders:
                out.append((D, order))
        return out

    def test_distance_monotone_along_wings(self):
        # distances from x strictly increase from x to its farthest arc and
        # strictly decrease on the way back
        from circrob import farthest_set

        for D, order in self._compatible_pairs(40, seed=606):
            n = D.n
            pos = {p: i for i, p in enumerate(order.seq)}
            for x in range(n):
                _, fx = farthest_set(D, x)
                offsets = sorted((pos[y] - pos[x]) % n for y in fx)
                lo, hi = offsets[0], offsets[-1]
                ring = [D.values[x, order.seq[(pos[x] + k) % n]] for k in range(1, n)]
                for k in range(1, lo):
                    assert ring[k - 1] < ring[k]
                for k in range(hi, n - 1):
                    assert ring[k - 1] > ring[k]

    def test_j_sets_are_arcs_of_compatible_orders(self):
        for D, order in self._compatible_pairs(40, seed=707):
            n = D.n
            pos = {p: i for i, p in enumerate(order.seq)}
            for x in range(n):
                for y in range(n):
                    if x == y:
                        continue
                    others = [
                        D.values[x, z] >= D.values[x, y] and D.values[y, z] >= D.values[x, y]
                        for z in range(n)
                        if z not in (x, y)
                    ]
                    if not all(others):
                        continue  # d(x,y) must be minimal against every third point
                    members = j_set(D, x, y)
                    spans = sorted((pos[p] - pos[x]) % n for p in members)
                    gaps = [b - a for a, b in zip(spans, spans[1:])]
                    wrap = spans[0] + n - spans[-1]
                    assert sum(g > 1 for g in gaps + [wrap]) <= 1
