import pytest

from reinhardt import (
    build_table,
    classify_dimension,
    dimension_value,
    make_witness,
    n_squared_families,
    realizations,
)
from reinhardt.partitions import iter_partition_tuples


def _omega_values(n):
    out = set()
    for parts in iter_partition_tuples(n):
        base = sum(p * p for p in parts)
        sums = 1
        for v in parts:
            sums |= sums << v
        s = 0
        while sums:
            if sums & 1:
                out.add(base + 2 * s)
            sums >>= 1
            s += 1
    return out


class TestLadderGoldens:
    def test_ball(self, table64):
        c = classify_dimension(table64, 5, 35)
        assert c.status == "ball"
        assert c.families[0].tag == "Ball"
        assert any(r.marked.partition.parts == (5,) and r.mark_count == 1 for r in c.realizations)

    def test_ball_times_disc(self, table64):
        c = classify_dimension(table64, 5, 27)
        assert c.status == "ball_times_disc"
        assert c.families[0].tag == "BallTimesDisc"

    def test_n_squared_families_n4(self, table64):
        c = classify_dimension(table64, 4, 16)
        assert c.status == "n_squared"
        assert "ProductB2B2" in {f.tag for f in c.families}

    def test_n_squared_families_n3(self, table64):
        c = classify_dimension(table64, 3, 9)
        assert c.status == "n_squared"
        assert "Polydisc3" in {f.tag for f in c.families}

    def test_noncompact_good(self, table64):
        c = classify_dimension(table64, 4, 12)
        assert c.status == "noncompact_good"
        assert c.realizations

    def test_general_only(self, table64):
        c = classify_dimension(table64, 4, 14)
        assert c.status == "general_only"
        # 14 needs every part of (2,1,1) marked
        assert [r.mark_count for r in c.realizations] == [3]

    def test_unrealizable_parity(self, table64):
        c = classify_dimension(table64, 4, 15)
        assert c.status == "unrealizable"
        assert "parity" in c.notes

    def test_compact_bad(self, table64):
        assert classify_dimension(table64, 4, 8).status == "compact_bad"
        assert classify_dimension(table64, 2, 2).status == "compact_bad"

    def test_gap_and_range_notes(self, table64):
        assert classify_dimension(table64, 5, 29).status == "unrealizable"
        assert classify_dimension(table64, 5, 3).status == "unrealizable"
        assert classify_dimension(table64, 5, 37).status == "unrealizable"

    def test_input_validation(self, table64):
        with pytest.raises(ValueError):
            classify_dimension(table64, 1, 3)
        with pytest.raises(ValueError):
            classify_dimension(table64, 64, 64)  # needs the successor set


class TestFamilies:
    def test_counts(self):
        assert len(n_squared_families(3)) == 5
        assert len(n_squared_families(4)) == 5
        assert len(n_squared_families(7)) == 4
        assert {f.tag for f in n_squared_families(7)} == {
            "SphericalShell",
            "Egg",
            "BallFiberedShell",
            "ExpShell",
        }

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            n_squared_families(1)

    def test_parameter_constraints_recorded(self):
        by_tag = {f.tag: f for f in n_squared_families(5)}
        assert any("≠ 0, 2" in p for p in by_tag["Egg"].parameters)
        assert any("R = ∞" in p for p in by_tag["ExpShell"].parameters)


class TestRealizations:
    def test_all_mode_example(self):
        got = [(r.marked.partition.parts, r.mark_count) for r in realizations(4, 16)]
        assert got == [((4,), 0), ((3, 1), 1), ((2, 2), 2)]
        marks = realizations(4, 16)[1].marked.marks
        assert marks == ((3, 1),)

    def test_includes_near_ball_block(self):
        assert any(
            r.marked.partition.parts == (4, 1) and r.marked.marks == ((4, 1),)
            for r in realizations(5, 25)
        )

    def test_smooth_bounded_example_order(self):
        got = [(r.marked.partition.parts, r.marked.marks) for r in realizations(4, 12, "smooth_bounded")]
        assert got == [((2, 2), ((2, 1),)), ((3, 1), ((1, 1),))]

    def test_smooth_bounded_filters(self):
        # 14 is reachable, but only with three marks
        assert realizations(4, 14, "smooth_bounded") == []
        assert [r.mark_count for r in realizations(4, 14)] == [3]
        # above n^2-2 the smooth-bounded list is empty by definition
        assert realizations(4, 16, "smooth_bounded") == []

    def test_values_recompute(self):
        for dim in (10, 12, 14, 16, 24):
            for r in realizations(4, dim):
                assert dimension_value(r.marked) == dim

    def test_mode_validation(self):
        with pytest.raises(ValueError):
            realizations(4, 10, "bogus")
        with pytest.raises(ValueError, match="80"):
            realizations(81, 100)


class TestWitness:
    def test_one_marked_block(self):
        r = realizations(4, 12, "smooth_bounded")[0]
        w = make_witness(r)
        assert w.inequality == "|z¹|²+|z²|⁴<1"
        assert w.claimed_dimension == 12
        assert w.construction == "marked_egg"
        assert w.blocks == ((2, 1), (2, 2))

    def test_unmarked_egg(self):
        r = realizations(4, 10, "smooth_bounded")[0]
        w = make_witness(r)
        assert w.inequality == "|z¹|⁴+|z²|⁶<1"
        assert w.claimed_dimension == 10
        assert w.construction == "egg"

    def test_all_ones_egg(self):
        r = [x for x in realizations(4, 4) if x.mark_count == 0][0]
        w = make_witness(r)
        assert w.inequality == "|z¹|⁴+|z²|⁶+|z³|⁸+|z⁴|¹⁰<1"
        assert w.claimed_dimension == 4

    def test_refusals(self):
        r14 = realizations(4, 14)[0]
        with pytest.raises(ValueError, match="two or more"):
            make_witness(r14)
        single = [x for x in realizations(4, 16) if x.length == 1][0]
        with pytest.raises(ValueError, match="two blocks"):
            make_witness(single)

    def test_label_present(self):
        w = make_witness(realizations(4, 12, "smooth_bounded")[0])
        assert "not verified" in w.label


class TestExhaustiveness:
    @pytest.mark.parametrize("n", range(2, 31))
    def test_unrealizable_iff_no_realization(self, table64, n):
        achievable = _omega_values(n)
        for dim in range(n - 2, n * n + 2 * n + 3):
            c = classify_dimension(table64, n, dim)
            assert (c.status == "unrealizable") == (dim not in achievable), (n, dim)
            assert bool(c.realizations) == (dim in achievable), (n, dim)

    @pytest.mark.parametrize("n", range(31, 41))
    def test_status_sweep_large_n(self, table64, n):
        # statuses against the independent oracle for every dim; the full
        # realization lists (millions of records here) are spot-checked
        # around the structural boundaries instead
        achievable = _omega_values(n)
        for dim in range(n - 2, n * n + 2 * n + 3):
            c = classify_dimension(table64, n, dim, include_realizations=False)
            assert (c.status == "unrealizable") == (dim not in achievable), (n, dim)
        probes = list(range(n - 2, n + 20)) + list(range(n * n - 40, n * n + 2 * n + 3))
        probes += list(range(n + 20, n * n - 40, 97))
        for dim in probes:
            assert bool(realizations(n, dim)) == (dim in achievable), (n, dim)

    @pytest.mark.parametrize("n", range(2, 41))
    def test_trichotomy_above_gap(self, n):
        high = {v for v in _omega_values(n) if v > n * n - 2}
        assert high == {n * n, n * n + 2, n * n + 2 * n}

    @pytest.mark.parametrize("n", range(1, 27))
    def test_mark_solver_equals_subset_sum_bitsets(self, n):
        # the mark solver behind realizations() against an independent
        # bitset subset-sum route, every partition, every target
        from reinhardt.classify import _mark_solutions

        for parts in iter_partition_tuples(n):
            vals = tuple(sorted(set(parts), reverse=True))
            mults = tuple(parts.count(v) for v in vals)
            sums = 1
            for v in parts:
                sums |= sums << v
            for target in range(n + 1):
                sols = _mark_solutions(vals, mults, target)
                assert bool(sols) == bool((sums >> target) & 1), (parts, target)
                for counts in sols:
                    assert sum(v * c for v, c in zip(vals, counts)) == target

    @pytest.mark.parametrize("n", range(2, 26))
    def test_status_partition_below_gap(self, table64, n):
        # compact and noncompact never overlap and exhaust the smooth-
        # bounded values; general_only values admit no mark count <= 1
        for dim in range(n, n * n - 1, 2):
            c = classify_dimension(table64, n, dim)
            min_marks = min((r.mark_count for r in c.realizations), default=None)
            if c.status == "compact_bad":
                assert min_marks == 0
            elif c.status == "noncompact_good":
                assert min_marks == 1
            elif c.status == "general_only":
                assert min_marks is not None and min_marks >= 2
            else:
                assert c.status == "unrealizable" and min_marks is None


class TestLargeN:
    def test_realizations_skipped_above_oracle_scale(self):
        t = build_table(101)
        c = classify_dimension(t, 100, 100 * 100 - 2 * 50)
        assert c.realizations == ()
        assert "skipped" in c.notes
