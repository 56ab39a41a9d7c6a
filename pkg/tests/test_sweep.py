import pytest
from hypothesis import given, settings, strategies as st

from memcost import engine, sweep
from memcost.errors import GridCapError, ValidationError

from conftest import make_scenario


def _at(points, x):
    return next(p for p in points if abs(p.x - x) < 1e-12)


class TestAxis:

    def test_default_window_has_21_points(self):
        xs = sweep.SweepSpec(sweep.Axis.LAT_INCR, 0, 1, 0.05).values()
        assert len(xs) == 21
        assert xs[0] == 0 and xs[-1] == 1.0
        assert xs[8] == pytest.approx(0.40, abs=1e-15)

    def test_partial_last_step_not_overshot(self):
        assert sweep.SweepSpec(sweep.Axis.LAT_INCR, 0, 1, 0.3).values() == pytest.approx([0, 0.3, 0.6, 0.9])
        assert sweep.SweepSpec(sweep.Axis.LAT_INCR, 0, 1, 0.6).values() == pytest.approx([0, 0.6])

    def test_no_drift(self):
        xs = sweep.SweepSpec(sweep.Axis.BANDWIDTH, 0, 1000, 0.1).values()
        assert len(xs) == 10001
        assert xs[-1] == 1000
        assert all(abs(x - i / 10) < 1e-9 for i, x in enumerate(xs))

    def test_single_point(self):
        assert sweep.SweepSpec(sweep.Axis.LAT_INCR, 0.4, 0.4, 0.05).values() == [0.4]

    @pytest.mark.parametrize("start, stop, step", [(1, 0, 0.1), (0, 1, 0), (0, 1, -0.1)])
    def test_bad_range(self, start, stop, step):
        with pytest.raises(ValidationError):
            sweep.SweepSpec(sweep.Axis.LAT_INCR, start, stop, step).values()

    def test_cap(self):
        with pytest.raises(GridCapError):
            sweep.SweepSpec(sweep.Axis.LAT_INCR, 0, 1, 1e-7).values()


class TestLatencyCost:

    def test_spec_int_at_40(self, spec_int):
        pts = sweep.latency_cost_curve(spec_int)
        assert _at(pts, 0.40).y == pytest.approx(155.2, abs=1e-9)
        assert pts[0].y == 0

    def test_worst_case_at_100(self):
        pts = sweep.latency_cost_curve(make_scenario(0.59))
        assert pts[-1].x == 1.0
        assert pts[-1].y == pytest.approx(1144.60, abs=1e-9)

    def test_warns_outside_window(self, spec_int):
        with pytest.warns(sweep.RangeWarning):
            sweep.latency_cost_curve(spec_int, 0, 2, 0.5)

    def test_negative_latency_rejected(self, spec_int):
        with pytest.raises(ValidationError):
            sweep.latency_cost_curve(spec_int, -0.1, 0.5, 0.1)


class TestBandwidthCost:

    def test_lines(self):
        lines = sweep.bandwidth_cost_lines([0.0, 1.0, 3.0], 0, 1088, 544)
        assert [p.y for p in lines[1.0]] == [0, 544, 1088]
        assert lines[3.0][1].y == 1632
        assert all(p.y == 0 for p in lines[0.0])

    def test_curve_carries_gain(self, spec_int):
        pts = sweep.bandwidth_cost_curve(spec_int, 1.4, 0, 544, 544)
        last = pts[-1]
        assert last.breakdown.gain_dollars == pytest.approx(456 - 155.2 - 761.6, abs=1e-9)
        assert not last.feasible and pts[0].feasible


class TestEqualCost:

    def test_intercept(self, spec_int):
        assert sweep.equal_cost_curve(spec_int)[0].y == pytest.approx(0.938, abs=5e-4)

    def test_oltp_at_40(self, oltp):
        assert _at(sweep.equal_cost_curve(oltp), 0.40).y == pytest.approx(0.553, abs=5e-4)

    def test_spec_int_at_50(self, spec_int):
        assert _at(sweep.equal_cost_curve(spec_int), 0.50).y == pytest.approx((456 - 194) / 544 + 0.1, rel=1e-12)

    def test_infeasible_points_kept(self):
        pts = sweep.equal_cost_curve(make_scenario(0.59))
        assert len(pts) == 21
        assert pts[0].feasible and not pts[-1].feasible

    @settings(max_examples=50)
    @given(st.floats(min_value=0, max_value=1), st.floats(min_value=0.01, max_value=0.2))
    def test_monotone(self, mfp, step):
        ys = [p.y for p in sweep.equal_cost_curve(make_scenario(mfp), 0, 1, step)]
        assert all(b <= a for a, b in zip(ys, ys[1:]))
        # Strictness needs a change in y above float resolution.
        if mfp > 1e-9:
            assert all(b < a for a, b in zip(ys, ys[1:]))

    @settings(max_examples=50)
    @given(st.floats(min_value=0, max_value=1))
    def test_points_break_even(self, mfp):
        s = make_scenario(mfp)
        bw = s.processor.mem_bandwidth_gbps
        for p in sweep.equal_cost_curve(s):
            b = p.breakdown
            g = engine.net_gain(b.ms_dollars, b.cl_dollars,
                                (p.y - s.memory.baseline_unit_cost) * bw)
            assert abs(g) <= 1e-9 * max(b.ms_dollars, b.cl_dollars)
            assert b.gain_dollars == b.ms_dollars - b.cl_dollars - b.cb_dollars

    def test_deterministic(self, oltp):
        assert sweep.equal_cost_curve(oltp) == sweep.equal_cost_curve(oltp)


class TestGainSurface:

    def test_corner_is_memory_savings(self, spec_int):
        grid = sweep.gain_surface(spec_int, (0, 1, 0.05), (0.1, 2.0, 0.1))
        assert grid[0].lat_incr == 0 and grid[0].unit_cost == 0.1
        assert grid[0].gain_dollars == pytest.approx(456.0, abs=1e-9)

    def test_oltp_point(self, oltp):
        grid = sweep.gain_surface(oltp, (0.4, 0.4, 0.05), (1.5, 1.5, 0.1))
        assert grid[0].gain_dollars == pytest.approx(-515.12, abs=1e-9)

    def test_zero_contour_matches_equal_cost_curve(self, oltp):
        step = 0.05
        grid = sweep.gain_surface(oltp, (0, 1, 0.05), (0, 2, step))
        curve = sweep.equal_cost_curve(oltp)
        inside = [cp for cp in curve if 0 <= cp.y <= 2]
        assert len(inside) > 10
        for cp in inside:
            row = [p for p in grid if p.lat_incr == cp.x]
            crossing = None
            for a, b in zip(row, row[1:]):
                if a.gain_dollars >= 0 >= b.gain_dollars:
                    t = a.gain_dollars / (a.gain_dollars - b.gain_dollars)
                    crossing = a.unit_cost + t * (b.unit_cost - a.unit_cost)
                    break
            assert crossing is not None
            assert abs(crossing - cp.y) <= step
            # G at the curve point itself.
            g = engine.analyze(oltp, lat_incr=cp.x, unit_cost=cp.y).gain_dollars
            assert abs(g) < 0.01

    def test_cap(self, spec_int):
        with pytest.raises(GridCapError):
            sweep.gain_surface(spec_int, (0, 1, 0.0001), (0, 2, 0.0001))

    def test_breakdown_identity(self, spec_int):
        for p in sweep.gain_surface(spec_int, (0, 1, 0.1), (0, 3, 0.25)):
            b = p.breakdown
            assert b.gain_dollars == b.ms_dollars - b.cl_dollars - b.cb_dollars


def test_bandwidth_lines_csv_leaves_breakdown_blank():
    from memcost.report import curve_csv
    lines = sweep.bandwidth_cost_lines([1.0], 0, 544, 544)
    assert curve_csv("bandwidth-cost", lines[1.0]).splitlines()[1:] == [
        "0.0,0.00,true,,,,", "544.0,544.00,true,,,,"]
