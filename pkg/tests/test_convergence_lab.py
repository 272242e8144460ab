import math

import pytest

from discdiffeo import (
    ConvergenceRow,
    DomainError,
    MaximizerConfig,
    convergence_table,
    default_schedule,
    fit_rate,
    verify_membership,
)

SMALL_GRID = MaximizerConfig(polar_radii=257, polar_angles=256)


def row(t, d):
    return ConvergenceRow(t, d / 2, d / 2, d, t - 1, t * t - 1, t * (t - 1))


def test_default_schedule():
    ts = default_schedule()
    assert len(ts) == 20
    assert ts[0] == 1.5 and ts[-1] == 1 + 2.0**-20
    assert all(a > b for a, b in zip(ts, ts[1:]))


def test_single_row_values():
    (r,) = convergence_table([2.0])
    assert r.sup_value == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-12)
    assert r.sup_jac == pytest.approx(1.0, abs=1e-14)
    assert r.d_g == pytest.approx(1.171573, abs=1e-6)
    assert (r.bound_value, r.bound_diag, r.bound_offdiag) == (1.0, 3.0, 2.0)
    assert r.bounds_hold()


def test_row_close_to_identity():
    (r,) = convergence_table([1 + 1e-9])
    assert r.d_g <= 3e-9


@pytest.mark.parametrize("bad", [[], [0.9], [1.0], [2.0, 1.0], [math.nan]])
def test_table_rejects_bad_schedules(bad):
    with pytest.raises(DomainError):
        convergence_table(bad)


def test_table_is_monotone_and_bounded():
    rows = convergence_table(default_schedule())
    ds = [r.d_g for r in rows]
    assert all(b < a - 1e-12 * a for a, b in zip(ds, ds[1:]))
    assert all(r.bounds_hold() for r in rows)
    assert all(r.d_g == r.sup_value + r.sup_jac for r in rows)


def test_entrywise_columns():
    rows = convergence_table([1.5, 1.25, 1.125], SMALL_GRID, entrywise=True)
    for r in rows:
        assert r.sup_diag is not None and r.sup_offdiag is not None
        assert r.bounds_hold()


def test_vanishing_limit():
    (r,) = convergence_table([1 + 2.5e-7])
    assert r.d_g <= 1e-6


def test_fit_rate_on_schedule():
    rows = convergence_table([1 + 2.0**-k for k in range(4, 15)])
    est = fit_rate(rows)
    # closed-form oracle for this schedule gives slope 0.99936 and r^2 0.9999997
    assert 0.97 <= est.exponent <= 1.03
    assert est.exponent == pytest.approx(0.9993613536798777, abs=1e-8)
    assert est.r_squared > 0.999


def test_fit_rate_flat():
    est = fit_rate([row(1 + 2.0**-k, 0.5) for k in range(1, 6)])
    assert est.exponent == pytest.approx(0.0, abs=1e-12)
    assert 0.0 <= est.r_squared <= 1.0


def test_fit_rate_preconditions():
    with pytest.raises(DomainError):
        fit_rate([row(1.5, 0.1), row(1.25, 0.05)])
    with pytest.raises(DomainError):
        fit_rate([row(1.5, 0.1), row(1.25, 0.0), row(1.1, 0.01)])


@pytest.mark.parametrize("t", [2.0, 1.0, 1000.0, 0.25])
def test_verify_membership_passes(t):
    rep = verify_membership(t)
    assert rep.passed, rep.checks
    assert [c.name for c in rep.checks] == ["boundary_fixed", "det_positive", "image_in_disc", "inverse_roundtrip"]


def test_verify_membership_worst_det_on_boundary():
    rep = verify_membership(1000.0)
    det = next(c for c in rep.checks if c.name == "det_positive")
    assert det.worst == pytest.approx(1e-3, rel=1e-12)
    assert math.hypot(*det.witness) == pytest.approx(1.0)


def test_verify_membership_reports_failures():
    rep = verify_membership(2.0, boundary_tol=-1.0)
    assert not rep.passed
    assert not next(c for c in rep.checks if c.name == "boundary_fixed").passed
