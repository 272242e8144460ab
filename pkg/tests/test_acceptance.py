"""Acceptance criteria, one test each, with the stated tolerance and time budget.

Every test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary and when this file is run as a script.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from discdiffeo import (
    MaximizerConfig,
    RadialDiffeo,
    compose,
    convergence_table,
    default_schedule,
    entrywise_sups,
    evaluate,
    fit_rate,
    inverse,
    jacobian_at,
    jacobian_norm,
    max_on_disc,
    sup_value_distance,
)
from discdiffeo.oracles import GridSpec, eigen_norm, fd_jacobian, grid_inf_disc, grid_max_form, grid_sup_disc
from discdiffeo.radial_family import norm_xy

RESULTS: list[str] = []
SEED = 12345


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def record(label, ok, detail, elapsed, budget):
    ok = ok and elapsed < budget
    RESULTS.append(f"{'PASS' if ok else 'FAIL'} {label}: {detail} ({elapsed:.2f}s / {budget:.0f}s budget)")
    return ok


def disc_points(rng, n, r_min=0.0, r_max=1.0):
    r = np.sqrt(rng.uniform(r_min**2, r_max**2, n))
    th = rng.uniform(0.0, 2.0 * np.pi, n)
    return r * np.cos(th), r * np.sin(th)


def test_ac1_closed_form_norm_vs_eigen_oracle():
    rng = np.random.default_rng(SEED)
    ts = rng.uniform(1.001, 10.0, 10**4)
    xs, ys = disc_points(rng, 10**4)
    with Timer() as tm:
        worst = 0.0
        for t, x, y in zip(ts, xs, ys):
            closed = jacobian_norm(t, (x, y))
            oracle = eigen_norm(jacobian_at(t, (x, y)).form())
            worst = max(worst, abs(closed - oracle) / t)
    assert record("AC1 closed-form ||J|| vs eigen oracle", worst <= 1e-12, f"max err/t = {worst:.3e} <= 1e-12", tm.elapsed, 1.0)


def test_ac2_engine_vs_eigen_and_sweep():
    rng = np.random.default_rng(SEED)
    forms = rng.uniform(-10.0, 10.0, size=(10**5, 3))
    with Timer() as tm:
        worst_eig = 0.0
        for a, b, c in forms:
            got = max_on_disc((a, b, c)).max_value
            want = eigen_norm((a, b, c)) ** 2
            worst_eig = max(worst_eig, abs(got - want) / want)
        worst_sweep = 0.0
        for a, b, c in forms[:100]:
            got = max_on_disc((a, b, c)).max_value
            sweep = grid_max_form((a, b, c), 10**6)
            worst_sweep = max(worst_sweep, abs(got - sweep) / got)
    ok = worst_eig <= 1e-12 and worst_sweep <= 1e-9
    detail = f"eigen rel {worst_eig:.3e} <= 1e-12, sweep rel {worst_sweep:.3e} <= 1e-9"
    assert record("AC2 engine vs eigen^2 and brute force", ok, detail, tm.elapsed, 30.0)


def test_ac3_norm_extrema_on_polar_grid():
    g = GridSpec(2049, 2049)
    with Timer() as tm:
        worst = 0.0
        for t in (1.1, 2.0, 10.0):
            hi, _ = grid_sup_disc(lambda x, y: norm_xy(t, x, y), g)
            lo, _ = grid_inf_disc(lambda x, y: norm_xy(t, x, y), g)
            worst = max(worst, abs(hi - t), abs(lo - 1.0))
    assert record("AC3 max ||J|| = t, min ||J|| = 1", worst <= 1e-6, f"max deviation {worst:.3e} <= 1e-6", tm.elapsed, 10.0)


def test_ac4_finite_difference_determinant():
    rng = np.random.default_rng(SEED)
    d = RadialDiffeo(2.0)
    xs, ys = disc_points(rng, 1000, r_min=0.01, r_max=0.99)
    with Timer() as tm:
        worst = 0.0
        for x, y in zip(xs, ys):
            fd_det = fd_jacobian(d, (x, y), 1e-6).det()
            exact = 4.0 / (1.0 + math.hypot(x, y)) ** 3
            worst = max(worst, abs(fd_det - exact))
    assert record("AC4 finite-difference det J", worst <= 1e-5, f"max |det_fd - t^2/q^3| = {worst:.3e} <= 1e-5", tm.elapsed, 1.0)


def test_ac5_value_and_entry_bounds():
    cfg = MaximizerConfig()
    with Timer() as tm:
        min_slack = math.inf
        worst_exact = 0.0
        for k in range(1, 21):
            t = 1.0 + 2.0**-k
            value, _ = sup_value_distance(t, 1.0, cfg)
            diag, off = entrywise_sups(t, 1.0, cfg)
            min_slack = min(min_slack, (t - 1) - value, (t * t - 1) - diag, t * (t - 1) - off)
            s = math.sqrt(t)
            worst_exact = max(worst_exact, abs(value - (s - 1) / (s + 1)))
    ok = min_slack >= -1e-9 and worst_exact <= 1e-9
    detail = f"min slack {min_slack:.3e} >= -1e-9, |sup - (sqrt t-1)/(sqrt t+1)| max {worst_exact:.3e} <= 1e-9"
    assert record("AC5 value/diagonal/off-diagonal bounds", ok, detail, tm.elapsed, 20.0)


def test_ac6_convergence_to_identity():
    with Timer() as tm:
        rows = convergence_table(default_schedule())
        ds = [r.d_g for r in rows]
        decreasing = all(b < a for a, b in zip(ds, ds[1:]))
        (near,) = convergence_table([1.0 + 2.5e-7])
        rate = fit_rate(rows)
        rate_mid = fit_rate(convergence_table([1.0 + 2.0**-k for k in range(4, 15)]))
    ok = (
        decreasing
        and near.d_g <= 1e-6
        and 0.97 <= rate.exponent <= 1.03
        and rate.r_squared > 0.999
        and 0.97 <= rate_mid.exponent <= 1.03
        and rate_mid.r_squared > 0.999
    )
    detail = (
        f"decreasing={decreasing}, d_g(1+2.5e-7)={near.d_g:.3e} <= 1e-6, "
        f"exponent {rate.exponent:.5f} (k=4..14: {rate_mid.exponent:.5f}) in [0.97, 1.03], r2 {rate.r_squared:.7f} > 0.999"
    )
    assert record("AC6 d_G(f_t, id) -> 0 linearly", ok, detail, tm.elapsed, 20.0)


def test_ac7_group_structure():
    rng = np.random.default_rng(SEED)
    xs, ys = disc_points(rng, 1000)
    with Timer() as tm:
        worst = 0.0
        for s, t in ((2.0, 3.0), (2.0, 0.5), (10.0, 10.0)):
            st = compose(s, t)
            for x, y in zip(xs, ys):
                via = evaluate(s, evaluate(t, (x, y)))
                direct = evaluate(st, (x, y))
                worst = max(worst, math.hypot(via[0] - direct[0], via[1] - direct[1]))
                for u in (s, t):
                    back = evaluate(inverse(u), evaluate(u, (x, y)))
                    worst = max(worst, math.hypot(back[0] - x, back[1] - y))
        th = np.linspace(0.0, 2.0 * np.pi, 1000, endpoint=False)
        worst_b = 0.0
        for t in (1.0, 2.0, 1000.0):
            for a in th:
                p = (math.cos(a), math.sin(a))
                q = evaluate(t, p)
                worst_b = max(worst_b, math.hypot(q[0] - p[0], q[1] - p[1]))
    ok = worst <= 1e-12 and worst_b <= 1e-12
    assert record("AC7 f_s o f_t = f_st, inverse, boundary", ok, f"pointwise {worst:.3e}, boundary {worst_b:.3e} <= 1e-12", tm.elapsed, 1.0)


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "discdiffeo.cli", *args], capture_output=True)


def test_ac8_cli_determinism():
    with Timer() as tm:
        first = _cli("converge", "--seed", "7")
        second = _cli("converge", "--seed", "7")
        verify = _cli("verify", "--t", "2", "--seed", "42")
    identical = first.returncode == 0 and first.stdout == second.stdout and len(first.stdout) > 0
    ok = identical and verify.returncode == 0
    detail = f"converge byte-identical={identical}, verify exit={verify.returncode}"
    assert record("AC8 CLI determinism and verify", ok, detail, tm.elapsed, 30.0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
