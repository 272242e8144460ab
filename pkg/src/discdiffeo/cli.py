"""Command-line experiments: norm-field, metric, converge, verify.

Data goes to ``--out`` (default stdout) as CSV or SVG; diagnostics go to
stderr. Exit codes: 0 ok, 1 bad arguments, 2 I/O failure, 3 failed check.
"""

from __future__ import annotations

import argparse
import io
import math
import sys

import numpy as np

from .convergence_lab import convergence_table, default_schedule, fit_rate, verify_membership
from .errors import DomainError
from .group_metric import MaximizerConfig, metric
from .oracles import eigen_norm
from .radial_family import RadialDiffeo, det_xy, norm_xy
from .specnorm2 import SymmetricForm, max_on_disc

EXIT_OK, EXIT_ARGS, EXIT_IO, EXIT_CHECK = 0, 1, 2, 3

CONVENTIONS = {"spectral": "spectral", "entrywise": "entrywise_max", "entrywise_max": "entrywise_max"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGS, f"{self.prog}: error: {message}\n")


def fmt(v: float) -> str:
    # 17 significant digits round-trips a double
    return f"{v + 0.0:.17g}"


def parse_grid(text: str) -> tuple[int, int]:
    try:
        r, a = (int(p) for p in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like RxA, got {text!r}")
    if r < 2 or a < 4:
        raise argparse.ArgumentTypeError("grid needs at least 2 radii and 4 angles")
    return r, a


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--t", dest="t", type=float, action="append", help="parameter t (repeatable)")
    common.add_argument("--grid", type=parse_grid, help="polar grid as RADIIxANGLES")
    common.add_argument("--convention", choices=sorted(CONVENTIONS), default="spectral")
    common.add_argument("--format", choices=("csv", "svg"), default="csv")
    common.add_argument("--out", default="-", help="output path, '-' for stdout")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="discdiffeo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("norm-field", parents=[common], help="Jacobian norm and determinant over the disc")
    sub.add_parser("metric", parents=[common], help="C1 distance between two members")
    sub.add_parser("converge", parents=[common], help="distance to the identity as t -> 1+")
    sub.add_parser("verify", parents=[common], help="membership and engine checks")
    return parser


def _cfg(args) -> MaximizerConfig:
    if args.grid is None:
        return MaximizerConfig()
    return MaximizerConfig(polar_radii=args.grid[0], polar_angles=args.grid[1])


def _single_t(args) -> float:
    if not args.t or len(args.t) != 1:
        raise UsageError("exactly one --t is required")
    t = args.t[0]
    if not (math.isfinite(t) and t > 0.0):
        raise UsageError(f"t must be positive, got {t}")
    return t


# svg helpers


def _color(frac: float) -> str:
    # blue (low) to red (high)
    frac = min(max(frac, 0.0), 1.0)
    return "#{:02x}{:02x}{:02x}".format(round(255 * frac), 64, round(255 * (1.0 - frac)))


def heatmap_svg(t: float, n: int = 128) -> str:
    size = 400
    cell = size / n
    centers = -1.0 + (np.arange(n) + 0.5) * 2.0 / n
    x, y = np.meshgrid(centers, -centers)
    inside = x * x + y * y <= 1.0
    vals = np.full(x.shape, np.nan)
    vals[inside] = norm_xy(t, x[inside], y[inside])
    lo, hi = np.nanmin(vals), np.nanmax(vals)
    span = hi - lo if hi > lo else 1.0
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 30}" viewBox="0 0 {size} {size + 30}">']
    for i in range(n):
        for j in range(n):
            if inside[i, j]:
                out.append(
                    f'<rect x="{j * cell:.3f}" y="{i * cell:.3f}" width="{cell:.3f}" height="{cell:.3f}" '
                    f'fill="{_color((vals[i, j] - lo) / span)}"/>'
                )
    out.append(f'<text x="4" y="{size + 20}" font-size="14">jac_norm, t={fmt(t)}, range [{lo:.6g}, {hi:.6g}]</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def loglog_svg(rows) -> str:
    w, h, pad = 480, 360, 50
    lx = np.log10([r.t - 1.0 for r in rows])
    ly = np.log10([r.d_g for r in rows])
    x0, x1 = lx.min(), lx.max()
    y0, y1 = ly.min(), ly.max()
    sx = (w - 2 * pad) / ((x1 - x0) or 1.0)
    sy = (h - 2 * pad) / ((y1 - y0) or 1.0)
    pts = " ".join(f"{pad + (a - x0) * sx:.3f},{h - pad - (b - y0) * sy:.3f}" for a, b in zip(lx, ly))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="{pad}" y="{pad}" width="{w - 2 * pad}" height="{h - 2 * pad}" fill="none" stroke="#888"/>',
        f'<polyline points="{pts}" fill="none" stroke="#c03" stroke-width="2"/>',
        f'<text x="{pad}" y="{h - 15}" font-size="13">log10(t-1) in [{x0:.3g}, {x1:.3g}]</text>',
        f'<text x="{pad}" y="{pad - 15}" font-size="13">log10 d_G in [{y0:.3g}, {y1:.3g}]</text>',
        "</svg>",
    ]
    return "\n".join(out) + "\n"


# commands


def cmd_norm_field(args, out: io.StringIO) -> int:
    t = _single_t(args)
    if args.format == "svg":
        n = args.grid[0] if args.grid else 128
        out.write(heatmap_svg(t, n))
        return EXIT_OK
    n_r, n_a = args.grid or (64, 64)
    rs = np.linspace(0.0, 1.0, n_r)
    th = 2.0 * np.pi * np.arange(n_a) / n_a
    r, a = np.meshgrid(rs, th, indexing="ij")
    x, y = (r * np.cos(a)).ravel(), (r * np.sin(a)).ravel()
    # keep rounding from pushing boundary samples outside the disc
    scale = np.maximum(np.hypot(x, y), 1.0)
    x, y = x / scale, y / scale
    norms = norm_xy(t, x, y)
    dets = det_xy(t, x, y)
    out.write("x,y,jac_norm,jac_det\n")
    for row in zip(x, y, norms, dets):
        out.write(",".join(fmt(float(v)) for v in row) + "\n")
    return EXIT_OK


def cmd_metric(args, out) -> int:
    if not args.t or len(args.t) != 2:
        raise UsageError("metric needs exactly two --t values")
    t1, t2 = args.t
    for t in (t1, t2):
        if not (math.isfinite(t) and t > 0.0):
            raise UsageError(f"t must be positive, got {t}")
    convention = CONVENTIONS[args.convention]
    rep = metric(RadialDiffeo(t1), RadialDiffeo(t2), _cfg(args), convention)
    out.write("t1,t2,sup_value,sup_jac,d_g,argmax_r_value,argmax_r_jac,convention\n")
    nums = (t1, t2, rep.sup_value_dist, rep.sup_jac_dist, rep.d_g, rep.argmax_radius_value, rep.argmax_radius_jac)
    out.write(",".join(fmt(v) for v in nums) + f",{convention}\n")
    return EXIT_OK


def cmd_converge(args, out) -> int:
    ts = args.t or default_schedule()
    if any(not (math.isfinite(t) and t > 1.0) for t in ts):
        raise UsageError("converge needs every t > 1")
    convention = CONVENTIONS[args.convention]
    rows = convergence_table(ts, _cfg(args), convention)
    if args.format == "svg":
        if len(rows) < 2:
            raise UsageError("svg plot needs at least two t values")
        out.write(loglog_svg(rows))
        return EXIT_OK
    out.write(f"# convention={convention}\n")
    out.write("t,sup_value,sup_jac,d_g,bound_value,bound_diag,bound_offdiag\n")
    for r in rows:
        nums = (r.t, r.sup_value, r.sup_jac, r.d_g, r.bound_value, r.bound_diag, r.bound_offdiag)
        out.write(",".join(fmt(v) for v in nums) + "\n")
    if len(rows) >= 3:
        rate = fit_rate(rows)
        out.write(f"# rate_exponent={fmt(rate.exponent)} r2={fmt(rate.r_squared)}\n")
    return EXIT_OK


def engine_spot_check(seed: int, n: int = 1000, rtol: float = 1e-12) -> tuple[bool, float]:
    """Compare max_on_disc with the squared eigenvalue oracle on seeded random forms."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for a, b, c in rng.uniform(-10.0, 10.0, size=(n, 3)):
        got = max_on_disc(SymmetricForm(a, b, c)).max_value
        want = eigen_norm((a, b, c)) ** 2
        worst = max(worst, abs(got - want) / max(want, 1e-300))
    return worst <= rtol, worst


def cmd_verify(args, out) -> int:
    t = _single_t(args)
    rep = verify_membership(t, _cfg(args))
    ok_engine, worst = engine_spot_check(args.seed)
    out.write("check,status,worst,tolerance\n")
    for c in rep.checks:
        out.write(f"{c.name},{'PASS' if c.passed else 'FAIL'},{fmt(c.worst)},{fmt(c.tolerance)}\n")
    out.write(f"engine_vs_eigen,{'PASS' if ok_engine else 'FAIL'},{fmt(worst)},{fmt(1e-12)}\n")
    return EXIT_OK if rep.passed and ok_engine else EXIT_CHECK


COMMANDS = {
    "norm-field": cmd_norm_field,
    "metric": cmd_metric,
    "converge": cmd_converge,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buf)
    except (UsageError, DomainError) as exc:
        print(f"discdiffeo {args.command}: {exc}", file=sys.stderr)
        return EXIT_ARGS
    try:
        if args.out == "-":
            sys.stdout.write(buf.getvalue())
            sys.stdout.flush()
        else:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(buf.getvalue())
    except OSError as exc:
        print(f"discdiffeo {args.command}: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    if code == EXIT_CHECK:
        print(f"discdiffeo {args.command}: verification failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
