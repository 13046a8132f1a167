"""Command-line interface: JSON reports on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 failed checks, 2 parameter domain error,
3 file I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .degeneration import CASE_TAGS, LimitScenario, default_scenario, run_scenario
from .errors import DomainError
from .extremal import AnnulusParams, extremal_lengths
from .hyperbolic import (
    GroupParams,
    angles_from_lengths,
    build_group,
    collar_angles,
    collar_lemma_angle,
    pants_separation,
    trichotomy,
)
from .render import MAX_ORBIT_DEPTH, build_domain, render_svg

SCHEMA_VERSION = 1

_SHORT_CASE = {
    "i": "i_puncture_to_boundary",
    "ii": "ii_R_to_infinity",
    "iii": "iii_R_to_one",
    "iv": "iv_ratio_fixed",
}


def _matrix(m) -> list[list[float]]:
    return [[m.a, m.b], [m.c, m.d]]


def _cmd_describe(args) -> int:
    params = AnnulusParams(args.R, args.a)
    rep = extremal_lengths(params)
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "describe",
        "R": params.R,
        "a": params.a,
        "q": rep.q.value,
        "q_complement": rep.q.complement,
        "big_k": rep.big_k,
        "big_k_prime": rep.big_k_prime,
        "u1": rep.u1,
        "u2": rep.u2,
        "alpha1": rep.alpha1,
        "alpha2": rep.alpha2,
        "p1": rep.p1.value,
        "p2": rep.p2.value,
        "lambda1": rep.lambda1,
        "lambda2": rep.lambda2,
        "b": rep.b,
        "precision_downgraded": rep.precision_downgraded,
    }
    print(json.dumps(out, indent=2 if args.json_pretty else None))
    return 0


def _cmd_group(args) -> int:
    params = GroupParams(args.k, args.r)
    f, g = build_group(params)
    rep = collar_angles(params)
    alt1, alt2 = angles_from_lengths(rep.l1, rep.l2)
    residual = max(abs(alt1 - rep.theta1), abs(alt2 - rep.theta2))
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "group",
        "k": params.k,
        "r": params.r,
        "f": _matrix(f),
        "g": _matrix(g),
        "fg_inverse": _matrix(f.compose(g.inverse())),
        "l1": rep.l1,
        "l2": rep.l2,
        "theta1": rep.theta1,
        "theta2": rep.theta2,
        "t": rep.t,
        "delta": rep.delta,
        "trichotomy": trichotomy(params),
        "collar_lemma_theta1": collar_lemma_angle(rep.l1),
        "collar_lemma_theta2": collar_lemma_angle(rep.l2),
        "pants_separation": pants_separation(rep.l1, rep.l2),
        "cross_check_residual": residual,
    }
    print(json.dumps(out))
    return 0


def _cmd_render(args) -> int:
    params = GroupParams(args.k, args.r)
    domain = build_domain(params)
    svg = render_svg(domain, orbit_depth=args.orbit_depth)
    with open(args.output, "w", encoding="utf-8") as handle:
        handle.write(svg)
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "render",
        "k": params.k,
        "r": params.r,
        "orbit_depth": args.orbit_depth,
        "output": args.output,
        "svg_bytes": len(svg.encode("utf-8")),
    }
    print(json.dumps(out))
    return 0


def _cmd_limits(args) -> int:
    tag = _SHORT_CASE.get(args.case, args.case)
    if tag not in CASE_TAGS:
        raise DomainError(
            f"unknown case {args.case!r}; use one of {sorted(_SHORT_CASE)}"
        )
    scenario, samples = default_scenario(tag)
    if args.samples is not None:
        try:
            samples = tuple(float(s) for s in args.samples.split(","))
        except ValueError as exc:
            raise DomainError(f"bad sample list {args.samples!r}: {exc}") from None
    table = run_scenario(scenario, samples)
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "limits",
        "case": table.case_tag,
        "frozen": table.frozen,
        "samples": list(samples),
        "rows": [
            {
                "driver": row.driver,
                "observable": row.observable,
                "value": row.value,
                "target": row.target,
                "deviation": row.deviation,
            }
            for row in table.rows
        ],
    }
    if args.plot is not None:
        from .plotting import save_convergence_plot

        save_convergence_plot(table, args.plot)
        out["plot"] = args.plot
    print(json.dumps(out))
    return 0


def _cmd_check(args) -> int:
    from .checks import run_checks

    passed, failed, lines = run_checks(args.seed, args.filter)
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "check",
        "seed": args.seed,
        "filter": args.filter,
        "passed": passed,
        "failed": failed,
        "results": lines,
    }
    print(json.dumps(out, indent=2))
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="punctann",
        description=(
            "Hyperbolic and complex structure of a once-punctured annulus: "
            "geodesic lengths, collar angles, extremal lengths, degeneration "
            "tables, and fundamental-domain pictures."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="extremal lengths of the annulus (R, a)")
    p.add_argument("--R", type=float, required=True, help="outer radius, R > 1")
    p.add_argument("--a", type=float, required=True, help="puncture position in (1/R, R)")
    p.add_argument("--json-pretty", action="store_true", help="indent the JSON output")
    p.set_defaults(fn=_cmd_describe)

    p = sub.add_parser("group", help="hyperbolic data of the covering group (k, r)")
    p.add_argument("--k", type=float, required=True, help="dilation scale, k > r")
    p.add_argument("--r", type=float, required=True, help="parabolic parameter, r > 1")
    p.set_defaults(fn=_cmd_group)

    p = sub.add_parser("render", help="draw the fundamental domain as SVG")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("-o", "--output", required=True, help="output SVG path")
    p.add_argument(
        "--orbit-depth",
        type=int,
        default=0,
        choices=range(MAX_ORBIT_DEPTH + 1),
        help="also draw images of the domain under words up to this length",
    )
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("limits", help="degeneration convergence table")
    p.add_argument("--case", required=True, help="one of i, ii, iii, iv")
    p.add_argument("--samples", help="comma-separated driver values")
    p.add_argument("--plot", help="also save a decay plot (PNG) to this path")
    p.set_defaults(fn=_cmd_limits)

    p = sub.add_parser("check", help="run the seeded invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--filter", help="restrict to one module prefix, e.g. elliptic")
    p.set_defaults(fn=_cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, ValueError, ArithmeticError, RuntimeError) as exc:
        err = {
            "schema_version": SCHEMA_VERSION,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        print(json.dumps(err), file=sys.stderr)
        return 2
    except OSError as exc:
        err = {
            "schema_version": SCHEMA_VERSION,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        print(json.dumps(err), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
