"""Command-line front end: analyze | ns | simulate | sweep.

Configuration comes from an optional flat key=value file plus flags;
flags win. Numbers are emitted in the shortest round-trip form so that
identical configs produce byte-identical output.

Exit codes: 0 success, 2 config error, 3 classifier disagreement,
4 bifurcation-pipeline gate failure, 5 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .exceptions import (
    ClassifierDisagreementError,
    DegenerateLError,
    ExistenceLostError,
    NoSignChangeError,
    NonFiniteParameterError,
    NonPositiveParameterError,
    PConditionFailedError,
)
from .fixed_points import all_fixed_points, existence_case
from .model import State, initial_state, validate_params
from .ns import ns_report
from .simulate import orbit, sweep_theta
from .stability import classify_fixed_point

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DISAGREEMENT = 3
EXIT_NS_GATE = 4
EXIT_IO = 5

_FLOAT_KEYS = (
    "c",
    "beta",
    "r",
    "theta",
    "initial_u",
    "initial_v",
    "theta_min",
    "theta_max",
    "theta_step",
    "search_min",
    "search_max",
)
_INT_KEYS = ("n", "transient")
_PATH_KEYS = ("out", "svg")


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    c: float | None = None
    beta: float | None = None
    r: float | None = None
    theta: float | None = None
    initial_u: float | None = None
    initial_v: float | None = None
    n: int | None = None
    transient: int | None = None
    theta_min: float | None = None
    theta_max: float | None = None
    theta_step: float | None = None
    search_min: float | None = None
    search_max: float | None = None
    out: str | None = None
    svg: str | None = None

    def require(self, *keys: str):
        missing = [k for k in keys if getattr(self, k) is None]
        if missing:
            raise ConfigError(f"missing required option(s): {', '.join(missing)}")


def _parse_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key in _FLOAT_KEYS:
            try:
                values[key] = float(value)
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad number {value!r}") from exc
        elif key in _INT_KEYS:
            try:
                values[key] = int(value)
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad integer {value!r}") from exc
        elif key in _PATH_KEYS:
            values[key] = value
        else:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    return values


def _build_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if args.config is not None:
        for key, value in _parse_config_file(args.config).items():
            setattr(config, key, value)
    for key in (*_FLOAT_KEYS, *_INT_KEYS, *_PATH_KEYS):
        value = getattr(args, key, None)
        if value is not None:
            setattr(config, key, value)
    return config


def _fmt(value: float) -> str:
    """Shortest round-trip representation; no locale dependence."""
    return repr(float(value))


def _fmt15(value: float) -> str:
    return format(float(value), ".15g")


def _fmt15c(value: complex) -> str:
    sign = "+" if value.imag >= 0 else "-"
    return f"{_fmt15(value.real)} {sign} {_fmt15(abs(value.imag))}i"


def _open_out(path: str):
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def cmd_analyze(config: RunConfig) -> int:
    config.require("c", "beta", "r", "theta")
    params = validate_params(config.c, config.beta, config.r, config.theta)
    case = existence_case(params)
    reports = []
    for fp in all_fixed_points(params):
        reports.append((fp, classify_fixed_point(params, fp)))

    lines = [
        f"parameters: c={_fmt(params.c)} beta={_fmt(params.beta)} "
        f"r={_fmt(params.r)} theta={_fmt(params.theta)}",
        f"existence case: {case.value}",
    ]
    for fp, report in reports:
        lines.append(
            f"{fp.label} ({_fmt(fp.u)}, {_fmt(fp.v)}) {report.cls.value}"
        )
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)

    if config.out is not None:
        machine = {
            "parameters": {
                "c": params.c,
                "beta": params.beta,
                "r": params.r,
                "theta": params.theta,
            },
            "existence_case": case.value,
            "fixed_points": [
                {
                    "label": fp.label,
                    "u": fp.u,
                    "v": fp.v,
                    "stability": report.cls.value,
                    "eigenvalues": [
                        [e.real, e.imag] for e in report.eigenvalues
                    ],
                    "p": report.p,
                    "q": report.q,
                }
                for fp, report in reports
            ],
        }
        with _open_out(config.out) as handle:
            json.dump(machine, handle, indent=2, sort_keys=True)
            handle.write("\n")
    return EXIT_OK


def cmd_ns(config: RunConfig) -> int:
    config.require("c", "beta", "r", "search_min", "search_max")
    report = ns_report(
        config.c, config.beta, config.r, (config.search_min, config.search_max)
    )
    cp = report.critical
    side = "theta* < 0" if report.l < 0 else "theta* > 0"
    kind = "attracting" if report.l < 0 else "repelling"
    lines = [
        f"theta0 = {_fmt15(cp.theta0)}",
        f"u_star = {_fmt15(cp.u_star)}",
        f"v_star = {_fmt15(cp.v_star)}",
        f"lambda1 = {_fmt15c(report.lambda1)}",
        f"lambda2 = {_fmt15c(report.lambda2)}",
        f"transversality = {_fmt15(report.d_modulus)}",
        f"nondegenerate = {'true' if report.nondegenerate else 'false'}",
        f"L20 = {_fmt15c(report.l20)}",
        f"L11 = {_fmt15c(report.l11)}",
        f"L02 = {_fmt15c(report.l02)}",
        f"L21 = {_fmt15c(report.l21)}",
        f"L = {_fmt15(report.l)}",
        f"verdict = {report.verdict.value}",
        f"note = {kind} invariant closed curve bifurcates for {side} "
        "(theta below theta0)",
    ]
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if config.out is not None:
        with _open_out(config.out) as handle:
            handle.write(text)
    return EXIT_OK


def cmd_simulate(config: RunConfig) -> int:
    config.require("c", "beta", "r", "theta", "initial_u", "initial_v", "n", "transient", "out")
    params = validate_params(config.c, config.beta, config.r, config.theta)
    start = initial_state(config.initial_u, config.initial_v)
    result = orbit(params, start, config.n, config.transient)
    with _open_out(config.out) as handle:
        handle.write("step,u,v\n")
        for offset, s in enumerate(result.tail):
            handle.write(f"{result.tail_start + offset},{_fmt(s.u)},{_fmt(s.v)}\n")
    if result.escaped:
        sys.stderr.write(
            f"orbit escaped the box at step {result.escape_step}; "
            f"output truncated\n"
        )
    if config.svg is not None:
        _write_svg(config.svg, result.tail)
    return EXIT_OK


def _write_svg(path: str, tail, size: int = 600, margin: float = 20.0) -> None:
    """Plain scatter of the retained tail; illustrative only."""
    points = [(s.u, s.v) for s in tail]
    if points:
        us, vs = zip(*points)
        u_lo, u_hi = min(us), max(us)
        v_lo, v_hi = min(vs), max(vs)
    else:
        u_lo = v_lo = 0.0
        u_hi = v_hi = 1.0
    u_span = (u_hi - u_lo) or 1.0
    v_span = (v_hi - v_lo) or 1.0
    inner = size - 2.0 * margin

    with _open_out(path) as handle:
        handle.write(
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
            f'height="{size}" viewBox="0 0 {size} {size}">\n'
        )
        for u, v in points:
            x = margin + (u - u_lo) / u_span * inner
            y = size - margin - (v - v_lo) / v_span * inner
            handle.write(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="1.5"/>\n')
        handle.write("</svg>\n")


def _theta_grid(config: RunConfig) -> list[float]:
    if config.theta_step <= 0:
        raise ConfigError("theta_step must be > 0")
    if config.theta_max < config.theta_min:
        raise ConfigError("theta_max must be >= theta_min")
    grid = []
    k = 0
    while True:
        theta = config.theta_min + k * config.theta_step
        if theta > config.theta_max + 1e-12 * max(1.0, abs(config.theta_max)):
            break
        grid.append(theta)
        k += 1
    return grid


def cmd_sweep(config: RunConfig) -> int:
    config.require(
        "c", "beta", "r", "theta_min", "theta_max", "theta_step",
        "initial_u", "initial_v", "n", "transient", "out",
    )
    start = initial_state(config.initial_u, config.initial_v)
    result = sweep_theta(
        config.c, config.beta, config.r, _theta_grid(config), start,
        config.n, config.transient,
    )
    with _open_out(config.out) as handle:
        handle.write(
            "theta,existence_case,u_star,v_star,stability,attractor_kind,"
            "tail_min_dist,tail_max_dist\n"
        )
        for row in result.rows:
            if row.e2 is not None:
                u_star, v_star = _fmt(row.e2.u), _fmt(row.e2.v)
            else:
                u_star = v_star = ""
            if row.error is not None:
                stability = f"error:{row.error.split(':', 1)[0]}"
            elif row.stability is not None:
                stability = row.stability.cls.value
            else:
                stability = ""
            d_min = "" if math.isnan(row.summary.min_distance) else _fmt(row.summary.min_distance)
            d_max = "" if math.isnan(row.summary.max_distance) else _fmt(row.summary.max_distance)
            handle.write(
                f"{_fmt(row.theta)},{row.case},{u_star},{v_star},"
                f"{stability},{row.summary.kind.value},{d_min},{d_max}\n"
            )
    return EXIT_OK


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH")
    for key in _FLOAT_KEYS:
        parser.add_argument(f"--{key.replace('_', '-')}", type=float, dest=key)
    for key in _INT_KEYS:
        parser.add_argument(f"--{key}", type=int, dest=key)
    parser.add_argument("--out", metavar="PATH")
    parser.add_argument("--svg", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planktonmap",
        description="Fixed points, stability, torus bifurcation analysis, "
        "and orbit simulation for the discrete plankton map.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("analyze", "ns", "simulate", "sweep"):
        _add_common_flags(sub.add_parser(name))
    return parser


_COMMANDS = {
    "analyze": cmd_analyze,
    "ns": cmd_ns,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _build_config(args)
    except ConfigError as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG

    try:
        return _COMMANDS[args.command](config)
    except (ConfigError, NonPositiveParameterError, NonFiniteParameterError, ValueError) as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    except ClassifierDisagreementError as exc:
        sys.stderr.write(f"classifier disagreement: {exc}\n")
        return EXIT_DISAGREEMENT
    except NoSignChangeError as exc:
        sys.stderr.write(f"no critical theta found: {exc}\n")
        return EXIT_NS_GATE
    except ExistenceLostError as exc:
        sys.stderr.write(f"fixed point existence lost: {exc}\n")
        return EXIT_NS_GATE
    except PConditionFailedError as exc:
        sys.stderr.write(f"trace condition failed: {exc}\n")
        return EXIT_NS_GATE
    except DegenerateLError as exc:
        sys.stderr.write(f"degenerate discriminating quantity: {exc}\n")
        return EXIT_NS_GATE
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
