"""Command-line front end: phase-diagram sweeps, norm reports, counterexample
scans, and the self-verification suite.

JSON conventions: complex scalars are two-element arrays [re, im] (plain
numbers accepted on input), matrices are nested row arrays, superoperators
are objects {"dim": n, "kind": "choi" | "action", "data": <n^2 x n^2 matrix>}.
Exit codes: 0 success, 2 invalid input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .cpmap import State, SuperOperator, compatibility
from .embed import Source, build_embedded, classify_region
from .normest import DEFAULT_SEED, EstimatorConfig, _thread_count, estimate_norm
from .qubitfamily import family_max, find_counterexample
from .tensor import steps_to_exceed

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_VERIFY_FAILED = 3

DIVERGENCE_THRESHOLD = 10.0
DIVERGENCE_MAX_ROWS = 10_000


# ---------------------------------------------------------------------------
# JSON encoding / decoding


def encode_matrix(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m, dtype=complex)]


def _decode_entry(e) -> complex:
    if isinstance(e, (int, float)):
        return complex(e)
    if isinstance(e, list) and len(e) == 2 and all(isinstance(v, (int, float)) for v in e):
        return complex(e[0], e[1])
    raise ValueError(f"matrix entry must be a number or [re, im], got {e!r}")


def decode_matrix(obj) -> np.ndarray:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise ValueError("matrix must be a non-empty list of rows")
    width = len(obj[0])
    if width == 0 or any(len(r) != width for r in obj):
        raise ValueError("matrix rows must be non-empty and equally long")
    return np.array([[_decode_entry(e) for e in row] for row in obj], dtype=complex)


def encode_superop(t: SuperOperator, kind: str = "action") -> dict:
    if kind == "action":
        data = t.action_matrix
    elif kind == "choi":
        data = t.choi
    else:
        raise ValueError(f"unknown superoperator kind {kind!r}")
    return {"dim": t.dim, "kind": kind, "data": encode_matrix(data)}


def decode_superop(obj) -> SuperOperator:
    if not isinstance(obj, dict):
        raise ValueError("superoperator must be an object with dim/kind/data")
    try:
        dim = int(obj["dim"])
        kind = obj["kind"]
        data = decode_matrix(obj["data"])
    except KeyError as exc:
        raise ValueError(f"superoperator is missing key {exc}") from exc
    if data.shape != (dim * dim, dim * dim):
        raise ValueError(
            f"superoperator data must be {dim * dim}x{dim * dim}, got {data.shape}"
        )
    if kind == "action":
        return SuperOperator(data)
    if kind == "choi":
        return SuperOperator.from_choi(data)
    raise ValueError(f"unknown superoperator kind {kind!r}")


def decode_state(obj) -> State:
    if isinstance(obj, dict):
        try:
            obj = obj["data"]
        except KeyError as exc:
            raise ValueError("state object must carry a 'data' matrix") from exc
    return State.from_matrix(decode_matrix(obj))


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# phase diagram


def _fmt(x: float) -> str:
    """17 significant digits: round-trip exact and byte-stable."""
    return "%.17g" % x


def _grid(start: float, stop: float, step: float) -> list[float]:
    count = int(math.floor((stop - start) / step + 1e-9))
    return [start + k * step for k in range(count + 1)]


def _diagram_cell(p: float, theta: float, with_family: bool):
    region = classify_region(p, theta)
    fam = ""
    if with_family and p < 2.0:
        fam = _fmt(family_max(p, theta).m_value)
    return (p, theta, region.status.value, region.source.value, fam)


def phase_diagram_rows(
    p_min: float,
    p_max: float,
    theta_step: float,
    p_step: float,
    *,
    with_family: bool,
    threads: int | None = None,
) -> list[tuple[float, float, str, str, str]]:
    """Grid classification; cells are independent, so they may run on a pool.

    Rows are sorted by (p, theta) afterwards, so the output bytes never
    depend on the thread count.
    """
    if not (1.0 <= p_min <= p_max):
        raise ValueError(f"need 1 <= p_min <= p_max, got [{p_min}, {p_max}]")
    if not (theta_step > 0 and p_step > 0):
        raise ValueError("grid steps must be positive")
    cells = [
        (p, theta)
        for p in _grid(p_min, p_max, p_step)
        for theta in _grid(0.0, 1.0, theta_step)
    ]
    nthreads = _thread_count(threads)
    if nthreads > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            rows = list(pool.map(lambda c: _diagram_cell(*c, with_family), cells))
    else:
        rows = [_diagram_cell(p, theta, with_family) for p, theta in cells]
    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def render_phase_diagram_csv(
    p_min: float,
    p_max: float,
    theta_step: float,
    p_step: float,
    *,
    with_family: bool,
    threads: int | None = None,
) -> str:
    rows = phase_diagram_rows(
        p_min, p_max, theta_step, p_step, with_family=with_family, threads=threads
    )
    lines = ["p,theta,status,source,family_max"]
    lines.extend(
        f"{_fmt(p)},{_fmt(theta)},{status},{source},{fam}"
        for p, theta, status, source, fam in rows
    )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _write_output(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_phase_diagram(args) -> int:
    csv_text = render_phase_diagram_csv(
        args.p_min, args.p_max, args.theta_step, args.p_step, with_family=args.with_family
    )
    _write_output(csv_text, args.out)
    return EXIT_OK


def cmd_norm(args) -> int:
    base = decode_superop(_load_json(args.map))
    state = decode_state(_load_json(args.state))
    emap = build_embedded(base, state, args.p, args.theta)
    cfg = EstimatorConfig(restarts=args.restarts, seed=args.seed)
    est = estimate_norm(emap.u_action, args.p, cfg)
    rep = compatibility(base, state)
    region = classify_region(args.p, args.theta)

    upper = None
    upper_source = None
    if rep.completely_positive:
        bound = rep.c_inf ** (1.0 - 1.0 / args.p) * rep.c1 ** (1.0 / args.p)
        if args.p >= 2.0:
            upper, upper_source = bound, Source.THM41.value
        elif args.theta == 0.5:
            upper, upper_source = bound, Source.HJX_HALF.value
    report = {
        "p": args.p,
        "theta": args.theta,
        "lower_bound": est.value,
        "witness": encode_matrix(est.witness),
        "upper_bound": upper,
        "upper_bound_source": upper_source,
        "region_status": region.status.value,
        "region_source": region.source.value,
        "c1": rep.c1,
        "c_inf": rep.c_inf,
        "cp": rep.completely_positive,
        "unital": rep.unital,
        "converged": est.converged,
        "iterations": est.iterations,
        "restarts_used": est.restarts_used,
    }
    _write_output(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_counterexample(args) -> int:
    if not (1.0 <= args.p < 2.0):
        raise ValueError(
            f"p = {args.p} is outside [1, 2): the pair is classified "
            f"{classify_region(args.p, args.theta).status.value} and the family "
            "provides no witness"
        )
    witness = find_counterexample(args.p, args.theta, args.tol)
    if witness is None:
        payload = "none"
    else:
        payload = {
            "c": witness.c,
            "t": witness.t,
            "a": witness.a,
            "b": witness.b,
            "m_value": witness.m_value,
            "p": witness.p,
            "theta": witness.theta,
            "tensor_factors_to_exceed_10": steps_to_exceed(
                witness.m_value, DIVERGENCE_THRESHOLD, DIVERGENCE_MAX_ROWS
            ),
        }
    _write_output(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import selfcheck  # deferred: selfcheck drives this module's CSV path

    results = selfcheck.run_all(args.seed)
    for res in results:
        print(f"{'PASS' if res.passed else 'FAIL'} {res.name}: {res.detail}")
    failed = [res.name for res in results if not res.passed]
    report = {
        "seed": args.seed,
        "passed": not failed,
        "failures": failed,
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
    }
    if args.out:
        _write_output(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
    if failed:
        print(json.dumps({"failures": failed}, sort_keys=True))
        return EXIT_VERIFY_FAILED
    print(f"all {len(results)} checks passed")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nclp",
        description="Induced Schatten-norm estimates, boundedness bounds, and "
        "counterexample scans for density-weighted matrix maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pd = sub.add_parser("phase-diagram", help="sweep (p, theta) into a CSV")
    pd.add_argument("--p-min", type=float, required=True)
    pd.add_argument("--p-max", type=float, required=True)
    pd.add_argument("--p-step", type=float, required=True)
    pd.add_argument("--theta-step", type=float, required=True)
    pd.add_argument("--with-family", action="store_true",
                    help="scan the 2x2 family per cell with p < 2")
    pd.add_argument("--out", help="output CSV path (default: stdout)")
    pd.add_argument("--seed", type=int, default=DEFAULT_SEED,
                    help="accepted for flag uniformity; the sweep is deterministic")
    pd.set_defaults(func=cmd_phase_diagram)

    nm = sub.add_parser("norm", help="estimate the induced norm of one map")
    nm.add_argument("--map", required=True, help="superoperator JSON path")
    nm.add_argument("--state", required=True, help="density-matrix JSON path")
    nm.add_argument("--p", type=float, required=True)
    nm.add_argument("--theta", type=float, required=True)
    nm.add_argument("--restarts", type=int, default=32)
    nm.add_argument("--seed", type=int, default=DEFAULT_SEED)
    nm.add_argument("--out", help="output JSON path (default: stdout)")
    nm.set_defaults(func=cmd_norm)

    ce = sub.add_parser("counterexample", help="scan the 2x2 family at (p, theta)")
    ce.add_argument("--p", type=float, required=True)
    ce.add_argument("--theta", type=float, required=True)
    ce.add_argument("--tol", type=float, default=1e-6)
    ce.add_argument("--out", help="output JSON path (default: stdout)")
    ce.set_defaults(func=cmd_counterexample)

    vf = sub.add_parser("verify", help="run the invariant suite")
    vf.add_argument("--seed", type=int, default=DEFAULT_SEED)
    vf.add_argument("--out", help="JSON report path")
    vf.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
