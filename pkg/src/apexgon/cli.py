"""Command-line front end: ``apexgon {generate,optimize,verify,chords,body}``.

Every command except ``generate`` prints a JSON report (schema
``apexgon/1``).  Exit codes: 0 success, 1 counterexample found by
``verify``, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import math
import platform
import sys
import time
import warnings

import numpy as np

from . import __version__
from .bodies import Disk, Ellipse, PolygonBody, RegularGon, estimate_alpha_Ck, sample_boundary
from .chords import audit_structure, build_chord_graph
from .exceptions import ApexgonError, HypothesisNotEstablished
from .generators import Generator, generate, random_convex, unit_perimeter
from .geometry import ConvexPolygon, perimeter, regular_polygon
from .io import dumps_polygon, load_polygon, polygon_to_dict
from .measures import ErrorMeasure
from .optimize import brute_force_opt, optimal_subpolygon
from .svg import SvgScene
from .worst import WORST_MAX_N, ScanConfig, is_worst_approximable, perimeter_bound_check, run_scan

SCHEMA = "apexgon/1"


class UsageError(Exception):
    pass


def _json_default(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, (tuple, set)):
        return list(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, default=_json_default) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _versions() -> dict:
    return {"apexgon": __version__, "numpy": np.__version__, "python": platform.python_version()}


# ---------------------------------------------------------------------------
# argument helpers


def parse_range(text: str) -> tuple[int, int]:
    """``"5..9"`` -> (5, 9); a single integer gives a one-element range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected LO..HI") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_schedule(text: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad schedule {text!r}") from None
    if not vals or min(vals) < 3:
        raise argparse.ArgumentTypeError("schedule needs sample counts >= 3")
    return vals


def polygon_from_spec(spec: str) -> ConvexPolygon:
    """``regular:m:R``, ``random:n:seed`` or ``file:PATH`` (a bare path also works)."""
    kind, _, rest = spec.partition(":")
    if kind == "regular":
        parts = rest.split(":")
        try:
            m = int(parts[0])
            R = float(parts[1]) if len(parts) > 1 and parts[1] else 1.0
        except (ValueError, IndexError):
            raise UsageError(f"bad regular spec {spec!r}, expected regular:m:R") from None
        if m < 3 or not (R > 0 and math.isfinite(R)):
            raise UsageError(f"regular polygon needs m >= 3 and R > 0, got {spec!r}")
        return regular_polygon(m, R)
    if kind == "random":
        parts = rest.split(":")
        try:
            n = int(parts[0])
            seed = int(parts[1]) if len(parts) > 1 and parts[1] else 0
        except (ValueError, IndexError):
            raise UsageError(f"bad random spec {spec!r}, expected random:n:seed") from None
        if n < 3:
            raise UsageError(f"random polygon needs n >= 3, got {spec!r}")
        return random_convex(n, np.random.default_rng(seed))
    path = rest if kind == "file" else spec
    try:
        return load_polygon(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path!r} is not JSON: {exc}") from None


def body_from_spec(spec: str):
    kind, _, rest = spec.partition(":")
    if kind == "disk":
        return Disk(float(rest) if rest else 1.0)
    if kind == "ellipse":
        if rest:
            a, _, b = rest.partition(":")
            return Ellipse(float(a), float(b or 1.0))
        return Ellipse()
    if kind == "regular":
        m = int(rest.split(":")[0])
        if m < 3:
            raise UsageError("regular body needs m >= 3")
        return RegularGon(m)
    if kind == "file":
        return PolygonBody(polygon_from_spec(spec))
    raise UsageError(f"unknown shape {spec!r}")


# ---------------------------------------------------------------------------
# svg helpers


def _polygon_scene(P: ConvexPolygon, labels: bool = True) -> SvgScene:
    scene = SvgScene()
    scene.add_polygon(P.vertices, stroke="#888")
    for i, v in enumerate(P.vertices):
        scene.add_point(v)
        if labels:
            scene.add_label(v, str(i))
    return scene


def _write_svg(scene: SvgScene | None, path: str | None):
    if path and scene is not None:
        with open(path, "w") as fh:
            fh.write(scene.render())


# ---------------------------------------------------------------------------
# commands; each returns (config_echo, results, exit_code, scene)


def cmd_generate(args):
    P = polygon_from_spec(args.spec)
    text = dumps_polygon(P)
    _emit(text, args.out)
    msg = f"n={P.n} perimeter={perimeter(P)!r}\n"
    (sys.stdout if args.out else sys.stderr).write(msg)
    _write_svg(_polygon_scene(P), args.svg)
    return 0


def cmd_optimize(args):
    P = polygon_from_spec(args.polygon)
    measure = ErrorMeasure.parse(args.measure)
    method = args.method
    if method == "auto":
        method = "search"
    if method == "brute":
        res = brute_force_opt(P, measure, args.k)
    else:
        res = optimal_subpolygon(P, measure, args.k)
    scene = _polygon_scene(P)
    scene.add_polygon(P.subpolygon(res.chosen).vertices if len(res.chosen) >= 3 else
                      [P[i] for i in res.chosen], stroke="#1a5fb4")
    if res.witness is not None:
        scene.add_point(P[res.witness], fill="#c33")
    echo = {"polygon": polygon_to_dict(P), "measure": measure.value, "k": args.k,
            "method": args.method}
    return echo, res.to_dict(), 0, scene


def _scan_bound(args, conjecture: str):
    """Random-polygon sweep of the aperture or Hausdorff guarantee."""
    lo, hi = args.n
    gen = Generator.parse(args.generator)
    measure = ErrorMeasure.APERTURE_COMPLEMENT if conjecture == "aperture" else ErrorMeasure.HAUSDORFF
    per_n, bad = {}, []
    k = args.k
    for n in range(lo, hi + 1):
        tally = {"instances": 0, "passed": 0}
        for i in range(args.instances):
            P = generate(gen, n, np.random.default_rng([args.seed, n, i]))
            if conjecture == "hausdorff":
                P = unit_perimeter(P)
            err = optimal_subpolygon(P, measure, k).error
            if conjecture == "aperture":
                value, bound = math.pi - err, (1 - 2 / (k + 1)) * math.pi
                ok = value >= bound - args.tolerance
            else:
                value, bound = err, math.sin(math.pi / (k + 1)) / (k + 1)
                ok = value <= bound + args.tolerance
            tally["instances"] += 1
            if ok:
                tally["passed"] += 1
            else:
                bad.append({"n": n, "index": i, "k": k, "value": value, "bound": bound,
                            "vertices": [list(v) for v in P.vertices]})
        per_n[str(n)] = tally
    return per_n, bad


def _scan_perimeter(args):
    k = args.k
    n = k + 1
    gen = Generator.parse(args.generator)
    tally = {"instances": 0, "passed": 0}
    bad = []
    for i in range(args.instances):
        P = generate(gen, n, np.random.default_rng([args.seed, n, i]))
        chk = perimeter_bound_check(P, k, tol=args.tolerance)
        tally["instances"] += 1
        if chk.holds:
            tally["passed"] += 1
        else:
            bad.append({"n": n, "index": i, "k": k, "perimeter": chk.perimeter,
                        "bound": chk.bound, "vertices": [list(v) for v in P.vertices]})
    return {str(n): tally}, bad


def cmd_verify(args):
    conj = args.conjecture
    k = args.k
    if args.n is None:
        args.n = (k + 2, min(k + 6, WORST_MAX_N)) if conj == "worst-size" else (k + 1, k + 8)
    lo, hi = args.n
    if lo < 3:
        raise UsageError("--n must start at 3 or more")
    echo = {"conjecture": conj, "k": k, "n_range": list(args.n), "instances": args.instances,
            "generator": Generator.parse(args.generator).value, "tolerance": args.tolerance}
    scene = None
    if conj == "worst-size":
        measures = ([ErrorMeasure.HAUSDORFF, ErrorMeasure.APERTURE_COMPLEMENT]
                    if args.measure == "both" else [ErrorMeasure.parse(args.measure)])
        echo["measures"] = [m.value for m in measures]
        results = {"scans": [], "counterexamples": []}
        for m in measures:
            cfg = ScanConfig(k, tuple(args.n), args.instances, args.generator, args.seed, m)
            out = run_scan(cfg, jobs=args.jobs)
            results["scans"].append(out.to_dict())
            results["counterexamples"] += out.counterexamples
        bad = results["counterexamples"]
    elif conj == "perimeter":
        per_n, bad = _scan_perimeter(args)
        echo["n_range"] = [k + 1, k + 1]
        results = {"per_n": per_n, "counterexamples": bad}
    else:
        per_n, bad = _scan_bound(args, conj)
        results = {"per_n": per_n, "counterexamples": bad}
    results["passed"] = not bad
    if bad:
        scene = _polygon_scene(ConvexPolygon(tuple(tuple(v) for v in bad[0]["vertices"])))
    return echo, results, (1 if bad else 0), scene


def cmd_chords(args):
    P = polygon_from_spec(args.polygon)
    measure = ErrorMeasure.parse(args.measure)
    if not (args.sigma >= 0 and math.isfinite(args.sigma)):
        raise UsageError("--sigma must be a finite number >= 0")
    G = build_chord_graph(P, measure, args.sigma)
    results = {"successor": list(G.successor), "lengths": list(G.lengths),
               "in_degrees": G.in_degrees()}
    echo = {"polygon": polygon_to_dict(P), "measure": measure.value, "sigma": args.sigma,
            "k": args.k}
    scene = _polygon_scene(P)
    for i, j in enumerate(G.successor):
        scene.add_chord(P[i], P[j])
    if args.k is not None:
        established = False
        if P.n <= WORST_MAX_N:
            v = is_worst_approximable(P, measure, args.k, exhaustive=True)
            established = v.is_worst and v.max_proper_phi_k <= args.sigma < v.phi_k_P
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", HypothesisNotEstablished)
            report = audit_structure(P, measure, args.k, args.sigma, established=established)
        results["structure"] = report.to_dict()
        for s, t, _ in report.bases:
            scene.add_chord(P[s], P[t], stroke="#1a5fb4", stroke_dasharray="0.02")
    return echo, results, 0, scene


def cmd_body(args):
    body = body_from_spec(args.shape)
    trace = estimate_alpha_Ck(body, args.k, args.schedule, dense_n=args.dense_n)
    echo = {"shape": body.to_dict(), "k": args.k, "schedule": args.schedule,
            "dense_n": args.dense_n}
    results = trace.to_dict()
    results["tangent_walk_bound"] = (1 - 2 / args.k) * math.pi
    scene = SvgScene()
    scene.add_polygon([tuple(p) for p in body.boundary_points(512)], stroke="#888")
    Pn = sample_boundary(body, trace.samples_n[-1])
    scene.add_polygon(Pn.subpolygon(trace.chosen[-1]).vertices, stroke="#1a5fb4")
    return echo, results, 0, scene


COMMANDS = {"optimize": cmd_optimize, "verify": cmd_verify, "chords": cmd_chords, "body": cmd_body}


# ---------------------------------------------------------------------------
# parser


def _add_globals(p, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--out", default=d(None), help="write the report here instead of stdout")
    p.add_argument("--svg", default=d(None), help="also write an SVG figure")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes for scans")
    p.add_argument("--seed", type=int, default=d(0), help="seed for generated instances")
    p.add_argument("--tolerance", type=float, default=d(1e-9),
                   help="slack for report-level bound comparisons")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apexgon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"apexgon {__version__}")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a polygon JSON file")
    g.add_argument("spec", help="regular:m:R, random:n:seed or file:PATH")

    o = sub.add_parser("optimize", help="best k-vertex subpolygon")
    o.add_argument("polygon", help="polygon JSON path or generator spec")
    o.add_argument("--measure", choices=["hausdorff", "aperture"], default="hausdorff")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--method", choices=["auto", "brute", "search"], default="auto")

    v = sub.add_parser("verify", help="sweep random polygons against a bound")
    v.add_argument("--conjecture", choices=["aperture", "hausdorff", "worst-size", "perimeter"],
                   required=True)
    v.add_argument("--k", type=int, default=3)
    v.add_argument("--n", type=parse_range, default=None, help="vertex-count range LO..HI")
    v.add_argument("--instances", type=int, default=20)
    v.add_argument("--generator", choices=[g.value for g in Generator], default="random")
    v.add_argument("--measure", choices=["hausdorff", "aperture", "both"], default="both",
                   help="measures for worst-size scans")

    c = sub.add_parser("chords", help="chord graph and structural audit")
    c.add_argument("polygon")
    c.add_argument("--measure", choices=["hausdorff", "aperture"], default="hausdorff")
    c.add_argument("--sigma", type=float, required=True)
    c.add_argument("--k", type=int, default=None, help="also run the structural audit")

    b = sub.add_parser("body", help="inscribed k-gon refinement for a convex body")
    b.add_argument("--shape", default="disk", help="disk[:r], ellipse[:a:b], regular:m or file:PATH")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--schedule", type=parse_schedule, default=[8, 16, 32, 64, 128])
    b.add_argument("--dense-n", type=int, default=4096)

    for p in (g, o, v, c, b):
        _add_globals(p, suppress=True)
    return parser


def _validate(args, parser):
    if getattr(args, "k", None) is not None and args.k < 3:
        parser.error("--k must be at least 3")
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    if getattr(args, "instances", 1) < 1:
        parser.error("--instances must be positive")
    if not (args.tolerance >= 0):
        parser.error("--tolerance must be non-negative")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    t0 = time.perf_counter()
    try:
        if args.command == "generate":
            return cmd_generate(args)
        echo, results, code, scene = COMMANDS[args.command](args)
    except (ApexgonError, UsageError, ValueError) as exc:
        err_code = getattr(exc, "code", None) or ("usage" if isinstance(exc, UsageError)
                                                  else "invalid_value")
        _emit(dumps({"schema": SCHEMA, "error": {"code": err_code, "message": str(exc)}}), args.out)
        return 2
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "config_echo": echo,
        "results": results,
        "versions": _versions(),
        "seed": args.seed,
        "wall_time_ms": int(round((time.perf_counter() - t0) * 1000)),
    }
    _emit(dumps(report), args.out)
    _write_svg(scene, args.svg)
    return code


if __name__ == "__main__":
    sys.exit(main())
