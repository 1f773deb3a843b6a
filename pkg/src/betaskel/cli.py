"""Command-line interface.

Subcommands: generate, skeleton, curve, fit, stability, classify, scan.
Flags may also be supplied through a `key = value` config file (--config);
explicit flags win over config entries, which win over built-in defaults.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import io
from .analysis import beta_grid, coefficient_scan, curve as compute_curve, fit_power
from .discrimination import Thresholds, classify as classify_features, extract_features
from .errors import BetaSkelError
from .generators import FAMILIES, GeneratorSpec
from .geometry import CLOSED, RULES
from .skeleton import build_fast
from .stability import defect_trace, is_stable, limit_graph

log = logging.getLogger("betaskel")

_GEN_PARAM_KEYS = {
    "random_disc": ("n", "big_radius", "point_radius"),
    "rect_lattice": ("rows", "cols", "spacing"),
    "hex_lattice": ("rows", "cols", "spacing"),
    "defect_lattice": ("rows", "cols", "spacing", "defect_row", "defect_col", "jitter"),
    "spiral_web": ("turns", "points_per_turn", "rays", "points_per_ray", "pitch"),
    "nested_circles": (
        "circles",
        "per_circle",
        "radius_step",
        "center_jitter",
        "point_jitter",
        "include_center_point",
    ),
}

_INT_KEYS = {
    "n",
    "rows",
    "cols",
    "defect_row",
    "defect_col",
    "turns",
    "points_per_turn",
    "rays",
    "points_per_ray",
    "circles",
    "per_circle",
}


@dataclass
class RunConfig:
    """Everything a run needs; a run is reproducible from this plus the seed."""

    command: str
    in_path: str | None = None
    in_curve: str | None = None
    out: str | None = None
    out_edges: str | None = None
    out_svg: str | None = None
    family: str | None = None
    gen_params: dict = field(default_factory=dict)
    seed: int | None = None
    beta: float = 1.0
    beta_min: float = 1.0
    beta_max: float = 50.0
    step: float = 0.1
    rule: str = CLOSED
    seeds: int = 10
    n_list: tuple[int, ...] = ()
    defect_index: int | None = None
    thresholds: Thresholds = field(default_factory=Thresholds)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betaskel",
        description="Build beta-skeletons, measure edge loss, fit power laws, "
        "analyse stability, and classify point sets.",
    )
    parser.add_argument("--config", help="key=value config file supplying defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_grid(p):
        p.add_argument("--beta-min", type=float)
        p.add_argument("--beta-max", type=float)
        p.add_argument("--step", type=float)
        p.add_argument("--rule", choices=RULES)

    g = sub.add_parser("generate", help="write a generated point set")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--seed", type=int)
    g.add_argument("--out", required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--big-radius", type=float)
    g.add_argument("--point-radius", type=float)
    g.add_argument("--rows", type=int)
    g.add_argument("--cols", type=int)
    g.add_argument("--spacing", type=float)
    g.add_argument("--defect-row", type=int)
    g.add_argument("--defect-col", type=int)
    g.add_argument("--jitter", type=float)
    g.add_argument("--turns", type=int)
    g.add_argument("--points-per-turn", type=int)
    g.add_argument("--rays", type=int)
    g.add_argument("--points-per-ray", type=int)
    g.add_argument("--pitch", type=float)
    g.add_argument("--circles", type=int)
    g.add_argument("--per-circle", type=int)
    g.add_argument("--radius-step", type=float)
    g.add_argument("--center-jitter", type=float)
    g.add_argument("--point-jitter", type=float)
    g.add_argument("--no-center-point", action="store_true")

    s = sub.add_parser("skeleton", help="build one skeleton from a point file")
    s.add_argument("--in", dest="in_path", required=True)
    s.add_argument("--beta", type=float, required=True)
    s.add_argument("--rule", choices=RULES)
    s.add_argument("--out-edges")
    s.add_argument("--out-svg")

    c = sub.add_parser("curve", help="edge-disappearance curve over a beta grid")
    c.add_argument("--in", dest="in_path", required=True)
    add_grid(c)
    c.add_argument("--out", required=True)

    f = sub.add_parser("fit", help="power fit of a curve CSV")
    f.add_argument("--in-curve", required=True)
    f.add_argument("--out", required=True)

    st = sub.add_parser("stability", help="limit graph, stability, defect trace")
    st.add_argument("--in", dest="in_path", required=True)
    add_grid(st)
    st.add_argument("--defect-index", type=int)
    st.add_argument("--out", required=True)

    cl = sub.add_parser("classify", help="random-vs-structured verdict")
    cl.add_argument("--in", dest="in_path", required=True)
    add_grid(cl)
    cl.add_argument("--seeds", type=int, help="number of baseline seeds")
    cl.add_argument("--seed", type=int, help="root seed for the baseline ensemble")
    cl.add_argument("--out", required=True)

    sc = sub.add_parser("scan", help="coefficient scan over point counts")
    sc.add_argument("--n-list", required=True, help="comma-separated point counts")
    add_grid(sc)
    sc.add_argument("--seed", type=int)
    sc.add_argument("--out", required=True)
    return parser


def _resolve(args, cfg: dict, key: str, default, cast):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in cfg:
        raw = cfg[key]
        if cast is bool:
            return raw.lower() in ("1", "true", "yes", "on")
        return cast(raw)
    return default


def _config_from_args(args) -> RunConfig:
    cfg = io.read_config(args.config) if args.config else {}
    rc = RunConfig(command=args.command)
    rc.in_path = getattr(args, "in_path", None)
    rc.in_curve = getattr(args, "in_curve", None)
    rc.out = getattr(args, "out", None)
    rc.out_edges = getattr(args, "out_edges", None) or cfg.get("out_edges")
    rc.out_svg = getattr(args, "out_svg", None) or cfg.get("out_svg")
    rc.seed = _resolve(args, cfg, "seed", None, int)
    rc.beta = _resolve(args, cfg, "beta", 1.0, float)
    rc.beta_min = _resolve(args, cfg, "beta_min", 1.0, float)
    default_max = 10.0 if args.command == "classify" else 50.0
    rc.beta_max = _resolve(args, cfg, "beta_max", default_max, float)
    rc.step = _resolve(args, cfg, "step", 0.1, float)
    rc.rule = _resolve(args, cfg, "rule", CLOSED, str)
    rc.seeds = _resolve(args, cfg, "seeds", 10, int)
    rc.defect_index = _resolve(args, cfg, "defect_index", None, int)
    rc.thresholds = Thresholds(
        structured_ratio=float(cfg.get("structured_ratio", 1.5)),
        random_ratio=float(cfg.get("random_ratio", 1.15)),
        alpha_margin_sigmas=float(cfg.get("alpha_margin_sigmas", 2.0)),
    )
    if args.command == "generate":
        rc.family = args.family or cfg.get("family")
        params = {}
        for key in _GEN_PARAM_KEYS[rc.family]:
            if key == "include_center_point":
                if getattr(args, "no_center_point", False):
                    params[key] = False
                elif "include_center_point" in cfg:
                    params[key] = cfg["include_center_point"].lower() in (
                        "1",
                        "true",
                        "yes",
                        "on",
                    )
                continue
            cast = int if key in _INT_KEYS else float
            value = _resolve(args, cfg, key, None, cast)
            if value is not None:
                params[key] = value
        rc.gen_params = params
    if args.command == "scan":
        raw = args.n_list or cfg.get("n_list", "")
        rc.n_list = tuple(int(tok) for tok in str(raw).split(",") if tok.strip())
    return rc


def _grid_banner(rc: RunConfig) -> str:
    count = int(round((rc.beta_max - rc.beta_min) / rc.step)) + 1
    return f"beta grid {rc.beta_min:g}..{rc.beta_max:g} step {rc.step:g} ({count} values)"


def _cmd_generate(rc: RunConfig) -> int:
    spec = GeneratorSpec(family=rc.family, parameters=rc.gen_params, seed=rc.seed)
    ps = spec.build()
    io.write_points(ps, rc.out)
    log.info("generated %d points (%s) -> %s", len(ps), rc.family, rc.out)
    return 0


def _cmd_skeleton(rc: RunConfig) -> int:
    ps = io.read_points(rc.in_path)
    skel = build_fast(ps, rc.beta, rc.rule)
    log.info("beta=%g rule=%s: %d edges", rc.beta, rc.rule, len(skel.edges))
    if rc.out_edges:
        io.write_edges(skel, rc.out_edges)
    if rc.out_svg:
        io.write_skeleton_svg(ps, skel, rc.out_svg)
    if not rc.out_edges and not rc.out_svg:
        log.warning("no --out-edges or --out-svg given; nothing written")
    return 0


def _cmd_curve(rc: RunConfig) -> int:
    ps = io.read_points(rc.in_path)
    log.info("%s over %d points", _grid_banner(rc), len(ps))
    cv = compute_curve(ps, rc.beta_min, rc.beta_max, rc.step, rc.rule)
    io.write_curve(cv, rc.out)
    log.info(
        "curve done: e(%g)=%d .. e(%g)=%d -> %s",
        cv.betas[0],
        cv.edges[0],
        cv.betas[-1],
        cv.edges[-1],
        rc.out,
    )
    return 0


def _cmd_fit(rc: RunConfig) -> int:
    cv = io.read_curve(rc.in_curve)
    fit = fit_power(cv)
    io.write_fit_report(fit, rc.out, excluded=io.excluded_range(cv))
    log.info(
        "fit: c=%.6g alpha=%.6g r=%.4f converged=%s", fit.c, fit.alpha, fit.r, fit.converged
    )
    return 0


def _cmd_stability(rc: RunConfig) -> int:
    ps = io.read_points(rc.in_path)
    grid = beta_grid(rc.beta_min, rc.beta_max, rc.step)
    log.info("%s over %d points", _grid_banner(rc), len(ps))
    stable = is_stable(ps, rc.rule)
    lim = limit_graph(ps)
    report = defect_trace(ps, grid, rc.defect_index)
    base_edges = len(build_fast(ps, float(grid[0]), rc.rule).edges)
    lines = [
        f"is_stable={str(stable).lower()}",
        f"base_edges={base_edges}",
        f"limit_edges={len(lim.edges)}",
        f"beta_stabilized={report.beta_stabilized!r}",
        f"grid={rc.beta_min:g}:{rc.beta_max:g}:{rc.step:g}",
        "affected_rows=" + ";".join(str(r) for r in sorted(report.affected_rows)),
        "affected_cols=" + ";".join(str(c) for c in sorted(report.affected_cols)),
        "[removed_edges]",
        "beta,i,j",
    ]
    for beta, edges in report.removed_edges_by_beta:
        for i, j in edges:
            lines.append(f"{beta:.10g},{i},{j}")
    Path(rc.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    log.info("stability report -> %s", rc.out)
    return 0


def _cmd_classify(rc: RunConfig) -> int:
    ps = io.read_points(rc.in_path)
    log.info("%s over %d points", _grid_banner(rc), len(ps))
    cv = compute_curve(ps, rc.beta_min, rc.beta_max, rc.step, rc.rule)
    root = rc.seed if rc.seed is not None else 0
    baseline_seeds = [root + k + 1 for k in range(rc.seeds)]
    features = extract_features(cv, baseline_seeds, rule=rc.rule)
    verdict = classify_features(features, rc.thresholds)
    lines = [
        f"classification={verdict.classification}",
        f"n={features.n}",
        f"alpha={features.alpha!r}",
        f"c={features.c!r}",
        f"r={features.r!r}",
        f"ratio_at_10={features.ratio_at_10!r}",
        f"crossover_beta={features.crossover_beta!r}",
        f"baseline_alpha_mean={features.baseline_alpha_mean!r}",
        f"baseline_alpha_std={features.baseline_alpha_std!r}",
        f"baseline_seeds={';'.join(str(s) for s in baseline_seeds)}",
        "[evidence]",
        "criterion,value,threshold,passed",
    ]
    for name, value, threshold, passed in verdict.evidence:
        lines.append(f"{name},{value!r},{threshold!r},{str(passed).lower()}")
    Path(rc.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    log.info("verdict: %s -> %s", verdict.classification, rc.out)
    return 0


def _cmd_scan(rc: RunConfig) -> int:
    rows = coefficient_scan(
        rc.n_list, rc.beta_min, rc.beta_max, rc.step,
        seed=rc.seed if rc.seed is not None else 0, rule=rc.rule,
    )
    lines = ["n,c,alpha,r"]
    lines += [f"{row.n},{row.c!r},{row.alpha!r},{row.r!r}" for row in rows]
    Path(rc.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    log.info("scan of %d point counts -> %s", len(rows), rc.out)
    return 0


_DISPATCH = {
    "generate": _cmd_generate,
    "skeleton": _cmd_skeleton,
    "curve": _cmd_curve,
    "fit": _cmd_fit,
    "stability": _cmd_stability,
    "classify": _cmd_classify,
    "scan": _cmd_scan,
}


def run(config: RunConfig) -> int:
    """Execute one configured command; returns a process exit status."""
    try:
        return _DISPATCH[config.command](config)
    except BetaSkelError as exc:
        log.error("%s", exc)
        return 2
    except OSError as exc:
        log.error("i/o failure: %s", exc)
        return 2


def main(argv=None) -> int:
    logging.basicConfig(
        level=logging.INFO, format="%(levelname)s %(message)s", stream=sys.stderr
    )
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
    except BetaSkelError as exc:
        log.error("%s", exc)
        return 2
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
