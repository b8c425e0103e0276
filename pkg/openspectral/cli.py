# Command line front end
import argparse
import json
import sys
from typing import *

from openspectral.contradiction import contradiction_table, contradiction_summary
from openspectral.distances import distinct_distances
from openspectral.domains import parse_domain, UnitBall
from openspectral.ortho import PointSet, check_orthogonal
from openspectral.search import load_strategy
from openspectral.utils import logger, init_logger, result_visualizer, frame_to_csv

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_ERROR = 2

DEFAULT_CONFIG = {
    "specfun": {},
    "domains": {"resolution": 64},
    "ortho": {"tol": None},
    "distances": {"mode": "exact", "cluster_tol": 1e-9},
    "search": {"name": "chain", "budget": 100000, "max_candidates": 2000},
    "contradiction": {"dimension": 2, "R_list": [10, 20, 40, 80, 160], "density_constant": 1.0},
}


def load_config(path: Optional[str]) -> Dict:
    config = {key: dict(value) for key, value in DEFAULT_CONFIG.items()}
    if path:
        with open(path, "r", encoding="utf-8") as f:
            for key, value in json.load(f).items():
                config.setdefault(key, {}).update(value)
    return config


def pick(flag, default):
    return default if flag is None else flag


def emit(text: str, output: Optional[str]):
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def build_domain(token: str, config: Dict):
    return parse_domain(token, resolution=config["domains"].get("resolution", 64), zero_options=config["specfun"])


def load_points(path: str, exact: Optional[bool] = None) -> PointSet:
    """``exact=None`` reads rationals exactly when every token allows it and floats otherwise."""
    if exact is None:
        try:
            return PointSet.from_csv(path, exact=True)
        except ValueError:
            return PointSet.from_csv(path, exact=False)
    return PointSet.from_csv(path, exact=exact)


def cmd_zeros(args, config) -> int:
    domain = build_domain(args.domain, config)
    if not isinstance(domain, UnitBall):
        raise ValueError("'{}' has a symbolic zero set; zeros are listed for ball:D only".format(args.domain))
    if args.horizon is None or not args.horizon > 0:
        raise ValueError("'{}' is not a valid horizon: must be positive".format(args.horizon))
    zs = domain.zero_set(args.horizon)
    logger.info("{} root radii up to {:g}".format(len(zs), args.horizon))
    emit(zs.to_csv(), args.output)
    return EXIT_OK


def cmd_check(args, config) -> int:
    domain = build_domain(args.domain, config)
    points = load_points(args.points, True if args.exact else None)
    report = check_orthogonal(domain, points, tol=pick(args.tol, config["ortho"].get("tol")))
    emit(report.to_json(), args.output)
    return EXIT_OK if report.verdict else EXIT_VERDICT_FALSE


def cmd_distances(args, config) -> int:
    mode = pick(args.mode, config["distances"].get("mode", "exact")).lower()
    points = load_points(args.points, mode == "exact")
    summary = distinct_distances(points, mode=mode, tol=pick(args.tol, config["distances"].get("cluster_tol", 1e-9)))
    emit(summary.to_csv(), args.output)
    return EXIT_OK


def cmd_contradiction(args, config) -> int:
    section = config["contradiction"]
    d = pick(args.dimension, section.get("dimension", 2))
    table = contradiction_table(d, pick(args.R, section.get("R_list", [])),
                                pick(args.density_constant, section.get("density_constant", 1.0)),
                                zero_options=config["specfun"])
    emit(frame_to_csv(table), args.output)
    result_visualizer(contradiction_summary(table, d), title="Contradiction ball:{}".format(d))
    return EXIT_OK


def cmd_search(args, config) -> int:
    domain = build_domain(args.domain, config)
    if not isinstance(domain, UnitBall):
        raise ValueError("search runs on ball:D domains, got '{}'".format(args.domain))
    strategy_config = dict(config["search"])
    if args.strategy is not None:
        strategy_config["name"] = args.strategy
    if args.budget is not None:
        strategy_config["budget"] = args.budget
    strategy_config["tol"] = pick(args.tol, strategy_config.get("tol", config["ortho"].get("tol")))
    strategy = load_strategy(strategy_config)
    # all strategies are deterministic; the seed is recorded with the run
    result = strategy.run(domain.dimension, args.R)
    emit(result.point_set.to_csv(), args.output)
    if args.log:
        result.write_log(args.log)
    summary = result.summary()
    summary["seed"] = args.seed
    result_visualizer(summary, title="Search {} R={:g}".format(domain.token, args.R))
    return EXIT_OK


COMMANDS = {
    "zeros": cmd_zeros,
    "check": cmd_check,
    "distances": cmd_distances,
    "contradiction": cmd_contradiction,
    "search": cmd_search,
}


def parse_args(argv: Optional[Sequence[str]] = None):
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--domain", type=str, default="ball:2", help="cube:D or ball:D")
    shared.add_argument("--tol", type=float, default=None)
    shared.add_argument("--output", type=str, default=None, help="write the result here instead of stdout")
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--config_path", type=str, default=None)
    shared.add_argument("--log_file", type=str, default=None)
    shared.add_argument("--log_level", type=str, default="INFO")

    parser = argparse.ArgumentParser(prog="openspectral")
    sub = parser.add_subparsers(dest="command", required=True)

    zeros = sub.add_parser("zeros", parents=[shared], help="root radii of the ball zero set")
    zeros.add_argument("--horizon", type=float, required=True)

    check = sub.add_parser("check", parents=[shared], help="orthogonality of a point set")
    check.add_argument("--points", type=str, required=True)
    check.add_argument("--exact", action="store_true", help="require exact rational coordinates")

    distances = sub.add_parser("distances", parents=[shared], help="distinct distances of a point set")
    distances.add_argument("--points", type=str, required=True)
    distances.add_argument("--mode", type=str, choices=["exact", "clustered"], default=None)

    contradiction = sub.add_parser("contradiction", parents=[shared], help="available against demanded distances")
    contradiction.add_argument("--dimension", type=int, default=None)
    contradiction.add_argument("--R", type=float, nargs="*", default=None)
    contradiction.add_argument("--density_constant", type=float, default=None)

    search = sub.add_parser("search", parents=[shared], help="search for orthogonal sets in the ball")
    search.add_argument("--R", type=float, required=True)
    search.add_argument("--strategy", type=str, default=None, choices=["chain", "clique"])
    search.add_argument("--budget", type=int, default=None)
    search.add_argument("--log", type=str, default=None, help="JSON lines search log")

    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR
    try:
        init_logger(args.log_file, log_level=args.log_level)
        config = load_config(args.config_path)
        return COMMANDS[args.command](args, config)
    except (ValueError, RuntimeError, OSError) as e:
        logger.error("{}: {}".format(type(e).__name__, e))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
