# Search
import json
import argparse
from openspectral.domains import UnitBall
from openspectral.ortho import packing_bound_check
from openspectral.search import load_strategy, growth_profile
from openspectral.utils import logger, result_visualizer, frame_to_csv

def parse_args():
    parser = argparse.ArgumentParser()
    parser.add_argument('--config_path', type=str, default='./configs/search_config.json')
    parser.add_argument('--dimension', type=int, default=2)
    parser.add_argument('--R', type=float, nargs='+', default=[1, 2, 3])
    args = parser.parse_args()
    return args

def display_results(result, d, R):
    report = packing_bound_check(result.point_set, R, UnitBall(d).separation_radius())
    display_result = {'domain': 'ball:{}'.format(d), 'R': R, 'strategy': result.strategy, 'size': result.size,
                      'packing_bound': report.bound, 'min_distance': report.min_pairwise_distance,
                      'truncated': result.truncated}
    result_visualizer(display_result)

def main(config, d, R_values):
    strategy = load_strategy(config["search"])
    logger.info("Search ball:{} with the {} strategy".format(d, strategy.name))
    result = strategy.run(d, R_values[-1])
    display_results(result, d, R_values[-1])

    logger.info("Growth profile over R = {}".format(R_values))
    print(frame_to_csv(growth_profile(d, R_values, strategy)), end="")


if __name__=='__main__':
    args = parse_args()
    with open(args.config_path, 'r') as f:
        config = json.load(f)
    config.setdefault("search", {"name": "chain"})
    config["search"].setdefault("tol", config.get("ortho", {}).get("tol"))
    main(config, args.dimension, sorted(args.R))
