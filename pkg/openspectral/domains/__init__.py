from typing import *
from .domain import Domain, ZeroSetDescription, is_exact
from .cube_domain import UnitCube, CubeZeroSet
from .ball_domain import UnitBall, BallZeroSet, ball_volume, default_ball_tolerance

DOMAINS = {
    "cube": UnitCube,
    "ball": UnitBall,
}


def load_domain(config):
    return DOMAINS[config["name"].lower()](**config)


def parse_domain(token: str, **kwargs) -> Domain:
    """Build a domain from its command-line form ``cube:D`` or ``ball:D``."""
    try:
        name, dimension = token.split(":")
        dimension = int(dimension)
    except ValueError:
        raise ValueError("'{}' is not a valid domain, expected cube:D or ball:D".format(token))
    if name.lower() not in DOMAINS:
        raise ValueError("'{}' is not a valid domain kind, expected one of {}".format(name, sorted(DOMAINS)))
    return load_domain(dict(kwargs, name=name, dimension=dimension))


def transform_value(domain: Domain, xi: Sequence) -> complex:
    return domain.transform_value(xi)


def zero_set(domain: Domain, horizon: float) -> ZeroSetDescription:
    return domain.zero_set(horizon)


def in_zero_set(zs: ZeroSetDescription, xi: Sequence, tol: Optional[float] = None) -> bool:
    return zs.contains(xi, tol)


def inner_product_numeric(domain: Domain, lam: Sequence, lam_prime: Sequence, resolution: Optional[int] = None) -> complex:
    return domain.inner_product_numeric(lam, lam_prime, resolution)
