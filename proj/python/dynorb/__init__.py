"""Exact orbit and integral-point experiments for rational maps of P^1."""

import json

from . import _core
from ._core import DynorbError, canheight, format_map, preper

__all__ = ["DynorbError", "orbit", "canheight", "preper", "density", "avg", "ffavg", "verify", "format_map"]


def orbit(map, point, s="", ncap=16, budget=1_000_000):
    return json.loads(_core.orbit(map, point, s, ncap, budget))


def density(map, b, s="", workers=1):
    return json.loads(_core.density(map, s, list(b), workers))


def avg(family, beta, b, s="", ncap=16, workers=1):
    return json.loads(_core.avg(family, beta, s, list(b), ncap, workers))


def ffavg(p, d, b, beta="f^4", workers=1):
    return json.loads(_core.ffavg(p, d, beta, list(b), workers))


def verify(seed=1, workers=1):
    return json.loads(_core.verify(seed, workers))
