"""Packing and covering A-paths in group-labelled graphs.

Graphs, groups and results travel as plain dicts in the same JSON schema the
``gammapath`` command line uses.
"""

import json as _json

from . import _core
from ._core import GammapathError, InternalError, InvalidArgument, LimitExceeded, PreconditionFailed

__all__ = [
    "GammapathError",
    "InternalError",
    "InvalidArgument",
    "LimitExceeded",
    "PreconditionFailed",
    "blocks",
    "chain",
    "classify",
    "cover",
    "duality",
    "frame",
    "gadget",
    "normalize",
    "pack",
    "run_criterion",
    "sharpness",
]


def _text(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def _elem(value):
    if value is None:
        return None
    return value if isinstance(value, str) else _json.dumps(value)


def _limits(kw):
    allowed = {"max_path_length", "max_paths", "cycle_cap"}
    unknown = set(kw) - allowed
    if unknown:
        raise TypeError(f"unexpected keyword arguments: {sorted(unknown)}")
    return kw


def classify(group, ell=None):
    return _json.loads(_core.classify(_text(group), _elem(ell)))


def pack(graph, family="nonzero", **limits):
    return _json.loads(_core.pack(_text(graph), family, **_limits(limits)))


def cover(graph, family="nonzero", **limits):
    return _json.loads(_core.cover(_text(graph), family, **_limits(limits)))


def duality(graph, family="nonzero", **limits):
    return _json.loads(_core.duality(_text(graph), family, **_limits(limits)))


def frame(graph, k, **limits):
    return _json.loads(_core.frame(_text(graph), k, **_limits(limits)))


def chain(chain_input, target=None):
    """``chain_input`` holds a ``graph`` plus the core and detours."""
    return _json.loads(_core.chain(_text(chain_input), _elem(target)))


def sharpness(p):
    return _json.loads(_core.sharpness(p))


def gadget(variant, n, group=None, *, ell=None, g=None, g1=None, g2=None, model="undirected", verify=False, **limits):
    if variant == "gamma":
        a, b = ell, None
    elif variant == "gamma-prime":
        a, b = g1, g2
    else:
        a, b = ell, g
    return _json.loads(
        _core.gadget(
            variant,
            n,
            None if group is None else _text(group),
            _elem(a),
            _elem(b),
            model,
            verify,
            **_limits(limits),
        )
    )


def normalize(graph, cycle_cap=100000):
    return _json.loads(_core.normalize(_text(graph), cycle_cap))


def blocks(graph, **limits):
    return _json.loads(_core.blocks(_text(graph), **_limits(limits)))


def run_criterion(criterion_id, seed=7, threads=0, best_effort=False):
    return _json.loads(_core.run_criterion(criterion_id, seed, threads, best_effort))
