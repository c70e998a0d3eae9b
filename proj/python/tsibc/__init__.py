"""Decide whether a causal effect is identifiable from a summary causal graph."""

import json

from ._core import BudgetExceeded, Error, Graph, ParseError, parse_graph
from . import _core

__all__ = [
    "BudgetExceeded",
    "Error",
    "Graph",
    "ParseError",
    "decide",
    "oracle_check",
    "parse_graph",
    "random_instance",
    "thresholds",
]


def _as_list(v):
    return [v] if isinstance(v, str) else list(v)


def decide(graph, interventions, effects, consistency=False):
    """Verdict as a dict; vertices are given as "SERIES@TIME"."""
    return json.loads(_core._decide(graph, _as_list(interventions), _as_list(effects), consistency))


def oracle_check(graph, interventions, effects, consistency=False, budget=None):
    return json.loads(_core._oracle_check(graph, _as_list(interventions), _as_list(effects), consistency, budget))


def thresholds(graph, interventions, effects):
    """First time at which each series enters the cone of descendants."""
    return json.loads(_core._t_nc(graph, _as_list(interventions), _as_list(effects)))


def random_instance(seed, max_series=5):
    """A random graph and a query {"interventions": [...], "effects": [...]} of "S@T" strings."""
    graph, query = _core._random_instance(seed, max_series)
    q = json.loads(query)
    return graph, {k: [f"{v['series']}@{v['time']}" for v in vs] for k, vs in q.items()}
