"""Python bindings for the qsr qualitative reasoning library."""

import json

from ._qsr import (
    BudgetExceeded,
    Calculus,
    ClosureOutcome,
    Error,
    Model,
    Network,
    ParseError,
    UnknownCalculus,
    a_closure,
    builtin_names,
    decide,
    solve,
)
from ._qsr import analyze_json as _analyze_json

__all__ = [
    "BudgetExceeded",
    "Calculus",
    "ClosureOutcome",
    "Error",
    "Model",
    "Network",
    "ParseError",
    "UnknownCalculus",
    "a_closure",
    "analyze",
    "builtin_names",
    "decide",
    "solve",
]


def analyze(calculus, domain="base", samples=10000, seed=1, jobs=1):
    """Axiom report as a dict, same layout as `qsr analyze --format json`."""
    return json.loads(_analyze_json(calculus, domain, samples, seed, jobs))
