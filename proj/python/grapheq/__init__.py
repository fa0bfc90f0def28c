# Copyright 2026 The grapheq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exact classical and quantum analysis of graph-state games.

Thin wrapper over the C++ extension: JSON results become dicts and every
"p/q" rational the caller is likely to compute with becomes a Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import GraphEqError, builtin_names, outcome_support

__all__ = [
    "GraphEqError",
    "builtin_names",
    "best_csw",
    "correlated_sw",
    "game",
    "kfold",
    "nash",
    "outcome_support",
    "pareto",
    "penalty",
    "players_needed",
    "quantum",
    "regimes",
    "verify_game",
]


def _rational(x):
    if x is None:
        return None
    return str(Fraction(x)) if not isinstance(x, str) else x


def _game(g):
    return json.dumps(g) if isinstance(g, dict) else g


def game(name):
    """Game document (the JSON schema read by every other call)."""
    return json.loads(_core.game_json(_game(name)))


def nash(game="NC00_C5", v0=None, v1=None, ng=None, threads=0):
    return json.loads(_core.nash(_game(game), _rational(v0), _rational(v1), _rational(ng), threads))


def pareto(game="NC00_C5", v0=None, v1=None, ng=None, threads=0, joint=False):
    return json.loads(_core.pareto(_game(game), _rational(v0), _rational(v1), _rational(ng), threads, joint))


def best_csw(game="NC00_C5", v0=None, v1=None, ng=None, threads=0):
    """(best pure Nash social welfare, maximising profiles)."""
    value, argmax = _core.best_csw(_game(game), _rational(v0), _rational(v1), _rational(ng), threads)
    return Fraction(value), argmax


def regimes(game="NC00_C5", ng=None, threads=0):
    return json.loads(_core.regimes(_game(game), _rational(ng), threads))


def quantum(game="NC00_C5", v0=None, v1=None, ng=None):
    return json.loads(_core.quantum(_game(game), _rational(v0), _rational(v1), _rational(ng)))


def correlated_sw(game="NC00_C5", v0=None, v1=None, ng=None):
    return Fraction(_core.correlated_sw(_game(game), _rational(v0), _rational(v1), _rational(ng)))


def penalty(game="NC01_C5", v0=None, v1=None, ng=4):
    return json.loads(_core.penalty(_game(game), _rational(v0), _rational(v1), _rational(ng), 0))


def kfold(game="NC00_C5", k=2, v0=None, v1=None, bruteforce=False, threads=0):
    return json.loads(_core.kfold(_game(game), k, _rational(v0), _rational(v1), bruteforce, threads))


def players_needed(eps, game="NC00_C5", v0=None, v1=None):
    return json.loads(_core.players_needed(_game(game), _rational(eps), _rational(v0), _rational(v1)))


def verify_game(game):
    """[(check name, passed, detail)] in evaluation order."""
    return _core.verify_game(_game(game))
