# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact arrangement, Weyl-algebra and homogeneous-polynomial checks.

Reports come back as plain dicts mirroring the JSON emitted by the command
line tool; rationals are strings such as "-2/3".
"""

import json

from . import _bsroots
from ._bsroots import (
    DEFAULT_SEED,
    SCHEMA_VERSION,
    SCREEN_LABEL,
    ParseError,
    PreconditionError,
    bs_check,
    normalize,
    selftest,
)

__all__ = [
    "DEFAULT_SEED",
    "SCHEMA_VERSION",
    "SCREEN_LABEL",
    "ParseError",
    "PreconditionError",
    "analyze_arrangement",
    "bs_check",
    "euler_witness",
    "homog_screen",
    "ideal_check",
    "lattice",
    "normalize",
    "run",
    "selftest",
]


def _arrangement_text(arrangement):
    if isinstance(arrangement, str):
        return arrangement
    return json.dumps(arrangement)


def analyze_arrangement(arrangement, budget=20):
    """Dense edges, condition (R), epsilon weights, mu and the verdict."""
    return json.loads(_bsroots.analyze_arrangement(_arrangement_text(arrangement), budget))


def lattice(arrangement, weights=None, order=None, budget=20):
    """Characteristic polynomial, chi, nbc basis and Aomoto Betti numbers."""
    if weights is not None:
        weights = [str(w) for w in weights]
    return json.loads(_bsroots.lattice(_arrangement_text(arrangement), weights, order, budget))


def homog_screen(poly, n=None):
    """Euler relation, bidegree splits and separability in the given coordinates."""
    return json.loads(_bsroots.homog_screen(poly, n))


def euler_witness(poly, n=None):
    """The s f^s identity for a homogeneous polynomial."""
    return json.loads(_bsroots.euler_witness(poly, n))


def ideal_check(op, n=None):
    """Membership of an operator in the left ideal generated by x1..xn."""
    return json.loads(_bsroots.ideal_check(op, n))


def run(args):
    """Runs the command line tool in-process; returns (exit code, stdout, stderr)."""
    return _bsroots.run(list(args))
