"""Finite q-cycle sets and set-theoretic solutions of the Yang-Baxter equation."""

import json

from ._qcycle import (
    BoundExceeded,
    InvalidStructure,
    ParseError,
    PreconditionError,
    QcycleError,
    QCycleSet,
    Solution,
    block_systems,
    canonical_form,
    check_axioms,
    check_yang_baxter,
    congruences,
    enumerate,
    extend,
    extension,
    fixture,
    fixture_names,
    from_solution,
    group_order,
    has_finite_primitive_level,
    is_indecomposable,
    is_involutive,
    is_isomorphic,
    is_regular,
    is_retractable,
    is_simple,
    is_simple_blocks,
    is_square_free,
    multipermutation_level,
    primitive_level,
    quotient,
    to_solution,
)
from ._qcycle import _analysis_report

__version__ = "0.1.0"


def analyze(value):
    """The structured analysis report of a QCycleSet or Solution, as a dict."""
    return json.loads(_analysis_report(value))


def parse(text):
    """A QCycleSet or Solution from one document in the text or JSON format."""
    try:
        return QCycleSet.parse(text)
    except PreconditionError:
        return Solution.parse(text)
