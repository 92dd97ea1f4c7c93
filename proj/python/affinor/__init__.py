"""Invariant f-structures on the flag manifold SU(3)/T_max."""

import json

from . import _core
from ._core import (
    EmptyGrid,
    Error,
    InvalidInput,
    UnknownClassTag,
    bracket_m,
    composition_T,
    einstein_fit,
    einstein_scan,
    homothety_label,
    is_integrable,
    killing_inner,
    nabla_f,
    nabla_f_closed,
    nomizu_alpha,
    numeric_verify,
    ricci_blocks,
)

__all__ = [
    "EmptyGrid",
    "Error",
    "InvalidInput",
    "UnknownClassTag",
    "bracket_m",
    "class_locus",
    "composition_T",
    "einstein_fit",
    "einstein_scan",
    "homothety_label",
    "is_integrable",
    "killing_inner",
    "nabla_f",
    "nabla_f_closed",
    "nomizu_alpha",
    "numeric_verify",
    "ricci_blocks",
    "run",
    "strict_locus",
    "structure_counts",
]


def class_locus(f, cls):
    return json.loads(_core.class_locus(tuple(f), cls))


def strict_locus(f, cls):
    return json.loads(_core.strict_locus(tuple(f), cls))


def structure_counts(order, s):
    predicted, observed = _core.structure_counts(order, tuple(s))
    return json.loads(predicted), json.loads(observed)


def run(*args):
    """Run a command line in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
