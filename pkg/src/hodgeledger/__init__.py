"""Exact Hodge-class bookkeeping for the OG6 Betti and Hodge numbers via Ngo strings."""

from .errors import (
    ArityError,
    BadInput,
    DimensionGuard,
    FixtureInvalid,
    HodgeLedgerError,
    Inconsistent,
    NotEffective,
    ParseError,
    UnknownIdentifier,
    UnknownName,
    VirtualInput,
    WeightParityError,
)
from .hodge_core import (
    POINT,
    ZERO,
    HodgeClass,
    angle,
    dual,
    from_json,
    linear_combine,
    make_class,
    numerics,
    shift_up,
    super_sym,
    super_wedge,
    symmetry_checks,
    tate,
    tensor,
    to_json,
)
from .spaces import L, abelian, fixture, parity_part
from .expr import evaluate, parse
from .render import render
from .report import VerificationReport
from .string_ledger import load_ledger, r6_rank, solve_unknowns, verify_component_table
from .og6_pipeline import (
    closed_forms,
    grothendieck_difference,
    h_Mtilde_via_difference,
    h_Mtilde_via_strings,
    h_N,
    verify_og6,
)

__version__ = "0.1.0"
