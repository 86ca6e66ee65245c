"""Groebner bases for the defining ideals of almost arithmetic monomial curves."""

from .binalg import (
    BasisSet,
    Binomial,
    buchberger_close,
    groebner_witness,
    is_groebner,
    is_minimal_gb,
    minimality_violation,
    normal_form,
    reduced_basis,
)
from .closedform import Kind, assemble, build_family
from .errors import ContractViolation, CurveGBError, InputError, ResourceLimit
from .ladder import LadderState, check_second_main, normal_form_ladder
from .order import OrderSpec, ascending, descending
from .semigroup import CurveInput, CurveParameters, compute_parameters, validate_input
from .toric import defining_ideal_gb

__version__ = "0.1.0"

__all__ = [
    "BasisSet", "Binomial", "ContractViolation", "CurveGBError", "CurveInput",
    "CurveParameters", "InputError", "Kind", "LadderState", "OrderSpec", "ResourceLimit",
    "ascending", "assemble", "buchberger_close", "build_family", "check_second_main",
    "compute_parameters", "defining_ideal_gb", "descending", "groebner_witness",
    "is_groebner", "is_minimal_gb", "minimality_violation", "normal_form",
    "normal_form_ladder", "reduced_basis", "validate_input",
]
