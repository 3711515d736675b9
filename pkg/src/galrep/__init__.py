"""Exact tools for potential equivalence of matrix representations."""

from .cyclotomic import CycQ, cyclo_reduce, phi
from .faltings_sim import (
    CoverError,
    FiniteGroup,
    ModRep,
    PlaceTable,
    conjugacy_classes,
    frobenius_cover,
    trace_determination_check,
)
from .linalg import CharPoly, Matrix, are_conjugate, char_poly, power_charpoly, root_of_unity_order
from .local_bound import LocalFieldParams, paper_m_bound, roots_of_unity_bound
from .newton import Composition, compositions, d_m, dim_lambda, m_trace_from_charpoly, newton_coefficient
from .poteq import (
    Kind,
    MatRep,
    PEVerdict,
    Status,
    elementwise_pe,
    m_character,
    pe_decide,
    twist_equivalent_finite,
    uniform_m_bound,
)
from .repfile import RepFileError, parse_rep, parse_rep_file, serialize_rep
from .weil import BudgetExceeded, WeilPoly, enumerate_weil, is_weil_poly, weil_count

__version__ = "0.1.0"
