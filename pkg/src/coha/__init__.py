"""Exact computations in cohomological Hall algebras of acyclic quivers."""
from .algebra import CohaElement, element, mul2, muln, one, psi, psi_chain, subalgebra_element
from .errors import CohaError, InputError, InternalError
from .poly import MPoly, format_poly, parse_poly
from .quantum import QElement, QScalar, codim, dilog, normal_form, qmul, verify_factorization
from .quiver import Quiver, SubquiverPartition, validate_partition, validate_quiver
from .roots import combined_reineke_order, enumerate_partitions, positive_roots, reineke_order
from .strata import euler_class, factored_restriction_check, stratum_class, verify_structure_iso, y_system

__all__ = [
    "CohaElement", "CohaError", "InputError", "InternalError", "MPoly", "QElement", "QScalar",
    "Quiver", "SubquiverPartition", "codim", "combined_reineke_order", "dilog", "element",
    "enumerate_partitions", "euler_class", "factored_restriction_check", "format_poly", "mul2",
    "muln", "normal_form", "one", "parse_poly", "positive_roots", "psi", "psi_chain", "qmul",
    "reineke_order", "stratum_class", "subalgebra_element", "validate_partition",
    "validate_quiver", "verify_factorization", "verify_structure_iso", "y_system",
]
