"""Permutation binomials x^n (x^((q-1)/r) + a) over finite fields, r in {2, 3}.

Exact closed-form counts cross-validated against character criteria, brute
force, Wan-Lidl index testing and elliptic-curve point counts. The
sharpness module (continued-fraction probe, needs mpmath) is deliberately
not re-exported; import permbinom.sharpness directly.
"""

from .characters import cubic_char, cubic_roots_of_unity, power_sum, quadratic_char
from .counts import (
    CountReport,
    build_count_report,
    closed_count_r2,
    closed_count_r3,
    epsilons,
    masuda_zieve_bounds,
    refined_bounds_r3,
    report_to_dict,
)
from .curves import (
    KappaRecord,
    TraceSequence,
    char2_cubic_sum,
    compute_kappa,
    count_points_extension,
    count_points_prime,
    pi_trace,
    point_count_residue,
)
from .errors import (
    BadFieldForCubicError,
    CrossCheckFailedError,
    DivisibilityViolationError,
    EnumerationGuardError,
    EvenCharacteristicError,
    GcdViolationError,
    PermBinomError,
)
from .fields import (
    FieldElement,
    FieldSpec,
    element_order,
    enumerate_elements,
    make_field,
    parse_field,
)
from .permtest import (
    BinomialCase,
    IndexForm,
    binomial_polynomial,
    compute_index_form,
    enumerate_perm_binomials,
    evaluate_poly,
    is_permutation_bruteforce,
    wan_lidl_check,
)
from .selftest import AcceptanceSuite, CheckResult
from .sweep import SweepConfig, SweepFailure, SweepResult, emit_report, run_verify_sweep

__version__ = "0.1.0"

__all__ = [
    "AcceptanceSuite",
    "BadFieldForCubicError",
    "BinomialCase",
    "CheckResult",
    "CountReport",
    "CrossCheckFailedError",
    "DivisibilityViolationError",
    "EnumerationGuardError",
    "EvenCharacteristicError",
    "FieldElement",
    "FieldSpec",
    "GcdViolationError",
    "IndexForm",
    "KappaRecord",
    "PermBinomError",
    "SweepConfig",
    "SweepFailure",
    "SweepResult",
    "TraceSequence",
    "binomial_polynomial",
    "build_count_report",
    "char2_cubic_sum",
    "closed_count_r2",
    "closed_count_r3",
    "compute_index_form",
    "compute_kappa",
    "count_points_extension",
    "count_points_prime",
    "cubic_char",
    "cubic_roots_of_unity",
    "element_order",
    "emit_report",
    "enumerate_elements",
    "enumerate_perm_binomials",
    "epsilons",
    "evaluate_poly",
    "is_permutation_bruteforce",
    "make_field",
    "masuda_zieve_bounds",
    "parse_field",
    "pi_trace",
    "point_count_residue",
    "power_sum",
    "quadratic_char",
    "refined_bounds_r3",
    "report_to_dict",
    "run_verify_sweep",
    "wan_lidl_check",
    "__version__",
]
