"""Exact symbolic checks for Witt and Virasoro module families.

The package realizes derivation algebras of polynomial and Laurent
polynomial rings together with several families of modules over them,
all with exact rational arithmetic, and machine-verifies the defining
identities: module axioms, bracket axioms, a shift law for the action,
derivation-chain identities, and bounded simplicity probes.
"""

from .exprio import (
    ExprParseError,
    parse_element,
    parse_poly,
    print_element,
    print_poly,
    report_line,
    report_to_json,
    write_report,
)
from .modfam import (
    CoreAction,
    Family,
    ModuleSpec,
    act,
    act_basis,
    act_on_generator,
    action_multiplier,
)
from .polyring import (
    MINUS_INFINITY,
    ContextMismatchError,
    ExponentDomainError,
    Monomial,
    ParameterDomainError,
    Poly,
    Scalar,
    VarContext,
    falling_product,
)
from .verify import (
    CheckConfig,
    CheckStatus,
    Report,
    SubspaceBasis,
    antisymmetry_check,
    gamma_coincidence,
    jacobi_check,
    simplicity_probe,
    submodule_closure,
    theorem2_suite,
    theorem3_suite,
    verify_axioms,
    verify_lemma1_shift,
    w_plus_closure_check,
)
from .wittalg import (
    CENTRAL,
    AlgElement,
    Algebra,
    AlgebraMismatchError,
    InadmissibleTermError,
    WittTerm,
    bracket,
    bracket_basis,
)

__all__ = [
    "MINUS_INFINITY",
    "AlgElement",
    "Algebra",
    "AlgebraMismatchError",
    "CENTRAL",
    "CheckConfig",
    "CheckStatus",
    "ContextMismatchError",
    "CoreAction",
    "ExponentDomainError",
    "ExprParseError",
    "Family",
    "InadmissibleTermError",
    "ModuleSpec",
    "Monomial",
    "ParameterDomainError",
    "Poly",
    "Report",
    "Scalar",
    "SubspaceBasis",
    "VarContext",
    "WittTerm",
    "act",
    "act_basis",
    "act_on_generator",
    "action_multiplier",
    "antisymmetry_check",
    "bracket",
    "bracket_basis",
    "falling_product",
    "gamma_coincidence",
    "jacobi_check",
    "parse_element",
    "parse_poly",
    "print_element",
    "print_poly",
    "report_line",
    "report_to_json",
    "simplicity_probe",
    "submodule_closure",
    "theorem2_suite",
    "theorem3_suite",
    "verify_axioms",
    "verify_lemma1_shift",
    "w_plus_closure_check",
    "write_report",
]

__version__ = "0.1.0"
