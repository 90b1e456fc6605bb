"""Exact symbolic computation of analytic expansions of Macdonald polynomials.

The package computes, over the field of rational functions in the two
Macdonald parameters q and t, the expansion of a Macdonald polynomial
indexed by an arbitrary partition into sums of products of one-row
Macdonald functions, of modified complete functions g_k, and of their
elementary-function duals, together with an independent verification stack
(orthogonal-basis construction, eigenoperators, Pieri-rule inversion, and
functional-equation checks at exact rational points).
"""

from .coefficients import (
    C_coefficient,
    C_first_form,
    CValue,
    USpec,
    c_k,
    check_lemma2,
    check_recurrence_5,
    check_remark_recurrence,
    clear_coefficient_cache,
    pieri_psi,
)
from .errors import (
    DegenerateConfig,
    DegreeCapExceeded,
    DivisionByZero,
    GenuinePole,
    IdentityViolated,
    InternalInvariant,
    NotDivisible,
    NotSymmetric,
    PoleAtPoint,
    QtsymError,
    SingularSystem,
    WeightMismatch,
)
from .expansion import (
    ExpansionTerm,
    ThetaMatrix,
    inverse_pieri_oracle,
    jacobi_trudi,
    part_multiplicities,
    raising_action,
    reconstruct_e_expansion,
    reconstruct_g_expansion,
    reconstruct_theorem1,
    reconstruct_theorem2,
    schur_check,
    theorem1_excluded_terms,
    theorem1_expand,
    theorem2_excluded_terms,
    theorem2_expand,
    theorem3_expand,
    theorem4_expand,
)
from .operators import (
    APolynomial,
    apply_D,
    apply_E,
    check_lemma1,
    d_eigenvalue,
    e_eigenvalue,
    kernel_det,
    sample_kernel_config,
)
from .rational import (
    EpsPolynomial,
    LaurentMonomial,
    Q,
    QTPolynomial,
    QTRational,
    eps_limit,
    eval_numeric,
    pochhammer,
    poly_arith,
    poly_exact_div,
    rat_arith,
    set_reduction,
)
from .symfunc import (
    PolyInVars,
    SymFunc,
    clear_caches,
    complete,
    elementary,
    expand_in_Q_basis,
    expand_in_g_basis,
    expand_in_variables,
    g_product,
    get_degree_cap,
    macdonald_P,
    macdonald_Q,
    macdonald_norm,
    modified_complete,
    monomial_sym,
    omega,
    power_sum,
    scalar_product,
    set_degree_cap,
    swap_params,
    vandermonde,
)

__all__ = [
    "APolynomial",
    "CValue",
    "C_coefficient",
    "C_first_form",
    "DegenerateConfig",
    "DegreeCapExceeded",
    "DivisionByZero",
    "EpsPolynomial",
    "ExpansionTerm",
    "GenuinePole",
    "IdentityViolated",
    "InternalInvariant",
    "LaurentMonomial",
    "NotDivisible",
    "NotSymmetric",
    "PoleAtPoint",
    "PolyInVars",
    "Q",
    "QTPolynomial",
    "QTRational",
    "QtsymError",
    "SingularSystem",
    "SymFunc",
    "ThetaMatrix",
    "USpec",
    "WeightMismatch",
    "apply_D",
    "apply_E",
    "c_k",
    "check_lemma1",
    "check_lemma2",
    "check_recurrence_5",
    "check_remark_recurrence",
    "clear_caches",
    "clear_coefficient_cache",
    "complete",
    "d_eigenvalue",
    "e_eigenvalue",
    "elementary",
    "eps_limit",
    "eval_numeric",
    "expand_in_Q_basis",
    "expand_in_g_basis",
    "expand_in_variables",
    "g_product",
    "get_degree_cap",
    "inverse_pieri_oracle",
    "jacobi_trudi",
    "kernel_det",
    "macdonald_P",
    "macdonald_Q",
    "macdonald_norm",
    "modified_complete",
    "monomial_sym",
    "omega",
    "part_multiplicities",
    "pieri_psi",
    "pochhammer",
    "poly_arith",
    "poly_exact_div",
    "power_sum",
    "raising_action",
    "rat_arith",
    "reconstruct_e_expansion",
    "reconstruct_g_expansion",
    "reconstruct_theorem1",
    "reconstruct_theorem2",
    "sample_kernel_config",
    "scalar_product",
    "schur_check",
    "set_degree_cap",
    "set_reduction",
    "swap_params",
    "theorem1_excluded_terms",
    "theorem1_expand",
    "theorem2_excluded_terms",
    "theorem2_expand",
    "theorem3_expand",
    "theorem4_expand",
    "vandermonde",
]
