"""Exact symbolic certificates for bracket decompositions of vector fields.

The package verifies, by exact rational arithmetic, constructive
decompositions and obstructions for Lie algebras of algebraic vector
fields: width-one solvers on products of affine lines and tori, width-two
decompositions on punctured lines and on Danielewski surfaces, Poisson
bracket identities on the symplectic torus and on ``x*y = p(z)``, and
valuation-based obstruction certificates on hyperelliptic curves
``y^2 = h(x)``.
"""

from .errors import AlgebraError, ValidationError
from .exactpoly import (
    AFFINE,
    LAURENT,
    Polynomial,
    VariableSpace,
    format_poly,
    parse_poly,
    squarefree_check,
)
from .rings import (
    CurveElement,
    CurveRing,
    DanElement,
    DanRing,
    RatCurveElement,
    RatCurveRing,
    curve_from_text,
    curve_normalize,
    dan_from_text,
    dan_localize,
    dan_delocalize,
    dan_normalize,
    parse_ratcurve,
    ratcurve_normalize,
)
from .vfields import (
    PTVectorField,
    RatCurveField,
    format_vfield,
    parse_vfield,
    solve_bracket_affine,
    solve_bracket_divfree,
    solve_bracket_torus,
    solve_width2_ratcurve,
    vf_bracket,
    vf_divergence,
)
from .poisson import (
    DanVectorField,
    EOmegaWitness,
    ReductionChain,
    dan_vf_bracket,
    div_dan,
    div_dan_basis,
    e_omega_member,
    eomega_z_codimension,
    hamiltonian_dan,
    ideal_reduction_torus,
    is_constant_jac,
    jac_localized,
    pb_dan,
    pb_torus,
    width1_torus,
    width2_dan_deg2,
)
from .curves import (
    ObstructionCertificate,
    Valuation,
    centralizer_check,
    coker_dimension,
    field_bracket,
    no_eigen_check,
    obstruction_certificate,
    ord_field,
    ord_inf,
    solve_tau_equation,
    tau_apply,
)

__version__ = "0.1.0"
