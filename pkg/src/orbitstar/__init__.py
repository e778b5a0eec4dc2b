"""orbitstar: exact star products on regular coadjoint orbits.

A computer-algebra engine over Q(i)[h] for the deformed enveloping algebra
(words modulo X Y - Y X = h [X, Y]), the symmetrizer star product, orbit
ideal reduction and the induced orbit products, tangentiality and
differentiability probes, representation-theoretic witnesses, and the
polynomial Chevalley-Eilenberg solver.
"""

from .scalars import GaussianRational, HPoly, H, H_ONE, H_ZERO, as_gauss, as_hpoly
from .lie import (
    BasisChange,
    LieAlgebra,
    adjoint_rep,
    algebra_from_json,
    change_basis,
    check_jacobi,
    is_semisimple,
    killing_det,
    killing_form,
    predefined,
)
from .poly import (
    CPoly,
    ReductionSystem,
    is_invariant,
    kirillov_bracket,
    monomials_of_degree,
    monomials_up_to,
    reduce,
)
from .envelope import NCPoly, multiply_at, substitute_generators
from .quantize import (
    StarProduct,
    bn_coefficient,
    check_deformation_axioms,
    gauge_step,
    pbw_basis_product,
    sym_inverse,
    symmetrize,
    symmetrizer_product,
)
from .orbit import Orbit, orbit_from_json, sphere_orbit
from .reps import (
    MatrixRep,
    casimir_scalar,
    casimir_spectrum,
    evaluate,
    highest_weight_casimir,
    nonisomorphism_witness,
    sl2_casimir,
    su2_defining_rep,
    validate_rep,
)
from .cohomology import (
    Cochain1,
    Cochain2,
    d1,
    d2,
    extend_c1,
    h2_dimension,
    is_cocycle,
    solve_coboundary,
)
from .exprs import (
    ExprSyntaxError,
    format_cpoly,
    format_hpoly,
    format_ncpoly,
    parse_expression,
    parse_hpoly,
    parse_rational,
    parse_scalar,
)
from .verify import SUITES, run_suite, run_suites

__version__ = "0.1.0"
