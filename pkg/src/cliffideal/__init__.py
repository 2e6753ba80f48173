"""Exact Clifford/exterior algebra over the rationals.

Builds primitive idempotents and minimal left ideals of R_{p,q},
translates between idempotents and SU(3)/G2/Spin(7) structure tensors,
and machine-verifies the documented identities.  All arithmetic is
exact (fractions.Fraction); there are no floats anywhere.
"""

from .algebra import (
    Multivector,
    Signature,
    blade_product,
    blade_square_sign,
    geometric_product,
    grade_project,
    linear_combine,
    reverse,
    volume_element,
)
from .exterior import (
    ExteriorForm,
    HodgeConvention,
    clifford_hodge,
    hodge_star,
    interior_product,
    quantize,
    symbol,
    volume_form,
    wedge,
)
from .exprio import (
    ParseError,
    SchemaError,
    from_json,
    parse,
    print_canonical,
    to_json,
)
from .ideals import (
    AlgebraClass,
    GeneratorError,
    GeneratorReport,
    IdealBasis,
    IdempotentSpec,
    build_idempotent,
    classify,
    coset_basis,
    decompose_algebra,
    is_idempotent,
    is_orthogonal,
    is_primitive,
    is_sub_idempotent,
    left_ideal_basis,
    radon_hurwitz,
    validate_generators,
)
from .structures import (
    G2Structure,
    OrbitReport,
    SU3Structure,
    Spin7Structure,
    StructureError,
    g2_idempotent,
    g2_metric,
    g2_recover,
    lift_idempotent_6_to_7,
    lift_su3_to_g2,
    model_g2,
    model_spin7,
    model_su3,
    spin7_idempotent,
    spin7_recover,
    structure_from_json,
    structure_to_json,
    su3_idempotent,
    su3_recover,
)
from .verifier import (
    Claim,
    ClaimResult,
    Report,
    list_claims,
    load_golden,
    run_all,
    run_claim,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraClass",
    "Claim",
    "ClaimResult",
    "ExteriorForm",
    "G2Structure",
    "GeneratorError",
    "GeneratorReport",
    "HodgeConvention",
    "IdealBasis",
    "IdempotentSpec",
    "Multivector",
    "OrbitReport",
    "ParseError",
    "Report",
    "SU3Structure",
    "SchemaError",
    "Signature",
    "Spin7Structure",
    "StructureError",
    "blade_product",
    "blade_square_sign",
    "build_idempotent",
    "classify",
    "clifford_hodge",
    "coset_basis",
    "decompose_algebra",
    "from_json",
    "g2_idempotent",
    "g2_metric",
    "g2_recover",
    "geometric_product",
    "grade_project",
    "hodge_star",
    "interior_product",
    "is_idempotent",
    "is_orthogonal",
    "is_primitive",
    "is_sub_idempotent",
    "left_ideal_basis",
    "lift_idempotent_6_to_7",
    "lift_su3_to_g2",
    "linear_combine",
    "list_claims",
    "load_golden",
    "model_g2",
    "model_spin7",
    "model_su3",
    "parse",
    "print_canonical",
    "quantize",
    "radon_hurwitz",
    "reverse",
    "run_all",
    "run_claim",
    "spin7_idempotent",
    "spin7_recover",
    "structure_from_json",
    "structure_to_json",
    "su3_idempotent",
    "su3_recover",
    "symbol",
    "to_json",
    "validate_generators",
    "volume_element",
    "volume_form",
    "wedge",
]
