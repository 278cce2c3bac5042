"""Exact-arithmetic toolkit for curved Lie bialgebras over color vector spaces.

Construct graded spaces and degree-preserving morphisms over the
rationals or a prime field, attach a symmetry and an infinitesimal
braiding through bicharacters, and machine-check Lie (co)algebra,
crossed-module and curved-bialgebra identities with exact witnesses.
Bosonization (bisum assembly and split-surjection decomposition) is
provided with round-trip verification, together with the Jordan plane,
super Jordan plane and Laistrygonian example families.
"""

from .fields import Field, Fp, QQ, FieldError
from .graded_linalg import (
    GradedSpace,
    LinalgError,
    Morphism,
    biproduct_maps,
    compose,
    direct_sum,
    kernel,
    leg,
    morphism_rank,
    solve_injective,
    tensor_morphism,
    tensor_space,
)
from .cartier_context import (
    AddBicharacter,
    CartierContext,
    ContextError,
    MultBicharacter,
    check_cartier_axioms,
    eta_morphism,
    tau_morphism,
)
from .reporting import ReportEntry, VerificationReport, Witness
from .lie_structures import (
    LieBialgebraData,
    StructureError,
    check_antisymmetry,
    check_bialgebra_compatibility,
    check_bialgebra_equivalent_form,
    check_coantisymmetry,
    check_cojacobi,
    check_jacobi,
    check_jacobi_equivalent_form,
    verify_lie_bialgebra,
)
from .crossed_modules import (
    CrossedLieBialgebra,
    CrossedModuleData,
    check_comodule,
    check_crossed_axiom,
    check_crossed_morphism,
    check_eta_hat_morphism,
    check_induced_cartier,
    check_module,
    check_span_subobject,
    check_zeta_lemma,
    crossed_submodule,
    diagonal_action,
    diagonal_coaction,
    hat_alpha,
    hat_lambda,
    induced_eta,
    restrict_bialgebra,
    self_crossed_defect,
    tensor_crossed_module,
    verify_crossed_bialgebra,
    verify_crossed_module,
    zeta,
)
from .bosonization import (
    BiproductPresentation,
    PreconditionError,
    bisum,
    bisum_presentation,
    check_decomposition_theorem,
    semidirect_bracket,
    semidirect_cobracket,
    split_decompose,
)
from .example_zoo import (
    JORDAN_LINE_LABELS,
    SUPER_JORDAN_IDEAL_LABELS,
    abelian_coabelian,
    jordan_plane,
    laistrygonian,
    laistrygonian_core_labels,
    super_jordan_plane,
)
from .serialization import (
    ParseError,
    ParsedStructure,
    canonical_json,
    parse_bytes,
    parse_document,
    parse_path,
    serialize_crossed,
    serialize_plain,
)
from .cli import emit_report, run_cli

__version__ = "0.1.0"
