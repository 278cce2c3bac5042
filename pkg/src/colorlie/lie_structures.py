"""Axiom checkers for Lie algebras, Lie coalgebras and curved Lie bialgebras.

A checker never mutates or rejects its input: validity is always a
report, so deliberately broken structures are first-class test values.
Residuals are computed as whole composed morphisms; a failing entry
carries one nonzero column as its witness.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cartier_context import CartierContext, eta_morphism, tau_morphism
from .graded_linalg import GradedSpace, Morphism, tensor_morphism, tensor_space
from .reporting import (
    ReportEntry,
    VerificationReport,
    entry_from_residual,
)


class StructureError(ValueError):
    """Structure maps have the wrong shape for their space."""


@dataclass(frozen=True)
class LieBialgebraData:
    """A graded space with a candidate bracket and cobracket.

    beta : space (x) space -> space, delta : space -> space (x) space.
    Whether the data satisfies any axioms is established by the
    checkers, never assumed at construction.
    """

    ctx: CartierContext
    space: GradedSpace
    beta: Morphism
    delta: Morphism

    def __post_init__(self) -> None:
        square = tensor_space(self.space, self.space)
        if self.beta.source != square or self.beta.target != self.space:
            raise StructureError("bracket must map space (x) space -> space")
        if self.delta.source != self.space or self.delta.target != square:
            raise StructureError("cobracket must map space -> space (x) space")
        if self.beta.field != self.ctx.field or self.delta.field != self.ctx.field:
            raise StructureError("structure maps defined over the wrong field")

    @property
    def field(self):
        return self.ctx.field

    def tau(self) -> Morphism:
        return tau_morphism(self.ctx, self.space, self.space)

    def ambient_eta(self) -> Morphism:
        return eta_morphism(self.ctx, self.space, self.space)


def _id(L: LieBialgebraData) -> Morphism:
    return Morphism.identity(L.field, L.space)


def check_antisymmetry(L: LieBialgebraData) -> ReportEntry:
    """beta (id + tau) = 0."""
    sq = tensor_space(L.space, L.space)
    residual = L.beta @ (Morphism.identity(L.field, sq) + L.tau())
    return entry_from_residual("antisymmetry", residual)


def check_jacobi(L: LieBialgebraData) -> ReportEntry:
    """beta (beta (x) id - (id (x) beta)(id - tau_12)) = 0."""
    one = _id(L)
    cube = tensor_space(tensor_space(L.space, L.space), L.space)
    tau12 = tensor_morphism(L.tau(), one)
    lhs = tensor_morphism(L.beta, one) - (
        tensor_morphism(one, L.beta) @ (Morphism.identity(L.field, cube) - tau12)
    )
    return entry_from_residual("jacobi", L.beta @ lhs)


def check_jacobi_equivalent_form(L: LieBialgebraData) -> ReportEntry:
    """beta (id (x) beta)(id + tau_23 tau_12 + tau_12 tau_23) = 0."""
    one = _id(L)
    cube = tensor_space(tensor_space(L.space, L.space), L.space)
    tau12 = tensor_morphism(L.tau(), one)
    tau23 = tensor_morphism(one, L.tau())
    cyc = Morphism.identity(L.field, cube) + tau23 @ tau12 + tau12 @ tau23
    residual = L.beta @ tensor_morphism(one, L.beta) @ cyc
    return entry_from_residual("jacobi-cyclic", residual)


def check_coantisymmetry(L: LieBialgebraData) -> ReportEntry:
    """(id + tau) delta = 0."""
    sq = tensor_space(L.space, L.space)
    residual = (Morphism.identity(L.field, sq) + L.tau()) @ L.delta
    return entry_from_residual("coantisymmetry", residual)


def check_cojacobi(L: LieBialgebraData) -> ReportEntry:
    """(delta (x) id - (id - tau_12)(id (x) delta)) delta = 0."""
    one = _id(L)
    cube = tensor_space(tensor_space(L.space, L.space), L.space)
    tau12 = tensor_morphism(L.tau(), one)
    lhs = tensor_morphism(L.delta, one) - (
        (Morphism.identity(L.field, cube) - tau12) @ tensor_morphism(one, L.delta)
    )
    return entry_from_residual("cojacobi", lhs @ L.delta)


def _compat_residual(L: LieBialgebraData, eta_map: Morphism) -> Morphism:
    """delta beta - (id-tau)(beta (x) id)(id (x) tau)(delta (x) id)(id-tau) - (tau-id) eta."""
    one = _id(L)
    sq = tensor_space(L.space, L.space)
    tau = L.tau()
    id2 = Morphism.identity(L.field, sq)
    _require_endo(eta_map, sq)
    chain = (
        (id2 - tau)
        @ tensor_morphism(L.beta, one)
        @ tensor_morphism(one, tau)
        @ tensor_morphism(L.delta, one)
        @ (id2 - tau)
    )
    return L.delta @ L.beta - chain - (tau - id2) @ eta_map


def check_bialgebra_compatibility(
    L: LieBialgebraData, eta_map: Morphism | None = None
) -> ReportEntry:
    """Curved compatibility of bracket and cobracket against a given eta.

    Pass the ambient eta or an induced one; defaults to the ambient.
    """
    if eta_map is None:
        eta_map = L.ambient_eta()
    return entry_from_residual("curved-compatibility", _compat_residual(L, eta_map))


def _compat_alt_residual(L: LieBialgebraData, eta_map: Morphism) -> Morphism:
    one = _id(L)
    sq = tensor_space(L.space, L.space)
    tau = L.tau()
    id2 = Morphism.identity(L.field, sq)
    _require_endo(eta_map, sq)
    rhs = (
        tensor_morphism(L.beta, one) @ tensor_morphism(one, L.delta)
        + tensor_morphism(one, L.beta)
        @ tensor_morphism(tau, one)
        @ tensor_morphism(one, L.delta)
        + tensor_morphism(one, L.beta) @ tensor_morphism(L.delta, one)
        + tensor_morphism(L.beta, one)
        @ tensor_morphism(one, tau)
        @ tensor_morphism(L.delta, one)
        + (tau - id2) @ eta_map
    )
    return L.delta @ L.beta - rhs


def check_bialgebra_equivalent_form(
    L: LieBialgebraData, eta_map: Morphism | None = None
) -> ReportEntry:
    """Four-term expansion of the curved compatibility law."""
    if eta_map is None:
        eta_map = L.ambient_eta()
    return entry_from_residual(
        "curved-compatibility-expanded", _compat_alt_residual(L, eta_map)
    )


def _require_endo(eta_map: Morphism, sq) -> None:
    if eta_map.source != sq or eta_map.target != sq:
        raise StructureError("eta map must be an endomorphism of space (x) space")


def _agreement_entry(axiom: str, a: ReportEntry, b: ReportEntry) -> ReportEntry:
    if a.passed == b.passed:
        return ReportEntry(axiom, True)
    failing = a if not a.passed else b
    return ReportEntry(axiom, False, failing.witness)


def verify_lie_bialgebra(
    L: LieBialgebraData, eta_map: Morphism | None = None
) -> VerificationReport:
    """Full ambient suite: (co)antisymmetry, both Jacobi and both
    compatibility formulations, plus agreement meta-entries.

    Agreement of the two Jacobi forms is asserted whenever antisymmetry
    passes; agreement of the two compatibility forms whenever both
    (co)antisymmetry entries pass.
    """
    if eta_map is None:
        eta_map = L.ambient_eta()
    anti = check_antisymmetry(L)
    jac = check_jacobi(L)
    jac2 = check_jacobi_equivalent_form(L)
    coanti = check_coantisymmetry(L)
    cojac = check_cojacobi(L)
    compat = check_bialgebra_compatibility(L, eta_map)
    compat2 = check_bialgebra_equivalent_form(L, eta_map)
    entries = [anti, jac, jac2, coanti, cojac, compat, compat2]
    if anti.passed:
        entries.append(_agreement_entry("jacobi-forms-agree", jac, jac2))
    if anti.passed and coanti.passed:
        entries.append(
            _agreement_entry("compatibility-forms-agree", compat, compat2)
        )
    return VerificationReport.of(entries)


def abelian_coabelian(ctx: CartierContext, space: GradedSpace) -> LieBialgebraData:
    """Zero bracket and cobracket on the given space."""
    sq = tensor_space(space, space)
    return LieBialgebraData(
        ctx,
        space,
        Morphism.zero(ctx.field, sq, space),
        Morphism.zero(ctx.field, space, sq),
    )
