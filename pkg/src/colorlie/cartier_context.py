"""Bicharacters, the color symmetry, and the infinitesimal braiding.

A context fixes the field, a multiplicative antisymmetric bicharacter
chi (defining the symmetry tau) and an additive symmetric bicharacter
(defining the infinitesimal braiding eta) on the grading group Z^r.
Both bicharacters are determined by their values on the standard
generators, stored as r x r matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .fields import Field, Scalar
from .graded_linalg import (
    Degree,
    GradedSpace,
    Morphism,
    tensor_morphism,
    tensor_space,
)
from .reporting import ReportEntry, VerificationReport, entry_from_equality, entry_from_residual


class ContextError(ValueError):
    """Bicharacter matrices violate their defining constraints."""


def _coerce_matrix(field: Field, matrix: Sequence[Sequence]) -> tuple[tuple[Scalar, ...], ...]:
    rows = tuple(tuple(field.of(x) for x in row) for row in matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ContextError("bicharacter matrix must be square")
    return rows


def _power(value: Scalar, exponent: int) -> Scalar:
    return value ** exponent


@lru_cache(maxsize=None)
def _mult_eval(bichar: "MultBicharacter", a: Degree, b: Degree) -> Scalar:
    out = bichar.field.one
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj == 0:
                continue
            out = out * _power(bichar.matrix[i][j], ai * bj)
    return out


@lru_cache(maxsize=None)
def _add_eval(bichar: "AddBicharacter", a: Degree, b: Degree) -> Scalar:
    out = bichar.field.zero
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj == 0:
                continue
            out = out + bichar.matrix[i][j] * bichar.field.of(ai * bj)
    return out


@dataclass(frozen=True)
class MultBicharacter:
    """chi on Z^r, multiplicative in both arguments, with chi(a,b)chi(b,a)=1."""

    field: Field
    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _coerce_matrix(self.field, self.matrix))
        m = self.matrix
        one = self.field.one
        for i in range(len(m)):
            if m[i][i] * m[i][i] != one:
                raise ContextError(f"diagonal entry chi(e{i},e{i}) must square to 1")
            for j in range(len(m)):
                if m[i][j] == 0:
                    raise ContextError("bicharacter entries must be invertible")
                if m[i][j] * m[j][i] != one:
                    raise ContextError(
                        f"antisymmetry fails at ({i},{j}): chi_ij*chi_ji != 1"
                    )

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def eval(self, a: Degree, b: Degree) -> Scalar:
        return _mult_eval(self, a, b)


@dataclass(frozen=True)
class AddBicharacter:
    """Symmetric bi-additive form on Z^r with values in the field."""

    field: Field
    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", _coerce_matrix(self.field, self.matrix))
        m = self.matrix
        for i in range(len(m)):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise ContextError(f"additive bicharacter not symmetric at ({i},{j})")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @staticmethod
    def zero(field: Field, rank: int) -> "AddBicharacter":
        return AddBicharacter(field, tuple((field.zero,) * rank for _ in range(rank)))

    def eval(self, a: Degree, b: Degree) -> Scalar:
        return _add_eval(self, a, b)


@dataclass(frozen=True)
class CartierContext:
    """Field + symmetry bicharacter + infinitesimal-braiding bicharacter."""

    field: Field
    tau: MultBicharacter
    eta: AddBicharacter

    def __post_init__(self) -> None:
        if self.tau.field != self.field or self.eta.field != self.field:
            raise ContextError("bicharacters defined over a different field")
        if self.tau.rank != self.eta.rank:
            raise ContextError("bicharacter ranks disagree")

    @property
    def rank(self) -> int:
        return self.tau.rank

    @staticmethod
    def make(field: Field, tau_matrix, eta_matrix=None) -> "CartierContext":
        tau = MultBicharacter(field, tau_matrix)
        if eta_matrix is None:
            eta = AddBicharacter.zero(field, tau.rank)
        else:
            eta = AddBicharacter(field, eta_matrix)
        return CartierContext(field, tau, eta)

    def space(self, basis) -> GradedSpace:
        return GradedSpace.build(self.rank, basis)


@lru_cache(maxsize=None)
def tau_morphism(ctx: CartierContext, v: GradedSpace, w: GradedSpace) -> Morphism:
    """The symmetry V (x) W -> W (x) V: v (x) w -> chi(|v|,|w|) w (x) v."""
    if v.rank != ctx.rank or w.rank != ctx.rank:
        raise ContextError("space rank does not match the context")
    source = tensor_space(v, w)
    target = tensor_space(w, v)
    entries = []
    for i, dv in enumerate(v.degrees):
        for j, dw in enumerate(w.degrees):
            entries.append((j * v.dim + i, i * w.dim + j, ctx.tau.eval(dv, dw)))
    return Morphism.build(ctx.field, source, target, entries)


@lru_cache(maxsize=None)
def eta_morphism(ctx: CartierContext, v: GradedSpace, w: GradedSpace) -> Morphism:
    """The infinitesimal braiding on V (x) W: scaling by eta(|v|,|w|)."""
    if v.rank != ctx.rank or w.rank != ctx.rank:
        raise ContextError("space rank does not match the context")
    vw = tensor_space(v, w)
    entries = []
    for i, dv in enumerate(v.degrees):
        for j, dw in enumerate(w.degrees):
            k = i * w.dim + j
            entries.append((k, k, ctx.eta.eval(dv, dw)))
    return Morphism.build(ctx.field, vw, vw, entries)


def check_cartier_axioms(
    ctx: CartierContext, samples: Sequence[GradedSpace]
) -> VerificationReport:
    """Verify the defining and derived braiding identities on sample triples.

    Checked exactly, as matrix identities:
      * compatibility with the symmetry on all pairs,
      * the hexagon in the second tensor slot on all triples,
      * the derived first-slot hexagon on all triples,
      * vanishing against the unit object.
    """
    if not samples:
        raise ContextError("need at least one sample space")
    field = ctx.field
    entries: list[ReportEntry] = []

    unit = GradedSpace.unit(ctx.rank)
    for x in samples:
        entries.append(
            entry_from_residual(
                f"eta-unit-left[{_name(x)}]", eta_morphism(ctx, unit, x)
            )
        )
        entries.append(
            entry_from_residual(
                f"eta-unit-right[{_name(x)}]", eta_morphism(ctx, x, unit)
            )
        )

    for x in samples:
        for y in samples:
            lhs = eta_morphism(ctx, y, x) @ tau_morphism(ctx, x, y)
            rhs = tau_morphism(ctx, x, y) @ eta_morphism(ctx, x, y)
            entries.append(
                entry_from_equality(f"eta-tau-compat[{_name(x)},{_name(y)}]", lhs, rhs)
            )

    for x in samples:
        for y in samples:
            for z in samples:
                idy = Morphism.identity(field, y)
                idz = Morphism.identity(field, z)
                idx = Morphism.identity(field, x)
                # second-slot hexagon
                lhs = eta_morphism(ctx, x, tensor_space(y, z))
                rhs = tensor_morphism(eta_morphism(ctx, x, y), idz) + (
                    tensor_morphism(tau_morphism(ctx, y, x), idz)
                    @ tensor_morphism(idy, eta_morphism(ctx, x, z))
                    @ tensor_morphism(tau_morphism(ctx, x, y), idz)
                )
                entries.append(
                    entry_from_equality(
                        f"eta-hexagon-second[{_name(x)},{_name(y)},{_name(z)}]",
                        lhs,
                        rhs,
                    )
                )
                # derived first-slot hexagon
                lhs1 = eta_morphism(ctx, tensor_space(x, y), z)
                rhs1 = tensor_morphism(idx, eta_morphism(ctx, y, z)) + (
                    tensor_morphism(idx, tau_morphism(ctx, z, y))
                    @ tensor_morphism(eta_morphism(ctx, x, z), idy)
                    @ tensor_morphism(idx, tau_morphism(ctx, y, z))
                )
                entries.append(
                    entry_from_equality(
                        f"eta-hexagon-first[{_name(x)},{_name(y)},{_name(z)}]",
                        lhs1,
                        rhs1,
                    )
                )
    return VerificationReport.of(entries)


def _name(space: GradedSpace) -> str:
    if space.dim == 0:
        return "0"
    return space.labels[0] + ("..." if space.dim > 1 else "")


EtaFn = Callable[[GradedSpace, GradedSpace], Morphism]


def ambient_eta_fn(ctx: CartierContext) -> EtaFn:
    """Pair-wise eta supplier backed by the context's additive bicharacter."""

    def fn(v: GradedSpace, w: GradedSpace) -> Morphism:
        return eta_morphism(ctx, v, w)

    return fn
