"""Constructors for the concrete curved Lie bialgebra families.

All three families live in crossed modules over an abelian coabelian
base inside a category of color vector spaces with zero ambient
braiding; their induced braiding is nevertheless non-zero.  Structure
constants are exact field elements derived from the family parameters.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cartier_context import CartierContext
from .fields import QQ, Field
from .graded_linalg import GradedSpace, Morphism, tensor_space
from .lie_structures import LieBialgebraData, StructureError
from .lie_structures import abelian_coabelian as _abelian_on_space
from .crossed_modules import CrossedLieBialgebra, CrossedModuleData


def abelian_coabelian(
    degrees: Sequence[Sequence[int]],
    ctx: CartierContext,
    labels: Sequence[str] | None = None,
) -> LieBialgebraData:
    """Zero bracket and cobracket on a space with the given degrees."""
    if labels is None:
        labels = tuple(f"e{i}" for i in range(len(degrees)))
    space = GradedSpace.build(ctx.rank, zip(labels, degrees))
    return _abelian_on_space(ctx, space)


def _zero_square_maps(ctx, space):
    sq = tensor_space(space, space)
    return (
        Morphism.zero(ctx.field, sq, space),
        Morphism.zero(ctx.field, space, sq),
    )


def jordan_plane(field: Field = QQ) -> CrossedLieBialgebra:
    """Two-dimensional module in a single degree over a one-dimensional
    base: the coaction is constant, the action is a nilpotent shift,
    bracket and cobracket vanish.
    """
    ctx = CartierContext.make(field, [[1]])
    base = abelian_coabelian([(0,)], ctx, ["s"])
    j = ctx.space([("x1", (1,)), ("x2", (1,))])
    fv = tensor_space(base.space, j)
    one = field.one
    alpha = Morphism.build(field, fv, j, [(0, 1, one)])  # s.x2 = x1
    lam = Morphism.build(field, j, fv, [(0, 0, one), (1, 1, one)])  # x -> s(x)x
    beta, delta = _zero_square_maps(ctx, j)
    return CrossedLieBialgebra(CrossedModuleData(base, j, alpha, lam), beta, delta)


JORDAN_LINE_LABELS = ("x1",)  # annihilated line, a sub-crossed-module


def super_jordan_plane(field: Field = QQ) -> CrossedLieBialgebra:
    """Four-dimensional module split over two degrees with sign symmetry.

    Basis x_ij (i, j in {1, 2}) in degree i; the coaction weights row i
    by i, the action shifts j down (x_i1 -> 0), the bracket pairs the
    degree-one rows, and the cobracket feeds the degree-two row back
    into the antisymmetrized degree-one square.
    """
    ctx = CartierContext.make(field, [[-1]])
    base = abelian_coabelian([(0,)], ctx, ["s"])
    labels = ["x11", "x12", "x21", "x22"]
    v = ctx.space([(l, (int(l[1]),)) for l in labels])
    fv = tensor_space(base.space, v)
    ix = {l: i for i, l in enumerate(labels)}
    one = field.one

    alpha = Morphism.build(
        field,
        fv,
        v,
        [(ix["x11"], ix["x12"], one), (ix["x21"], ix["x22"], one)],
    )
    lam = Morphism.build(
        field,
        v,
        fv,
        [(ix[l], ix[l], field.of(int(l[1]))) for l in labels],
    )

    sq = tensor_space(v, v)

    def pair(a: str, b: str) -> int:
        return ix[a] * v.dim + ix[b]

    beta_entries = []
    for i in (1, 2):
        for j in (1, 2):
            coeff = i + j - 2
            if coeff:
                beta_entries.append((ix[f"x2{i + j - 2}"], pair(f"x1{i}", f"x1{j}"), field.of(coeff)))
    beta = Morphism.build(field, sq, v, beta_entries)

    delta_entries = []
    for i in (1, 2):
        # delta(x_2i) = -x11 (x) x_1i - x_1i (x) x11
        delta_entries.append((pair("x11", f"x1{i}"), ix[f"x2{i}"], -one))
        delta_entries.append((pair(f"x1{i}", "x11"), ix[f"x2{i}"], -one))
    delta = Morphism.build(field, v, sq, delta_entries)
    return CrossedLieBialgebra(CrossedModuleData(base, v, alpha, lam), beta, delta)


SUPER_JORDAN_IDEAL_LABELS = ("x21",)  # one-dimensional ideal candidate


def laistrygonian(
    g_param: int, chi_gh=1, field: Field = QQ
) -> CrossedLieBialgebra:
    """The (g_param + 3)-dimensional family over a two-dimensional base.

    Module basis x1, x2 in degree (1,0) and z_0..z_G in degrees (k,1);
    the two base generators coact diagonally with weights (k, 1) on z_k,
    the action sends x2 to multiples of x1, the bracket raises the chain
    z_k -> z_{k+1}, and the cobracket lowers it with quadratic weights.
    The off-generator symmetry value chi_gh stays a free parameter.
    """
    if field.char == 2:
        raise StructureError("family undefined in characteristic 2")
    if not isinstance(g_param, int) or g_param < 0:
        raise StructureError("chain length parameter must be a non-negative integer")
    chi = field.of(chi_gh)
    if chi == 0:
        raise StructureError("chi_gh must be invertible")
    ctx = CartierContext.make(
        field, [[field.one, chi], [field.one / chi, field.one]]
    )
    base = abelian_coabelian([(0, 0), (0, 0)], ctx, ["s", "t"])
    basis = [("x1", (1, 0)), ("x2", (1, 0))] + [
        (f"z{k}", (k, 1)) for k in range(g_param + 1)
    ]
    v = ctx.space(basis)
    fv = tensor_space(base.space, v)
    ix = {l: i for i, (l, _) in enumerate(basis)}
    one = field.one

    def fv_index(gen: int, label: str) -> int:
        return gen * v.dim + ix[label]

    alpha_entries = [(ix["x1"], fv_index(0, "x2"), one)]  # s.x2 = x1
    t_weight = field.of(Fraction(-g_param, 2))
    if t_weight != 0:
        alpha_entries.append((ix["x1"], fv_index(1, "x2"), t_weight))
    alpha = Morphism.build(field, fv, v, alpha_entries)

    lam_entries = [
        (fv_index(0, "x1"), ix["x1"], one),
        (fv_index(0, "x2"), ix["x2"], one),
    ]
    for k in range(g_param + 1):
        if k:
            lam_entries.append((fv_index(0, f"z{k}"), ix[f"z{k}"], field.of(k)))
        lam_entries.append((fv_index(1, f"z{k}"), ix[f"z{k}"], one))
    lam = Morphism.build(field, v, fv, lam_entries)

    sq = tensor_space(v, v)

    def pair(a: str, b: str) -> int:
        return ix[a] * v.dim + ix[b]

    beta_entries = []
    for k in range(g_param):
        beta_entries.append((ix[f"z{k + 1}"], pair("x2", f"z{k}"), one))
        beta_entries.append((ix[f"z{k + 1}"], pair(f"z{k}", "x2"), -(one / chi)))
    beta = Morphism.build(field, sq, v, beta_entries)

    delta_entries = []
    for k in range(1, g_param + 1):
        coeff = field.of(Fraction(k * (k - 1 - g_param), 2))
        if coeff == 0:
            continue
        delta_entries.append((pair(f"z{k - 1}", "x1"), ix[f"z{k}"], coeff * chi))
        delta_entries.append((pair("x1", f"z{k - 1}"), ix[f"z{k}"], -coeff))
    delta = Morphism.build(field, v, sq, delta_entries)
    return CrossedLieBialgebra(CrossedModuleData(base, v, alpha, lam), beta, delta)


def laistrygonian_core_labels(g_param: int) -> tuple[str, ...]:
    """Labels of the annihilated subspace spanned by x1 and the chain."""
    return ("x1",) + tuple(f"z{k}" for k in range(g_param + 1))
