import random
from fractions import Fraction

import pytest

import colorlie as cl
from colorlie.cartier_context import CartierContext, tau_morphism
from colorlie.fields import QQ
from colorlie.graded_linalg import Morphism, tensor_space
from colorlie.lie_structures import (
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

from helpers import col, t


def with_maps(k: cl.CrossedLieBialgebra, beta=None, delta=None) -> LieBialgebraData:
    return LieBialgebraData(
        k.ctx, k.space, beta if beta is not None else k.beta, delta if delta is not None else k.delta
    )


def bump(m: Morphism, target_label: str, source_label: str, value=1) -> Morphism:
    i = m.target.index(target_label)
    j = m.source.index(source_label)
    return Morphism.build(
        m.field, m.source, m.target, list(m.entries()) + [(i, j, m.field.of(value))]
    )


JORDAN = cl.jordan_plane()
SUPER = cl.super_jordan_plane()
LAIS3 = cl.laistrygonian(3)


def test_shape_validation():
    with pytest.raises(StructureError):
        LieBialgebraData(JORDAN.ctx, JORDAN.space, JORDAN.delta, JORDAN.delta)


# -- antisymmetry ---------------------------------------------------------


def test_zero_bracket_is_antisymmetric():
    assert check_antisymmetry(JORDAN.as_bialgebra()).passed


def test_super_bracket_antisymmetric_with_even_diagonal():
    L = SUPER.as_bialgebra()
    assert check_antisymmetry(L).passed
    # beta(x12 (x) x12) = 2 x22 is consistent: the swap fixes the tensor up to sign
    assert col(L.beta, t("x12", "x12")) == {"x22": Fraction(2)}


def test_one_sided_bracket_mutation_breaks_antisymmetry():
    broken = bump(SUPER.beta, "x22", t("x11", "x12"))
    entry = check_antisymmetry(with_maps(SUPER, beta=broken))
    assert not entry.passed
    assert entry.witness is not None
    assert entry.witness.tensor in (t("x11", "x12"), t("x12", "x11"))


# -- Jacobi ---------------------------------------------------------------


def test_chain_bracket_satisfies_jacobi():
    L = LAIS3.as_bialgebra()
    assert check_jacobi(L).passed
    # the chain actually moves: beta(x2 (x) beta(x2 (x) z0)) = z2
    assert col(L.beta, t("x2", "z0")) == {"z1": Fraction(1)}
    assert col(L.beta, t("x2", "z1")) == {"z2": Fraction(1)}


def test_abelian_bracket_satisfies_jacobi():
    assert check_jacobi(JORDAN.as_bialgebra()).passed


def test_degree_preservation_forbids_degree_two_bracket_outputs():
    # on the sign-graded four-dimensional space every degree-legal bracket
    # lands in the top degree and dies there, so a Jacobi breaker cannot
    # even be written down; the constructor rejects the attempt
    with pytest.raises(cl.LinalgError):
        bump(SUPER.beta, "x11", t("x21", "x12"))


def test_antisymmetric_non_jacobi_bracket_fails_both_forms():
    ctx = CartierContext.make(QQ, [[1]])
    v = ctx.space([("a", (0,)), ("b", (0,)), ("c", (0,))])
    sq = tensor_space(v, v)
    tau = tau_morphism(ctx, v, v)
    raw = Morphism.build(QQ, sq, v, [(0, 1, Fraction(1)), (1, 2, Fraction(1))])
    beta = raw - raw @ tau
    L = LieBialgebraData(ctx, v, beta, Morphism.zero(QQ, v, sq))
    assert check_antisymmetry(L).passed
    assert not check_jacobi(L).passed
    assert not check_jacobi_equivalent_form(L).passed


def test_jacobi_forms_agree_on_random_antisymmetric_brackets():
    ctx = CartierContext.make(QQ, [[1]])
    v = ctx.space([("a", (0,)), ("b", (0,)), ("c", (0,))])
    sq = tensor_space(v, v)
    rng = random.Random(99)
    tau = tau_morphism(ctx, v, v)
    disagreements = 0
    for _ in range(25):
        raw = Morphism.build(
            QQ,
            sq,
            v,
            [
                (i, j, Fraction(rng.randint(-2, 2)))
                for i in range(3)
                for j in range(9)
                if rng.random() < 0.4
            ],
        )
        beta = raw - raw @ tau
        L = LieBialgebraData(ctx, v, beta, Morphism.zero(QQ, v, sq))
        a = check_jacobi(L).passed
        b = check_jacobi_equivalent_form(L).passed
        if a != b:
            disagreements += 1
    assert disagreements == 0


# -- co-axioms -------------------------------------------------------------


def test_chain_cobracket_passes_coaxioms():
    L = LAIS3.as_bialgebra()
    assert check_coantisymmetry(L).passed
    assert check_cojacobi(L).passed
    # with chain length 2: delta(z2) = (2(2-1-2)/2)(swap - id)(x1 (x) z1)
    L2 = cl.laistrygonian(2).as_bialgebra()
    assert col(L2.delta, "z2") == {t("z1", "x1"): Fraction(-1), t("x1", "z1"): Fraction(1)}
    assert col(L2.delta, "z0") == {}


def test_zero_cobracket_passes():
    L = JORDAN.as_bialgebra()
    assert check_coantisymmetry(L).passed
    assert check_cojacobi(L).passed


def test_symmetrized_cobracket_fails_coantisymmetry():
    # replace (swap - id) by (swap + id) on one generator
    L = LAIS3.as_bialgebra()
    tau = tau_morphism(L.ctx, L.space, L.space)
    sq = tensor_space(L.space, L.space)
    base = Morphism.build(
        QQ, L.space, sq, [(sq.labels.index(t("x1", "z1")), L.space.labels.index("z2"), Fraction(1))]
    )
    bad_delta = L.delta + (tau + Morphism.identity(QQ, sq)) @ base
    entry = check_coantisymmetry(with_maps(LAIS3, delta=bad_delta))
    assert not entry.passed


# -- compatibility ----------------------------------------------------------


def test_jordan_compatibility_both_sides_vanish():
    L = JORDAN.as_bialgebra()
    eta_hat = cl.induced_eta(JORDAN.cm, JORDAN.cm)
    assert (L.delta @ L.beta).is_zero()
    tau = tau_morphism(L.ctx, L.space, L.space)
    ident = Morphism.identity(QQ, tau.source)
    assert ((tau - ident) @ eta_hat).is_zero()
    assert check_bialgebra_compatibility(L, eta_hat).passed


def test_trivial_structure_with_zero_braiding_passes():
    ctx = CartierContext.make(QQ, [[1]])
    v = ctx.space([("a", (1,))])
    sq = tensor_space(v, v)
    L = LieBialgebraData(ctx, v, Morphism.zero(QQ, sq, v), Morphism.zero(QQ, v, sq))
    assert check_bialgebra_compatibility(L).passed
    assert check_bialgebra_equivalent_form(L).passed


def test_super_compatibility_needs_the_braiding_term():
    L = SUPER.as_bialgebra()
    eta_hat = cl.induced_eta(SUPER.cm, SUPER.cm)
    assert check_bialgebra_compatibility(L, eta_hat).passed
    zero_eta = Morphism.zero(QQ, eta_hat.source, eta_hat.target)
    entry = check_bialgebra_compatibility(L, zero_eta)
    assert not entry.passed
    # delta beta (x12 (x) x12) = 2 delta(x22) is what the braiding accounts for
    db = L.delta @ L.beta
    assert col(db, t("x12", "x12")) == {
        t("x11", "x12"): Fraction(-2),
        t("x12", "x11"): Fraction(-2),
    }


def test_compatibility_forms_agree_on_perturbed_structures():
    rng = random.Random(4)
    L = JORDAN.as_bialgebra()
    tau = tau_morphism(L.ctx, L.space, L.space)
    sq = tensor_space(L.space, L.space)
    id2 = Morphism.identity(QQ, sq)
    for _ in range(20):
        raw_b = Morphism.build(
            QQ, sq, L.space,
            [(i, j, Fraction(rng.randint(-1, 1))) for i in range(2) for j in range(4) if rng.random() < 0.5 and L.space.degrees[i] == sq.degrees[j]],
        )
        raw_d = Morphism.build(
            QQ, L.space, sq,
            [(j, i, Fraction(rng.randint(-1, 1))) for i in range(2) for j in range(4) if rng.random() < 0.5 and L.space.degrees[i] == sq.degrees[j]],
        )
        beta = raw_b - raw_b @ tau
        delta = raw_d - tau @ raw_d
        cand = LieBialgebraData(L.ctx, L.space, beta, delta)
        assert check_antisymmetry(cand).passed and check_coantisymmetry(cand).passed
        eta_map = Morphism.zero(QQ, sq, sq)
        a = check_bialgebra_compatibility(cand, eta_map).passed
        b = check_bialgebra_equivalent_form(cand, eta_map).passed
        assert a == b


def test_suite_includes_agreement_entries():
    report = verify_lie_bialgebra(JORDAN.as_bialgebra())
    names = [e.axiom for e in report.entries]
    assert "jacobi-forms-agree" in names
    assert "compatibility-forms-agree" in names
    assert report.passed


def test_failing_witness_reproduces_residual():
    broken = bump(SUPER.beta, "x22", t("x11", "x12"))
    L = with_maps(SUPER, beta=broken)
    entry = check_antisymmetry(L)
    assert not entry.passed
    tau = tau_morphism(L.ctx, L.space, L.space)
    sq = tensor_space(L.space, L.space)
    residual = L.beta @ (Morphism.identity(QQ, sq) + tau)
    expected = residual.column_by_label(entry.witness.tensor)
    reported = {label: QQ.parse(v) for label, v in entry.witness.residual}
    assert reported == expected
