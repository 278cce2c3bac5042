from fractions import Fraction

import pytest

import colorlie as cl
from colorlie.cartier_context import CartierContext, tau_morphism
from colorlie.fields import QQ, Field
from colorlie.graded_linalg import LinalgError, Morphism, tensor_space
from colorlie.lie_structures import LieBialgebraData
from colorlie.crossed_modules import (
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
    zeta,
)

from helpers import col, t

JORDAN = cl.jordan_plane()
SUPER = cl.super_jordan_plane()
LAIS = {g: cl.laistrygonian(g) for g in (0, 1, 2, 3)}


def replace_cm(cm: CrossedModuleData, alpha=None, lam=None) -> CrossedModuleData:
    return CrossedModuleData(
        cm.base,
        cm.space,
        alpha if alpha is not None else cm.alpha,
        lam if lam is not None else cm.lam,
    )


# -- module and comodule axioms ------------------------------------------


def test_commuting_generator_actions_form_a_module():
    assert check_module(LAIS[3].cm).passed


def test_zero_action_is_a_module():
    zero = Morphism.zero(QQ, JORDAN.cm.alpha.source, JORDAN.cm.alpha.target)
    assert check_module(replace_cm(JORDAN.cm, alpha=zero)).passed


def test_fake_base_bracket_breaks_the_module_axiom():
    lais = LAIS[2]
    f = lais.base.space
    sq = tensor_space(f, f)
    # s, t both send x2 to x1 while the base bracket sends s (x) t to s
    base_beta = Morphism.build(QQ, sq, f, [(0, 1, Fraction(1))])
    fake_base = LieBialgebraData(lais.ctx, f, base_beta, lais.base.delta)
    v = lais.space
    fv = tensor_space(f, v)
    alpha = Morphism.build(
        QQ,
        fv,
        v,
        [
            (v.index("x1"), 0 * v.dim + v.index("x2"), Fraction(1)),
            (v.index("x1"), 1 * v.dim + v.index("x2"), Fraction(1)),
        ],
    )
    cm = CrossedModuleData(fake_base, v, alpha, lais.cm.lam)
    entry = check_module(cm)
    assert not entry.passed
    assert entry.witness.tensor == t("s", "t", "x2")


def test_diagonal_coaction_over_coabelian_base_is_a_comodule():
    assert check_comodule(JORDAN.cm).passed
    assert check_comodule(LAIS[2].cm).passed


def test_zero_coaction_is_a_comodule():
    zero = Morphism.zero(QQ, JORDAN.cm.lam.source, JORDAN.cm.lam.target)
    assert check_comodule(replace_cm(JORDAN.cm, lam=zero)).passed


def test_non_coabelian_base_breaks_the_comodule_axiom():
    ctx = CartierContext.make(QQ, [[1]])
    f = ctx.space([("s", (0,)), ("u", (0,))])
    sq = tensor_space(f, f)
    # delta(s) = s (x) u - u (x) s
    delta = Morphism.build(
        QQ, f, sq, [(1, 0, Fraction(1)), (2, 0, Fraction(-1))]
    )
    base = LieBialgebraData(ctx, f, Morphism.zero(QQ, sq, f), delta)
    v = ctx.space([("x", (1,))])
    fv = tensor_space(f, v)
    lam = Morphism.build(QQ, v, fv, [(0, 0, Fraction(1))])  # x -> s (x) x
    cm = CrossedModuleData(base, v, Morphism.zero(QQ, fv, v), lam)
    entry = check_comodule(cm)
    assert not entry.passed


# -- diagonal structures ---------------------------------------------------


def test_diagonal_action_expands_both_summands():
    alpha_sq = diagonal_action(JORDAN.cm, JORDAN.cm)
    assert col(alpha_sq, t("s", "x2", "x2")) == {
        t("x1", "x2"): Fraction(1),
        t("x2", "x1"): Fraction(1),
    }


def test_tensoring_with_trivial_module_changes_nothing():
    unit = cl.GradedSpace.unit(1)
    fv = tensor_space(JORDAN.base.space, unit)
    trivial = CrossedModuleData(
        JORDAN.base, unit, Morphism.zero(QQ, fv, unit), Morphism.zero(QQ, unit, fv)
    )
    combined = tensor_crossed_module(JORDAN.cm, trivial)
    assert combined.space.degrees == JORDAN.space.degrees
    assert check_module(combined).passed and check_comodule(combined).passed
    assert combined.alpha.cols == JORDAN.cm.alpha.cols
    assert combined.lam.cols == JORDAN.cm.lam.cols


@pytest.mark.parametrize(
    "a, b",
    [(JORDAN, JORDAN), (SUPER, SUPER), (LAIS[1], LAIS[1]), (LAIS[2], LAIS[2])],
)
def test_tensor_objects_inherit_all_crossed_axioms(a, b):
    combined = tensor_crossed_module(a.cm, b.cm)
    assert check_module(combined).passed
    assert check_comodule(combined).passed
    assert check_crossed_axiom(combined).passed


# -- crossed axiom -----------------------------------------------------------


def test_examples_satisfy_the_crossed_axiom():
    assert check_crossed_axiom(JORDAN.cm).passed
    assert check_crossed_axiom(SUPER.cm).passed
    assert check_crossed_axiom(LAIS[3].cm).passed


def test_zero_structures_satisfy_the_crossed_axiom():
    fv = tensor_space(JORDAN.base.space, JORDAN.space)
    cm = CrossedModuleData(
        JORDAN.base,
        JORDAN.space,
        Morphism.zero(QQ, fv, JORDAN.space),
        Morphism.zero(QQ, JORDAN.space, fv),
    )
    assert check_crossed_axiom(cm).passed


def test_wrong_coaction_weight_is_rejected_by_the_suite():
    # weight 1 instead of 2 on the second row: the crossed axiom itself
    # still holds (both sides rescale together), but the cobracket stops
    # being a comodule morphism, so the full suite rejects the structure
    v = SUPER.space
    fv = tensor_space(SUPER.base.space, v)
    lam = Morphism.build(
        QQ, v, fv, [(v.index(l), v.index(l), Fraction(1)) for l in v.labels]
    )
    cm = replace_cm(SUPER.cm, lam=lam)
    assert check_crossed_axiom(cm).passed
    mutant = CrossedLieBialgebra(cm, SUPER.beta, SUPER.delta)
    report = verify_crossed_bialgebra(mutant)
    assert not report.passed
    assert not report.entry("cobracket-comodule-morphism").passed


def test_single_weight_bump_breaks_the_crossed_axiom():
    # adding one to the coaction weight of x21 alone does break the
    # crossed axiom, seen on s (x) x22
    v = SUPER.space
    lam = Morphism.build(
        QQ,
        v,
        SUPER.cm.lam.target,
        list(SUPER.cm.lam.entries()) + [(v.index("x21"), v.index("x21"), Fraction(1))],
    )
    entry = check_crossed_axiom(replace_cm(SUPER.cm, lam=lam))
    assert not entry.passed
    assert entry.witness.tensor == t("s", "x22")


# -- the exchange map and friends --------------------------------------------


def test_exchange_map_on_the_constant_coaction():
    z = zeta(JORDAN.cm, JORDAN.cm)
    assert col(z, t("x2", "x2")) == {t("x1", "x2"): Fraction(1)}
    assert col(z, t("x1", "x2")) == {t("x1", "x1"): Fraction(1)}
    assert col(z, t("x2", "x1")) == {}


def test_exchange_vanishes_without_a_coaction():
    fv = tensor_space(JORDAN.base.space, JORDAN.space)
    stripped = replace_cm(JORDAN.cm, lam=Morphism.zero(QQ, JORDAN.space, fv))
    assert zeta(stripped, JORDAN.cm).is_zero()


def test_exchange_weights_on_the_chain():
    k = LAIS[3]
    z = zeta(k.cm, k.cm)
    for kk in range(4):
        weight = Fraction(kk) - Fraction(3, 2)
        assert col(z, t(f"z{kk}", "x2")) == {t("x1", f"z{kk}"): weight}


def test_hats_vanish_over_abelian_coabelian_bases():
    assert hat_alpha(JORDAN.cm, JORDAN.cm).is_zero()
    assert hat_lambda(JORDAN.cm, JORDAN.cm).is_zero()
    assert hat_alpha(SUPER.cm, SUPER.cm).is_zero()
    assert hat_lambda(LAIS[2].cm, LAIS[2].cm).is_zero()


def _toy_noncoabelian():
    ctx = CartierContext.make(QQ, [[1]])
    f = ctx.space([("s", (0,)), ("u", (0,))])
    sq = tensor_space(f, f)
    delta = Morphism.build(QQ, f, sq, [(1, 0, Fraction(1)), (2, 0, Fraction(-1))])
    base = LieBialgebraData(ctx, f, Morphism.zero(QQ, sq, f), delta)
    v = ctx.space([("a", (0,)), ("b", (0,))])
    fv = tensor_space(f, v)
    # s and u both shift b -> a
    alpha = Morphism.build(
        QQ, fv, v, [(0, 1, Fraction(1)), (0, 3, Fraction(1))]
    )
    lam = Morphism.zero(QQ, v, fv)
    return base, CrossedModuleData(base, v, alpha, lam)


def test_hat_action_matches_brute_force_expansion():
    base, cm = _toy_noncoabelian()
    got = hat_alpha(cm, cm)
    # oracle: expand (act (x) act)(id (x) swap (x) id)(split (x) id) entrywise
    v = cm.space
    f = base.space
    expect = {}
    act = {(i, j): val for i, j, val in cm.alpha.entries()}
    for i, jf, coeff in base.delta.entries():
        f1, f2 = divmod(i, f.dim)
        for va in range(v.dim):
            for vb in range(v.dim):
                src = (jf * v.dim + va) * v.dim + vb
                for ta in range(v.dim):
                    c1 = act.get((ta, f1 * v.dim + va))
                    if not c1:
                        continue
                    for tb in range(v.dim):
                        c2 = act.get((tb, f2 * v.dim + vb))
                        if not c2:
                            continue
                        key = (ta * v.dim + tb, src)
                        expect[key] = expect.get(key, Fraction(0)) + coeff * c1 * c2
    expect = {k: v2 for k, v2 in expect.items() if v2 != 0}
    got_entries = {(i, j): val for i, j, val in got.entries()}
    assert got_entries == expect


def test_induced_braiding_values():
    eh = induced_eta(JORDAN.cm, JORDAN.cm)
    assert col(eh, t("x2", "x2")) == {
        t("x1", "x2"): Fraction(1),
        t("x2", "x1"): Fraction(1),
    }
    k = LAIS[2]
    ehl = induced_eta(k.cm, k.cm)
    assert col(ehl, t("x2", "z1")) == {}  # weight 1 - 2/2 = 0
    assert col(ehl, t("x2", "z2")) == {t("x1", "z2"): Fraction(1)}
    # all coactions zero and zero ambient braiding gives zero
    fv = tensor_space(JORDAN.base.space, JORDAN.space)
    stripped = replace_cm(JORDAN.cm, lam=Morphism.zero(QQ, JORDAN.space, fv))
    assert induced_eta(stripped, stripped).is_zero()


@pytest.mark.parametrize("k", [JORDAN, SUPER, LAIS[1], LAIS[2]])
def test_exchange_lemma_identities(k):
    assert check_zeta_lemma(k.cm, k.cm).passed


def test_exchange_lemma_on_zero_structures():
    fv = tensor_space(JORDAN.base.space, JORDAN.space)
    cm = CrossedModuleData(
        JORDAN.base,
        JORDAN.space,
        Morphism.zero(QQ, fv, JORDAN.space),
        Morphism.zero(QQ, JORDAN.space, fv),
    )
    assert check_zeta_lemma(cm, cm).passed
    assert check_eta_hat_morphism(cm, cm).passed


@pytest.mark.parametrize("k", [JORDAN, SUPER, LAIS[1]])
def test_induced_braiding_is_an_endomorphism(k):
    assert check_eta_hat_morphism(k.cm, k.cm).passed


def test_mixed_pair_lemma_on_laistrygonian_core():
    k = LAIS[2]
    sub, incl = crossed_submodule(k.cm, cl.laistrygonian_core_labels(2))
    assert check_zeta_lemma(k.cm, sub).passed
    assert check_zeta_lemma(sub, k.cm).passed
    assert check_eta_hat_morphism(sub, k.cm).passed


# -- induced infinitesimally braided structure --------------------------------


@pytest.mark.parametrize(
    "k, sub_labels",
    [
        (JORDAN, cl.JORDAN_LINE_LABELS),
        (SUPER, cl.SUPER_JORDAN_IDEAL_LABELS),
        (LAIS[1], cl.laistrygonian_core_labels(1)),
    ],
)
def test_induced_cartier_on_samples(k, sub_labels):
    sub, incl = crossed_submodule(k.cm, sub_labels)
    square = tensor_crossed_module(k.cm, k.cm)
    report = check_induced_cartier(
        k.base, [k.cm, sub, square], morphisms=[(sub, k.cm, incl)]
    )
    assert report.passed


def test_single_zero_sample_passes():
    fv = tensor_space(JORDAN.base.space, JORDAN.space)
    cm = CrossedModuleData(
        JORDAN.base,
        JORDAN.space,
        Morphism.zero(QQ, fv, JORDAN.space),
        Morphism.zero(QQ, JORDAN.space, fv),
    )
    assert check_induced_cartier(JORDAN.base, [cm]).passed


def test_samples_with_the_trivial_object():
    # the unit of the crossed-module category: the ambient unit with
    # zero action and coaction
    unit = cl.GradedSpace.unit(1)
    fu = tensor_space(JORDAN.base.space, unit)
    trivial = CrossedModuleData(
        JORDAN.base, unit, Morphism.zero(QQ, fu, unit), Morphism.zero(QQ, unit, fu)
    )
    assert check_induced_cartier(JORDAN.base, [JORDAN.cm, trivial]).passed
    # braiding against the trivial object vanishes
    assert induced_eta(JORDAN.cm, trivial).is_zero()
    assert induced_eta(trivial, JORDAN.cm).is_zero()


def test_inclusion_of_core_is_natural():
    k = LAIS[2]
    sub, incl = crossed_submodule(k.cm, cl.laistrygonian_core_labels(2))
    assert check_crossed_morphism(sub, k.cm, incl).passed
    report = check_induced_cartier(k.base, [k.cm, sub], morphisms=[(sub, k.cm, incl)])
    assert report.passed


def test_braiding_tau_symmetry_exact():
    for k in (JORDAN, SUPER, LAIS[2]):
        tau = tau_morphism(k.ctx, k.space, k.space)
        lhs = induced_eta(k.cm, k.cm) @ tau  # here V = W so both orders coincide
        rhs = tau @ induced_eta(k.cm, k.cm)
        assert lhs == rhs


# -- subobjects ---------------------------------------------------------------


def test_core_restriction_is_a_crossed_bialgebra():
    for g in (0, 1, 2, 3):
        k = LAIS[g]
        sub_k, incl = restrict_bialgebra(k, cl.laistrygonian_core_labels(g))
        assert verify_crossed_bialgebra(sub_k).passed
        assert induced_eta(sub_k.cm, sub_k.cm).is_zero()


def test_restriction_fails_on_unstable_span():
    with pytest.raises(LinalgError):
        crossed_submodule(JORDAN.cm, ["x2"])  # the action leaves the span


def test_span_subobject_report_distinguishes_fields():
    over_q = check_span_subobject(SUPER, ["x21"])
    assert not over_q.passed
    assert not over_q.entry("span-cobracket-vanishes").passed
    assert over_q.entry("span-action-closed").passed
    assert over_q.entry("span-ideal-left").passed

    over_f2 = check_span_subobject(cl.super_jordan_plane(Field(2)), ["x21"])
    assert over_f2.passed


def test_self_crossed_defect_diagnostic():
    # abelian coabelian base with zero braiding is self-crossed
    assert self_crossed_defect(JORDAN.base).is_zero()
    # the super Jordan module structure is not: the obstruction is nonzero
    defect = self_crossed_defect(SUPER.as_bialgebra())
    assert not defect.is_zero()
