from fractions import Fraction

import pytest

import colorlie as cl
from colorlie.fields import QQ, Field
from colorlie.lie_structures import StructureError

from helpers import assert_pins, col, example_families, t


@pytest.mark.parametrize(
    "name, k, family, g", example_families(), ids=lambda v: str(v)[:24]
)
def test_every_constructor_passes_its_full_suite(name, k, family, g):
    report = cl.verify_crossed_bialgebra(k)
    assert report.passed, [e.axiom for e in report.failures()]
    assert_pins(k, family, g)


def test_jordan_structure_constants():
    k = cl.jordan_plane()
    assert k.space.labels == ("x1", "x2")
    assert k.space.degrees == ((1,), (1,))
    assert col(k.cm.alpha, t("s", "x1")) == {}
    assert col(k.cm.alpha, t("s", "x2")) == {"x1": Fraction(1)}
    assert col(k.cm.lam, "x1") == {t("s", "x1"): Fraction(1)}
    assert k.beta.is_zero() and k.delta.is_zero()


def test_super_jordan_structure_constants():
    k = cl.super_jordan_plane()
    assert k.space.degrees == ((1,), (1,), (2,), (2,))
    assert col(k.cm.alpha, t("s", "x12")) == {"x11": Fraction(1)}
    assert col(k.cm.alpha, t("s", "x21")) == {}
    assert col(k.cm.lam, "x22") == {t("s", "x22"): Fraction(2)}
    assert col(k.beta, t("x11", "x12")) == {"x21": Fraction(1)}
    assert col(k.beta, t("x12", "x12")) == {"x22": Fraction(2)}
    assert col(k.beta, t("x11", "x11")) == {}
    assert col(k.delta, "x21") == {t("x11", "x11"): Fraction(-2)}
    assert col(k.delta, "x22") == {
        t("x11", "x12"): Fraction(-1),
        t("x12", "x11"): Fraction(-1),
    }
    assert col(k.delta, "x11") == {}


def test_super_jordan_compatibility_spot_value():
    k = cl.super_jordan_plane()
    db = k.delta @ k.beta
    # 2 * (swap - id)(x11 (x) x12), with the sign twist on odd degrees
    assert col(db, t("x12", "x12")) == {
        t("x11", "x12"): Fraction(-2),
        t("x12", "x11"): Fraction(-2),
    }


@pytest.mark.parametrize("g", range(9))
def test_laistrygonian_dimension_and_weights(g):
    k = cl.laistrygonian(g)
    assert k.space.dim == g + 3
    assert col(k.cm.lam, "z0") == {t("t", "z0"): Fraction(1)}
    if g >= 1:
        assert col(k.cm.lam, "z1") == {
            t("s", "z1"): Fraction(1),
            t("t", "z1"): Fraction(1),
        }
        assert col(k.beta, t("x2", "z0")) == {"z1": Fraction(1)}
    assert col(k.cm.alpha, t("t", "x2")) == (
        {} if g == 0 else {"x1": Fraction(-g, 2)}
    )
    assert col(k.beta, t("x2", f"z{g}")) == {}  # the chain stops


def test_laistrygonian_rejects_char_two_and_negative_length():
    with pytest.raises(StructureError):
        cl.laistrygonian(1, field=Field(2))
    with pytest.raises(StructureError):
        cl.laistrygonian(-1)


def test_laistrygonian_over_other_odd_characteristic():
    k = cl.laistrygonian(2, field=Field(5))
    assert cl.verify_crossed_bialgebra(k).passed


def test_abelian_coabelian_helper():
    ctx = cl.CartierContext.make(QQ, [[1]])
    L = cl.abelian_coabelian([(0,)], ctx, ["s"])
    assert L.beta.is_zero() and L.delta.is_zero()
    assert cl.verify_lie_bialgebra(L).passed
    # matches the base used by the first family
    assert cl.jordan_plane().base.space.labels == ("s",)
    two = cl.abelian_coabelian([(0, 0), (0, 0)], cl.CartierContext.make(QQ, [[1, 1], [1, 1]]))
    assert two.space.labels == ("e0", "e1")


def test_core_subspace_is_a_crossed_submodule_for_every_length():
    for g in range(5):
        k = cl.laistrygonian(g)
        sub, incl = cl.crossed_submodule(k.cm, cl.laistrygonian_core_labels(g))
        assert cl.check_crossed_morphism(sub, k.cm, incl).passed
        eh = cl.induced_eta(k.cm, k.cm)
        for a in cl.laistrygonian_core_labels(g):
            for b in cl.laistrygonian_core_labels(g):
                assert eh.column_by_label(t(a, b)) == {}


def test_jordan_embeds_in_every_chain_through_the_action():
    # s acts on x2 by x1 in both families, and the braiding restricted to
    # the x-plane matches the two-dimensional family
    for g in (0, 2, 4):
        k = cl.laistrygonian(g)
        assert col(k.cm.alpha, t("s", "x2")) == {"x1": Fraction(1)}
        eh = cl.induced_eta(k.cm, k.cm)
        assert col(eh, t("x2", "x2")) == {
            t("x1", "x2"): Fraction(1),
            t("x2", "x1"): Fraction(1),
        }


@pytest.mark.parametrize("chi", [1, -1, 2, Fraction(1, 2), -3])
def test_symmetry_parameter_sweep(chi):
    # the unpinned symmetry value chi(g,h) does not affect validity
    k = cl.laistrygonian(2, chi_gh=chi)
    report = cl.verify_crossed_bialgebra(k)
    assert report.passed, [e.axiom for e in report.failures()]
    total = cl.bisum(k)
    assert cl.verify_lie_bialgebra(total).passed
