"""Shared fixtures: label helpers, pinned braiding identities, mutation tooling."""
from __future__ import annotations

from fractions import Fraction

import colorlie as cl
from colorlie.graded_linalg import Morphism, TENSOR_SEP


def t(*labels: str) -> str:
    """Tensor basis label from component labels."""
    return TENSOR_SEP.join(labels)


def col(m: Morphism, label: str) -> dict:
    return m.column_by_label(label)


def example_families(g_values=(0, 1, 2, 3, 4)):
    """(name, structure, family, family-param) for the whole zoo."""
    out = [
        ("jordan", cl.jordan_plane(), "jordan", None),
        ("superjordan", cl.super_jordan_plane(), "superjordan", None),
    ]
    for g in g_values:
        out.append((f"laistrygonian-{g}", cl.laistrygonian(g), "laistrygonian", g))
    return out


def braiding_pins(k: cl.CrossedLieBialgebra, family: str, g_param=None):
    """Exact closed-form values of the induced braiding, per family.

    Expected values come from the published closed forms (Kronecker
    deltas and weights in the family parameters), computed here without
    reference to the structure's own action or coaction, so they are an
    independent oracle against the composed matrix.
    """
    eh = cl.induced_eta(k.cm, k.cm)
    field = k.field
    pins: list[tuple[str, bool]] = []

    def image(a: str, b: str) -> dict:
        return eh.column_by_label(t(a, b))

    if family == "jordan":
        pins.append(
            (
                "pin-braiding-x2-x2",
                image("x2", "x2")
                == {t("x1", "x2"): field.one, t("x2", "x1"): field.one},
            )
        )
        tau = cl.tau_morphism(k.ctx, k.space, k.space)
        ident = Morphism.identity(field, tau.source)
        pins.append(("pin-symmetrized-braiding-vanishes", ((tau - ident) @ eh).is_zero()))
    elif family == "superjordan":
        for i in (1, 2):
            for j in (1, 2):
                for kk in (1, 2):
                    for l in (1, 2):
                        expect: dict = {}
                        if j == 2:
                            lbl = t(f"x{i}1", f"x{kk}{l}")
                            expect[lbl] = expect.get(lbl, field.zero) + field.of(kk)
                        if l == 2:
                            lbl = t(f"x{i}{j}", f"x{kk}1")
                            expect[lbl] = expect.get(lbl, field.zero) + field.of(i)
                        expect = {a: b for a, b in expect.items() if b != 0}
                        pins.append(
                            (
                                f"pin-braiding-x{i}{j}-x{kk}{l}",
                                image(f"x{i}{j}", f"x{kk}{l}") == expect,
                            )
                        )
    elif family == "laistrygonian":
        g = g_param
        pins.append(("pin-dimension", k.space.dim == g + 3))
        pins.append(
            (
                "pin-braiding-x2-x2",
                image("x2", "x2")
                == {t("x1", "x2"): field.one, t("x2", "x1"): field.one},
            )
        )
        core = cl.laistrygonian_core_labels(g)
        for a in core:
            for b in core:
                pins.append((f"pin-braiding-zero-{a}-{b}", image(a, b) == {}))
        for kk in range(g + 1):
            weight = field.of(Fraction(2 * kk - g, 2))
            expect = {t("x1", f"z{kk}"): weight} if weight != 0 else {}
            pins.append((f"pin-braiding-x2-z{kk}", image("x2", f"z{kk}") == expect))
    else:
        raise ValueError(family)
    return pins


def assert_pins(k, family, g_param=None):
    failed = [name for name, ok in braiding_pins(k, family, g_param) if not ok]
    assert not failed, f"pinned identities failed: {failed}"


def structure_maps(k: cl.CrossedLieBialgebra) -> dict[str, Morphism]:
    return {
        "alpha": k.cm.alpha,
        "lambda": k.cm.lam,
        "beta": k.beta,
        "delta": k.delta,
    }


def single_entry_mutants(k: cl.CrossedLieBialgebra):
    """All structures obtained by adding one to a single nonzero entry of
    the action, coaction, bracket or cobracket (partners untouched)."""
    field = k.field
    maps = structure_maps(k)
    for name, m in maps.items():
        for i, j, _ in m.entries():
            bumped = Morphism.build(
                field,
                m.source,
                m.target,
                list(m.entries()) + [(i, j, field.one)],
            )
            repl = dict(maps)
            repl[name] = bumped
            cm = cl.CrossedModuleData(k.base, k.space, repl["alpha"], repl["lambda"])
            mutant = cl.CrossedLieBialgebra(cm, repl["beta"], repl["delta"])
            yield name, (m.target.labels[i], m.source.labels[j]), mutant


def conformance_ok(mutant: cl.CrossedLieBialgebra, reference: cl.CrossedLieBialgebra) -> bool:
    """Do the structure constants match the reference family member?"""
    a, b = structure_maps(mutant), structure_maps(reference)
    return all(a[name] == b[name] for name in a)
