"""Catalog integrity: displayed matrices, relators, word identities and
conjugation identities for all three rings."""

import pytest

from picardhyb.catalog import (
    Catalog, CatalogError, cayley, cayley_transform, embed, get_catalog,
    hybrid_generators, verify_word_identity,
)
from picardhyb.cxhyp import Mat, is_unitary, herm_form_h2, proj_eq, disk_form
from picardhyb.fpgroups import format_word


@pytest.mark.parametrize("d", (1, 3, 7))
def test_catalog_loads_and_validates(d):
    cat = get_catalog(d)
    assert isinstance(cat, Catalog)
    assert cat.d == d


@pytest.mark.parametrize("d", (1, 3, 7))
def test_relators_evaluate_to_unit_identity(d):
    cat = get_catalog(d)
    env = dict(cat.picard)
    names = cat.presentation.names()
    ident = Mat.identity(d, 3)
    for r in cat.presentation.relators:
        m = cat.eval_word(format_word(r, names), env)
        assert proj_eq(m, ident)


def test_presentation_sizes():
    assert len(get_catalog(3).presentation.relators) == 5
    assert len(get_catalog(1).presentation.relators) == 7
    assert len(get_catalog(7).presentation.relators) == 13


@pytest.mark.parametrize("d", (1, 3, 7))
def test_word_identities(d):
    cat = get_catalog(d)
    for wi in cat.word_identities:
        assert verify_word_identity(d, wi.word, wi.target), (wi.lemma, wi.target)


@pytest.mark.parametrize("d", (1, 3, 7))
def test_conjugation_identities(d):
    cat = get_catalog(d)
    env = cat.env()
    for ci in cat.conjugation_identities:
        lhs = cat.eval_word(ci.lhs, env)
        rhs = cat.eval_word(ci.rhs, env)
        assert proj_eq(lhs, rhs), (ci.lemma, ci.lhs)


def test_cayley_transform_integral():
    for d in (1, 3, 7):
        j = cayley_transform(d)
        assert j.is_integral() and j.inverse().is_integral()


def test_embed_preserves_form():
    for d in (1, 3, 7):
        cat = get_catalog(d)
        h2 = herm_form_h2(d)
        for m in cat.fuchsian.values():
            assert is_unitary(m, disk_form(d))
            for slot in (1, 2):
                assert is_unitary(cayley(embed(slot, m)), h2)


def test_embed_rejects_bad_input():
    with pytest.raises(ValueError):
        embed(3, get_catalog(3).fuchsian["R"])
    with pytest.raises(ValueError):
        embed(1, Mat.identity(3, 3))


def test_hybrid_generators_variants():
    plain = hybrid_generators(3, "plain")
    assert set(plain) == {"E1", "E2", "U1", "U2", "I1", "I2"}
    primed = hybrid_generators(3, "primed")
    assert "E1p" in primed
    primed1 = hybrid_generators(1, "primed")
    assert {"R1", "R2"} <= set(primed1)
    with pytest.raises(ValueError):
        hybrid_generators(7, "primed")
    with pytest.raises(ValueError):
        hybrid_generators(3, "weird")


def test_get_catalog_rejects_bad_d():
    with pytest.raises(ValueError):
        get_catalog(2)


def test_d3_primed_square_root():
    cat = get_catalog(3)
    e1p = cat.hybrid_primed["E1p"]
    assert proj_eq(e1p * e1p, cat.hybrid["E1"])


def test_d1_primed_order4_membership():
    cat = get_catalog(1)
    env = dict(cat.hybrid)
    env.update(cat.hybrid_primed)
    ident = Mat.identity(1, 3)
    assert proj_eq(cat.eval_word("E1^2 E2 R1", env), ident)
    assert proj_eq(cat.eval_word("E1 E2^2 R2", env), ident)
    assert proj_eq(cat.eval_word("R2^-1 R1^-2", env), env["E1"])
    assert proj_eq(cat.eval_word("R2^-2 R1^-1", env), env["E2"])


def test_d7_cross_checks():
    cat = get_catalog(7)
    # iota_1(-Id) agrees with iota_2(B) projectively (they differ by -1)
    minus_id = -Mat.identity(7, 2)
    lhs = cayley(embed(1, minus_id))
    rhs = cayley(embed(2, cat.fuchsian["B"]))
    assert proj_eq(lhs, rhs)
    assert not (lhs - rhs).is_zero()


@pytest.mark.parametrize("d", (1, 3, 7))
def test_flags_are_reported(d):
    flags = get_catalog(d).flags
    if d == 1:
        assert any("corollary-4.6" in f for f in flags)
    if d == 3:
        assert any("section-3-closing" in f for f in flags)
    if d == 7:
        assert any("B2" in f for f in flags)
