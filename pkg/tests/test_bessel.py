import random

import pytest

from cuspeps.bessel import (
    BesselTable,
    bessel_value,
    build_table,
    contragredient_table,
    get_evaluator,
    hankel_check,
    mat_eq,
    mat_mul,
    mat_trace,
    model_space,
    operator_L,
)
from cuspeps.cusp import contragredient, list_cuspidals
from cuspeps.ffield import ZERO, AdditiveChar
from cuspeps.glq import FULL, MIRABOLIC, SINGER, STABILIZER, UNIPOTENT, Mat, gl_group


def _setup(q, r):
    group = gl_group(q, r)
    psi = AdditiveChar(group.field, 0)
    return group, psi, list_cuspidals(group)


def test_value_at_identity():
    for q, r in ((2, 2), (3, 2), (2, 3)):
        group, psi, cusps = _setup(q, r)
        for sigma in cusps:
            assert bessel_value(sigma, psi, group.identity()) == 1


def test_values_on_unipotent():
    group, psi, cusps = _setup(3, 2)
    for sigma in cusps:
        for u in group.elements(UNIPOTENT):
            assert bessel_value(sigma, psi, u) == group.psi_u(u, psi)


def test_gl2f2_bessel_is_sign_character():
    group, psi, cusps = _setup(2, 2)
    sigma = cusps[0]
    for g in group.elements(FULL):
        assert bessel_value(sigma, psi, g) == sigma.char_at(g)


def test_field_mismatch_rejected():
    group, psi, cusps = _setup(3, 2)
    other = gl_group(2, 2)
    with pytest.raises(ValueError):
        bessel_value(cusps[0], psi, other.identity())
    with pytest.raises(ValueError):
        get_evaluator(cusps[0], AdditiveChar(other.field, 0))
    with pytest.raises(ValueError):
        get_evaluator(cusps[0], AdditiveChar(group.field, ZERO))


def test_two_sided_equivariance():
    group, psi, cusps = _setup(3, 2)
    rng = random.Random(2)
    elems = group.elements(FULL)
    for sigma in cusps:
        ev = get_evaluator(sigma, psi)
        for _ in range(100):
            g = rng.choice(elems)
            for u in group.elements(UNIPOTENT):
                pu = group.psi_u(u, psi)
                assert ev(u * g) == pu * ev(g)
                assert ev(g * u) == pu * ev(g)


def test_central_equivariance():
    group, psi, cusps = _setup(3, 2)
    for sigma in cusps:
        ev = get_evaluator(sigma, psi)
        for z in range(group.q - 1):
            zmat = Mat(group.field, [[z, ZERO], [ZERO, z]])
            for g in group.elements(FULL)[:24]:
                assert ev(zmat * g) == sigma.central_value(z) * ev(g)


def test_build_table_domains():
    group, psi, cusps = _setup(3, 2)
    sigma = cusps[0]
    t_u = build_table(sigma, psi, UNIPOTENT)
    assert all(val == group.psi_u(g, psi) for g, val in t_u.values.items())
    t_m = build_table(sigma, psi, MIRABOLIC)
    for g, val in t_m.values.items():
        assert val.is_zero() != group.contains(UNIPOTENT, g)
    t_s = build_table(sigma, psi, STABILIZER)
    for g, val in t_s.values.items():
        assert val.is_zero() != group.contains(UNIPOTENT, g)
    t_full = build_table(sigma, psi, FULL)
    assert len(t_full.values) == 48


def test_model_space_dimension():
    for q, r in ((3, 2), (2, 3)):
        group = gl_group(q, r)
        for kind in (MIRABOLIC, STABILIZER):
            space = model_space(group, kind)
            assert space.dim == list_cuspidals(group)[0].dim()
    with pytest.raises(ValueError):
        model_space(gl_group(3, 2), SINGER)


def test_operator_identity_and_trace():
    group, psi, cusps = _setup(3, 2)
    for sigma in cusps:
        lid = operator_L(sigma, psi, group.identity(), MIRABOLIC)
        for i, row in enumerate(lid):
            for j, v in enumerate(row):
                assert v == (1 if i == j else 0)
        for g in group.elements(FULL):
            assert mat_trace(operator_L(sigma, psi, g, MIRABOLIC)) == sigma.char_at(g)


def test_operator_multiplicative():
    group, psi, cusps = _setup(2, 3)
    sigma = cusps[0]
    rng = random.Random(4)
    elems = group.elements(FULL)
    tables = {g: operator_L(sigma, psi, g, MIRABOLIC) for g in elems}
    for _ in range(200):
        g1, g2 = rng.choice(elems), rng.choice(elems)
        assert mat_eq(mat_mul(tables[g1], tables[g2]), tables[g1 * g2])


def test_pairing_entry_recovers_bessel():
    group, psi, cusps = _setup(3, 2)
    for sigma in cusps:
        ev = get_evaluator(sigma, psi)
        for g in group.elements(FULL):
            assert operator_L(sigma, psi, g, STABILIZER)[0][0] == ev(g)


def test_hankel_identity():
    group, psi, cusps = _setup(2, 2)
    sigma = cusps[0]
    elems = group.elements(FULL)
    for g1 in elems:  # exhaustive: 36 pairs
        for g2 in elems:
            assert hankel_check(sigma, psi, g1, g2, MIRABOLIC)
    group, psi, cusps = _setup(3, 2)
    rng = random.Random(6)
    elems = group.elements(FULL)
    for sigma in cusps:
        for _ in range(100):
            g = rng.choice(elems)
            assert hankel_check(sigma, psi, g, g.inv(), STABILIZER)


def test_contragredient_table():
    group, psi, cusps = _setup(3, 2)
    sigma = cusps[0]
    table = build_table(sigma, psi, FULL)
    dual = contragredient_table(table)
    assert dual.sigma == contragredient(sigma)
    dual_direct = build_table(dual.sigma, psi.conjugate(), FULL)
    for g in table.values:
        assert dual.values[g] == table.values[g.inv()]
        assert dual.values[g] == table.values[g].conjugate()
        assert dual.values[g] == dual_direct.values[g]


def test_contragredient_table_requires_closed_domain():
    group, psi, cusps = _setup(3, 2)
    sigma = cusps[0]
    g = group.singer_matrix(1)
    partial = BesselTable(sigma, psi, FULL, {g: bessel_value(sigma, psi, g)})
    with pytest.raises(ValueError):
        contragredient_table(partial)
