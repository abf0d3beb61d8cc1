"""Matrix models, standard polynomials, and multilinear identity search."""

import pytest

from orepi import (
    MatAlgebra,
    multilinear_identity_search,
    quantum_plane_rep,
    standard_poly_eval,
)
from orepi.errors import DegreeTooLarge, NotPrimitiveRoot, SizeMismatch
from orepi.matrep import mat_identity, mat_is_zero, mat_scale


def m2_units(ctx):
    z, o = ctx.zero(), ctx.one()
    return {"e11": ((o, z), (z, z)), "e12": ((z, o), (z, z)),
            "e21": ((z, z), (o, z)), "e22": ((z, z), (z, o))}


@pytest.fixture
def m2(QQ):
    return MatAlgebra(2, QQ, m2_units(QQ))


def test_quantum_plane_rep_examples(QQ, cyclo3):
    rep = quantum_plane_rep(QQ, 2, QQ.from_int(-1))
    X, Y = rep.gens["x"], rep.gens["y"]
    o, z = QQ.one(), QQ.zero()
    assert X == ((z, o), (o, z))
    assert Y == ((o, z), (z, -o))
    rep3 = quantum_plane_rep(cyclo3, 3, cyclo3.generator())
    assert rep3.dim == 9
    rep1 = quantum_plane_rep(QQ, 1, QQ.one())
    assert rep1.dim == 1


def test_quantum_plane_rep_rejects_non_primitive(cyclo3):
    with pytest.raises(NotPrimitiveRoot):
        quantum_plane_rep(cyclo3, 3, cyclo3.one())


def test_standard_poly_s2(QQ, m2):
    A = m2_units(QQ)["e12"]
    assert mat_is_zero(standard_poly_eval([mat_identity(2, QQ), A]))
    assert mat_is_zero(standard_poly_eval([A, A]))
    B = m2_units(QQ)["e21"]
    s2 = standard_poly_eval([A, B])
    # AB - BA = diag(1, -1)
    assert s2 == ((QQ.one(), QQ.zero()), (QQ.zero(), -QQ.one()))


def test_standard_poly_s4_amitsur_levitzki(QQ):
    units = list(m2_units(QQ).values())
    assert mat_is_zero(standard_poly_eval(units))


def test_s2n_vanishes_on_small_reps(QQ):
    # exhaustive basis tuples: s_2 on the order-1 model, s_4 on order 2
    rep1 = quantum_plane_rep(QQ, 1, QQ.one())
    for a in rep1.basis:
        for b in rep1.basis:
            assert mat_is_zero(standard_poly_eval([a, b]))
    rep2 = quantum_plane_rep(QQ, 2, QQ.from_int(-1))
    from itertools import product
    for tup in product(rep2.basis, repeat=4):
        assert mat_is_zero(standard_poly_eval(list(tup)))


def test_standard_poly_alternating(QQ, rng):
    from conftest import random_coeff
    mats = []
    for _ in range(3):
        mats.append(tuple(tuple(random_coeff(QQ, rng) for _ in range(2))
                          for _ in range(2)))
    swapped = [mats[1], mats[0], mats[2]]
    a = standard_poly_eval(mats)
    b = standard_poly_eval(swapped)
    assert a == mat_scale(b, -QQ.one())


def test_size_mismatch(QQ):
    with pytest.raises(SizeMismatch):
        standard_poly_eval([mat_identity(2, QQ), mat_identity(3, QQ)])


def test_identity_search_m2(m2):
    assert multilinear_identity_search(m2, 3).dim == 0
    sp4 = multilinear_identity_search(m2, 4)
    assert sp4.dim >= 1
    assert sp4.contains_standard()


def test_identity_search_qplane_rep(QQ):
    rep = quantum_plane_rep(QQ, 2, QQ.from_int(-1))
    sp = multilinear_identity_search(rep, 4)
    assert sp.contains_standard()


def test_identity_space_annihilates_random_tuples(QQ, m2, rng):
    from conftest import random_coeff
    sp4 = multilinear_identity_search(m2, 4)
    vec = sp4.basis[0]
    for _ in range(25):
        mats = []
        for _ in range(4):
            mats.append(tuple(tuple(random_coeff(QQ, rng) for _ in range(2))
                              for _ in range(2)))
        assert mat_is_zero(sp4.evaluate(vec, mats))


def test_degree_guard(m2):
    with pytest.raises(DegreeTooLarge):
        multilinear_identity_search(m2, 6)
