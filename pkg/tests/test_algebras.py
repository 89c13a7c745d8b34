import pytest

from tqa.algebras import (
    build_uq_gl,
    build_uqp_o,
    build_uqp_sp_ext,
    check_relation_set,
    embed_o_in_gl,
    embed_sp_in_gl,
    generalized_serre,
    markov_element,
    o_image_in_gl,
    reflection_relations,
    s_from_serre_generators,
    serre_relations,
    sp_image_in_gl,
    sp_offdiag_inverse_in_gl,
    sp_quadratic,
)
from tqa.coeff_ring import QINV, QQ, Q
from tqa.morphisms import check_homomorphism
from tqa.nc_engine import apply_genmap, nc_commutator


def central(e):
    alg = e.algebra
    return all(nc_commutator(e, alg.word(g)).is_zero() for g in alg.generators)


@pytest.mark.parametrize("N,rules", [(3, 3), (4, 15), (5, 45), (6, 105)])
def test_orthogonal_rule_counts(N, rules):
    alg = build_uqp_o(N)
    assert len(list(alg.rule_table())) == rules
    assert len(alg.generators) == N * (N - 1) // 2


@pytest.mark.parametrize("family,builder,n", [("o", build_uqp_o, 5), ("gl", build_uq_gl, 3),
                                              ("sp", build_uqp_sp_ext, 2)])
def test_every_defining_relation_vanishes(family, builder, n):
    alg = builder(n)
    res = check_relation_set(alg, alg.relations)
    assert res["failed"] == 0 and res["checked"] == len(alg.relations)


def test_gl_relation_count():
    assert len(build_uq_gl(3).relations) == 102
    assert len(list(build_uq_gl(2).rule_table())) == 17


def test_o3_examples():
    alg = build_uqp_o(3)
    s = alg.s
    rel = s(3, 2).concat(s(2, 1)).scale(Q) - s(2, 1).concat(s(3, 2)) - s(3, 1).scale(QQ)
    assert rel.normal_form().is_zero()
    assert central(markov_element(alg))
    x, y, z = s(2, 1), s(3, 1), s(3, 2)
    assert central(x * x + (y * y).scale(QINV * QINV) + z * z - x * y * z)


def test_far_generators_commute():
    alg = build_uqp_o(4)
    s = alg.s
    assert (s(4, 3) * s(2, 1) - s(2, 1) * s(4, 3)).is_zero()


def test_serre_relations():
    for N in (3, 4, 5):
        alg = build_uqp_o(N)
        rels, labels = serre_relations(alg)
        assert check_relation_set(alg, rels, labels)["failed"] == 0


def test_generalized_serre_and_reflection_in_o4():
    alg = build_uqp_o(4)
    assert check_relation_set(alg, generalized_serre(alg, 4, 3, 1))["failed"] == 0
    rels = reflection_relations(alg)
    assert check_relation_set(alg, rels)["failed"] == 0


def test_displayed_third_cubic_does_not_hold():
    # the display quadratic in s_ij fails; the shipped form is quadratic in s_kj
    alg = build_uqp_o(4)
    s = alg.s
    x, y = s(3, 1), s(4, 1)
    bad = (x.concat(x).concat(y) - x.concat(y).concat(x).scale(Q + QINV) + y.concat(x).concat(x)
           + x.scale(QINV * QQ * QQ))
    assert not bad.normal_form().is_zero()


def test_symplectic_examples():
    sp1 = build_uqp_sp_ext(1)
    assert len(sp1.generators) == 4
    assert central(sp_quadratic(sp1, 1))
    sp2 = build_uqp_sp_ext(2)
    assert central(sp_quadratic(sp2, 1)) and central(sp_quadratic(sp2, 3))


def test_orthogonal_embedding():
    gl2 = build_uq_gl(2)
    expected = gl2.t(2, 1) * gl2.tbar(1, 1) + gl2.t(2, 2) * gl2.tbar(1, 2)
    assert o_image_in_gl(gl2, 2, 1) == expected
    assert o_image_in_gl(gl2, 1, 1) == gl2.one()
    for N in (2, 3):
        assert check_homomorphism(embed_o_in_gl(N)).ok


def test_symplectic_embedding():
    gl2 = build_uq_gl(2)
    assert sp_image_in_gl(gl2, 1, 2) == (gl2.t(1, 1) * gl2.tbar(2, 2)).scale(Q)
    for n in (1, 2):
        emb = embed_sp_in_gl(n)
        assert check_homomorphism(emb).ok
        gl = emb.target
        for i in range(1, 2 * n, 2):
            assert apply_genmap(emb, sp_quadratic(emb.source, i)) == gl.scalar(Q ** 3)
    s12 = sp_image_in_gl(gl2, 1, 2)
    inv = sp_offdiag_inverse_in_gl(gl2, 1)
    assert s12 * inv == gl2.one() == inv * s12


def test_s_from_serre_generators():
    o3, o4 = build_uqp_o(3), build_uqp_o(4)
    assert s_from_serre_generators(3, 3, 1) == o3.s(3, 1)
    assert s_from_serre_generators(3, 2, 1) == o3.s(2, 1)
    assert s_from_serre_generators(4, 4, 1, j=2) == o4.s(4, 1) == s_from_serre_generators(4, 4, 1, j=3)
