import pytest

from tqa.algebras import build_uq_gl, build_uqp_o
from tqa.coeff_ring import QINV, Q
from tqa.morphisms import (
    braid_gl_report,
    braid_o,
    braid_o_closed,
    braid_o_report,
    check_homomorphism,
    corrupted_braid,
    gamma2_report,
    lusztig_gl,
    omega,
    omega_closed_form,
    omega_prime,
    rho,
    sp_probes_report,
    symmetries_report,
)
from tqa.report import FINDING


def test_braid_images_n3():
    alg = build_uqp_o(3)
    s = alg.s
    b = braid_o_closed(3, 1)
    assert b(s(2, 1)) == -s(2, 1)
    assert b(s(3, 1)) == s(3, 2).scale(QINV) - s(3, 1) * s(2, 1)
    assert b(s(3, 2)) == s(3, 1)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_braid_report_passes(N):
    rep = braid_o_report(N)
    assert rep.ok and not rep.findings


def test_braid_inverse_round_trip():
    alg = build_uqp_o(4)
    for i in (1, 2, 3):
        fwd, inv = braid_o(4, i), braid_o(4, i, inverse=True)
        for g in alg.generators:
            assert fwd(inv(alg.word(g))) == alg.word(g)


def test_corrupted_braid_fails():
    rep = check_homomorphism(corrupted_braid(3))
    assert len(rep.failures) >= 1


def test_omega_examples():
    alg = build_uqp_o(3)
    s = alg.s
    om = omega(3)
    assert om(s(2, 1)) == s(3, 2) and om(s(3, 2)) == s(2, 1)
    assert om(s(3, 1)) == omega_closed_form(3, 3, 1) == -s(3, 1).scale(QINV) + s(2, 1) * s(3, 2)


def test_rho_on_serre_generators():
    alg = build_uqp_o(4)
    r = rho(4)
    for k in (1, 2, 3):
        assert r(alg.s(k + 1, k)) == -alg.s(k + 1, k)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_symmetries(N):
    rep = symmetries_report(N)
    assert rep.ok


def test_omega_prime_is_anti():
    alg = build_uqp_o(3)
    s = alg.s
    assert omega_prime(3)(s(2, 1).concat(s(3, 2))) == s(2, 1) * s(3, 2)
    assert check_homomorphism(omega_prime(4)).ok


def test_lusztig_images():
    gl = build_uq_gl(2)
    L = lusztig_gl(2, 1)
    assert L(gl.t(1, 1)) == gl.t(2, 2)
    assert L(gl.t(2, 1)) == (gl.tbar(1, 2) * gl.t(1, 1) * gl.t(1, 1)).scale(QINV)
    assert L(gl.tbar(1, 2)) == (gl.tbar(1, 1) * gl.tbar(1, 1) * gl.t(2, 1)).scale(Q)


@pytest.mark.parametrize("N", [2, 3])
def test_braid_gl(N):
    assert braid_gl_report(N).ok


def test_symplectic_probes_only_findings():
    rep = sp_probes_report(2)
    assert rep.ok
    assert rep.findings and all(c.status == FINDING for c in rep.findings)
    assert any("q^2" in (c.witness or "") for c in rep.findings)


@pytest.mark.parametrize("extend", [False, True])
def test_gamma2(extend):
    rep = gamma2_report(extend)
    assert rep.ok and len(rep.findings) == 1
