from itertools import combinations

import pytest

from tqa.algebras import build_uqp_o, build_uqp_sp_ext, markov_element, sp_quadratic
from tqa.coeff_ring import QINV, Q
from tqa.invariants import (
    OddSize,
    c_k,
    casimir_check,
    charpoly_coeffs,
    pfaffian_casimir_probe,
    det,
    h_subspace_check,
    charpoly_pfaffian_check,
    jacobian_rank_probe,
    liouville_check,
    markov_polynomial,
    nc_matmul,
    pf_I,
    pfaffian,
    pfaffian_by_permutations,
    pfaffian_identities_check,
    phi_elements,
    phi_k,
    quantum_center_check,
    quantum_matrix,
    s_plus,
    skew_part,
    sp_casimirs,
    trace_invariant,
    unitri_inverse,
)
from tqa.poisson import ONE, PoissonPoly, avar, build_poisson_o, build_poisson_sp
from tqa.report import FINDING


def test_charpoly_examples():
    assert charpoly_coeffs(build_poisson_o(2)) == [ONE, 2 - avar(2, 1) ** 2, ONE]
    f = charpoly_coeffs(build_poisson_o(3))
    assert f[1] == 3 - markov_polynomial()
    sp = build_poisson_sp(1)
    a = sp.a
    assert charpoly_coeffs(sp)[0] == a(2, 2) * a(1, 1) - a(2, 1) * a(1, 2)


def test_casimir_examples():
    p3, p4 = build_poisson_o(3), build_poisson_o(4)
    assert casimir_check(markov_polynomial(), p3).ok
    assert casimir_check(ONE, p3).ok
    for k, fk in enumerate(charpoly_coeffs(p4)):
        assert casimir_check(fk, p4, f"f{k}").ok
    assert not casimir_check(avar(2, 1), p3).ok


def test_unitri_inverse():
    assert unitri_inverse(2)[1][0] == -avar(2, 1)
    assert unitri_inverse(3)[2][0] == -avar(3, 1) + avar(3, 2) * avar(2, 1)
    alg = build_uqp_o(3)
    S, Sinv = quantum_matrix(alg), unitri_inverse(3, ring="quantum")
    prod = nc_matmul(S, Sinv, alg)
    assert all(prod[i][j] == (alg.one() if i == j else alg.zero()) for i in range(3) for j in range(3))


def test_pfaffian_small():
    h = avar(2, 1)
    assert pfaffian([[0 * h, h], [-h, 0 * h]]) == h
    with pytest.raises(OddSize):
        pfaffian([[ONE]])
    A = build_poisson_o(2).matrix()
    assert pf_I(A, (1, 2)) == avar(2, 1)


@pytest.mark.parametrize("N", [4, 6])
def test_pfaffian_against_permutation_sum(N):
    K = skew_part(build_poisson_o(N).matrix())
    assert pfaffian(K) == pfaffian_by_permutations(K)
    assert pfaffian(K) ** 2 == det(K)


def test_pfaffian_I0_at_N4():
    pf = pf_I(build_poisson_o(4).matrix(), (1, 2, 3, 4))
    assert pf == avar(2, 1) * avar(4, 3) - avar(3, 1) * avar(4, 2) + avar(3, 2) * avar(4, 1)


def test_c_k_examples():
    assert c_k(2, 1) == avar(2, 1) ** 2
    assert c_k(3, 1) == markov_polynomial()
    pf = pf_I(build_poisson_o(4).matrix(), (1, 2, 3, 4))
    assert c_k(4, 2) == pf * pf
    with pytest.raises(ValueError):
        c_k(3, 2)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_c_k_are_casimirs(N):
    spec = build_poisson_o(N)
    for k in range(1, N // 2 + 1):
        assert casimir_check(c_k(N, k), spec).ok


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_charpoly_through_pfaffians(N):
    assert charpoly_pfaffian_check(N).ok


@pytest.mark.parametrize("N", [4, 5])
def test_restriction_to_block_subspace(N):
    assert h_subspace_check(N).ok


def test_traces():
    assert trace_invariant(2, 1) == 2 - avar(2, 1) ** 2
    for N in (2, 3, 4):
        assert trace_invariant(N, 0) == PoissonPoly(N)
    p3 = build_poisson_o(3)
    assert casimir_check(trace_invariant(3, 1), p3).ok
    assert liouville_check(3, 3).ok
    assert liouville_check(4, 3).ok


@pytest.mark.parametrize("N", [2, 4, 6])
def test_pfaffian_identities(N):
    assert pfaffian_identities_check(N).ok


def test_s_plus():
    alg = build_uqp_o(3)
    s = alg.s
    assert s_plus(4, 3, 2) == build_uqp_o(4).s(3, 2)
    expected = s(3, 1).scale(Q) - (s(3, 2) * s(2, 1)).scale(Q)
    assert s_plus(3, 3, 1) == expected == s(3, 1).scale(QINV) - s(2, 1) * s(3, 2)
    assert str(s_plus(3, 3, 1)) == "1 q^-1 s[3,1] - 1 s[2,1]*s[3,2]"
    for N in (3, 4):
        for i in range(2, N + 1):
            for j in range(1, i):
                assert s_plus(N, i, j) == s_plus(N, i, j, method="closed")


def test_phi_single_pair():
    for I in combinations(range(1, 5), 2):
        phi, _ = phi_elements(4, I)
        assert phi == build_uqp_o(4).s(I[1], I[0])


def test_phi_central():
    assert quantum_center_check(phi_k(3, 1)).ok
    phi, phip = phi_elements(4, (1, 2, 3, 4))
    assert quantum_center_check(phi).ok and quantum_center_check(phip).ok
    assert quantum_center_check(phi_k(4, 1)).ok


def test_quantum_center_examples():
    o3 = build_uqp_o(3)
    x, y, z = o3.s(2, 1), o3.s(3, 1), o3.s(3, 2)
    assert quantum_center_check(x * x + (y * y).scale(QINV * QINV) + z * z - x * y * z).ok
    assert quantum_center_check(markov_element(o3)).ok
    assert quantum_center_check(o3.one()).ok
    assert not quantum_center_check(x).ok
    sp = build_uqp_sp_ext(1)
    assert quantum_center_check(sp_quadratic(sp, 1)).ok


@pytest.mark.parametrize("n", [1, 2])
def test_symplectic_casimirs(n):
    assert sp_casimirs(n).ok


def test_conjecture_probe_reports_findings():
    for n in (1, 2):
        rep = pfaffian_casimir_probe(n)
        assert rep.ok
        statuses = {c.id.rsplit("/", 1)[-1]: c.status for c in rep.checks}
        assert statuses["pf-casimir"] == FINDING and statuses["pf-squared"] == "pass"
    sp = build_poisson_sp(1)
    rep = pfaffian_casimir_probe(1)
    assert str(sp.a(1, 2) - sp.a(2, 1)) in rep.checks[0].description + rep.checks[1].description


def test_jacobian_probe_is_a_finding():
    rep = jacobian_rank_probe(4, seed=0)
    assert rep.checks[0].status == FINDING
    assert rep.checks[0].witness == "rank 2 of 2 at seed 0"
