"""The eleven acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (also collected in the terminal summary).
Each criterion also carries a wall-clock target that counts as part of passing.
"""

import time

import pytest

from tqa import algebras as al
from tqa import invariants as inv
from tqa import morphisms as mo
from tqa import poisson as po
from tqa import tensor_ops as to
from tqa.coeff_ring import QINV, Q
from tqa.nc_engine import apply_genmap
from tqa.report import FAIL, FINDING, Report
from tqa.suites import Params, run_suite


@pytest.fixture
def criterion(request):
    state = {}

    def start(number, title, target_s):
        state.update(number=number, title=title, target=target_s, t0=time.perf_counter())
        return Report(f"criterion-{number}")

    yield start
    elapsed = time.perf_counter() - state["t0"]
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    slow = elapsed >= state["target"]
    verdict = "FAIL" if failed or slow else "PASS"
    note = f" (over the {state['target']} s target)" if slow else ""
    line = f"criterion {state['number']}: {verdict} {state['title']} [{elapsed:.1f} s]{note}"
    print(line)
    request.config.acceptance_lines.append(line)
    if slow and not failed:
        pytest.fail(line)


def _all_pass(rep: Report):
    bad = [f"{c.id}: {c.witness}" for c in rep.failures]
    assert not bad, bad[:5]


def _has(rep: Report, *fragments):
    for frag in fragments:
        assert any(frag in c.id for c in rep.checks), f"no check matching {frag}"


def _params(**kw):
    base = dict(family=None, n=None, set=None, suite=None, seed=0, budget="normal", smoke=False,
                extend_2143=False, timing=False)
    base.update(kw)
    return Params(**base)


def test_criterion_01_defining_relations(criterion):
    rep = criterion(1, "defining relations normal-form to zero", 30)
    algs = [al.build_uqp_o(N) for N in range(2, 6)] + [al.build_uq_gl(N) for N in (2, 3)]
    algs += [al.build_uqp_sp_ext(n) for n in (1, 2)]
    for alg in algs:
        res = al.check_relation_set(alg, alg.relations)
        residues = [e["residue"] for e in res["entries"] if not e["pass"]]
        rep.add(f"relations/{alg.name}", f"all {res['checked']} relations vanish", not residues,
                witness=residues[0] if residues else None)
    _all_pass(rep)


def test_criterion_02_embeddings(criterion):
    rep = criterion(2, "embeddings into U_q(gl_N)", 60)
    for N in (2, 3):
        mo.check_homomorphism(al.embed_o_in_gl(N), report=rep)
    for n in (1, 2):
        emb = al.embed_sp_in_gl(n)
        mo.check_homomorphism(emb, report=rep)
        for i in range(1, 2 * n, 2):
            img = apply_genmap(emb, al.sp_quadratic(emb.source, i))
            rep.add(f"q-cubed/n={n}/i={i}", "quadratic element maps to q^3", img == emb.target.scalar(Q ** 3),
                    witness=str(img))
    assert len(rep.checks) > 20
    _all_pass(rep)


def test_criterion_03_braid_action(criterion):
    rep = criterion(3, "braid group action on U'_q(o_N)", 120)
    for N in (2, 3, 4, 5):
        rep.extend(mo.braid_o_report(N), prefix=f"N{N}:")
    _has(rep, "N4:hom/N=4/beta_3", "group/N=5/braid", "group/N=5/far", "inverse/N=5",
         "image-s(i+1)/N=5/i=3", "image-s(i)/N=2/i=1")
    _all_pass(rep)


def test_criterion_04_symmetries(criterion):
    rep = criterion(4, "omega, omega', rho and conjugation of the braid action", 60)
    for N in (2, 3, 4):
        rep.extend(mo.symmetries_report(N), prefix=f"N{N}:")
    _has(rep, "involution/N=4/omega^2", "involution/N=4/omega'^2", "involution/N=4/rho^2",
         "hom/N=4/rho", "conjugation/N=4/omega'*beta3*omega'")
    _all_pass(rep)


def test_criterion_05_poisson(criterion):
    rep = criterion(5, "Poisson brackets, quantum comparison, symmetries, r-matrix form", 120)
    orth = {N: po.build_poisson_o(N) for N in (2, 3, 4, 5)}
    symp = {n: po.build_poisson_sp(n) for n in (1, 2)}
    for spec in list(orth.values()) + list(symp.values()):
        po.check_antisymmetry(spec, rep)
        po.check_jacobi(spec, rep)
    for N in (2, 3, 4):
        po.quantum_bracket_report(orth[N], al.build_uqp_o(N), report=rep)
        po.rmatrix_bracket_check(orth[N], rep)
    for n in (1, 2):
        po.quantum_bracket_report(symp[n], al.build_uqp_sp_ext(n), report=rep)
        po.rmatrix_bracket_check(symp[n], rep)
    for N in (2, 3, 4, 5):
        maps = [po.braid_poisson(N, i) for i in range(1, N)]
        for m in maps:
            po.check_bracket_map(m, 1, rep, f"braid-invariance/N={N}")
        for which in ("flip", "inv"):
            po.check_bracket_map(po.poisson_anti(N, which), -1, rep, f"anti/N={N}")
    _all_pass(rep)


def test_criterion_06_casimirs(criterion):
    rep = criterion(6, "Poisson Casimirs and the characteristic polynomial", 300)
    for N in (2, 3, 4, 5):
        spec = po.build_poisson_o(N)
        f = inv.charpoly_coeffs(spec)
        for k, fk in enumerate(f):
            inv.casimir_check(fk, spec, f"f{k}", rep)
        rep.add(f"palindromic/N={N}", "f_(N-i) = f_i", all(f[k] == f[N - k] for k in range(N + 1)))
        if N <= 4:
            for k in range(1, N // 2 + 1):
                inv.casimir_check(inv.c_k(N, k), spec, f"c{k}", rep)
            for k in range(1, 4):
                inv.casimir_check(inv.trace_invariant(N, k), spec, f"trace{k}", rep)
    for N in range(2, 7):
        inv.charpoly_pfaffian_check(N, rep)
    inv.pfaffian_identities_check(4, rep)
    rep.add("markov", "c_1 at N=3 is the Markov polynomial", inv.c_k(3, 1) == inv.markov_polynomial())
    for n in (1, 2):
        inv.sp_casimirs(n, rep)
    _has(rep, "pf-det/N=4", "charpoly-pfaffian/N=6", "quadratic3", "trace3")
    _all_pass(rep)


def test_criterion_07_quantum_centrality(criterion):
    rep = criterion(7, "central elements of the quantum algebras", 300)
    o3 = al.build_uqp_o(3)
    x, y, z = o3.s(2, 1), o3.s(3, 1), o3.s(3, 2)
    cubic = x * x + (y * y).scale(QINV * QINV) + z * z - x * y * z
    inv.quantum_center_check(cubic, "cubic", rep)
    inv.quantum_center_check(al.markov_element(o3), "markov", rep)
    inv.quantum_center_check(inv.phi_k(3, 1), "phi1", rep)
    inv.quantum_center_check(inv.phi_k(4, 1), "phi1", rep)
    inv.quantum_center_check(inv.phi_k(4, 2), "phi2", rep)
    phi, phip = inv.phi_elements(4, (1, 2, 3, 4))
    inv.quantum_center_check(phi, "Phi_I0", rep)
    inv.quantum_center_check(phip, "Phi+_I0", rep)
    for n in (1, 2):
        sp = al.build_uqp_sp_ext(n)
        for i in range(1, 2 * n, 2):
            inv.quantum_center_check(al.sp_quadratic(sp, i), f"quadratic{i}", rep)
    assert len(rep.checks) == 10
    _all_pass(rep)


def test_criterion_08_tensor(criterion):
    rep = criterion(8, "Yang-Baxter, reflection, fusion and the Sklyanin determinant", 600)
    for N in (2, 3):
        to.ybe_check(N, rep)
        to.ancoll_check(N, rep)
    algs = [al.build_uqp_o(2), al.build_uqp_o(3), al.build_uqp_sp_ext(1)]
    for alg in algs:
        to.reflection_check(alg, rep)
        to.sdet_report(alg, rep)
    _has(rep, "central", "classical-limit", "ancoll/N=3/delta", "ybe")
    _all_pass(rep)


def test_criterion_09_classical_limits(criterion):
    rep = criterion(9, "classical limits of phi_k and the braid action", 60)
    for N in (2, 3, 4):
        rep.extend(run_suite("limit", _params(n=N)), prefix=f"N{N}:")
    _has(rep, "phi-limit/N=3/k=1", "phi-limit/N=4/k=2", "braid-limit/N=4/beta3")
    _all_pass(rep)


def test_criterion_10_probes(criterion):
    rep = criterion(10, "probes report findings and never fail", 120)
    for n in (1, 2):
        inv.pfaffian_casimir_probe(n, rep)
    rep.extend(mo.gamma2_report(False), prefix="gamma2:")
    rep.extend(mo.gamma2_report(True), prefix="gamma2-ext:")
    for N in (4, 5, 6):
        inv.jacobian_rank_probe(N, seed=0, report=rep)
    probes = [c for c in rep.checks if "pf-casimir" in c.id or "jacobian" in c.id]
    assert len(probes) == 5 and all(c.status == FINDING for c in probes)
    assert sum(c.status == FINDING for c in rep.checks) >= 7
    _all_pass(rep)


def test_criterion_11_negative_controls(criterion):
    criterion(11, "corrupted braid map and corrupted bracket table are rejected", 60)
    braid = mo.check_homomorphism(mo.corrupted_braid(3))
    assert sum(c.status == FAIL for c in braid.checks) >= 1
    table = po.corrupted_orth_table(3)
    rep = po.check_jacobi(table)
    po.quantum_bracket_report(table, al.build_uqp_o(3), report=rep)
    assert sum(c.status == FAIL for c in rep.checks) >= 1
    for suite in ("braid-o", "poisson"):
        assert not run_suite(suite, _params(set="control", suite="control")).ok
