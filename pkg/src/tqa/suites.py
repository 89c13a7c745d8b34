"""Named verification suites assembled from the module checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import algebras as al
from . import invariants as inv
from . import morphisms as mo
from . import poisson as po
from . import tensor_ops as to
from .coeff_ring import Q
from .nc_engine import confluence_probe
from .report import Report

SUITES = ("defrel", "confluence", "braid-o", "braid-gl", "symmetries", "sp-probes", "gamma2",
          "poisson", "casimir", "tensor", "limit")


class UsageError(ValueError):
    pass


@dataclass
class Params:
    family: str | None = None
    n: int | None = None
    set: str | None = None
    suite: str | None = None
    seed: int = 0
    budget: str = "normal"
    smoke: bool = False
    extend_2143: bool = False
    timing: bool = False
    extra: dict = field(default_factory=dict)

    @property
    def big(self) -> bool:
        return self.budget == "big"


def _family(p: Params, allowed, default):
    fam = p.family or default
    if fam not in allowed:
        raise UsageError(f"family must be one of {', '.join(allowed)}")
    return fam


def _size(p: Params, default, smoke, lo=1, hi=None, what="n"):
    n = p.n if p.n is not None else (smoke if p.smoke else default)
    if n < lo or (hi is not None and n > hi and not p.big):
        limit = f" (use --budget big above {hi})" if hi is not None else ""
        raise UsageError(f"{what} must be in [{lo}, {hi if hi is not None else 'inf'}]{limit}")
    return n


def _choice(value, allowed, default, what):
    v = value or default
    if v not in allowed and v != "all":
        raise UsageError(f"{what} must be one of {', '.join(allowed)} or all")
    return list(allowed) if v == "all" else [v]


# -- suites -------------------------------------------------------------------------

def suite_defrel(p: Params, rep: Report):
    fam = _family(p, ("o", "gl", "sp"), "o")
    n = _size(p, {"o": 4, "gl": 3, "sp": 2}[fam], {"o": 3, "gl": 2, "sp": 1}[fam], lo=2 if fam != "sp" else 1,
              hi={"o": 6, "gl": 4, "sp": 2}[fam])
    alg = al.build(fam, n)
    rep.family, rep.params = fam, {"n": n}
    sets = _choice(p.set, ("relations", "serre", "embed"), "all", "--set")
    if "relations" in sets:
        t0 = time.perf_counter()
        res = al.check_relation_set(alg, alg.relations)
        for e in res["entries"]:
            rep.add(f"relation/{alg.name}/{int(e['label']):04d}", "defining relation normal-forms to 0",
                    e["pass"], source="defining relations", witness=e["residue"], started=t0)
    if "serre" in sets and fam == "o":
        rels, labels = al.serre_relations(alg)
        _relations_into(rep, alg, rels, labels, "serre", "Serre-type relation")
        for k in range(3, n + 1):
            for i in range(2, k):
                for j in range(1, i):
                    rels = al.generalized_serre(alg, k, i, j)
                    _relations_into(rep, alg, rels, [f"k={k} i={i} j={j} #{m}" for m in range(4)],
                                    "generalized-serre", "cubic relation among s_ij, s_ki, s_kj")
        rels = al.reflection_relations(alg)
        _relations_into(rep, alg, rels, [str(m) for m in range(len(rels))], "reflection",
                        "reflection-equation instance")
    if "embed" in sets and fam == "o" and (n <= 3 or p.big):
        emb = al.embed_o_in_gl(n)
        mo.check_homomorphism(emb, report=rep, prefix=f"embed/N={n}")
    if "embed" in sets and fam == "sp":
        _sp_embedding(n, rep)


def _relations_into(rep, alg, rels, labels, kind, desc):
    res = al.check_relation_set(alg, rels, labels)
    for e in res["entries"]:
        rep.add(f"{kind}/{alg.name}/{e['label']}", desc, e["pass"], source="relations in the Serre generators",
                witness=e["residue"])


def _sp_embedding(n, rep):
    emb = al.embed_sp_in_gl(n)
    mo.check_homomorphism(emb, report=rep, prefix=f"embed/n={n}")
    gl = emb.target
    sp = emb.source
    for i in range(1, 2 * n, 2):
        img = mo.apply_genmap(emb, al.sp_quadratic(sp, i))
        target = gl.scalar(Q ** 3)
        rep.add(f"embed/n={n}/quadratic{i}", f"image of s_{i + 1},{i + 1} s_{i},{i} - q^2 s_{i + 1},{i} s_{i},{i + 1} is q^3",
                img == target, source="symplectic embedding", witness=None if img == target else str(img))
        x = emb.images[next(g for g in sp.generators if (g.i, g.j) == (i, i + 1))]
        y = al.sp_offdiag_inverse_in_gl(gl, i)
        ok = x * y == gl.one() and y * x == gl.one()
        rep.add(f"embed/n={n}/inverse{i}", f"s_{i},{i + 1} is invertible in the image", ok,
                source="symplectic embedding")


def suite_confluence(p: Params, rep: Report):
    fam = _family(p, ("o", "gl", "sp"), "o")
    n = _size(p, 4, 3, lo=1 if fam == "sp" else 2, hi=6)
    alg = al.build(fam, n)
    rep.family, rep.params = fam, {"n": n}
    samples = 40 if p.smoke else int(p.extra.get("samples", 300))
    max_len = 4 if p.smoke else int(p.extra.get("max_len", 5))
    rep.params.update(samples=samples, max_len=max_len)
    t0 = time.perf_counter()
    rules = list(alg.rule_table())
    rep.add(f"pbw/{alg.name}", f"{len(rules)} oriented rules cover every out-of-order pair", True,
            source="PBW basis", started=t0)
    t0 = time.perf_counter()
    res = confluence_probe(alg, max_len, samples, p.seed)
    rep.add(f"confluence/{alg.name}", "leftmost-first and rightmost-first rewriting agree on random words",
            not res.divergences, source="PBW basis", started=t0,
            witness=None if not res.divergences else " ".join(map(str, res.divergences[0])))


def suite_braid_o(p: Params, rep: Report):
    n = _size(p, 4, 3, lo=2, hi=6)
    rep.family, rep.params = "o", {"n": n}
    sets = _choice(p.set, ("action", "control"), "action", "--set")
    if "action" in sets:
        mo.braid_o_report(n, rep)
    if "control" in sets:
        mo.check_homomorphism(mo.corrupted_braid(max(n, 3)), report=rep, prefix="control")


def suite_braid_gl(p: Params, rep: Report):
    n = _size(p, 3, 2, lo=2, hi=4)
    rep.family, rep.params = "gl", {"n": n}
    mo.braid_gl_report(n, rep)


def suite_symmetries(p: Params, rep: Report):
    n = _size(p, 4, 3, lo=2, hi=5)
    rep.family, rep.params = "o", {"n": n}
    mo.symmetries_report(n, rep)


def suite_sp_probes(p: Params, rep: Report):
    n = _size(p, 2, 1, lo=1, hi=2)
    rep.family, rep.params = "sp", {"n": n}
    mo.sp_probes_report(n, rep)


def suite_gamma2(p: Params, rep: Report):
    rep.family, rep.params = "sp", {"n": 2, "extend_2143": p.extend_2143}
    mo.gamma2_report(p.extend_2143, rep)


def suite_poisson(p: Params, rep: Report):
    fam = _family(p, ("o", "sp"), "o")
    n = _size(p, 4 if fam == "o" else 2, 3 if fam == "o" else 1, lo=1 if fam == "sp" else 2,
              hi=5 if fam == "o" else 2)
    rep.family, rep.params = fam, {"n": n}
    spec = po.build_poisson_o(n) if fam == "o" else po.build_poisson_sp(n)
    parts = ("jacobi", "limit", "braid", "rmatrix", "anti", "control")
    chosen = _choice(p.suite, parts[:-1], "all", "--suite") if p.suite != "control" else ["control"]
    if "jacobi" in chosen:
        po.check_antisymmetry(spec, rep)
        po.check_jacobi(spec, rep)
    if "limit" in chosen:
        samples = 5 if p.smoke else 20
        po.quantum_bracket_report(spec, al.build(fam, n), samples=samples, seed=p.seed, report=rep)
    if "rmatrix" in chosen:
        po.rmatrix_bracket_check(spec, rep)
    if fam == "o" and "braid" in chosen:
        maps = {i: po.braid_poisson(n, i) for i in range(1, n)}
        for m in maps.values():
            po.check_bracket_map(m, 1, rep, f"braid/N={n}")
        ids = [(f"N={n}/braid{i}", [maps[i], maps[i + 1], maps[i]], [maps[i + 1], maps[i], maps[i + 1]])
               for i in range(1, n - 1)]
        ids += [(f"N={n}/far{i}{j}", [maps[i], maps[j]], [maps[j], maps[i]])
                for i in range(1, n) for j in range(i + 2, n)]
        po.check_poly_group_relations(ids, spec, rep, "braid-relations")
    if fam == "o" and "anti" in chosen:
        for which in ("inv", "flip"):
            po.check_bracket_map(po.poisson_anti(n, which), -1, rep, f"anti/N={n}")
    if "control" in chosen:
        bad = po.corrupted_orth_table(max(n, 3))
        po.check_jacobi(bad, rep)
        po.quantum_bracket_report(bad, al.build("o", max(n, 3)), report=rep)


def suite_casimir(p: Params, rep: Report):
    fam = _family(p, ("o", "sp"), "o")
    if fam == "sp":
        n = _size(p, 2, 1, lo=1, hi=2)
        rep.family, rep.params = "sp", {"n": n}
        sets = _choice(p.set, ("det", "quantum", "conjecture"), "all", "--set")
        if "det" in sets:
            inv.sp_casimirs(n, rep)
        if "quantum" in sets:
            alg = al.build_uqp_sp_ext(n)
            for i in range(1, 2 * n, 2):
                inv.quantum_center_check(al.sp_quadratic(alg, i), f"quadratic{i}", rep)
        if "conjecture" in sets:
            inv.pfaffian_casimir_probe(n, rep)
        return
    n = _size(p, 4, 3, lo=2, hi=6)
    rep.family, rep.params = "o", {"n": n}
    sets = _choice(p.set, ("det", "pfaffian", "trace", "quantum", "conjecture"), "all", "--set")
    spec = po.build_poisson_o(n)
    if "det" in sets:
        f = inv.charpoly_coeffs(spec)
        for k, fk in enumerate(f):
            inv.casimir_check(fk, spec, f"f{k}", rep)
        inv.charpoly_pfaffian_check(n, rep)
        inv.h_subspace_check(n, report=rep)
        if n == 3:
            c1 = inv.c_k(3, 1)
            m = inv.markov_polynomial()
            rep.add("markov/N=3", "c_1 is the Markov polynomial", c1 == m, source="N = 3 Casimir",
                    witness=None if c1 == m else str(c1 - m))
            inv.casimir_check(m, spec, "markov", rep)
    if "pfaffian" in sets:
        inv.pfaffian_identities_check(n, rep)
        for k in range(1, n // 2 + 1):
            inv.casimir_check(inv.c_k(n, k), spec, f"c{k}", rep)
    if "trace" in sets:
        top = 3 if n <= 4 or p.big else 2
        for k in range(1, top + 1):
            inv.casimir_check(inv.trace_invariant(n, k), spec, f"trace{k}", rep)
        inv.liouville_check(n, top + 1 if n <= 4 or p.big else top, rep)
    if "quantum" in sets and (n <= 5 or p.big):
        alg = al.build_uqp_o(n)
        if n == 3:
            inv.quantum_center_check(al.markov_element(alg), "cubic", rep)
        for k in range(1, n // 2 + 1):
            inv.quantum_center_check(inv.phi_k(n, k), f"phi{k}", rep)
        if n % 2 == 0:
            phi, phip = inv.phi_elements(n, tuple(range(1, n + 1)))
            inv.quantum_center_check(phi, "Phi_I0", rep)
            inv.quantum_center_check(phip, "Phi+_I0", rep)
        ok = all(inv.s_plus(n, i, j) == inv.s_plus(n, i, j, "closed")
                 for i in range(1, n + 1) for j in range(1, i))
        rep.add(f"s-plus/N={n}", "recursive s+_ij equals -q^(i-j-1) (S^-1)_ij", ok, source="s+ elements")
    if "conjecture" in sets:
        inv.jacobian_rank_probe(n, seed=p.seed, report=rep)


def suite_tensor(p: Params, rep: Report):
    parts = _choice(p.suite, ("ybe", "reflection", "sdet", "ancoll"), "all", "--suite")
    fam = _family(p, ("o", "sp"), "o")
    if fam == "sp":
        n = _size(p, 1, 1, lo=1, hi=1)
        N = 2
    else:
        n = _size(p, 3, 2, lo=2, hi=3)
        N = n
    rep.family, rep.params = fam, {"n": n, "suite": p.suite or "all"}
    if "ybe" in parts:
        to.ybe_check(N, rep)
        to.long_product_orders_check(N, rep)
        to.antisymmetrizer_report(N, rep)
    if "ancoll" in parts:
        to.ancoll_check(N, rep)
    alg = to.build_for(fam, n)
    if "reflection" in parts:
        to.reflection_check(alg, rep)
    if "sdet" in parts:
        to.sdet_report(alg, rep, exchange=N <= 3)


def suite_limit(p: Params, rep: Report):
    n = _size(p, 4, 3, lo=2, hi=5)
    rep.family, rep.params = "o", {"n": n}
    for i in range(1, n):
        b, bp = mo.braid_o(n, i), po.braid_poisson(n, i)
        bad = next((g for g in b.source.generators
                    if po.classical_limit(b.images[g]) != bp.images[po.letter_var(g)]), None)
        rep.add(f"braid-limit/N={n}/beta{i}", f"beta_{i} at q = 1 is the Poisson braid map", bad is None,
                source="classical limit of the braid action", witness=None if bad is None else str(bad))
    A = po.build_poisson_o(n).matrix()
    Ainv = inv.unitri_inverse(n)
    for k in range(1, n // 2 + 1):
        if n <= 4 or p.big:
            lim = po.classical_limit(inv.phi_k(n, k))
            ck = inv.c_k(n, k)
            rep.add(f"phi-limit/N={n}/k={k}", f"phi_{k} at q = 1 equals c_{k}", lim == ck,
                    source="classical limit of phi_k", witness=None if lim == ck else str(lim - ck))
    if n % 2 == 0 and (n <= 4 or p.big):
        I0 = tuple(range(1, n + 1))
        phi, phip = inv.phi_elements(n, I0)
        ok = po.classical_limit(phi) == inv.pf_I(A, I0)
        okp = po.classical_limit(phip) == inv.pf_I(Ainv, I0) * ((-1) ** (n // 2))
        rep.add(f"pf-limit/N={n}", "Phi_I0 and Phi+_I0 at q = 1 are Pf_I0(A) and (-1)^n Pf_I0(A^-1)",
                ok and okp, source="classical limit of Phi_I")


RUNNERS = {
    "defrel": suite_defrel,
    "confluence": suite_confluence,
    "braid-o": suite_braid_o,
    "braid-gl": suite_braid_gl,
    "symmetries": suite_symmetries,
    "sp-probes": suite_sp_probes,
    "gamma2": suite_gamma2,
    "poisson": suite_poisson,
    "casimir": suite_casimir,
    "tensor": suite_tensor,
    "limit": suite_limit,
}


def run_suite(name: str, params: Params | None = None) -> Report:
    p = params or Params()
    if name not in RUNNERS:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rep = Report(name, family=p.family, params={}, seed=p.seed, timing=p.timing)
    RUNNERS[name](p, rep)
    return rep
