"""Concrete presented algebras and the embeddings between them.

* ``build_uq_gl(N)``: U_q(gl_N) on t_ij (i >= j), tbar_ij (i <= j); the
  diagonal tbar_ii are the letters t_ii^-1.
* ``build_uqp_o(N)``: U'_q(o_N) on s_ij (i > j), from the six-case
  Nelson-Regge relations.
* ``build_uqp_sp_ext(n)``: the extended symplectic twisted algebra on the
  block-triangular support, from the full reflection-equation relations.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .coeff_ring import QQ, Q, QINV, UNIT, LaurentPoly, lp_div_exact
from .nc_engine import S, T, TBAR, AlgebraSpec, Gen, GenMap, NCElement


def _d(cond) -> int:
    return 1 if cond else 0


def qpow(e: int) -> LaurentPoly:
    return LaurentPoly.var("q", e)


# -- U_q(gl_N) ---------------------------------------------------------------

def gl_generators(N):
    gens = []
    for i in range(1, N + 1):
        for j in range(1, i + 1):
            gens.append(Gen(T, i, j))
        gens.append(Gen(T, i, i, -1))
        for j in range(i + 1, N + 1):
            gens.append(Gen(TBAR, i, j))
    return gens


def gl_relations(alg: AlgebraSpec):
    """All instances of the RTT relations for T, Tbar and mixed, plus inverses."""
    N = alg.size
    t, tb = alg.t, alg.tbar
    rng = range(1, N + 1)
    rels = []
    for i, j, a, b in product(rng, repeat=4):
        c = QQ * (_d(b < a) - _d(i < j))
        for m in (t, tb):
            r = (m(i, a).concat(m(j, b)).scale(qpow(_d(i == j)))
                 - m(j, b).concat(m(i, a)).scale(qpow(_d(a == b)))
                 - m(j, a).concat(m(i, b)).scale(c))
            rels.append(r)
        r = (tb(i, a).concat(t(j, b)).scale(qpow(_d(i == j)))
             - t(j, b).concat(tb(i, a)).scale(qpow(_d(a == b)))
             - t(j, a).concat(tb(i, b)).scale(QQ * _d(b < a))
             + tb(j, a).concat(t(i, b)).scale(QQ * _d(i < j)))
        rels.append(r)
    for i in rng:
        rels.append(t(i, i).concat(tb(i, i)) - 1)
        rels.append(tb(i, i).concat(t(i, i)) - 1)
    return [r for r in rels if r]


@lru_cache(maxsize=None)
def build_uq_gl(N: int) -> AlgebraSpec:
    if N < 2:
        raise ValueError("N >= 2 required")
    cancel = [(Gen(T, i, i, -1), Gen(T, i, i, 1)) for i in range(1, N + 1)]
    return AlgebraSpec(f"U_q(gl_{N})", "gl", N, gl_generators(N), gl_relations,
                       cancellations=cancel)


# -- U'_q(o_N) ---------------------------------------------------------------

def o_generators(N):
    return [Gen(S, i, j) for i in range(2, N + 1) for j in range(1, i)]


def o_relations(alg: AlgebraSpec):
    """The six-case relations over all admissible index quadruples."""
    N = alg.size
    s = alg.s
    rels = []
    idx = range(1, N + 1)
    for i, j, k, l in product(idx, repeat=4):
        if not (i > j and k > l):
            continue
        x, y = s(i, j), s(k, l)
        comm = x.concat(y) - y.concat(x)
        if i > j > k > l or i > k > l > j:
            rels.append(comm)
        elif i > k > j > l:
            rels.append(comm - (s(k, j).concat(s(i, l)) - s(i, k).concat(s(j, l))).scale(QQ))
        elif k == j and i > j > l:
            rels.append(x.concat(y).scale(Q) - y.concat(x) - s(i, l).scale(QQ))
        elif k == i and i > l > j:
            rels.append(x.concat(y).scale(Q) - y.concat(x) - s(l, j).scale(QQ))
        elif l == j and k > i > j:
            rels.append(x.concat(y).scale(Q) - y.concat(x) - s(k, i).scale(QQ))
    return [r for r in rels if r]


@lru_cache(maxsize=None)
def build_uqp_o(N: int) -> AlgebraSpec:
    if N < 2:
        raise ValueError("N >= 2 required")
    consts = {(S, i, i): UNIT for i in range(1, N + 1)}
    return AlgebraSpec(f"U'_q(o_{N})", "o", N, o_generators(N), o_relations, constants=consts)


def serre_generator(alg: AlgebraSpec, k: int) -> NCElement:
    """s_k = s_{k+1,k}."""
    return alg.s(k + 1, k)


# -- reflection-equation relations (both families) ---------------------------

def reflection_instance(alg: AlgebraSpec, i, j, k, l) -> NCElement:
    """One matrix entry of R S_1 R^t S_2 = S_2 R^t S_1 R, moved to one side."""
    s = alg.s
    lhs = (s(i, j).concat(s(k, l)).scale(qpow(_d(j == k) + _d(i == k)))
           - s(k, l).concat(s(i, j)).scale(qpow(_d(j == l) + _d(i == l))))
    rhs = s(k, j).concat(s(i, l)).scale(QQ * qpow(_d(j == i)) * (_d(l < j) - _d(i < k)))
    rhs = rhs + s(k, i).concat(s(l, j)).scale(QQ * qpow(_d(j == l)) * _d(l < i))
    rhs = rhs - s(i, k).concat(s(j, l)).scale(QQ * qpow(_d(i == k)) * _d(j < k))
    rhs = rhs + s(k, i).concat(s(j, l)).scale(QQ * QQ * (_d(l < j < i) - _d(j < i < k)))
    return lhs - rhs


def reflection_relations(alg: AlgebraSpec):
    rng = range(1, alg.size + 1)
    out = []
    for i, j, k, l in product(rng, repeat=4):
        r = reflection_instance(alg, i, j, k, l)
        if r:
            out.append(r)
    return out


def sp_supported(i, j) -> bool:
    return j <= i or (j == i + 1 and i % 2 == 1)


def sp_generators(n):
    N = 2 * n
    return [Gen(S, i, j) for i in range(1, N + 1) for j in range(1, N + 1) if sp_supported(i, j)]


@lru_cache(maxsize=None)
def build_uqp_sp_ext(n: int) -> AlgebraSpec:
    if n < 1:
        raise ValueError("n >= 1 required")
    return AlgebraSpec(f"U'_q(sp_{2 * n})^", "sp", 2 * n, sp_generators(n), reflection_relations)


def sp_quadratic(alg: AlgebraSpec, i: int, qsq=True) -> NCElement:
    """s_{i+1,i+1} s_ii - q^2 s_{i+1,i} s_{i,i+1} for odd i."""
    c = Q * Q if qsq else UNIT
    return alg.s(i + 1, i + 1) * alg.s(i, i) - (alg.s(i + 1, i) * alg.s(i, i + 1)).scale(c)


# -- embeddings ---------------------------------------------------------------

@lru_cache(maxsize=None)
def embed_o_in_gl(N: int) -> GenMap:
    o, gl = build_uqp_o(N), build_uq_gl(N)
    images = {}
    for g in o.generators:
        images[g] = o_image_in_gl(gl, g.i, g.j)
    return GenMap(o, gl, images, name="embed_o")


def o_image_in_gl(gl: AlgebraSpec, i, j) -> NCElement:
    out = gl.zero()
    for k in range(1, gl.size + 1):
        out = out + gl.t(i, k) * gl.tbar(j, k)
    return out


@lru_cache(maxsize=None)
def embed_sp_in_gl(n: int) -> GenMap:
    sp, gl = build_uqp_sp_ext(n), build_uq_gl(2 * n)
    images = {g: sp_image_in_gl(gl, g.i, g.j) for g in sp.generators}
    return GenMap(sp, gl, images, name="embed_sp")


def sp_image_in_gl(gl: AlgebraSpec, i, j) -> NCElement:
    out = gl.zero()
    for k in range(1, gl.size // 2 + 1):
        out = out + (gl.t(i, 2 * k - 1) * gl.tbar(j, 2 * k)).scale(Q)
        out = out - gl.t(i, 2 * k) * gl.tbar(j, 2 * k - 1)
    return out


def sp_offdiag_inverse_in_gl(gl: AlgebraSpec, i: int) -> NCElement:
    """Inverse of the image of s_{i,i+1} (odd i): q^-1 tbar_ii t_{i+1,i+1}."""
    return (gl.tbar(i, i) * gl.t(i + 1, i + 1)).scale(QINV)


# -- relation checks ----------------------------------------------------------

def check_relation_set(spec: AlgebraSpec, relations, labels=None) -> dict:
    """Normal-form each relation; pass means it reduces to 0."""
    entries = []
    for n, rel in enumerate(relations):
        nf = rel.normal_form()
        entries.append({
            "label": labels[n] if labels else str(n),
            "pass": nf.is_zero(),
            "residue": None if nf.is_zero() else str(nf),
        })
    return {"algebra": spec.name, "checked": len(entries),
            "failed": sum(not e["pass"] for e in entries), "entries": entries}


def serre_relations(alg: AlgebraSpec):
    """Serre-type relations and far commutativity for s_k = s_{k+1,k}."""
    N = alg.size
    s = lambda k: serre_generator(alg, k)  # noqa: E731
    c = QINV * QQ * QQ
    out, labels = [], []
    for k in range(1, N - 1):
        a, b = s(k), s(k + 1)
        out.append(a.concat(b).concat(b) - b.concat(a).concat(b).scale(Q + QINV)
                   + b.concat(b).concat(a) + a.scale(c))
        labels.append(f"serre1 k={k}")
        out.append(a.concat(a).concat(b) - a.concat(b).concat(a).scale(Q + QINV)
                   + b.concat(a).concat(a) + b.scale(c))
        labels.append(f"serre2 k={k}")
    for k in range(1, N):
        for l in range(k + 2, N):
            out.append(s(k).concat(s(l)) - s(l).concat(s(k)))
            labels.append(f"far k={k} l={l}")
    return out, labels


def generalized_serre(alg: AlgebraSpec, k, i, j) -> list:
    """The four cubic relations in s_ij, s_ki and s_ij, s_kj (k > i > j)."""
    s = alg.s
    c = QINV * QQ * QQ
    qq = Q + QINV

    def cubic(x, y, rhs):
        return (x.concat(y).concat(y) - y.concat(x).concat(y).scale(qq)
                + y.concat(y).concat(x) + rhs.scale(c))

    def cubic2(x, y, rhs):
        return (x.concat(x).concat(y) - x.concat(y).concat(x).scale(qq)
                + y.concat(x).concat(x) + rhs.scale(c))

    return [
        cubic(s(i, j), s(k, i), s(i, j)),
        cubic2(s(i, j), s(k, i), s(k, i)),
        # quadratic in s_kj; the version quadratic in s_ij does not hold
        cubic(s(i, j), s(k, j), s(i, j)),
        cubic2(s(i, j), s(k, j), s(k, j)),
    ]


def serre_numerator(alg: AlgebraSpec, k: int, l: int, j: int | None = None) -> NCElement:
    """Raw iterated q-bracket P_kl in Serre letters with P_kl = (q-q^-1)^(k-l-1) s_kl."""
    if k == l + 1:
        return alg.s(k, l)
    if j is None:
        j = k - 1
    if not l < j < k:
        raise ValueError("need l < j < k")
    a = serre_numerator(alg, k, j)
    b = serre_numerator(alg, j, l)
    # each factor carries its own power; one extra (q-q^-1) from the bracket
    return a.concat(b).scale(Q) - b.concat(a)


def divide_coefficients(e: NCElement, d: LaurentPoly) -> NCElement:
    return e.map_coefficients(lambda c: lp_div_exact(c, d))


def s_from_serre_generators(N: int, k: int, l: int, j: int | None = None) -> NCElement:
    """s_kl rebuilt from s_1..s_{N-1} by iterated q-brackets, normal-ordered."""
    if not N >= k > l >= 1:
        raise ValueError("need N >= k > l >= 1")
    alg = build_uqp_o(N)
    num = serre_numerator(alg, k, l, j).normal_form()
    return divide_coefficients(num, QQ ** (k - l - 1))


def markov_element(alg: AlgebraSpec) -> NCElement:
    """x^2 + q^-2 y^2 + z^2 - xyz with q x y - y x = (q-q^-1) z cyclically."""
    x, y, z = alg.s(3, 2), alg.s(2, 1), alg.s(3, 1)
    return x * x + (y * y).scale(QINV * QINV) + z * z - x * y * z


def build(family: str, n: int) -> AlgebraSpec:
    """Family dispatcher; for ``sp`` the argument is the half-rank n."""
    if family == "gl":
        return build_uq_gl(n)
    if family == "o":
        return build_uqp_o(n)
    if family == "sp":
        return build_uqp_sp_ext(n)
    raise ValueError(f"unknown family {family!r}")
