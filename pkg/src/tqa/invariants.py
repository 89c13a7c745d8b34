"""Casimir elements: characteristic-polynomial coefficients, Pfaffians, traces, phi_k."""

from __future__ import annotations

import random
from functools import lru_cache
from fractions import Fraction
from itertools import combinations, permutations

from .algebras import build_uqp_o, divide_coefficients, qpow
from .coeff_ring import QQ, Q, LaurentPoly
from .morphisms import inverse_entry
from .nc_engine import AlgebraSpec, NCElement, nc_commutator
from .poisson import (
    LAM,
    ONE,
    ZERO,
    PoissonPoly,
    PoissonSpec,
    avar,
    bracket,
    build_poisson_o,
    build_poisson_sp,
    classical_limit,
    poly_path_sum,
    var_text,
)
from .report import Report


class OddSize(ValueError):
    pass


# -- commutative linear algebra ---------------------------------------------------

def det(M) -> PoissonPoly:
    """Cofactor expansion along rows, memoized on the set of remaining columns."""
    n = len(M)
    memo: dict = {}

    def rec(row, cols):
        if row == n:
            return ONE
        hit = memo.get(cols)
        if hit is not None:
            return hit
        out = ZERO
        sign = 1
        for c in cols:
            e = M[row][c]
            if e:
                sub = rec(row + 1, tuple(x for x in cols if x != c))
                out = out + (e * sub if sign > 0 else -(e * sub))
            sign = -sign
        memo[cols] = out
        return out

    return rec(0, tuple(range(n)))


def matmul(X, Y):
    n, m, p = len(X), len(Y), len(Y[0])
    return [[sum((X[i][k] * Y[k][j] for k in range(m) if X[i][k] and Y[k][j]), ZERO)
             for j in range(p)] for i in range(n)]


def transpose(M):
    return [list(r) for r in zip(*M)]


def identity(N):
    return [[ONE if i == j else ZERO for j in range(N)] for i in range(N)]


def pfaffian(M):
    """First-row expansion: Pf = sum_{j>=2} (-1)^j M_1j Pf(minor without 1, j)."""
    n = len(M)
    if n % 2:
        raise OddSize("Pfaffian needs even size")
    memo: dict = {}

    def rec(idx):
        if not idx:
            return ONE
        hit = memo.get(idx)
        if hit is not None:
            return hit
        first, rest = idx[0], idx[1:]
        out = ZERO
        for pos, j in enumerate(rest):
            e = M[first][j]
            if e:
                sub = rec(rest[:pos] + rest[pos + 1:])
                out = out + (e * sub if pos % 2 == 0 else -(e * sub))
        memo[idx] = out
        return out

    return rec(tuple(range(n)))


def _sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def pfaffian_by_permutations(M):
    """Pf = 1/(2^k k!) sum over S_2k of sgn * product (oracle for small sizes)."""
    n = len(M)
    if n % 2:
        raise OddSize("Pfaffian needs even size")
    k = n // 2
    out = ZERO
    for p in permutations(range(n)):
        term = PoissonPoly(_sign(p))
        for a in range(k):
            term = term * M[p[2 * a]][p[2 * a + 1]]
            if not term:
                break
        out = out + term
    norm = Fraction(1, 2 ** k * _factorial(k))
    return out * PoissonPoly(norm)


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def skew_part(B):
    """B^t - B."""
    n = len(B)
    return [[B[j][i] - B[i][j] for j in range(n)] for i in range(n)]


def pf_I(B, I) -> PoissonPoly:
    """Pfaffian of the submatrix (B^t - B)_I, I a list of 1-based indices."""
    if len(I) % 2:
        raise OddSize("subset must have even size")
    K = skew_part(B)
    return pfaffian([[K[i - 1][j - 1] for j in I] for i in I])


# -- orthogonal Casimirs ------------------------------------------------------------

def charpoly_coeffs(spec: PoissonSpec) -> list:
    """Coefficients f_0..f_N of det(A + lam A^t)."""
    A = spec.matrix()
    N = spec.size
    M = [[A[i][j] + LAM * A[j][i] for j in range(N)] for i in range(N)]
    D = det(M)
    coeffs = D.coefficients_in("lam")
    return [coeffs.get(k, ZERO) for k in range(N + 1)]


def casimir_check(f: PoissonPoly, spec: PoissonSpec, label="f", report: Report | None = None,
                  finding=False) -> Report:
    rep = report or Report("casimir")
    bad = None
    for x in spec.generators:
        b = bracket(f, PoissonPoly.var(x), spec)
        if b:
            bad = (x, b)
            break
    rep.add(f"casimir/{spec.name}/{label}", f"{label} Poisson-commutes with every generator of {spec.name}",
            bad is None, source="Casimir elements", finding=finding,
            witness=None if bad is None else f"{{{label}, {var_text(bad[0])}}} = {bad[1]}")
    return rep


def unitri_inverse(N: int, ring="poisson"):
    """Entries of A^-1 (or S^-1) by alternating path sums."""
    if ring == "poisson":
        spec = build_poisson_o(N)
        return [[poly_path_sum(spec, i, j) if i > j else (ONE if i == j else ZERO)
                 for j in range(1, N + 1)] for i in range(1, N + 1)]
    alg = build_uqp_o(N)
    return [[inverse_entry(alg, i, j) if i > j else (alg.one() if i == j else alg.zero())
             for j in range(1, N + 1)] for i in range(1, N + 1)]


def quantum_matrix(alg: AlgebraSpec):
    N = alg.size
    return [[alg.s(i, j) for j in range(1, N + 1)] for i in range(1, N + 1)]


def nc_matmul(X, Y, alg):
    n = len(X)
    return [[sum((X[i][k] * Y[k][j] for k in range(n)), alg.zero()) for j in range(n)] for i in range(n)]


def c_k(N: int, k: int) -> PoissonPoly:
    if not 1 <= 2 * k <= N:
        raise ValueError("need 2k <= N")
    spec = build_poisson_o(N)
    A = spec.matrix()
    Ainv = unitri_inverse(N)
    out = ZERO
    for I in combinations(range(1, N + 1), 2 * k):
        out = out + pf_I(A, I) * pf_I(Ainv, I)
    return out if k % 2 == 0 else -out


def markov_polynomial() -> PoissonPoly:
    x, y, z = avar(2, 1), avar(3, 1), avar(3, 2)
    return x * x + y * y + z * z - x * y * z


def charpoly_pfaffian_check(N: int, report: Report | None = None) -> Report:
    rep = report or Report("casimir")
    spec = build_poisson_o(N)
    f = charpoly_coeffs(spec)
    lhs = sum((fk * LAM ** k for k, fk in enumerate(f)), ZERO)
    rhs = (1 + LAM) ** N
    for k in range(1, N // 2 + 1):
        rhs = rhs + (-LAM) ** k * (1 + LAM) ** (N - 2 * k) * c_k(N, k)
    rep.add(f"charpoly-pfaffian/N={N}", "det(A + lam A^t) = sum_k (-lam)^k (1+lam)^(N-2k) c_k",
            lhs == rhs, source="characteristic polynomial via Pfaffians",
            witness=None if lhs == rhs else str(lhs - rhs))
    return rep


def h_subspace_values(N: int) -> dict:
    """Substitution A -> [[I, 0], [D, I]] (extra middle row/column for odd N)."""
    n = N // 2
    images = {}
    spec = build_poisson_o(N)
    for x in spec.generators:
        images[x] = ZERO
    for r in range(1, n + 1):
        row = r + n + (N % 2)
        images[("a", row, r)] = PoissonPoly.var(f"d{r}")
    return images


def elementary_symmetric(vals, k) -> PoissonPoly:
    out = ZERO
    for combo in combinations(vals, k):
        t = ONE
        for v in combo:
            t = t * v
        out = out + t
    return out


def h_subspace_check(N: int, maxk=None, report: Report | None = None) -> Report:
    rep = report or Report("casimir")
    n = N // 2
    images = h_subspace_values(N)
    dsq = [PoissonPoly.var(f"d{r}") ** 2 for r in range(1, n + 1)]
    for k in range(1, (maxk or n) + 1):
        lhs = c_k(N, k).substitute(images)
        rhs = elementary_symmetric(dsq, k)
        rep.add(f"h-subspace/N={N}/c{k}", f"c_{k} restricted to H is e_{k}(d_i^2)", lhs == rhs,
                source="restriction to the subspace H", witness=None if lhs == rhs else f"{lhs} vs {rhs}")
    spec = build_poisson_o(N)
    D = sum((fk * LAM ** k for k, fk in enumerate(charpoly_coeffs(spec))), ZERO).substitute(images)
    prod = (1 + LAM) if N % 2 else ONE
    for v in dsq:
        prod = prod * ((1 + LAM) ** 2 - LAM * v)
    rep.add(f"h-subspace/N={N}/det", "det(A + lam A^t) on H factors over the d_i", D == prod,
            source="restriction to the subspace H", witness=None if D == prod else str(D - prod))
    return rep


@lru_cache(maxsize=None)
def trace_invariant(N: int, k: int) -> PoissonPoly:
    if k == 0:
        return PoissonPoly(N)
    spec = build_poisson_o(N)
    A = spec.matrix()
    H = matmul(unitri_inverse(N), transpose(A))
    P = identity(N)
    for _ in range(k):
        P = matmul(P, H)
    return sum((P[i][i] for i in range(N)), ZERO)


def liouville_check(N: int, maxk: int, report: Report | None = None) -> Report:
    """P' == P * sum_m (-1)^m tr H^(m+1) lam^m modulo lam^maxk, with P = det(1 + lam H)."""
    rep = report or Report("casimir")
    spec = build_poisson_o(N)
    f = charpoly_coeffs(spec)
    P = sum((fk * LAM ** k for k, fk in enumerate(f)), ZERO)
    dP = sum((k * fk * LAM ** (k - 1) for k, fk in enumerate(f) if k), ZERO)
    series = sum(((-1) ** m * trace_invariant(N, m + 1) * LAM ** m for m in range(maxk)), ZERO)
    diff = dP - P * series
    low = {e: c for e, c in diff.coefficients_in("lam").items() if e < maxk and c}
    rep.add(f"liouville/N={N}", f"Liouville formula to order lam^{maxk - 1}", not low,
            source="trace invariants", witness=None if not low else str(low))
    return rep


# -- quantum Casimirs in U'_q(o_N) ---------------------------------------------------

def s_plus(N: int, i: int, j: int, method="recursion") -> NCElement:
    alg = build_uqp_o(N)
    if method == "closed":
        return (-inverse_entry(alg, i, j)).scale(qpow(i - j - 1))
    if i == j + 1:
        return alg.s(i, j)
    prev = s_plus(N, i, j + 1)
    sj = alg.s(j + 1, j)
    num = prev * sj - (sj * prev).scale(Q)
    return divide_coefficients(num, QQ)


def _inversions(p) -> int:
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def _admissible(I):
    """Permutations sigma of 0..2k-1 with pairs increasing and tops increasing."""
    m = len(I)
    for p in permutations(range(m)):
        tops = [I[p[2 * a + 1]] for a in range(m // 2)]
        if all(I[p[2 * a + 1]] > I[p[2 * a]] for a in range(m // 2)) and tops == sorted(tops):
            yield p


def phi_elements(N: int, I) -> tuple:
    """(Phi_I, Phi^+_I)."""
    alg = build_uqp_o(N)
    plus = {}
    phi, phip = alg.zero(), alg.zero()
    for p in _admissible(I):
        ell = _inversions(p)
        t, tp = alg.one(), alg.one()
        for a in range(len(I) // 2):
            hi, lo = I[p[2 * a + 1]], I[p[2 * a]]
            t = t * alg.s(hi, lo)
            if (hi, lo) not in plus:
                plus[(hi, lo)] = s_plus(N, hi, lo)
            tp = tp * plus[(hi, lo)]
        phi = phi + t.scale(LaurentPoly.monomial((-1) ** ell, q=-ell))
        phip = phip + tp.scale(LaurentPoly.monomial((-1) ** ell, q=ell))
    return phi, phip


def phi_k(N: int, k: int) -> NCElement:
    alg = build_uqp_o(N)
    out = alg.zero()
    for I in combinations(range(1, N + 1), 2 * k):
        phi, phip = phi_elements(N, I)
        out = out + (phip * phi).scale(qpow(sum(I)))
    return out


def quantum_center_check(e: NCElement, label="e", report: Report | None = None) -> Report:
    rep = report or Report("casimir")
    alg = e.algebra
    bad = None
    for g in alg.generators:
        c = nc_commutator(e, alg.word(g))
        if c:
            bad = (g, c)
            break
    rep.add(f"center/{alg.name}/{label}", f"{label} commutes with every generator of {alg.name}",
            bad is None, source="central elements",
            witness=None if bad is None else f"[{label}, {bad[0]}] = {bad[1]}")
    return rep


# -- symplectic Casimirs ---------------------------------------------------------------

def sp_quadratic_poly(spec: PoissonSpec, i: int) -> PoissonPoly:
    a = spec.a
    return a(i + 1, i + 1) * a(i, i) - a(i + 1, i) * a(i, i + 1)


def sp_casimirs(n: int, report: Report | None = None) -> Report:
    rep = report or Report("casimir")
    spec = build_poisson_sp(n)
    N = 2 * n
    quads = [sp_quadratic_poly(spec, i) for i in range(1, N, 2)]
    for i, qd in zip(range(1, N, 2), quads):
        casimir_check(qd, spec, f"quadratic{i}", rep)
    f = charpoly_coeffs(spec)
    for k, fk in enumerate(f):
        casimir_check(fk, spec, f"f{k}", rep)
    pal = all(f[k] == f[N - k] for k in range(N + 1))
    rep.add(f"palindromic/{spec.name}", "f_(2n-i) = f_i", pal, source="characteristic polynomial")
    prod = ONE
    for qd in quads:
        prod = prod * qd
    rep.add(f"f0-product/{spec.name}", "f_0 is the product of the quadratic elements", f[0] == prod,
            source="characteristic polynomial", witness=None if f[0] == prod else str(f[0] - prod))
    return rep


def pfaffian_casimir_probe(n: int, report: Report | None = None) -> Report:
    """Pf(A - A^t) for the symplectic matrix: Casimir property recorded as a finding."""
    rep = report or Report("casimir")
    spec = build_poisson_sp(n)
    A = spec.matrix()
    N = 2 * n
    K = [[A[i][j] - A[j][i] for j in range(N)] for i in range(N)]
    pf = pfaffian(K)
    sq = pf * pf == det(K)
    rep.add(f"conjecture/{spec.name}/pf-squared", "Pf(A - A^t)^2 = det(A - A^t)", sq,
            source="Pfaffian identity")
    brackets = {var_text(x): bracket(pf, PoissonPoly.var(x), spec) for x in spec.generators}
    nonzero = {k: v for k, v in brackets.items() if v}
    summary = ("Pf(A - A^t) is a Casimir" if not nonzero else
               "; ".join(f"{{Pf, {k}}} = {v}" for k, v in sorted(nonzero.items())))
    rep.add(f"conjecture/{spec.name}/pf-casimir", f"Pf(A - A^t) = {pf}; bracket with generators",
            True, source="conjectured Casimir generators", finding=True, witness=summary)
    return rep


# -- algebraic independence probe --------------------------------------------------------

def _rank(rows) -> int:
    M = [list(r) for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = Fraction(M[r][c]) / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def casimir_generators(N: int) -> dict:
    n = N // 2
    gens = {f"c{k}": c_k(N, k) for k in range(1, n + 1)}
    if N % 2 == 0:
        del gens[f"c{n}"]
        spec = build_poisson_o(N)
        gens["Pf_I0"] = pf_I(spec.matrix(), list(range(1, N + 1)))
    return gens


def jacobian_rank_probe(N: int, seed=0, report: Report | None = None) -> Report:
    rep = report or Report("casimir")
    spec = build_poisson_o(N)
    rng = random.Random(seed)
    point = {x: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for x in spec.generators}
    gens = casimir_generators(N)
    rows = [[f.diff(x).evaluate(point) for x in spec.generators] for f in gens.values()]
    r = _rank(rows) if rows else 0
    rep.add(f"jacobian-rank/N={N}", f"Jacobian of {sorted(gens)} at a random rational point",
            r == len(gens), source="algebraic independence of the generators", finding=True,
            witness=f"rank {r} of {len(gens)} at seed {seed}")
    return rep


def pfaffian_identities_check(N: int, report: Report | None = None) -> Report:
    """Even N: Pf_I0(A^-1) = (-1)^n Pf_I0(A) and c_n = Pf_I0(A)^2; f_i palindromic, f_0 = 1."""
    rep = report or Report("casimir")
    spec = build_poisson_o(N)
    A = spec.matrix()
    f = charpoly_coeffs(spec)
    ok = f[0] == 1 and f[N] == 1 and all(f[k] == f[N - k] for k in range(N + 1))
    rep.add(f"palindromic/N={N}", "f_(N-i) = f_i and f_0 = f_N = 1", ok, source="characteristic polynomial")
    if N % 2 == 0 and N >= 2:
        n = N // 2
        I0 = list(range(1, N + 1))
        pf = pf_I(A, I0)
        inv = pf_I(unitri_inverse(N), I0)
        rep.add(f"pf-inverse/N={N}", "Pf_I0(A^-1) = (-1)^n Pf_I0(A)", inv == (-1) ** n * pf,
                source="Pfaffian of the inverse")
        cn = c_k(N, n)
        rep.add(f"cn-square/N={N}", "c_n = Pf_I0(A)^2", cn == pf * pf, source="top Casimir")
        K = skew_part(A)
        rep.add(f"pf-det/N={N}", "Pf(A^t - A)^2 = det(A^t - A)", pf * pf == det(K), source="Pfaffian identity")
    return rep
