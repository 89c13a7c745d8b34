"""Commutative Poisson algebras on Stokes-type matrices.

``PoissonPoly`` is a sparse Laurent polynomial over the rationals in named
variables (``a[i,j]``, ``lam``, ``u``).  A monomial is packed as a
balanced base-2**16 integer, one signed digit per registered variable, so
multiplying monomials is adding keys and the unit monomial is 0.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement

from .coeff_ring import classical_rate, normalize_rational
from .nc_engine import S, AlgebraSpec, Gen, NCElement
from .report import Report

_B = 1 << 16
_HALF = _B >> 1

_VARS: list = []
_INDEX: dict = {}


def _slot(name) -> int:
    k = _INDEX.get(name)
    if k is None:
        k = len(_VARS)
        _VARS.append(name)
        _INDEX[name] = k
    return k


def _decode(key: int) -> dict:
    out = {}
    k = 0
    while key:
        d = key % _B
        if d >= _HALF:
            d -= _B
        if d:
            out[_VARS[k]] = d
        key = (key - d) // _B
        k += 1
    return out


def var_text(name) -> str:
    if isinstance(name, tuple):
        return f"{name[0]}[{name[1]},{name[2]}]"
    return name


def _var_sort_key(name):
    return (0, name) if isinstance(name, tuple) else (1, (name, 0, 0))


class PoissonPoly:
    """Commutative polynomial with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        elif isinstance(terms, dict):
            self.terms = terms
        else:
            c = normalize_rational(terms)
            self.terms = {0: c} if c else {}

    @classmethod
    def var(cls, name, power=1) -> "PoissonPoly":
        return cls({power * _B ** _slot(name): 1})

    @classmethod
    def const(cls, c) -> "PoissonPoly":
        return cls(c)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PoissonPoly):
            other = PoissonPoly(other)
        return self.terms == other.terms

    __hash__ = None

    def _coerce(self, other):
        return other if isinstance(other, PoissonPoly) else PoissonPoly(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = normalize_rational(v)
            else:
                out.pop(k, None)
        return PoissonPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return PoissonPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
        return PoissonPoly({k: normalize_rational(v) for k, v in out.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = PoissonPoly(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def variables(self) -> set:
        out = set()
        for k in self.terms:
            out.update(_decode(k))
        return out

    def diff(self, name) -> "PoissonPoly":
        k0 = _INDEX.get(name)
        if k0 is None:
            return PoissonPoly()
        step = _B ** k0
        out = {}
        for k, c in self.terms.items():
            e = _decode(k).get(name, 0)
            if e:
                out[k - step] = normalize_rational(c * e)
        return PoissonPoly(out)

    def gradient(self) -> dict:
        return {v: self.diff(v) for v in self.variables()}

    def substitute(self, images: dict) -> "PoissonPoly":
        """Replace variables by polynomials (negative powers need monomial images)."""
        out = PoissonPoly()
        cache: dict = {}
        for k, c in self.terms.items():
            term = PoissonPoly(c)
            for name, e in _decode(k).items():
                if name in images:
                    key = (name, e)
                    if key not in cache:
                        cache[key] = images[name] ** e if e > 0 else _inverse_monomial(images[name]) ** (-e)
                    term = term * cache[key]
                else:
                    term = term * PoissonPoly.var(name, e)
            out = out + term
        return out

    def coefficients_in(self, name) -> dict:
        """``{exponent: coefficient polynomial}`` with respect to one variable."""
        k0 = _INDEX.get(name)
        out: dict = {}
        step = _B ** k0 if k0 is not None else 0
        for k, c in self.terms.items():
            e = _decode(k).get(name, 0) if k0 is not None else 0
            out.setdefault(e, {})[k - e * step] = c
        return {e: PoissonPoly(d) for e, d in out.items()}

    def evaluate(self, values: dict):
        total = Fraction(0)
        for k, c in self.terms.items():
            t = Fraction(c)
            for name, e in _decode(k).items():
                t *= Fraction(values[name]) ** e
            total += t
        return normalize_rational(total)

    def sorted_terms(self):
        items = []
        for k, c in self.terms.items():
            mono = sorted(_decode(k).items(), key=lambda kv: _var_sort_key(kv[0]))
            items.append((mono, c))
        items.sort(key=lambda mc: (sum(abs(e) for _, e in mc[0]),
                                   [(_var_sort_key(n), e) for n, e in mc[0]]))
        return items

    def __str__(self):
        from .coeff_ring import dump_terms
        pieces = []
        for mono, c in self.sorted_terms():
            body = " ".join(var_text(n) if e == 1 else f"{var_text(n)}^{e}" for n, e in mono)
            pieces.append((c, body))
        return dump_terms(pieces)

    def __repr__(self):
        return f"PoissonPoly({self})"


def _inverse_monomial(p: PoissonPoly) -> PoissonPoly:
    if len(p.terms) != 1:
        raise ValueError("only monomials can be inverted")
    (k, c), = p.terms.items()
    return PoissonPoly({-k: normalize_rational(Fraction(1) / Fraction(c))})


ZERO = PoissonPoly()
ONE = PoissonPoly(1)
LAM = PoissonPoly.var("lam")
U = PoissonPoly.var("u")


def avar(i, j) -> PoissonPoly:
    return PoissonPoly.var(("a", i, j))


# -- bracket tables --------------------------------------------------------------

def _d(c) -> int:
    return 1 if c else 0


class PoissonSpec:
    """Bracket table on generator variables, extended by Leibniz."""

    def __init__(self, family, size, support, constants, table_fn, name=None):
        self.family = family
        self.size = size
        self.generators = [("a", i, j) for (i, j) in support]
        self.gen_set = set(self.generators)
        self._support = set(support)
        self.constants = dict(constants)
        self.name = name or f"P_{family}{size}"
        self.table = {}
        for x in self.generators:
            for y in self.generators:
                self.table[(x, y)] = table_fn(self, x[1], x[2], y[1], y[2])

    def a(self, i, j) -> PoissonPoly:
        if (i, j) in self._support:
            return avar(i, j)
        return PoissonPoly(self.constants.get((i, j), 0))

    def matrix(self):
        N = self.size
        return [[self.a(i, j) for j in range(1, N + 1)] for i in range(1, N + 1)]

    def gen_bracket(self, x, y) -> PoissonPoly:
        return self.table.get((x, y), ZERO)


def orth_table_entry(spec, i, j, k, l) -> PoissonPoly:
    """Nelson-Regge bracket for i > j, k > l, extended by antisymmetry."""
    a = spec.a
    if (i, j) == (k, l):
        return ZERO
    if i > j > k > l or i > k > l > j:
        return ZERO
    if i > k > j > l:
        return 2 * (a(i, k) * a(j, l) - a(k, j) * a(i, l))
    if k == j and i > j > l:
        return a(i, j) * a(j, l) - 2 * a(i, l)
    if k == i and i > l > j:
        return a(i, j) * a(i, l) - 2 * a(l, j)
    if l == j and k > i > j:
        return a(i, j) * a(k, j) - 2 * a(k, i)
    return -orth_table_entry(spec, k, l, i, j)


def symp_table_entry(spec, i, j, k, l) -> PoissonPoly:
    """General formula with Kronecker deltas (valid for both supports)."""
    a = spec.a
    out = (_d(i == k) + _d(j == k) - _d(i == l) - _d(j == l)) * (a(i, j) * a(k, l))
    out = out - 2 * (_d(l < j) - _d(i < k)) * (a(k, j) * a(i, l))
    out = out - 2 * _d(l < i) * (a(k, i) * a(l, j))
    out = out + 2 * _d(j < k) * (a(i, k) * a(j, l))
    return out


def build_poisson_o(N: int, table_fn=orth_table_entry) -> PoissonSpec:
    if N < 2:
        raise ValueError("N >= 2 required")
    support = [(i, j) for i in range(2, N + 1) for j in range(1, i)]
    consts = {(i, i): 1 for i in range(1, N + 1)}
    return PoissonSpec("o", N, support, consts, table_fn, name=f"P_{N}")


def build_poisson_sp(n: int) -> PoissonSpec:
    if n < 1:
        raise ValueError("n >= 1 required")
    N = 2 * n
    support = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)
               if j <= i or (j == i + 1 and i % 2 == 1)]
    return PoissonSpec("sp", N, support, {}, symp_table_entry, name=f"P^_{N}")


def bracket(f: PoissonPoly, g: PoissonPoly, spec: PoissonSpec) -> PoissonPoly:
    gf, gg = f.gradient(), g.gradient()
    out = ZERO
    for x, dfx in gf.items():
        if x not in spec.gen_set:
            continue
        for y, dgy in gg.items():
            b = spec.table.get((x, y))
            if b:
                out = out + dfx * dgy * b
    return out


def check_antisymmetry(spec: PoissonSpec, report: Report | None = None) -> Report:
    rep = report or Report("poisson")
    bad = [(x, y) for x in spec.generators for y in spec.generators
           if spec.table[(x, y)] != -spec.table[(y, x)]]
    rep.add(f"antisymmetry/{spec.name}", f"bracket table of {spec.name} is antisymmetric", not bad,
            source="bracket table", witness=f"{bad[0]}" if bad else None)
    return rep


def check_jacobi(spec: PoissonSpec, report: Report | None = None) -> Report:
    rep = report or Report("poisson")
    gens = spec.generators
    failures = []
    for x, y, z in combinations_with_replacement(gens, 3):
        X, Y, Z = (PoissonPoly.var(v) for v in (x, y, z))
        j = (bracket(X, bracket(Y, Z, spec), spec) + bracket(Y, bracket(Z, X, spec), spec)
             + bracket(Z, bracket(X, Y, spec), spec))
        if j:
            failures.append((x, y, z, j))
    n = len(gens)
    count = n * (n + 1) * (n + 2) // 6
    rep.add(f"jacobi/{spec.name}", f"Jacobi identity on all {count} generator triples of {spec.name}",
            not failures, source="bracket table",
            witness=(f"{[var_text(v) for v in failures[0][:3]]}: {failures[0][3]}" if failures else None))
    return rep


# -- quantum to classical ---------------------------------------------------------

def letter_var(g: Gen):
    return ("a", g.i, g.j)


def classical_limit(e: NCElement) -> PoissonPoly:
    """Set q = 1 and replace each s_ij by a_ij."""
    out: dict = {}
    for w, lp in e.grouped().items():
        c = lp.eval_q1()
        if not c.is_constant():
            raise ValueError("coefficients must only involve q")
        c = c.constant()
        if not c:
            continue
        key = sum(_B ** _slot(letter_var(g)) for g in w)
        v = out.get(key, 0) + c
        if v:
            out[key] = normalize_rational(v)
        else:
            out.pop(key, None)
    return PoissonPoly(out)


def lift(f: PoissonPoly, alg: AlgebraSpec, rng: random.Random | None = None) -> NCElement:
    """Lift a polynomial to the quantum algebra, one word per monomial.

    Letters follow the generator order, or a random order when ``rng`` is given.
    """
    terms: dict = {}
    from .coeff_ring import ONE as UNIT_KEY
    for k, c in f.terms.items():
        letters = []
        for name, e in _decode(k).items():
            if not (isinstance(name, tuple) and name[0] == "a") or e < 0:
                raise ValueError(f"cannot lift {var_text(name)}^{e}")
            letters.extend([Gen(S, name[1], name[2])] * e)
        letters.sort()
        if rng is not None:
            rng.shuffle(letters)
        key = (tuple(letters), UNIT_KEY)
        terms[key] = terms.get(key, 0) + c
    return NCElement(alg, {k: v for k, v in terms.items() if v})


def bracket_via_quantum(f: PoissonPoly, g: PoissonPoly, alg: AlgebraSpec,
                        rng: random.Random | None = None) -> PoissonPoly:
    """(f~ h~ - h~ f~) / (1 - q) at q = 1."""
    F, G = lift(f, alg, rng), lift(g, alg, rng)
    comm = (F.concat(G) - G.concat(F)).normal_form()
    rated = comm.map_coefficients(classical_rate)
    return classical_limit(rated)


def quantum_bracket_report(spec: PoissonSpec, alg: AlgebraSpec, samples=0, seed=0,
                           report: Report | None = None) -> Report:
    rep = report or Report("poisson")
    bad = []
    for x in spec.generators:
        for y in spec.generators:
            X, Y = PoissonPoly.var(x), PoissonPoly.var(y)
            if bracket_via_quantum(X, Y, alg) != bracket(X, Y, spec):
                bad.append((x, y))
    rep.add(f"quantum-vs-table/{spec.name}", f"commutator limit equals the table on all generator pairs",
            not bad, source="classical limit of commutators",
            witness=str(bad[0]) if bad else None)
    if samples:
        rng = random.Random(seed)
        bad = []
        for _ in range(samples):
            f = random_poly(spec, rng)
            g = random_poly(spec, rng)
            ref = bracket(f, g, spec)
            if bracket_via_quantum(f, g, alg, rng) != ref or bracket_via_quantum(f, g, alg) != ref:
                bad.append((f, g))
        rep.add(f"quantum-vs-table-random/{spec.name}",
                f"{samples} random degree<=2 pairs with shuffled lifts agree", not bad,
                source="independence of the lift", witness=f"{bad[0][0]} , {bad[0][1]}" if bad else None)
    return rep


def random_poly(spec: PoissonSpec, rng: random.Random, terms=3, degree=2) -> PoissonPoly:
    out = ZERO
    for _ in range(terms):
        m = PoissonPoly(rng.choice([-3, -2, -1, 1, 2, 3]))
        for _ in range(rng.randint(0, degree)):
            m = m * PoissonPoly.var(rng.choice(spec.generators))
        out = out + m
    return out


# -- Poisson maps ---------------------------------------------------------------

class PolyMap:
    """Algebra endomorphism given by images of generator variables."""

    def __init__(self, spec: PoissonSpec, images: dict, name="map"):
        self.spec = spec
        self.images = images
        self.name = name

    def __call__(self, f: PoissonPoly) -> PoissonPoly:
        return f.substitute(self.images)


def braid_poisson(N: int, i: int) -> PolyMap:
    spec = build_poisson_o(N)
    a = spec.a
    images = {}
    for x in spec.generators:
        k, l = x[1], x[2]
        if (k, l) == (i + 1, i):
            img = -a(k, l)
        elif k == i and l <= i - 1:
            img = a(i + 1, l) - a(i + 1, i) * a(i, l)
        elif k == i + 1 and l <= i - 1:
            img = a(i, l)
        elif l == i and k >= i + 2:
            img = a(k, i + 1) - a(k, i) * a(i + 1, i)
        elif l == i + 1 and k >= i + 2:
            img = a(k, i)
        else:
            img = a(k, l)
        images[x] = img
    return PolyMap(spec, images, name=f"beta_{i}")


def poly_path_sum(spec: PoissonSpec, top, bottom) -> PoissonPoly:
    """(A^-1)_{top,bottom} for unitriangular A."""
    out = ZERO
    inner = list(range(bottom + 1, top))
    for mask in range(1 << len(inner)):
        chain = [top] + [r for b, r in enumerate(reversed(inner)) if mask >> b & 1] + [bottom]
        term = PoissonPoly((-1) ** (len(chain) - 1))
        for x, y in zip(chain, chain[1:]):
            term = term * spec.a(x, y)
        out = out + term
    return out


def poisson_anti(N: int, which: str) -> PolyMap:
    spec = build_poisson_o(N)
    if which == "inv":
        images = {x: poly_path_sum(spec, x[1], x[2]) for x in spec.generators}
    elif which == "flip":
        images = {x: spec.a(N - x[2] + 1, N - x[1] + 1) for x in spec.generators}
    else:
        raise ValueError("which must be 'inv' or 'flip'")
    return PolyMap(spec, images, name=which)


def check_bracket_map(m: PolyMap, sign: int, report: Report, id_prefix: str) -> Report:
    """{m a, m b} == sign * m{a, b} on all generator pairs."""
    spec = m.spec
    bad = None
    for x in spec.generators:
        for y in spec.generators:
            lhs = bracket(m.images[x], m.images[y], spec)
            rhs = m(spec.gen_bracket(x, y))
            if sign < 0:
                rhs = -rhs
            if lhs != rhs:
                bad = (x, y, lhs, rhs)
                break
        if bad:
            break
    kind = "preserves" if sign > 0 else "reverses"
    report.add(f"{id_prefix}/{m.name}", f"{m.name} {kind} the bracket on all generator pairs",
               bad is None, source="Poisson symmetries",
               witness=None if bad is None else f"{var_text(bad[0])},{var_text(bad[1])}: {bad[2]} vs {bad[3]}")
    return report


def check_poly_group_relations(identities, spec: PoissonSpec, report: Report, prefix):
    for label, lhs, rhs in identities:
        bad = None
        for x in spec.generators:
            u = v = PoissonPoly.var(x)
            for m in reversed(lhs):
                u = m(u)
            for m in reversed(rhs):
                v = m(v)
            if u != v:
                bad = (x, u, v)
                break
        report.add(f"{prefix}/{label}", f"{label} on all generators", bad is None,
                   source="braid relations", witness=None if bad is None else
                   f"{var_text(bad[0])}: {bad[1]} vs {bad[2]}")
    return report


# -- r-matrix form ------------------------------------------------------------------

def _opmul(X: dict, Y: dict, N: int) -> dict:
    """Product of operators on C^N (x) C^N stored as {((a,b),(c,d)): value}."""
    rows: dict = {}
    for (r, m), v in Y.items():
        rows.setdefault(r, []).append((m, v))
    out: dict = {}
    for (r, m), v in X.items():
        for c, w in rows.get(m, ()):
            out[(r, c)] = out.get((r, c), ZERO) + v * w
    return {k: v for k, v in out.items() if v}


def r_classical(N, transposed=False) -> dict:
    out = {}
    for i in range(1, N + 1):
        out[((i, i), (i, i))] = ONE
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            if transposed:
                out[((j, j), (i, i))] = PoissonPoly(2)
            else:
                out[((i, j), (j, i))] = PoissonPoly(2)
    return out


def rmatrix_bracket_check(spec: PoissonSpec, report: Report | None = None) -> Report:
    """{A_1, A_2} = [r, A_1 A_2] + A_1 r^t A_2 - A_2 r^t A_1, entrywise."""
    rep = report or Report("poisson")
    N = spec.size
    A1, A2 = {}, {}
    for a in range(1, N + 1):
        for c in range(1, N + 1):
            v = spec.a(a, c)
            if not v:
                continue
            for b in range(1, N + 1):
                A1[((a, b), (c, b))] = v
                A2[((b, a), (b, c))] = v
    r, rt = r_classical(N), r_classical(N, transposed=True)
    A12 = _opmul(A1, A2, N)
    rhs = {}

    def acc(d, sign):
        for k, v in d.items():
            rhs[k] = rhs.get(k, ZERO) + (v if sign > 0 else -v)

    acc(_opmul(r, A12, N), 1)
    acc(_opmul(A12, r, N), -1)
    acc(_opmul(_opmul(A1, rt, N), A2, N), 1)
    acc(_opmul(_opmul(A2, rt, N), A1, N), -1)
    bad = None
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            for k in range(1, N + 1):
                for l in range(1, N + 1):
                    lhs = bracket(spec.a(i, j), spec.a(k, l), spec)
                    v = rhs.get(((i, k), (j, l)), ZERO)
                    if lhs != v and bad is None:
                        bad = ((i, j, k, l), lhs, v)
    rep.add(f"rmatrix/{spec.name}", f"matrix r-form of the bracket holds entrywise on {spec.name}",
            bad is None, source="r-matrix form",
            witness=None if bad is None else f"{bad[0]}: {bad[1]} vs {bad[2]}")
    return rep


def corrupted_orth_table(N=3) -> PoissonSpec:
    """Nelson-Regge table with the sign of the linear term flipped in one case (negative control)."""

    def fn(spec, i, j, k, l):
        v = orth_table_entry(spec, i, j, k, l)
        if (i, j, k, l) == (2, 1, 3, 1):
            return spec.a(2, 1) * spec.a(3, 1) + 2 * spec.a(3, 2)
        if (i, j, k, l) == (3, 1, 2, 1):
            return -(spec.a(2, 1) * spec.a(3, 1) + 2 * spec.a(3, 2))
        return v

    return build_poisson_o(N, table_fn=fn)
