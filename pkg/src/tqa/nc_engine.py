"""Noncommutative words over LaurentPoly and a PBW rewrite engine.

An element is stored flat, as ``{(word, packed monomial): rational}``, which
keeps products and rewriting to plain tuple and integer operations.  The
rewrite rules of an algebra are derived once from its defining relations by
Gaussian elimination over the span of words of length <= 2 in degree-lex
order, so every rule strictly decreases its left side and rewriting
terminates.
"""

from __future__ import annotations

import os
import random
import re
from fractions import Fraction
from typing import NamedTuple

from .coeff_ring import (
    ONE,
    LaurentPoly,
    NotDivisible,
    ParseError,
    dump_terms,
    lp_div_exact,
    monomial_text,
    normalize_rational,
    parse_coefficient_tokens,
    split_terms,
    unpack,
    pack,
)

KINDS = ("t", "tbar", "s", "a")
T, TBAR, S, A = range(4)

DEFAULT_CAP = 10**6


class NonTermination(RuntimeError):
    def __init__(self, word, steps):
        super().__init__(f"rewrite cap of {steps} steps exceeded at word {word_text(word)}")
        self.word = word
        self.steps = steps


class UndefinedOnGenerator(KeyError):
    pass


class Gen(NamedTuple):
    """Generator id; ``exp`` is -1 only for inverted diagonal t's."""

    kind: int
    i: int
    j: int
    exp: int = 1

    def __str__(self):
        if self.kind == T and self.exp == -1:
            return f"tbar[{self.i},{self.j}]"
        return f"{KINDS[self.kind]}[{self.i},{self.j}]"

    def inverse(self) -> "Gen":
        return self._replace(exp=-self.exp)


def word_key(word):
    return (len(word), word)


def word_text(word) -> str:
    if not word:
        return ""
    parts = []
    run = 1
    for k, g in enumerate(word):
        if k + 1 < len(word) and word[k + 1] == g:
            run += 1
            continue
        parts.append(str(g) if run == 1 else f"{g}^{run}")
        run = 1
    return "*".join(parts)


def rewrite_cap() -> int:
    return int(os.environ.get("TQA_REWRITE_CAP", DEFAULT_CAP))


# -- flat term helpers -------------------------------------------------------

def _acc(out: dict, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        del out[key]


def _finish(out: dict) -> dict:
    return {k: normalize_rational(v) for k, v in out.items()}


def flat_from_grouped(grouped: dict) -> dict:
    """``{word: LaurentPoly}`` -> flat terms."""
    out = {}
    for w, lp in grouped.items():
        for m, c in lp.terms.items():
            out[(w, m)] = c
    return out


def grouped_from_flat(flat: dict) -> dict:
    by_word: dict = {}
    for (w, m), c in flat.items():
        by_word.setdefault(w, {})[m] = c
    return {w: LaurentPoly._raw(d) for w, d in by_word.items()}


class AlgebraSpec:
    """A presented algebra with an oriented, terminating rewrite system."""

    def __init__(self, name, family, size, generators, relations, cancellations=(),
                 constants=None, strict_pbw=True):
        """``relations`` is a list of elements or a callable building them from self."""
        self.name = name
        self.family = family
        self.size = size
        self.generators = tuple(sorted(generators))
        self._gen_set = set(self.generators)
        # (kind, i, j) -> LaurentPoly for generators fixed to constants (s_ii = 1)
        self.constants = dict(constants or {})
        self.cancellations = frozenset(cancellations)
        self.cap = rewrite_cap()
        self.relations = []
        self.rules: dict = {}
        self._caches: dict = {"left": {}, "right": {}}
        self._steps = 0
        if callable(relations):
            relations = relations(self)
        for rel in relations:
            self.relations.append(rel if isinstance(rel, NCElement) else NCElement(self, rel))
        self._orient(strict_pbw)

    def __repr__(self):
        return f"<AlgebraSpec {self.name}>"

    # -- elements ---------------------------------------------------------

    def zero(self) -> "NCElement":
        return NCElement(self, {})

    def one(self) -> "NCElement":
        return NCElement(self, {((), ONE): 1})

    def scalar(self, c) -> "NCElement":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly(c)
        return NCElement(self, {((), m): v for m, v in c.terms.items()})

    def gen(self, kind, i, j, exp=1) -> "NCElement":
        """Generator element; unsupported matrix entries give 0 or constants."""
        g = Gen(kind, i, j, exp)
        if g in self._gen_set:
            return NCElement(self, {((g,), ONE): 1})
        if (kind, i, j) in self.constants and exp == 1:
            return self.scalar(self.constants[(kind, i, j)])
        return self.zero()

    def s(self, i, j):
        return self.gen(S, i, j)

    def t(self, i, j):
        return self.gen(T, i, j)

    def tbar(self, i, j):
        if i == j:
            return self.gen(T, i, i, -1)
        return self.gen(TBAR, i, j)

    def word(self, *gens, coeff=1) -> "NCElement":
        """Unnormalized single-word element."""
        return NCElement(self, {(tuple(gens), ONE): coeff})

    def supports(self, g: Gen) -> bool:
        return g in self._gen_set

    # -- orientation ------------------------------------------------------

    def is_reducible_pair(self, a: Gen, b: Gen) -> bool:
        return a > b or (a, b) in self.cancellations

    def _orient(self, strict):
        rows = []
        for rel in self.relations:
            g = grouped_from_flat(rel.terms)
            if g:
                rows.append(g)
        pivots = _echelon(rows)
        reduced = _back_substitute(pivots)
        for w, row in reduced.items():
            if len(w) != 2 or not self.is_reducible_pair(*w):
                if strict:
                    raise ValueError(
                        f"{self.name}: relations force a dependency with leading word "
                        f"{word_text(w) or '1'}; ordered monomials are not a basis")
                continue
            rhs = {}
            for ww, c in row.items():
                if ww != w:
                    rhs[ww] = -c
            self.rules[w] = flat_from_grouped(rhs)
        if strict:
            missing = [(a, b) for a in self.generators for b in self.generators
                       if self.is_reducible_pair(a, b) and (a, b) not in self.rules]
            if missing:
                a, b = missing[0]
                raise ValueError(f"{self.name}: no rule for {a}*{b} "
                                 f"({len(missing)} pairs unoriented)")

    def rule_table(self):
        """Oriented rules as ``(left word, NCElement)`` in canonical order."""
        for w in sorted(self.rules, key=word_key):
            yield w, NCElement(self, dict(self.rules[w]))

    # -- rewriting --------------------------------------------------------

    def _find(self, word, strategy):
        rules = self.rules
        if strategy == "left":
            rng = range(len(word) - 1)
        else:
            rng = range(len(word) - 2, -1, -1)
        for p in rng:
            if (word[p], word[p + 1]) in rules:
                return p
        return -1

    def nf_word(self, word, strategy="left") -> dict:
        """Flat normal form of a single word (memoized)."""
        cache = self._caches[strategy]
        hit = cache.get(word)
        if hit is not None:
            return hit
        p = self._find(word, strategy)
        if p < 0:
            res = {(word, ONE): 1}
            cache[word] = res
            return res
        self._steps += 1
        if self._steps > self.cap:
            raise NonTermination(word, self.cap)
        pre, post = word[:p], word[p + 2:]
        out: dict = {}
        for (w, m), c in self.rules[(word[p], word[p + 1])].items():
            sub = self.nf_word(pre + w + post, strategy)
            d = m - ONE
            for (w2, m2), c2 in sub.items():
                _acc(out, (w2, m2 + d), c * c2)
        res = _finish(out)
        cache[word] = res
        return res

    def normal_terms(self, terms: dict, strategy="left") -> dict:
        self._steps = 0
        self.cap = rewrite_cap()
        out: dict = {}
        for (w, m), c in terms.items():
            sub = self.nf_word(w, strategy)
            d = m - ONE
            for (w2, m2), c2 in sub.items():
                _acc(out, (w2, m2 + d), c * c2)
        return _finish(out)

    def is_normal_word(self, word) -> bool:
        return self._find(word, "left") < 0

    def clear_cache(self):
        self._caches = {"left": {}, "right": {}}


def _lead(row: dict):
    return max(row, key=word_key)


def _row_sub(row: dict, factor: LaurentPoly, other: dict) -> dict:
    """row - factor * other."""
    out = dict(row)
    for w, c in other.items():
        v = out.get(w, LaurentPoly()) - factor * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def _row_scale(row: dict, c: LaurentPoly) -> dict:
    return {w: v * c for w, v in row.items()}


def _try_normalize(row: dict) -> dict:
    lead = _lead(row)
    c = row[lead]
    try:
        return {w: lp_div_exact(v, c) for w, v in row.items()}
    except NotDivisible:
        return row


def _echelon(rows) -> dict:
    pivots: dict = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = _lead(row)
            p = pivots.get(lead)
            if p is None:
                break
            cp, cr = p[lead], row[lead]
            try:
                row = _row_sub(row, lp_div_exact(cr, cp), p)
            except NotDivisible:
                row = _row_sub(_row_scale(row, cp), cr, p)
        if row:
            row = _try_normalize(row)
            pivots[_lead(row)] = row
    return pivots


def _back_substitute(pivots: dict) -> dict:
    done: dict = {}
    for lead in sorted(pivots, key=word_key):
        row = pivots[lead]
        for w in sorted(row, key=word_key, reverse=True):
            if w != lead and w in done and w in row:
                row = _row_sub(row, row[w], done[w])
        c = row[lead]
        try:
            row = {w: lp_div_exact(v, c) for w, v in row.items()}
        except NotDivisible as exc:
            raise NotDivisible(
                f"rule for {word_text(lead)} needs non-Laurent coefficients") from exc
        done[lead] = row
    return done


class NCElement:
    """Finite combination of words with Laurent coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: AlgebraSpec, terms: dict):
        self.algebra = algebra
        self.terms = terms

    @classmethod
    def from_grouped(cls, algebra, grouped: dict) -> "NCElement":
        return cls(algebra, flat_from_grouped(grouped))

    def grouped(self) -> dict:
        return grouped_from_flat(self.terms)

    def coefficient(self, word) -> LaurentPoly:
        return LaurentPoly._raw({m: c for (w, m), c in self.terms.items() if w == tuple(word)})

    def words(self) -> list:
        return sorted({w for w, _ in self.terms}, key=word_key)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other) -> "NCElement":
        if isinstance(other, NCElement):
            return other
        return self.algebra.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return NCElement(self.algebra, _finish(out))

    __radd__ = __add__

    def __neg__(self):
        return NCElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "NCElement":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly(c)
        out: dict = {}
        for (w, m), v in self.terms.items():
            for m2, v2 in c.terms.items():
                _acc(out, (w, m + m2 - ONE), v * v2)
        return NCElement(self.algebra, _finish(out))

    def concat(self, other: "NCElement") -> "NCElement":
        """Bilinear concatenation without normal ordering."""
        out: dict = {}
        for (w1, m1), c1 in self.terms.items():
            for (w2, m2), c2 in other.terms.items():
                _acc(out, (w1 + w2, m1 + m2 - ONE), c1 * c2)
        return NCElement(self.algebra, _finish(out))

    def __mul__(self, other):
        if isinstance(other, NCElement):
            return nc_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def normal_form(self, strategy="left") -> "NCElement":
        return NCElement(self.algebra, self.algebra.normal_terms(self.terms, strategy))

    def map_coefficients(self, fn) -> "NCElement":
        out = {}
        for w, lp in self.grouped().items():
            lp2 = fn(lp)
            for m, c in lp2.terms.items():
                out[(w, m)] = c
        return NCElement(self.algebra, out)

    def __eq__(self, other):
        if isinstance(other, NCElement):
            return self.algebra is other.algebra and self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return dump_element(self)

    def __repr__(self):
        return f"NCElement({self.algebra.name}: {dump_element(self)})"


def normal_form(e: NCElement, strategy="left") -> NCElement:
    return e.normal_form(strategy)


def nc_mul(e1: NCElement, e2: NCElement) -> NCElement:
    if e1.algebra is not e2.algebra:
        raise ValueError("elements belong to different algebras")
    return e1.concat(e2).normal_form()


def nc_commutator(e1: NCElement, e2: NCElement) -> NCElement:
    return (e1.concat(e2) - e2.concat(e1)).normal_form()


# -- maps between algebras ---------------------------------------------------

class GenMap:
    """(Anti)homomorphism given by generator images."""

    def __init__(self, source: AlgebraSpec, target: AlgebraSpec, images: dict,
                 anti=False, name="map"):
        self.source = source
        self.target = target
        self.images = dict(images)
        self.anti = anti
        self.name = name
        self._word_cache: dict = {}

    def __repr__(self):
        return f"<GenMap {self.name}{' (anti)' if self.anti else ''}>"

    def image_of(self, g: Gen) -> NCElement:
        try:
            return self.images[g]
        except KeyError:
            raise UndefinedOnGenerator(f"{self.name} is undefined on {g}") from None

    def word_image(self, word) -> NCElement:
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        letters = reversed(word) if self.anti else word
        out = self.target.one()
        for g in letters:
            out = nc_mul(out, self.image_of(g))
        self._word_cache[word] = out
        return out

    def __call__(self, e: NCElement) -> NCElement:
        return apply_genmap(self, e)


def apply_genmap(m: GenMap, e: NCElement) -> NCElement:
    out: dict = {}
    for (w, mono), c in e.terms.items():
        img = m.word_image(w)
        d = mono - ONE
        for (w2, m2), c2 in img.terms.items():
            _acc(out, (w2, m2 + d), c * c2)
    return NCElement(m.target, _finish(out))


def compose(*maps: GenMap, name=None) -> GenMap:
    """``compose(f, g)(x) == f(g(x))``; images of the innermost map's source."""
    inner = maps[-1]
    images = {}
    for g in inner.source.generators:
        if g not in inner.images:
            continue
        x = inner.images[g]
        for f in reversed(maps[:-1]):
            x = apply_genmap(f, x)
        images[g] = x
    anti = sum(m.anti for m in maps) % 2 == 1
    return GenMap(inner.source, maps[0].target, images, anti=anti,
                  name=name or "*".join(m.name for m in maps))


def identity_map(alg: AlgebraSpec) -> GenMap:
    return GenMap(alg, alg, {g: alg.word(g) for g in alg.generators}, name="id")


# -- confluence probe --------------------------------------------------------

class ProbeResult(NamedTuple):
    samples: int
    divergences: list


def confluence_probe(spec: AlgebraSpec, maxLen: int, samples: int, seed: int) -> ProbeResult:
    """Reduce random words leftmost-first and rightmost-first; compare."""
    rng = random.Random(seed)
    gens = list(spec.generators)
    bad = []
    if maxLen < 2:
        return ProbeResult(0, bad)
    for _ in range(samples):
        n = rng.randint(2, maxLen)
        word = tuple(rng.choice(gens) for _ in range(n))
        a = spec.normal_terms({(word, ONE): 1}, "left")
        b = spec.normal_terms({(word, ONE): 1}, "right")
        if a != b:
            bad.append(word)
    return ProbeResult(samples, bad)


# -- expression grammar ------------------------------------------------------

_GEN_RE = re.compile(r"^(tbar|t|s|a)\[(\d+),(\d+)\](?:\^(-?\d+))?$")


def dump_element(e: NCElement) -> str:
    items = sorted(e.terms.items(), key=lambda kv: (word_key(kv[0][0]), kv[0][1]))
    pieces = []
    for (w, m), c in items:
        body = " ".join(p for p in (monomial_text(unpack(m)), word_text(w)) if p)
        pieces.append((c, body))
    return dump_terms(pieces)


def parse_word(text: str, offset=0) -> tuple:
    letters = []
    for part in text.split("*"):
        m = _GEN_RE.match(part.strip())
        if not m:
            raise ParseError(f"malformed generator {part!r}", offset)
        kind = KINDS.index(m.group(1))
        i, j = int(m.group(2)), int(m.group(3))
        power = int(m.group(4) or 1)
        if kind == TBAR and i == j:
            kind, power = T, -power
        if power < 0:
            if kind != T or i != j:
                raise ParseError(f"negative power of non-diagonal {part!r}", offset)
            letters.extend([Gen(T, i, i, -1)] * (-power))
        else:
            letters.extend([Gen(kind, i, j, 1)] * power)
        offset += len(part) + 1
    return tuple(letters)


def parse_element(text: str, algebra: AlgebraSpec) -> NCElement:
    """Parse the canonical text form; the result is not normal-ordered."""
    text = text.strip()
    if text == "0":
        return algebra.zero()
    out: dict = {}
    for sign, body, offset in split_terms(text):
        if not body:
            raise ParseError("empty term", offset)
        tokens = body.split()
        coeff, exps, rest = parse_coefficient_tokens(tokens, offset)
        if len(rest) > 1:
            raise ParseError(f"unexpected token {rest[1]!r}", offset)
        word = parse_word(rest[0], offset) if rest else ()
        for g in word:
            if not algebra.supports(g):
                raise ParseError(f"generator {g} not in {algebra.name}", offset)
        _acc(out, (word, pack(exps)), sign * coeff)
    return NCElement(algebra, _finish(out))
