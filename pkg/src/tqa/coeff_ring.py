"""Exact sparse Laurent polynomials in q, u, v, w, lam over the rationals.

Monomials are packed into a single int: each exponent occupies a 16-bit
field with a bias of 2**15, q in the most significant field.  Multiplying
monomials is then integer addition (minus the bias), and comparing packed
keys is lexicographic comparison of exponent vectors in the order
(q, u, v, w, lam).
"""

from __future__ import annotations

import re
from fractions import Fraction

VARIABLES = ("q", "u", "v", "w", "lam")
NVARS = len(VARIABLES)

_WIDTH = 16
_OFFSET = 1 << (_WIDTH - 1)
_MASK = (1 << _WIDTH) - 1
_SHIFTS = tuple(_WIDTH * (NVARS - 1 - k) for k in range(NVARS))

#: packed key of the unit monomial; ``pack(a) + pack(b) - ONE == pack(a+b)``
ONE = sum(_OFFSET << s for s in _SHIFTS)


class NotDivisible(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


def pack(exps) -> int:
    key = ONE
    for e, s in zip(exps, _SHIFTS):
        if e:
            if not -_OFFSET < e < _OFFSET:
                raise OverflowError(f"exponent {e} out of range")
            key += e << s
    return key


def unpack(key: int) -> tuple[int, ...]:
    return tuple(((key >> s) & _MASK) - _OFFSET for s in _SHIFTS)


def normalize_rational(c):
    """Return ``c`` as an int when integral, else as a reduced Fraction."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _var_shift(name: str) -> int:
    return _SHIFTS[VARIABLES.index(name)]


_Q_STEP = 1 << _var_shift("q")


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            c = normalize_rational(terms)
            terms = {ONE: c} if c else {}
        self._terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_exponents(cls, items) -> "LaurentPoly":
        """Build from ``{exponent tuple: coefficient}`` (tuples may be short)."""
        out: dict[int, object] = {}
        if isinstance(items, dict):
            items = items.items()
        for exps, c in items:
            exps = tuple(exps) + (0,) * (NVARS - len(exps))
            k = pack(exps)
            v = out.get(k, 0) + normalize_rational(c)
            if v:
                out[k] = normalize_rational(v)
            else:
                out.pop(k, None)
        return cls._raw(out)

    @classmethod
    def monomial(cls, coeff=1, **exps) -> "LaurentPoly":
        c = normalize_rational(coeff)
        if not c:
            return cls._raw({})
        key = ONE
        for name, e in exps.items():
            key += e << _var_shift(name)
        return cls._raw({key: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        return cls.monomial(1, **{name: power})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Packed-key view; treat as read-only."""
        return self._terms

    def items(self):
        """(exponent tuple, coefficient) pairs in canonical order."""
        for k in sorted(self._terms):
            yield unpack(k), self._terms[k]

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE in self._terms)

    def constant(self):
        return self._terms.get(ONE, 0)

    def variables(self) -> set[str]:
        used = set()
        for k in self._terms:
            for name, e in zip(VARIABLES, unpack(k)):
                if e:
                    used.add(name)
        return used

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = normalize_rational(v)
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = normalize_rational(other)
            if not c:
                return LaurentPoly._raw({})
            return LaurentPoly._raw(
                {k: normalize_rational(v * c) for k, v in self._terms.items()}
            )
        out: dict[int, object] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2 - ONE
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
        return LaurentPoly._raw({k: normalize_rational(v) for k, v in out.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise NotDivisible("only monomials are invertible")
            ((k, c),) = self._terms.items()
            inv = LaurentPoly._raw({2 * ONE - k: normalize_rational(Fraction(1) / c)})
            return inv ** (-n)
        result = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        return lp_div_exact(self, other)

    # -- substitution -----------------------------------------------------

    def eval_q1(self) -> "LaurentPoly":
        """Substitute q = 1, leaving the other variables untouched."""
        q_field = _MASK << _var_shift("q")
        out: dict[int, object] = {}
        for k, c in self._terms.items():
            k2 = (k & ~q_field) | (_OFFSET << _var_shift("q"))
            v = out.get(k2, 0) + c
            if v:
                out[k2] = v
            else:
                del out[k2]
        return LaurentPoly._raw(out)

    def substitute(self, **values) -> "LaurentPoly":
        """Substitute each named variable by a LaurentPoly (or number)."""
        subs = {VARIABLES.index(n): (v if isinstance(v, LaurentPoly) else LaurentPoly(v))
                for n, v in values.items()}
        out = LaurentPoly()
        cache: dict = {}
        for exps, c in self.items():
            term = LaurentPoly(c)
            rest = list(exps)
            for idx, val in subs.items():
                e = rest[idx]
                if e:
                    key = (idx, e)
                    if key not in cache:
                        cache[key] = val ** e
                    term = term * cache[key]
                    rest[idx] = 0
            out = out + term * LaurentPoly._raw({pack(rest): 1})
        return out

    def shift_q(self, e: int) -> "LaurentPoly":
        """Multiply by q**e (cheap)."""
        d = e * _Q_STEP
        return LaurentPoly._raw({k + d: c for k, c in self._terms.items()})

    # -- text -------------------------------------------------------------

    def __str__(self):
        return dump_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({dump_laurent(self)!r})"


ZERO = LaurentPoly()
UNIT = LaurentPoly(1)
Q = LaurentPoly.var("q")
QINV = LaurentPoly.var("q", -1)
#: q - q^-1, the ubiquitous structure constant
QQ = Q - QINV


def lp_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def lp_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def lp_neg(f: LaurentPoly) -> LaurentPoly:
    return -f


def _min_exponents(terms: dict) -> list[int]:
    mins = [0] * NVARS
    first = True
    for k in terms:
        e = unpack(k)
        if first:
            mins = list(e)
            first = False
        else:
            mins = [min(a, b) for a, b in zip(mins, e)]
    return mins


def lp_div_exact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return ``h`` with ``h * g == f``; raise NotDivisible otherwise."""
    if not isinstance(g, LaurentPoly):
        g = LaurentPoly(g)
    if not isinstance(f, LaurentPoly):
        f = LaurentPoly(f)
    if not g._terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f._terms:
        return LaurentPoly()
    if len(g._terms) == 1:
        ((kg, cg),) = g._terms.items()
        inv = Fraction(1) / cg
        return LaurentPoly._raw(
            {k - kg + ONE: normalize_rational(c * inv) for k, c in f._terms.items()}
        )
    # Shift both to genuine polynomials; monomials are units, so divisibility
    # in the Laurent ring is divisibility of the shifted polynomials.
    fmin = pack(_min_exponents(f._terms)) - ONE
    gmin = pack(_min_exponents(g._terms)) - ONE
    rem = {k - fmin: c for k, c in f._terms.items()}
    gs = {k - gmin: c for k, c in g._terms.items()}
    glead = max(gs)
    glead_exps = unpack(glead)
    gc = Fraction(gs[glead])
    quot: dict[int, object] = {}
    while rem:
        lead = max(rem)
        lead_exps = unpack(lead)
        if any(a < b for a, b in zip(lead_exps, glead_exps)):
            raise NotDivisible(f"{f} is not divisible by {g}")
        c = normalize_rational(rem[lead] / gc)
        shift = lead - glead
        quot[shift + ONE] = c
        for k, gcoef in gs.items():
            kk = k + shift
            v = rem.get(kk, 0) - c * gcoef
            if v:
                rem[kk] = normalize_rational(v)
            else:
                rem.pop(kk, None)
    return LaurentPoly._raw({k + fmin - gmin: c for k, c in quot.items()})


def lp_eval_q1(f: LaurentPoly) -> LaurentPoly:
    return f.eval_q1()


_ONE_MINUS_Q = UNIT - Q


def classical_rate(f: LaurentPoly) -> LaurentPoly:
    """``(f / (1 - q))`` evaluated at ``q = 1``; f must vanish at q = 1."""
    return lp_div_exact(f, _ONE_MINUS_Q).eval_q1()


# -- canonical text form ---------------------------------------------------

_VAR_TEXT = {"lam": "lam"}


def format_rational(c) -> str:
    c = normalize_rational(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def monomial_text(exps) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def dump_terms(items) -> str:
    """Join ``(coefficient, body)`` pairs as ``c body + c body - ...``."""
    out = []
    for c, body in items:
        c = normalize_rational(c)
        neg = c < 0
        mag = format_rational(-c if neg else c)
        piece = f"{mag} {body}".rstrip()
        if not out:
            out.append(("-" if neg else "") + piece)
        else:
            out.append((" - " if neg else " + ") + piece)
    return "".join(out) if out else "0"


def dump_laurent(f: LaurentPoly) -> str:
    return dump_terms((c, monomial_text(e)) for e, c in f.items())


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")
_FACTOR = re.compile(r"^(q|u|v|w|lam|λ)(?:\^(-?\d+))?$")


class ParseError(ValueError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def split_terms(text: str) -> list[tuple[int, str, int]]:
    """Split a sum into ``(sign, term text, offset)`` triples."""
    text = text.strip()
    pieces = []
    pos = 0
    sign = 1
    if text.startswith("-"):
        sign, pos = -1, 1
    elif text.startswith("+"):
        pos = 1
    for m in _TERM_SPLIT.finditer(text, pos):
        pieces.append((sign, text[pos:m.start()].strip(), pos))
        sign = -1 if m.group(1) == "-" else 1
        pos = m.end()
    pieces.append((sign, text[pos:].strip(), pos))
    return pieces


def parse_coefficient_tokens(tokens, offset=0):
    """Consume a leading rational and q/u/v/w/lam factors.

    Returns ``(coefficient, exponent list, remaining tokens)``.
    """
    coeff = Fraction(1)
    exps = [0] * NVARS
    i = 0
    if i < len(tokens) and _RATIONAL.match(tokens[i]):
        coeff = Fraction(tokens[i])
        i += 1
    while i < len(tokens):
        m = _FACTOR.match(tokens[i])
        if not m:
            break
        name = "lam" if m.group(1) == "λ" else m.group(1)
        exps[VARIABLES.index(name)] += int(m.group(2) or 1)
        i += 1
    return coeff, exps, tokens[i:]


def parse_laurent(text: str) -> LaurentPoly:
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    out = LaurentPoly()
    for sign, body, offset in split_terms(text):
        if not body:
            raise ParseError("empty term", offset)
        tokens = body.split()
        coeff, exps, rest = parse_coefficient_tokens(tokens, offset)
        if rest:
            raise ParseError(f"unexpected token {rest[0]!r}", offset)
        out = out + LaurentPoly.from_exponents({tuple(exps): sign * coeff})
    return out
