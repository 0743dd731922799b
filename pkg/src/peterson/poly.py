"""Exact rational polynomials.

``UniPoly`` is a polynomial in the single equivariant parameter ``t``.
``MultiPoly`` is a polynomial over a named tuple of generators; the usual ring
is ``(t, p1, ..., p{n-1})`` but any generator names are allowed (the
presentation module uses one extra generator per basis class).

Monomials of a ``MultiPoly`` are compared in degree-reverse-lexicographic
order with the *first* generator smallest, so for ``(t, p1, p2, p3)`` the
variables rank ``t < p1 < p2 < p3``.  Rendering lists terms from largest to
smallest in that order.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, InexactDivision, ParseError

Rational = Fraction

__all__ = [
    "Rational", "UniPoly", "MultiPoly", "generator_names",
    "grevlex_key", "format_rational", "parse_polynomial",
]


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def _render(terms) -> str:
    """Join ``(coefficient, [factor strings])`` pairs into ``a*x^2 - b*y``."""
    if not terms:
        return "0"
    out = []
    for idx, (c, factors) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not factors:
            body = format_rational(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = format_rational(mag) + "*" + "*".join(factors)
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def _power_str(name, e):
    return name if e == 1 else f"{name}^{e}"


class UniPoly:
    """Polynomial in ``t`` with ``Fraction`` coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if e < 0:
                raise DomainError("negative exponent")
            v = _as_fraction(v)
            if v:
                c[e] = v
        self._c = c
        self._hash = None

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e: int) -> UniPoly:
        """``c * t^e``."""
        return cls({e: c})

    @classmethod
    def t(cls) -> UniPoly:
        return cls({1: 1})

    @classmethod
    def zero(cls) -> UniPoly:
        return cls()

    @classmethod
    def one(cls) -> UniPoly:
        return cls({0: 1})

    @classmethod
    def coerce(cls, x) -> UniPoly:
        if isinstance(x, UniPoly):
            return x
        return cls.const(x)

    @classmethod
    def parse(cls, text: str) -> UniPoly:
        return parse_polynomial(text, ("t",)).to_unipoly()

    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def __getitem__(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return max(self._c, default=-1)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self):
        return UniPoly({e: -v for e, v in self._c.items()})

    def __add__(self, other):
        if not isinstance(other, (UniPoly, int, Fraction)):
            return NotImplemented
        other = UniPoly.coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return UniPoly(c)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (UniPoly, int, Fraction)):
            return NotImplemented
        return self + (-UniPoly.coerce(other))

    def __rsub__(self, other):
        return UniPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, UniPoly):
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return UniPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def div_exact(self, other: UniPoly) -> UniPoly:
        """Return ``q`` with ``self == q * other``, or raise ``InexactDivision``."""
        other = UniPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._c)
        q: dict[int, Fraction] = {}
        d = other.degree()
        lead = other._c[d]
        while rem:
            top = max(rem)
            if top < d:
                break
            factor = rem[top] / lead
            shift = top - d
            q[shift] = factor
            for e, v in other._c.items():
                val = rem.get(e + shift, 0) - factor * v
                if val:
                    rem[e + shift] = val
                else:
                    rem.pop(e + shift, None)
        if rem:
            raise InexactDivision(f"{self} is not divisible by {other}")
        return UniPoly(q)

    def __call__(self, x):
        """Evaluate at ``x`` (any value supporting ``+`` and ``*``)."""
        result = 0
        for e, v in self._c.items():
            result = result + v * x ** e
        return result

    def __str__(self):
        terms = [(self._c[e], [] if e == 0 else [_power_str("t", e)])
                 for e in sorted(self._c, reverse=True)]
        return _render(terms)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"


def generator_names(n: int) -> tuple[str, ...]:
    """``('t', 'p1', ..., 'p{n-1}')``."""
    return ("t",) + tuple(f"p{i}" for i in range(1, n))


def grevlex_key(exp: Sequence[int]):
    """Sort key: larger key means larger monomial; index 0 is the smallest variable."""
    return (sum(exp), tuple(-e for e in exp))


class MultiPoly:
    """Sparse multivariate polynomial over ``Fraction`` on named generators."""

    __slots__ = ("gens", "_t", "_hash")

    def __init__(self, gens: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.gens = tuple(gens)
        k = len(self.gens)
        t = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != k:
                raise DomainError(f"exponent vector {exp} does not match {k} generators")
            c = _as_fraction(c)
            if c:
                t[exp] = t.get(exp, 0) + c
                if not t[exp]:
                    del t[exp]
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, gens, terms):
        obj = cls.__new__(cls)
        obj.gens = gens
        obj._t = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def ring(cls, n: int) -> MultiPoly:
        """Zero of ``Q[t, p1, ..., p{n-1}]``."""
        return cls(generator_names(n))

    @classmethod
    def const(cls, gens, c) -> MultiPoly:
        return cls(gens, {(0,) * len(gens): c})

    @classmethod
    def var(cls, gens, name_or_index) -> MultiPoly:
        gens = tuple(gens)
        idx = gens.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        exp = [0] * len(gens)
        exp[idx] = 1
        return cls(gens, {tuple(exp): 1})

    @classmethod
    def monomial(cls, gens, exp, c=1) -> MultiPoly:
        return cls(gens, {tuple(exp): c})

    @classmethod
    def parse(cls, text: str, gens: Sequence[str]) -> MultiPoly:
        return parse_polynomial(text, tuple(gens))

    # basic access

    @property
    def rank(self) -> int:
        """Number of generators (``n`` for the ring ``Q[t, p1..p{n-1}]``)."""
        return len(self.gens)

    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._t)

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self._t.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def coefficient(self, exp) -> Fraction:
        return self._t.get(tuple(exp), Fraction(0))

    def leading(self) -> tuple[tuple, Fraction]:
        if not self._t:
            raise DomainError("zero polynomial has no leading term")
        exp = max(self._t, key=grevlex_key)
        return exp, self._t[exp]

    def total_degree(self) -> int:
        return max((sum(e) for e in self._t), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._t}) <= 1

    def _check(self, other):
        if self.gens != other.gens:
            raise DomainError(f"generator mismatch: {self.gens} vs {other.gens}")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.gens, other)
        return None

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.gens, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.gens == other.gens and self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self._t.items())))
        return self._hash

    def __neg__(self):
        return MultiPoly._raw(self.gens, {e: -c for e, c in self._t.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return MultiPoly._raw(self.gens, t)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> MultiPoly:
        c = _as_fraction(c)
        if not c:
            return MultiPoly(self.gens)
        return MultiPoly._raw(self.gens, {e: v * c for e, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        t: dict[tuple, Fraction] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return MultiPoly._raw(self.gens, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        result = MultiPoly.const(self.gens, 1)
        for _ in range(k):
            result = result * self
        return result

    def mul_term(self, exp, c) -> MultiPoly:
        """Multiply by the single term ``c * x^exp``."""
        return MultiPoly._raw(
            self.gens, {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self._t.items()})

    # normalisation

    def denominator_lcm(self) -> int:
        return math.lcm(*(c.denominator for c in self._t.values())) if self._t else 1

    def primitive(self) -> MultiPoly:
        """Positive rational multiple with coprime integer coefficients."""
        if not self._t:
            return self
        scaled = self.scale(self.denominator_lcm())
        g = math.gcd(*(c.numerator for c in scaled._t.values()))
        return scaled.scale(Fraction(1, g))

    def monic(self) -> MultiPoly:
        return self.scale(1 / self.leading()[1])

    def is_positive_multiple_of(self, other: MultiPoly) -> bool:
        if self.gens != other.gens or set(self._t) != set(other._t):
            return False
        if not self._t:
            return True
        ratios = {self._t[e] / other._t[e] for e in self._t}
        return len(ratios) == 1 and ratios.pop() > 0

    # evaluation

    def evaluate(self, values: Sequence):
        """Substitute ``values[k]`` for generator ``k`` and sum up.

        Values may be numbers, ``UniPoly`` or ``MultiPoly`` objects; powers are
        cached per generator.
        """
        if len(values) != len(self.gens):
            raise DomainError("wrong number of values")
        powers = [{0: 1} for _ in values]
        total = 0
        for exp, c in self._t.items():
            term = c
            for k, e in enumerate(exp):
                if e:
                    cache = powers[k]
                    if e not in cache:
                        cache[e] = values[k] ** e
                    term = cache[e] * term
            total = term + total
        return total

    def substitute(self, images: Sequence[MultiPoly], gens: Sequence[str]) -> MultiPoly:
        """Ring map sending generator ``k`` to ``images[k]`` in the ring on ``gens``."""
        result = self.evaluate(list(images))
        if not isinstance(result, MultiPoly):
            result = MultiPoly.const(gens, result)
        return result

    def to_unipoly(self) -> UniPoly:
        """Convert a polynomial on the single generator ``t``."""
        if self.gens != ("t",):
            raise DomainError(f"not a polynomial in t alone: generators {self.gens}")
        return UniPoly({e[0]: c for e, c in self._t.items()})

    def __str__(self):
        terms = []
        for exp, c in self.sorted_terms():
            factors = [_power_str(name, e) for name, e in zip(self.gens, exp) if e]
            terms.append((c, factors))
        return _render(terms)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*(?:\{[0-9,]*\})?)|(?P<op>[-+*/^()]))")


def parse_polynomial(text: str, gens: tuple[str, ...]) -> MultiPoly:
    """Parse expressions such as ``"3*p1^2*p2 - 6*t*p1*p2 - 1/6*p1*p2*p3"``.

    Grammar: sums of products of factors; a factor is an integer, a generator
    name, or a parenthesised expression, optionally raised to ``^k``.  ``/`` is
    only allowed with a nonzero integer on the right.
    """
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {stripped[pos]!r}", text, pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(stripped)))
    index = {name: k for k, name in enumerate(gens)}
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        kind, val, p = peek()
        neg = False
        if kind == "op" and val in "+-":
            take()
            neg = val == "-"
        acc = product()
        if neg:
            acc = -acc
        while peek()[0] == "op" and peek()[1] in "+-":
            _, op, _ = take()
            rhs = product()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def product():
        acc = power()
        while peek()[0] == "op" and peek()[1] in "*/":
            _, op, p = take()
            if op == "*":
                acc = acc * power()
            else:
                kind, val, q = take()
                if kind != "num" or int(val) == 0:
                    raise ParseError("'/' must be followed by a nonzero integer", text, q)
                acc = acc.scale(Fraction(1, int(val)))
        return acc

    def power():
        base = atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            kind, val, p = take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", text, p)
            base = base ** int(val)
        return base

    def atom():
        kind, val, p = take()
        if kind == "num":
            return MultiPoly.const(gens, int(val))
        if kind == "name":
            if val not in index:
                raise ParseError(f"unknown generator {val!r}", text, p)
            return MultiPoly.var(gens, index[val])
        if kind == "op" and val == "(":
            inner = expr()
            kind2, val2, p2 = take()
            if val2 != ")":
                raise ParseError("expected ')'", text, p2)
            return inner
        raise ParseError(f"unexpected token {val or 'end of input'!r}", text, p)

    result = expr()
    kind, val, p = peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", text, p)
    return result


def multi_from_unipoly(u: UniPoly, gens: Iterable[str]) -> MultiPoly:
    """Embed a polynomial in ``t`` into a ring whose first generator is ``t``."""
    gens = tuple(gens)
    if not gens or gens[0] != "t":
        raise DomainError("target ring must have 't' as its first generator")
    zeros = (0,) * (len(gens) - 1)
    return MultiPoly(gens, {(e,) + zeros: c for e, c in u.coeffs().items()})
