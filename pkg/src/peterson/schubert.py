"""Peterson Schubert calculus: restrictions, Monk products, Giambelli, Stirling.

Classes in ``H^*_{S^1}(Y)`` are written in the module basis ``{p_A}`` with
coefficients in ``Q[t]`` (a ``BasisExpansion``).  Multiplication by a degree-2
generator ``p_i`` is given by the Monk rule; everything else (monomials in the
``p_i``, powers of ``p_1``) is built from that.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .combinatorics import (
    Subset, all_subsets, check_rank, decompose_substrings, fixed_point_permutation,
    head, stirling2, tail,
)
from .errors import DomainError, NotStable, ParseError
from .poly import MultiPoly, UniPoly, generator_names

__all__ = [
    "BasisExpansion", "restrict_generator", "restrict_generator_oneline",
    "monk_coefficient", "monk_product", "multiply_by_generator",
    "giambelli_sigma", "giambelli_monomial", "expand_monomial", "giambelli_verify",
    "stirling_expansion", "restrict_basis", "restrict_class", "stability_restrict",
]

T = UniPoly.t()


class BasisExpansion:
    """A class ``sum_A c_A(t) p_A``; immutable, zero coefficients dropped."""

    __slots__ = ("n", "_c")

    def __init__(self, n: int, coeffs: Mapping[Subset, object] | None = None):
        check_rank(n)
        self.n = n
        c = {}
        for A, v in (coeffs or {}).items():
            if A.n != n:
                raise DomainError(f"subset {A} has rank {A.n}, expected {n}")
            v = UniPoly.coerce(v)
            if v:
                c[A] = c[A] + v if A in c else v
        self._c = {A: v for A, v in c.items() if v}

    @classmethod
    def zero(cls, n: int) -> BasisExpansion:
        return cls(n)

    @classmethod
    def basis(cls, A: Subset, coeff=1) -> BasisExpansion:
        """The single class ``coeff * p_A``."""
        return cls(A.n, {A: coeff})

    @classmethod
    def identity(cls, n: int) -> BasisExpansion:
        return cls.basis(Subset.empty(n))

    def __getitem__(self, A: Subset) -> UniPoly:
        return self._c.get(A, UniPoly.zero())

    def support(self) -> list[Subset]:
        return sorted(self._c, key=Subset.sort_key)

    def items(self) -> list[tuple[Subset, UniPoly]]:
        return [(A, self._c[A]) for A in self.support()]

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return self.n == other.n and self._c == other._c

    def __hash__(self):
        return hash((self.n, frozenset(self._c.items())))

    def _check(self, other):
        if self.n != other.n:
            raise DomainError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: BasisExpansion) -> BasisExpansion:
        self._check(other)
        c = dict(self._c)
        for A, v in other._c.items():
            c[A] = c[A] + v if A in c else v
        return BasisExpansion(self.n, c)

    def __neg__(self):
        return BasisExpansion(self.n, {A: -v for A, v in self._c.items()})

    def __sub__(self, other: BasisExpansion) -> BasisExpansion:
        return self + (-other)

    def scale(self, factor) -> BasisExpansion:
        """Multiply every coefficient by a number or a ``UniPoly``."""
        return BasisExpansion(self.n, {A: v * factor for A, v in self._c.items()})

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for A, v in self.items():
            sym = "p" + str(A)
            if v == 1:
                body, neg = sym, False
            elif v == -1:
                body, neg = sym, True
            elif v.is_monomial():
                (e, c), = v.coeffs().items()
                neg = c < 0
                mag = str(UniPoly.monomial(abs(c), e))
                body = sym if mag == "1" else f"{mag}*{sym}"
            else:
                body, neg = f"({v})*{sym}", False
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"BasisExpansion(n={self.n}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"subset": list(A.members), "coeff": str(v)} for A, v in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> BasisExpansion:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = int(data["n"])
            coeffs = {}
            for term in data["terms"]:
                A = Subset.of(n, term["subset"])
                if A in coeffs:
                    raise ParseError(f"duplicate subset {A} in expansion")
                coeffs[A] = UniPoly.parse(term["coeff"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed expansion JSON: {exc}") from None
        return cls(n, coeffs)


def _check_index(n, i):
    check_rank(n)
    if not isinstance(i, int) or not 1 <= i <= n - 1:
        raise DomainError(f"generator index {i!r} outside 1..{n - 1}")


def _check_subset(n, A):
    if A.n != n:
        raise DomainError(f"subset {A} has rank {A.n}, expected {n}")


@lru_cache(maxsize=None)
def restrict_generator(n: int, i: int, B: Subset) -> UniPoly:
    """``p_i(w_B)``: zero unless ``i in B``, else ``(i - tail + 1)(head - i + 1) t``."""
    _check_index(n, i)
    _check_subset(n, B)
    if i not in B:
        return UniPoly.zero()
    return UniPoly.monomial((i - tail(B, i) + 1) * (head(B, i) - i + 1), 1)


def restrict_generator_oneline(n: int, i: int, B: Subset) -> UniPoly:
    """``p_i(w_B)`` read off the one-line form: ``sum_{j <= i} (w_B(j) - j) t``."""
    _check_index(n, i)
    _check_subset(n, B)
    w = fixed_point_permutation(B)
    return UniPoly.monomial(sum(w(j) - j for j in range(1, i + 1)), 1)


def monk_coefficient(n: int, i: int, A: Subset, B: Subset) -> int:
    """Structure constant ``c^B_{i,A}`` for ``B = A + {k}``; always a nonnegative integer."""
    _check_index(n, i)
    _check_subset(n, A)
    _check_subset(n, B)
    if not (A.issubset(B) and len(B) == len(A) + 1):
        raise DomainError(f"{B} is not {A} plus one element")
    (k,) = set(B.members) - set(A.members)
    if i not in B:
        return 0
    lo, hi = tail(B, k), head(B, k)
    if not lo <= i <= hi:
        return 0
    if k <= i:
        return (hi - i + 1) * math.comb(hi - lo + 1, k - lo)
    return (i - lo + 1) * math.comb(hi - lo + 1, k - lo + 1)


@lru_cache(maxsize=None)
def monk_product(n: int, i: int, A: Subset) -> BasisExpansion:
    """Expansion of ``p_i * p_A``."""
    _check_index(n, i)
    _check_subset(n, A)
    coeffs = {A: restrict_generator(n, i, A)}
    for k in range(1, n):
        if k in A:
            continue
        B = A.add(k)
        c = monk_coefficient(n, i, A, B)
        if c:
            coeffs[B] = UniPoly.const(c)
    return BasisExpansion(n, coeffs)


def multiply_by_generator(e: BasisExpansion, i: int) -> BasisExpansion:
    """``p_i * e``, extended ``Q[t]``-linearly from the Monk rule."""
    result = BasisExpansion.zero(e.n)
    for A, v in e.items():
        result = result + monk_product(e.n, i, A).scale(v)
    return result


def giambelli_sigma(A: Subset) -> Fraction:
    """Product of ``1/len!`` over the maximal runs of ``A``."""
    denom = 1
    for run in decompose_substrings(A):
        denom *= math.factorial(len(run))
    return Fraction(1, denom)


def giambelli_monomial(A: Subset) -> MultiPoly:
    """``sigma(A) * prod_{j in A} p_j`` in ``Q[t, p1, ..., p{n-1}]``."""
    exp = [0] * A.n
    for j in A.members:
        exp[j] = 1
    return MultiPoly.monomial(generator_names(A.n), exp, giambelli_sigma(A))


def expand_monomial(n: int, factors: Iterable[int]) -> BasisExpansion:
    """Basis expansion of ``prod p_i`` over the multiset ``factors``."""
    check_rank(n)
    factors = sorted(factors)
    for i in factors:
        _check_index(n, i)
    result = BasisExpansion.identity(n)
    for i in factors:
        result = multiply_by_generator(result, i)
    return result


def giambelli_verify(n: int, A: Subset) -> bool:
    _check_subset(n, A)
    lhs = expand_monomial(n, A.members).scale(giambelli_sigma(A))
    return lhs == BasisExpansion.basis(A)


def stirling_expansion(n: int, k: int) -> BasisExpansion:
    """``sum_j S(k, j) t^(k-j) p_{[1,j]}`` for ``1 <= j <= min(k, n-1)``."""
    check_rank(n)
    if k < 1:
        raise DomainError("power must be at least 1")
    coeffs = {}
    for j in range(1, min(k, n - 1) + 1):
        coeffs[Subset.interval(n, 1, j)] = UniPoly.monomial(stirling2(k, j), k - j)
    return BasisExpansion(n, coeffs)


@lru_cache(maxsize=None)
def restrict_basis(A: Subset, B: Subset) -> UniPoly:
    """``p_A(w_B) = sigma(A) * prod_{j in A} p_j(w_B)``."""
    if A.n != B.n:
        raise DomainError("rank mismatch")
    if not A.issubset(B):
        return UniPoly.zero()
    value = UniPoly.const(giambelli_sigma(A))
    for j in A.members:
        value = value * restrict_generator(A.n, j, B)
    return value


def restrict_class(e: BasisExpansion, B: Subset) -> UniPoly:
    _check_subset(e.n, B)
    total = UniPoly.zero()
    for A, v in e.items():
        total = total + v * restrict_basis(A, B)
    return total


def stability_restrict(e: BasisExpansion) -> BasisExpansion:
    """Pull a class back from rank ``n+1`` to rank ``n``.

    Only classes supported on subsets of ``{1, ..., n-1}`` have a stable
    preimage; a key containing ``n`` raises ``NotStable``.
    """
    m = e.n
    if m < 2:
        raise DomainError("cannot restrict below rank 1")
    coeffs = {}
    for A, v in e.items():
        if (m - 1) in A:
            raise NotStable(f"p{A} involves s_{m - 1}, which does not exist at rank {m - 1}")
        coeffs[A.at_rank(m - 1)] = v
    return BasisExpansion(m - 1, coeffs)


def all_basis_classes(n: int) -> list[BasisExpansion]:
    return [BasisExpansion.basis(A) for A in all_subsets(n)]
