"""Localization oracle.

A class is determined by its restrictions to the ``2^(n-1)`` fixed points, and
the localized ring is a product of copies of ``Q[t]``, so products there are
computed pointwise.  ``expand_localized`` goes back to the basis ``{p_A}``
using triangularity: ``p_A(w_B) = 0`` unless ``A`` is a subset of ``B``, and
``p_A(w_A)`` is a nonzero monomial.

Nothing here calls ``monk_coefficient``; the only shared ingredient with the
Monk rule is ``restrict_generator``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Mapping

from .combinatorics import Subset, all_subsets, check_rank
from .errors import DomainError, InexactDivision, NotInSpan, ParseError
from .poly import UniPoly
from .schubert import BasisExpansion, monk_product, restrict_basis, restrict_class


class LocalizedClass:
    """Total map from fixed points (subsets) to ``Q[t]``."""

    __slots__ = ("n", "_v")

    def __init__(self, n: int, values: Mapping[Subset, object] | None = None):
        check_rank(n)
        self.n = n
        values = values or {}
        for B in values:
            if B.n != n:
                raise DomainError(f"fixed point {B} has rank {B.n}, expected {n}")
        self._v = {B: UniPoly.coerce(values.get(B, 0)) for B in all_subsets(n)}

    @classmethod
    def constant(cls, n: int, c) -> LocalizedClass:
        return cls(n, {B: c for B in all_subsets(n)})

    def __getitem__(self, B: Subset) -> UniPoly:
        return self._v[B]

    def items(self):
        return list(self._v.items())

    def __eq__(self, other):
        if not isinstance(other, LocalizedClass):
            return NotImplemented
        return self.n == other.n and self._v == other._v

    def __mul__(self, other: LocalizedClass) -> LocalizedClass:
        return pointwise_product(self, other)

    def __repr__(self):
        body = ", ".join(f"{B}: {v}" for B, v in self._v.items())
        return f"LocalizedClass(n={self.n}, {{{body}}})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "values": [{"subset": list(B.members), "value": str(v)} for B, v in self._v.items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> LocalizedClass:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = int(data["n"])
            values = {Subset.of(n, item["subset"]): UniPoly.parse(item["value"])
                      for item in data["values"]}
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed localized-class JSON: {exc}") from None
        if len(values) != 1 << (n - 1):
            raise ParseError(f"expected {1 << (n - 1)} fixed points, got {len(values)}")
        return cls(n, values)


def localize(e: BasisExpansion) -> LocalizedClass:
    return LocalizedClass(e.n, {B: restrict_class(e, B) for B in all_subsets(e.n)})


def pointwise_product(f: LocalizedClass, g: LocalizedClass) -> LocalizedClass:
    if f.n != g.n:
        raise DomainError(f"rank mismatch: {f.n} vs {g.n}")
    return LocalizedClass(f.n, {B: f[B] * g[B] for B in all_subsets(f.n)})


def _supersets(mask: int, full: int):
    sup = mask
    while True:
        yield sup
        if sup == full:
            return
        sup = (sup + 1) | mask


def expand_localized(f: LocalizedClass) -> BasisExpansion:
    """The unique ``e`` with ``localize(e) == f``, by a triangular solve."""
    n = f.n
    full = (1 << (n - 1)) - 1
    residual = {B.mask: f[B] for B in all_subsets(n)}
    coeffs = {}
    for A in all_subsets(n):
        value = residual[A.mask]
        if not value:
            continue
        diagonal = restrict_basis(A, A)
        try:
            c = value.div_exact(diagonal)
        except InexactDivision:
            raise NotInSpan(f"value {value} at w_{A} is not a multiple of p_{A}(w_{A}) = {diagonal}") from None
        coeffs[A] = c
        for mask in _supersets(A.mask, full):
            residual[mask] = residual[mask] - c * restrict_basis(A, Subset(n, mask))
    leftover = {m: v for m, v in residual.items() if v}
    if leftover:
        m = min(leftover)
        raise NotInSpan(f"nonzero residual {leftover[m]} at w_{Subset(n, m)} after the solve")
    return BasisExpansion(n, coeffs)


def oracle_product(e1: BasisExpansion, e2: BasisExpansion) -> BasisExpansion:
    """Product of two classes computed entirely through localization."""
    return expand_localized(pointwise_product(localize(e1), localize(e2)))


@dataclass
class VerifyReport:
    """Outcome of a verification sweep; passes iff ``failures`` is empty."""

    suite: str
    total: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)
    status: str | None = None

    @property
    def passed(self) -> bool:
        return not self.failures and self.status != "undetermined"

    def record(self, ident, expected, actual):
        self.total += 1
        if expected != actual:
            self.failures.append((str(ident), str(expected), str(actual)))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "status": self.status or ("pass" if self.passed else "fail"),
            "total": self.total,
            "failures": [{"id": i, "expected": e, "actual": a} for i, e, a in self.failures],
            "wall_time": round(self.wall_time, 6),
            "details": self.details,
        }


def check_monk_pairs(n: int, pairs) -> list[tuple[str, str, str, bool]]:
    out = []
    for i, A in pairs:
        expected = monk_product(n, i, A)
        actual = oracle_product(BasisExpansion.basis(Subset.of(n, [i])), BasisExpansion.basis(A))
        out.append((f"p{i}*p{A}", str(expected), str(actual), expected == actual))
    return out


def oracle_check_monk(n: int) -> VerifyReport:
    """Compare every Monk product ``p_i p_A`` against the localization oracle."""
    start = time.perf_counter()
    report = VerifyReport("monk-oracle")
    pairs = [(i, A) for i in range(1, n) for A in all_subsets(n)]
    for ident, expected, actual, ok in check_monk_pairs(n, pairs):
        report.total += 1
        if not ok:
            report.failures.append((ident, expected, actual))
    report.wall_time = time.perf_counter() - start
    return report
