"""Subsets of {1, ..., n-1}, the permutations they index, and Stirling numbers.

A subset ``A`` of ``{1, ..., n-1}`` labels three things at once: the Peterson
fixed point ``w_A``, the permutation ``v_A`` (a product of simple
transpositions), and the basis class ``p_A``.  Subsets are stored as bitmasks
(bit ``j - 1`` set iff ``j`` is a member).

>>> A = Subset.of(5, [1, 2, 4])
>>> str(A), str(fixed_point_permutation(A))
('{1,2,4}', '32154')
>>> decompose_substrings(Subset.of(9, [1, 2, 3, 5, 6, 8]))
[Substring(lo=1, hi=3), Substring(lo=5, hi=6), Substring(lo=8, hi=8)]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator, NamedTuple

from . import limits
from .errors import DomainError, ParseError, ResourceCapExceeded

__all__ = [
    "Subset", "Substring", "Permutation",
    "decompose_substrings", "head", "tail",
    "fixed_point_permutation", "subset_of_fixed_point", "v_permutation",
    "stirling2", "all_subsets", "check_rank",
]


def check_rank(n):
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"rank must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class Subset:
    """A subset of ``{1, ..., n-1}`` for a fixed rank ``n``."""

    n: int
    mask: int

    def __post_init__(self):
        check_rank(self.n)
        if self.mask < 0 or self.mask >> (self.n - 1):
            raise DomainError(f"mask {self.mask:#b} has members outside 1..{self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> Subset:
        mask = 0
        for m in members:
            if not isinstance(m, int) or not 1 <= m <= n - 1:
                raise DomainError(f"member {m!r} outside 1..{n - 1}")
            mask |= 1 << (m - 1)
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> Subset:
        return cls(n, 0)

    @classmethod
    def interval(cls, n: int, lo: int, hi: int) -> Subset:
        return cls.of(n, range(lo, hi + 1))

    @classmethod
    def parse(cls, n: int, text: str) -> Subset:
        """Parse ``"{1,2,4}"``; braces are optional and ``"{}"`` is empty."""
        body = text.strip()
        if body.startswith("{"):
            if not body.endswith("}"):
                raise ParseError("unbalanced brace", text, len(text))
            body = body[1:-1]
        body = body.strip()
        if not body:
            return cls.empty(n)
        members = []
        for match in re.finditer(r"[^,]+", body):
            item = match.group().strip()
            if not item.isdigit():
                raise ParseError(f"bad subset member {item!r}", text, match.start() + 1)
            members.append(int(item))
        if len(set(members)) != len(members):
            raise ParseError("duplicate subset member", text)
        return cls.of(n, members)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.n) if self.mask >> (j - 1) & 1)

    def __contains__(self, j) -> bool:
        return isinstance(j, int) and 1 <= j <= self.n - 1 and bool(self.mask >> (j - 1) & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"

    def sort_key(self):
        return (len(self), self.members)

    def issubset(self, other: Subset) -> bool:
        return self.mask & ~other.mask == 0

    def add(self, j: int) -> Subset:
        return Subset.of(self.n, self.members + (j,))

    def remove(self, j: int) -> Subset:
        if j not in self:
            raise DomainError(f"{j} is not in {self}")
        return Subset(self.n, self.mask & ~(1 << (j - 1)))

    def at_rank(self, n: int) -> Subset:
        """The same members viewed inside ``{1, ..., n-1}``."""
        return Subset.of(n, self.members)


class Substring(NamedTuple):
    """A maximal run ``[lo, hi]`` of consecutive members."""

    lo: int
    hi: int

    def __len__(self):
        return self.hi - self.lo + 1


def decompose_substrings(A: Subset) -> list[Substring]:
    runs = []
    for j in A.members:
        if runs and runs[-1].hi == j - 1:
            runs[-1] = Substring(runs[-1].lo, j)
        else:
            runs.append(Substring(j, j))
    return runs


def _run_containing(A: Subset, j: int) -> Substring:
    if j not in A:
        raise DomainError(f"{j} is not a member of {A}")
    lo = hi = j
    while lo - 1 in A:
        lo -= 1
    while hi + 1 in A:
        hi += 1
    return Substring(lo, hi)


def head(A: Subset, j: int) -> int:
    """Largest element of the maximal run of ``A`` containing ``j``."""
    return _run_containing(A, j).hi


def tail(A: Subset, j: int) -> int:
    """Smallest element of the maximal run of ``A`` containing ``j``."""
    return _run_containing(A, j).lo


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1, ..., n}`` in one-line notation (1-based values)."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise DomainError(f"{self.one_line} is not a permutation of 1..{len(self.one_line)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> Permutation:
        """The adjacent transposition ``s_i = (i, i+1)``."""
        if not 1 <= i <= n - 1:
            raise DomainError(f"s_{i} does not exist in S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse ``"32154"`` (single digits) or ``"3,2,1,5,4"``."""
        text = text.strip()
        try:
            if "," in text:
                values = tuple(int(x) for x in text.split(","))
            else:
                values = tuple(int(c) for c in text)
        except ValueError:
            raise ParseError(f"bad permutation {text!r}", text) from None
        return cls(values)

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, j: int) -> int:
        return self.one_line[j - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other)(j) = self(other(j))
        if self.n != other.n:
            raise DomainError("permutations of different sizes")
        return Permutation(tuple(self(other(j)) for j in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.one_line, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Number of inversions."""
        w = self.one_line
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.one_line))
        return ",".join(map(str, self.one_line))


def fixed_point_permutation(A: Subset) -> Permutation:
    """The Peterson fixed point ``w_A``.

    The one-line form of ``w_A^{-1}`` is a concatenation of decreasing blocks
    that break exactly after each ``i`` not in ``A``.
    """
    inv = []
    start = 1
    for i in range(1, A.n + 1):
        if i == A.n or i not in A:
            inv.extend(range(i, start - 1, -1))
            start = i + 1
    return Permutation(tuple(inv)).inverse()


def subset_of_fixed_point(w: Permutation) -> Subset:
    """Recover ``A = {i : w^{-1}(i) = w^{-1}(i+1) + 1}``."""
    inv = w.inverse()
    return Subset.of(w.n, [i for i in range(1, w.n) if inv(i) == inv(i + 1) + 1])


def v_permutation(A: Subset) -> tuple[tuple[int, ...], Permutation]:
    """The word ``(j_1, ..., j_m)`` of ``A`` and ``v_A = s_{j_1} ... s_{j_m}``.

    Products compose as functions, rightmost factor applied first.
    """
    word = A.members
    v = Permutation.identity(A.n)
    for j in word:
        v = v * Permutation.simple(A.n, j)
    return word, v


_stirling_rows = [[1]]


def stirling2(k: int, j: int) -> int:
    """Stirling number of the second kind via ``S(k+1,j) = j S(k,j) + S(k,j-1)``."""
    if k < 0 or j < 0:
        raise DomainError("Stirling numbers need nonnegative arguments")
    if j > k:
        return 0
    while len(_stirling_rows) <= k:
        prev = _stirling_rows[-1] + [0]
        _stirling_rows.append([0] + [i * prev[i] + prev[i - 1] for i in range(1, len(prev))])
    return _stirling_rows[k][j]


def all_subsets(n: int, cap: int | None = None) -> tuple[Subset, ...]:
    """Every subset of ``{1, ..., n-1}``, by cardinality then lexicographically."""
    check_rank(n)
    cap = limits.max_rank() if cap is None else cap
    if n > cap:
        raise ResourceCapExceeded(f"rank {n} exceeds enumeration cap {cap}")
    return _all_subsets(n)


@cache
def _all_subsets(n):
    subsets = [Subset(n, mask) for mask in range(1 << (n - 1))]
    subsets.sort(key=Subset.sort_key)
    return tuple(subsets)
