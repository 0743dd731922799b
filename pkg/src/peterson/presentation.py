"""Generators and relations for the equivariant cohomology of the Peterson variety.

``monk_relation`` writes the Monk rule over an extended ring with one symbol
``P{A}`` per nonempty subset (``P{}`` is the unit).  Substituting the
Giambelli monomial for every symbol gives ``q_{i,A}`` in ``Q[t, p1..p{n-1}]``;
the nonzero ones (``i in A``) generate the ideal ``K``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import limits
from .combinatorics import Subset, all_subsets, check_rank
from .errors import DomainError, ResourceCapExceeded
from .gkm import VerifyReport
from .groebner import GroebnerBasis, buchberger, normal_form
from .poly import MultiPoly, UniPoly, generator_names, multi_from_unipoly
from .schubert import (
    giambelli_monomial, monk_coefficient, monk_product, restrict_generator,
)

MONK = "monk-m"
GIAMBELLI = "giambelli-q"

# Reference generators of K at n = 4, up to positive scaling.
GOLDEN_N4 = (
    "2*p1^2 - 2*t*p1 - p1*p2",
    "2*p2^2 - 2*t*p2 - p1*p2 - p2*p3",
    "2*p3^2 - 2*t*p3 - p2*p3",
    "3*p1^2*p2 - 6*t*p1*p2 - p1*p2*p3",
    "3*p1*p2^2 - 6*t*p1*p2 - 2*p1*p2*p3",
    "2*p1^2*p3 - 2*t*p1*p3 - p1*p2*p3",
    "2*p1*p3^2 - 2*t*p1*p3 - p1*p2*p3",
    "3*p2^2*p3 - 6*t*p2*p3 - 2*p1*p2*p3",
    "3*p2*p3^2 - 6*t*p2*p3 - p1*p2*p3",
    "p1^2*p2*p3 - 3*t*p1*p2*p3",
    "p1*p2^2*p3 - 4*t*p1*p2*p3",
    "p1*p2*p3^2 - 3*t*p1*p2*p3",
)


def golden_n4() -> list[MultiPoly]:
    return [MultiPoly.parse(s, generator_names(4)) for s in GOLDEN_N4]


def extended_generators(n: int) -> tuple[str, ...]:
    """``('t', 'P{1}', 'P{2}', ..., 'P{1,...,n-1}')`` in subset enumeration order."""
    return ("t",) + tuple(f"P{A}" for A in all_subsets(n) if len(A))


def basis_symbol(A: Subset) -> MultiPoly:
    gens = extended_generators(A.n)
    if not len(A):
        return MultiPoly.const(gens, 1)
    return MultiPoly.var(gens, f"P{A}")


@dataclass(frozen=True)
class Relation:
    i: int
    subset: Subset
    kind: str
    poly: MultiPoly


@dataclass(frozen=True)
class RelationSet:
    n: int
    relations: tuple[Relation, ...]

    def polys(self) -> list[MultiPoly]:
        return [r.poly for r in self.relations]

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)


def _check(n, i, A):
    check_rank(n)
    if not 1 <= i <= n - 1:
        raise DomainError(f"generator index {i} outside 1..{n - 1}")
    if A.n != n:
        raise DomainError(f"subset {A} has rank {A.n}, expected {n}")


def monk_relation(n: int, i: int, A: Subset) -> MultiPoly:
    """``m_{i,A} = P{i} P{A} - p_i(w_A) P{A} - sum_B c^B_{i,A} P{B}``."""
    _check(n, i, A)
    gens = extended_generators(n)
    rel = basis_symbol(Subset.of(n, [i])) * basis_symbol(A)
    for B, coeff in monk_product(n, i, A).items():
        rel = rel - multi_from_unipoly(coeff, gens) * basis_symbol(B)
    return rel


def giambelli_substitution(f: MultiPoly, n: int) -> MultiPoly:
    """Ring map ``P{A} -> sigma(A) prod_{j in A} p_j``, ``t -> t``."""
    gens = extended_generators(n)
    if f.gens != gens:
        raise DomainError("polynomial is not over the extended ring of this rank")
    target = generator_names(n)
    images = [MultiPoly.var(target, "t")]
    images += [giambelli_monomial(A) for A in all_subsets(n) if len(A)]
    return f.substitute(images, target)


def giambelli_q_relation(n: int, i: int, A: Subset) -> MultiPoly:
    """``q_{i,A}``: the Monk relation after Giambelli substitution."""
    return giambelli_substitution(monk_relation(n, i, A), n)


def giambelli_q_direct(n: int, i: int, A: Subset) -> MultiPoly:
    """``q_{i,A}`` assembled term by term, without the extended ring."""
    _check(n, i, A)
    gens = generator_names(n)
    pA = giambelli_monomial(A)
    q = MultiPoly.var(gens, f"p{i}") * pA
    q = q - multi_from_unipoly(restrict_generator(n, i, A), gens) * pA
    for k in range(1, n):
        if k not in A:
            B = A.add(k)
            c = monk_coefficient(n, i, A, B)
            if c:
                q = q - giambelli_monomial(B).scale(c)
    return q


def ideal_K(n: int, cap: int | None = None) -> RelationSet:
    """Nonzero relations ``q_{i,A}`` (``i in A``), scaled to primitive integer form.

    The ``i not in A`` relations are checked to vanish on the way.
    """
    check_rank(n)
    cap = limits.groebner_rank() if cap is None else cap
    if n > cap:
        raise ResourceCapExceeded(f"rank {n} exceeds presentation cap {cap}")
    rels = []
    for A in all_subsets(n):
        for i in range(1, n):
            q = giambelli_q_relation(n, i, A)
            if i not in A:
                if q:
                    raise AssertionError(f"q_{i},{A} = {q} should vanish")
                continue
            if q:
                rels.append(Relation(i, A, GIAMBELLI, q.primitive()))
    return RelationSet(n, tuple(rels))


def quadratic_part(K: RelationSet) -> list[MultiPoly]:
    return [r.poly for r in K if r.poly.total_degree() == 2]


def quadratic_groebner(n: int, **caps) -> GroebnerBasis:
    gens = generator_names(n)
    quad = quadratic_part(ideal_K(n))
    if not quad:
        return GroebnerBasis(gens, ())
    return buchberger(quad, **caps)


def quadratic_conjecture_check(n: int, **caps) -> bool:
    """Whether ``K`` is generated by its degree-2 relations.

    Raises ``ResourceCapExceeded`` when the Groebner computation hits a cap,
    which callers report as undetermined.
    """
    K = ideal_K(n)
    G = quadratic_groebner(n, **caps)
    return all(not normal_form(r.poly, G.elements) for r in K)


def quadratic_conjecture_status(n: int, **caps) -> str:
    try:
        return "true" if quadratic_conjecture_check(n, **caps) else "false"
    except ResourceCapExceeded:
        return "undetermined"


SINGLETON, RIGHT, LEFT, GLUING = "singleton", "right-extension", "left-extension", "gluing"


def insertion_case(i: int, A: Subset) -> str:
    """How adding ``i`` (not in ``A``) changes the maximal runs of ``A``."""
    if i in A:
        raise DomainError(f"{i} already lies in {A}")
    left, right = (i - 1) in A, (i + 1) in A
    if left and right:
        return GLUING
    if left:
        return RIGHT
    if right:
        return LEFT
    return SINGLETON


def vanishing_check(n: int) -> VerifyReport:
    """Check ``q_{i,A} == 0`` for every ``i not in A`` and count pairs per case."""
    start = time.perf_counter()
    report = VerifyReport("vanishing")
    counts = {SINGLETON: 0, RIGHT: 0, LEFT: 0, GLUING: 0}
    for A in all_subsets(n):
        for i in range(1, n):
            if i in A:
                continue
            counts[insertion_case(i, A)] += 1
            report.record(f"q_{i},{A}", "0", str(giambelli_q_relation(n, i, A)))
    report.details = {"cases": counts}
    report.wall_time = time.perf_counter() - start
    return report


def localize_relation(f: MultiPoly, n: int, B: Subset):
    """Evaluate ``f`` at the fixed point ``w_B`` (``p_j -> p_j(w_B)``)."""
    values = [UniPoly.t()] + [restrict_generator(n, j, B) for j in range(1, n)]
    return UniPoly.coerce(f.evaluate(values))


def export_presentation(n: int, quadratic_only: bool = False, with_flag: bool = True) -> dict:
    K = ideal_K(n)
    polys = quadratic_part(K) if quadratic_only else K.polys()
    out = {
        "n": n,
        "generators": [
            {"i": r.i, "subset": list(r.subset.members), "kind": r.kind, "poly": str(r.poly)}
            for r in K if not quadratic_only or r.poly.total_degree() == 2
        ],
    }
    assert len(out["generators"]) == len(polys)
    if with_flag:
        out["flags"] = {"n": n, "quadratic_conjecture": quadratic_conjecture_status(n)}
    return out
