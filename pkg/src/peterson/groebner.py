"""Multivariate division and Buchberger's algorithm over Q (degrevlex).

Polynomials are ``MultiPoly`` objects; internally the loops work on plain
``{exponent tuple: Fraction}`` dicts.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import limits
from .errors import DomainError, ResourceCapExceeded
from .poly import MultiPoly, grevlex_key

ORDER = "grevlex"


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lead(terms):
    exp = max(terms, key=grevlex_key)
    return exp, terms[exp]


def _reduce(terms: dict, divisors: list) -> dict:
    """Remainder of ``terms`` on division by ``(lead_exp, lead_coeff, terms)`` triples."""
    p = dict(terms)
    rem = {}
    while p:
        lm, lc = _lead(p)
        for dlm, dlc, dterms in divisors:
            if _divides(dlm, lm):
                shift = _sub(lm, dlm)
                factor = lc / dlc
                for e, c in dterms.items():
                    e2 = tuple(x + y for x, y in zip(e, shift))
                    v = p.get(e2, 0) - factor * c
                    if v:
                        p[e2] = v
                    else:
                        p.pop(e2, None)
                break
        else:
            rem[lm] = lc
            del p[lm]
    return rem


def _prepare(G):
    return [(*_lead(g.terms()), g.terms()) for g in G if g]


def normal_form(f: MultiPoly, G: Sequence[MultiPoly]) -> MultiPoly:
    """Fully reduced remainder of ``f`` modulo ``G`` (divisors tried in order)."""
    for g in G:
        if g.gens != f.gens:
            raise DomainError("generator mismatch between dividend and divisors")
    return MultiPoly(f.gens, _reduce(f.terms(), _prepare(G)))


@dataclass(frozen=True)
class GroebnerBasis:
    gens: tuple[str, ...]
    elements: tuple[MultiPoly, ...]
    order: str = ORDER

    def reduce(self, f: MultiPoly) -> MultiPoly:
        return normal_form(f, self.elements)

    def contains(self, f: MultiPoly) -> bool:
        return not self.reduce(f)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    (fe, fc), (ge, gc) = f.leading(), g.leading()
    m = _lcm(fe, ge)
    return f.mul_term(_sub(m, fe), 1 / fc) - g.mul_term(_sub(m, ge), 1 / gc)


def buchberger(G: Sequence[MultiPoly], max_pairs: int | None = None,
               max_degree: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``G``.

    Pairs are taken smallest-lcm first (normal strategy) and skipped by the
    coprime-leading-monomial and chain criteria.  Raises
    ``ResourceCapExceeded`` (with the current basis as ``partial``) when the
    pair budget or the degree ceiling is exceeded.
    """
    G = [g for g in G if g]
    if not G:
        raise DomainError("buchberger needs at least one nonzero polynomial")
    gens = G[0].gens
    for g in G:
        if g.gens != gens:
            raise DomainError("generator mismatch in buchberger input")
    max_pairs = limits.max_pairs() if max_pairs is None else max_pairs
    max_degree = limits.max_degree() if max_degree is None else max_degree

    basis: list[tuple] = []  # (lead_exp, lead_coeff, terms)
    pending: dict[tuple[int, int], tuple] = {}
    heap: list = []

    def add(terms):
        lm, lc = _lead(terms)
        terms = {e: c / lc for e, c in terms.items()}
        idx = len(basis)
        basis.append((lm, Fraction(1), terms))
        for j in range(idx):
            m = _lcm(basis[j][0], lm)
            pending[(j, idx)] = m
            heapq.heappush(heap, (grevlex_key(m), j, idx))

    for g in G:
        r = _reduce(g.terms(), basis)
        if r:
            add(r)

    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        m = pending.pop((i, j))
        lm_i, lm_j = basis[i][0], basis[j][0]
        if all(not (x and y) for x, y in zip(lm_i, lm_j)):
            continue
        if any(
            k not in (i, j)
            and _divides(basis[k][0], m)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            continue
        processed += 1
        if processed > max_pairs or sum(m) > max_degree:
            partial = [MultiPoly(gens, b[2]) for b in basis]
            if processed > max_pairs:
                raise ResourceCapExceeded(f"more than {max_pairs} S-pairs", partial=partial)
            raise ResourceCapExceeded(f"S-pair degree {sum(m)} above {max_degree}", partial=partial)
        fi, fj = basis[i][2], basis[j][2]
        s = {}
        for terms, lm in ((fi, lm_i), (fj, lm_j)):
            shift = _sub(m, lm)
            sign = 1 if terms is fi else -1
            for e, c in terms.items():
                e2 = tuple(x + y for x, y in zip(e, shift))
                v = s.get(e2, 0) + sign * c
                if v:
                    s[e2] = v
                else:
                    s.pop(e2, None)
        r = _reduce(s, basis)
        if r:
            add(r)

    return GroebnerBasis(gens, tuple(_interreduce(gens, basis)))


def _interreduce(gens, basis):
    minimal = []
    for idx, (lm, lc, terms) in enumerate(basis):
        if any(_divides(other[0], lm) and (other[0] != lm or jdx < idx)
               for jdx, other in enumerate(basis) if jdx != idx):
            continue
        minimal.append((lm, lc, terms))
    reduced = []
    for idx, (lm, lc, terms) in enumerate(minimal):
        others = [b for jdx, b in enumerate(minimal) if jdx != idx]
        tail_terms = {e: c for e, c in terms.items() if e != lm}
        r = _reduce(tail_terms, others)
        r[lm] = Fraction(1)
        reduced.append(MultiPoly(gens, r))
    reduced.sort(key=lambda f: grevlex_key(f.leading()[0]))
    return reduced


def is_groebner(G: Sequence[MultiPoly]) -> bool:
    """Check that every S-polynomial of ``G`` reduces to zero."""
    G = [g for g in G if g]
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if normal_form(s_polynomial(G[a], G[b]), G):
                return False
    return True
