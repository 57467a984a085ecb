"""Exact rank of sparse rational vectors."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping


def rational_rank(vectors: Iterable[Mapping[Hashable, int | Fraction]]) -> int:
    """Rank over Q of vectors given as ``{coordinate: coefficient}`` maps.

    Forward elimination against an echelon basis keyed by pivot coordinate;
    coordinates are ordered by first appearance.
    """
    order: dict[Hashable, int] = {}
    basis: dict[int, dict[int, Fraction]] = {}
    for vec in vectors:
        v = {}
        for k, c in vec.items():
            if c:
                v[order.setdefault(k, len(order))] = Fraction(c)
        while v:
            p = min(v)
            row = basis.get(p)
            if row is None:
                lead = v[p]
                basis[p] = {k: c / lead for k, c in v.items()}
                break
            f = v[p]
            for k, c in row.items():
                nc = v.get(k, 0) - f * c
                if nc:
                    v[k] = nc
                else:
                    v.pop(k, None)
    return len(basis)
