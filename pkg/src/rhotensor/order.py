"""Dominance (Bruhat-Chevalley) order on weights and root-lattice tests."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import NonDominantInput, ResourceLimit
from .rootsystem import RootDatum, Weight, WeightQ, is_dominant, sub, to_root_basis

DEFAULT_MAX_LATTICE_POINTS = 10**7


def max_lattice_points() -> int:
    return int(os.environ.get("RHOTENSOR_MAX_LATTICE_POINTS", DEFAULT_MAX_LATTICE_POINTS))


@dataclass(frozen=True)
class DominantCone:
    """The cone of dominant weights of ``datum``."""

    datum: RootDatum

    def __contains__(self, w) -> bool:
        return len(w) == self.datum.rank and is_dominant(w)


def in_root_lattice(datum: RootDatum, lam: WeightQ) -> bool:
    return all(c.denominator == 1 for c in to_root_basis(datum, lam))


def leq_root_order(datum: RootDatum, lam: WeightQ, mu: WeightQ) -> bool:
    """``lam <= mu``: ``mu - lam`` is a non-negative integer sum of simple roots."""
    return all(c >= 0 and c.denominator == 1 for c in to_root_basis(datum, sub(mu, lam)))


def leq_rational(datum: RootDatum, lam: WeightQ, mu: WeightQ) -> bool:
    """``mu - lam`` lies in the rational cone spanned by the simple roots."""
    return all(c >= 0 for c in to_root_basis(datum, sub(mu, lam)))


def enumerate_dominant_below(datum: RootDatum, mu: Weight,
                             cap: int | None = None) -> list[Weight]:
    """All dominant ``lam <= mu``, sorted lexicographically.

    Breadth-first subtraction of simple roots from ``mu``.  A dominant weight
    has non-negative root coordinates, so the number of times ``alpha_i`` can
    be subtracted is at most ``floor`` of the i-th root coordinate of ``mu``;
    the search is confined to that box.
    """
    if not is_dominant(mu):
        raise NonDominantInput(f"{mu} is not dominant")
    cap = max_lattice_points() if cap is None else cap
    r = datum.rank
    bound = tuple(math.floor(c) for c in to_root_basis(datum, mu))
    box = math.prod(b + 1 for b in bound)
    if box > cap:
        raise ResourceLimit(f"{box} lattice points below {mu} exceed cap {cap}")
    cartan = datum.cartan
    start = (tuple(mu), (0,) * r)
    visited = {start[1]}
    frontier = [start]
    found = []
    while frontier:
        nxt = []
        for w, c in frontier:
            if all(x >= 0 for x in w):
                found.append(w)
            for i in range(r):
                if c[i] >= bound[i]:
                    continue
                ci = c[:i] + (c[i] + 1,) + c[i + 1:]
                if ci in visited:
                    continue
                visited.add(ci)
                row = cartan[i]
                nxt.append((tuple(x - a for x, a in zip(w, row)), ci))
        frontier = nxt
    return sorted(found)
