"""Characters of irreducible modules and tensor product decomposition.

Freudenthal's recursion is run on dominant weights only; Weyl orbits are
expanded when a caller needs the full weight multiset.  Tensor products use
Klimyk's formula: for each weight ``beta`` of the smaller factor, the weight
``lam + beta + rho`` is reflected into the dominant chamber and contributes
``(-1)^length`` times the multiplicity of ``beta``.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import InternalConsistencyError, NonDominantInput
from .order import enumerate_dominant_below, in_root_lattice, leq_rational
from .rootsystem import (
    RootDatum,
    Weight,
    WeightQ,
    add,
    build_root_datum,
    dominant_rep,
    dominate,
    dominate_signed,
    dual_weight,
    is_dominant,
    sub,
    to_root_basis,
    weyl_orbit,
)


def _require_dominant(*weights):
    for w in weights:
        if not is_dominant(w):
            raise NonDominantInput(f"{tuple(w)} is not dominant")


@dataclass
class WeightMultiset:
    """Weights of ``V(highest)``.  ``entries`` holds dominant weights only;
    every other weight has the multiplicity of its dominant representative."""

    datum: RootDatum
    highest: Weight
    entries: dict[Weight, int]

    def multiplicity(self, beta: WeightQ) -> int:
        return self.entries.get(dominate(self.datum, beta)[0], 0)

    def expand(self) -> Iterator[tuple[Weight, int]]:
        for dom, m in self.entries.items():
            for w in weyl_orbit(self.datum, dom):
                yield w, m

    def support(self) -> set[Weight]:
        return {w for w, _ in self.expand()}

    @property
    def total(self) -> int:
        return sum(m * len(weyl_orbit(self.datum, dom)) for dom, m in self.entries.items())


@dataclass
class IrrDecomposition:
    """``V(lam) (x) V(mu) = sum entries[nu] V(nu)``."""

    datum: RootDatum
    entries: dict[Weight, int] = field(default_factory=dict)

    def mult(self, nu: Weight) -> int:
        return self.entries.get(tuple(nu), 0)

    def dimension(self) -> int:
        return sum(m * weyl_dim(self.datum, nu) for nu, m in self.entries.items())

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return (isinstance(other, IrrDecomposition) and self.datum == other.datum
                and self.entries == other.entries)


def weyl_dim(datum: RootDatum, lam: Weight) -> int:
    _require_dominant(lam)
    num = den = 1
    for cv in datum.coroots:
        h = sum(cv)
        num *= h + sum(c * x for c, x in zip(cv, lam))
        den *= h
    q, rem = divmod(num, den)
    if rem:
        raise InternalConsistencyError(f"Weyl dimension of {lam} is not an integer")
    return q


@lru_cache(maxsize=64)
def freudenthal_multiplicities(datum: RootDatum, lam: Weight,
                               cap: int | None = None) -> WeightMultiset:
    """Dominant weight multiplicities of ``V(lam)`` by Freudenthal's formula."""
    lam = tuple(lam)
    _require_dominant(lam)
    r = datum.rank
    cartan = datum.cartan
    gram = datum.gram
    dominant = enumerate_dominant_below(datum, lam, cap)
    depth = {mu: sum(to_root_basis(datum, sub(lam, mu))) for mu in dominant}
    dominant.sort(key=lambda mu: (depth[mu], mu))

    def norm(v):
        return sum(v[i] * gram[i][j] * v[j] for i in range(r) for j in range(r))

    # (x, alpha) = x . galpha
    roots = [(a, tuple(sum(gram[i][j] * a[j] for j in range(r)) for i in range(r)))
             for a in datum.positive_roots_fund]
    top = norm(add(lam, datum.rho))
    mult = {lam: 1}
    dom_cache: dict[tuple, tuple] = {}
    for mu in dominant[1:]:
        s = 0
        for a, ga in roots:
            nu = [x + y for x, y in zip(mu, a)]
            while True:
                key = tuple(nu)
                d = dom_cache.get(key)
                if d is None:
                    d = dom_cache[key] = dominant_rep(cartan, key)
                m = mult.get(d)
                if m is None:
                    break
                s += m * sum(x * y for x, y in zip(nu, ga))
                for k in range(r):
                    nu[k] += a[k]
        den = top - norm(add(mu, datum.rho))
        q, rem = divmod(2 * s, den)
        if rem or q <= 0:
            raise InternalConsistencyError(f"Freudenthal gave {2 * s}/{den} at {mu}")
        mult[mu] = q
    return WeightMultiset(datum, lam, mult)


def hull_membership(datum: RootDatum, lam_top: Weight, beta: WeightQ) -> bool:
    """``beta`` lies in the convex hull of the Weyl orbit of ``lam_top``."""
    _require_dominant(lam_top)
    return leq_rational(datum, dominate(datum, beta)[0], lam_top)


def weight_of_v_rho(datum: RootDatum, beta: WeightQ) -> bool:
    """Membership of ``beta`` in ``(rho + Q) & H_rho`` (lattice and hull test)."""
    return in_root_lattice(datum, sub(beta, datum.rho)) and hull_membership(datum, datum.rho, beta)


def _klimyk_shard(cartan, rho, shift, items) -> dict:
    acc: dict[tuple, int] = defaultdict(int)
    r = len(rho)
    for orbit, m in items:
        for beta in orbit:
            res = dominate_signed(cartan, [shift[k] + beta[k] for k in range(r)])
            if res is None:
                continue
            d, n = res
            acc[tuple(x - 1 for x in d)] += -m if n & 1 else m
    return acc


def _shard_worker(spec, shift, doms):
    datum = build_root_datum(spec)
    items = [(weyl_orbit(datum, d), m) for d, m in doms]
    return dict(_klimyk_shard(datum.cartan, datum.rho, shift, items))


@lru_cache(maxsize=32)
def tensor_decompose(datum: RootDatum, lam: Weight, mu: Weight,
                     threads: int = 1) -> IrrDecomposition:
    """Decompose ``V(lam) (x) V(mu)`` into irreducibles (Klimyk's formula).

    The sum runs over the weights of whichever factor has the smaller Weyl
    dimension.  ``threads > 1`` splits that sum across worker processes.
    """
    lam, mu = tuple(lam), tuple(mu)
    _require_dominant(lam, mu)
    if weyl_dim(datum, lam) < weyl_dim(datum, mu):
        lam, mu = mu, lam
    chars = freudenthal_multiplicities(datum, mu)
    shift = add(lam, datum.rho)
    doms = sorted(chars.entries.items())
    if threads > 1 and len(doms) > 1:
        shards = [doms[k::threads] for k in range(threads)]
        acc: dict[tuple, int] = defaultdict(int)
        with ProcessPoolExecutor(threads) as pool:
            parts = pool.map(_shard_worker, [datum.spec] * threads, [shift] * threads, shards)
            for part in parts:
                for k, v in part.items():
                    acc[k] += v
    else:
        items = [(weyl_orbit(datum, d), m) for d, m in doms]
        acc = _klimyk_shard(datum.cartan, datum.rho, shift, items)
    entries = {}
    for nu in sorted(acc):
        m = acc[nu]
        if m < 0:
            raise InternalConsistencyError(f"negative multiplicity {m} at {nu}")
        if m:
            entries[nu] = m
    return IrrDecomposition(datum, entries)


def tensor_multiplicity(datum: RootDatum, lam: Weight, mu: Weight, nu: Weight) -> int:
    _require_dominant(nu)
    return tensor_decompose(datum, tuple(lam), tuple(mu)).mult(nu)


def invariant_dim_triple(datum: RootDatum, lam: Weight, mu: Weight, nu: Weight) -> int:
    """Dimension of the invariants in ``V(lam) (x) V(mu) (x) V(nu)``."""
    return tensor_multiplicity(datum, lam, mu, dual_weight(datum, tuple(nu)))

