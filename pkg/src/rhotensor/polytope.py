"""The polytope ``A & C`` of dominant weights below ``2 rho`` and its vertices.

``A`` is the dominant cone, ``B`` the cone spanned by the negative simple roots
and ``C = 2 rho + B``.  For a subset ``J`` of nodes, ``A_J`` is spanned by the
fundamental weights in ``J``, ``B_J`` by ``-alpha_j`` for ``j`` in ``J`` and
``C_J = 2 rho + B_J``.  ``b_J`` is the sum of the positive roots supported on
``J`` and ``c_J = 2 rho - b_J``.

Subsets are frozensets of 1-based node labels and are always visited in
increasing bitmask order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import InternalConsistencyError, PreconditionViolated, ResourceLimit
from .lp import check_farkas, check_solution, solve_lp
from .order import leq_rational, leq_root_order
from .reps import freudenthal_multiplicities, weight_of_v_rho
from .rootsystem import (
    RootDatum,
    Weight,
    WeightQ,
    apply_word,
    from_root_basis,
    is_dominant,
    longest_element,
    scale,
    sub,
    to_root_basis,
)

Subset = frozenset

DEFAULT_RANK_CAP = 6


def subset_from_mask(mask: int) -> Subset:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def mask_of(J: Iterable[int]) -> int:
    return sum(1 << (j - 1) for j in J)


def subsets(datum: RootDatum) -> Iterator[Subset]:
    for mask in range(1 << datum.rank):
        yield subset_from_mask(mask)


def fmt_subset(J) -> str:
    return "{" + ",".join(map(str, sorted(J))) + "}"


def _check_rank(datum, cap):
    cap = DEFAULT_RANK_CAP if cap is None else cap
    if datum.rank > cap:
        raise ResourceLimit(f"rank {datum.rank} exceeds cap {cap} (2^r subsets)")


def b_of_J(datum: RootDatum, J: Iterable[int]) -> Weight:
    """Sum of the positive roots supported on ``J`` (fundamental basis)."""
    J = set(J)
    r = datum.rank
    total = [0] * r
    for root in datum.positive_roots:
        if all(root[k] == 0 or (k + 1) in J for k in range(r)):
            for k in range(r):
                total[k] += root[k]
    return from_root_basis(datum, total)


def vertex_c(datum: RootDatum, J: Iterable[int]) -> Weight:
    return sub(scale(2, datum.rho), b_of_J(datum, J))


def project_pi_J(datum: RootDatum, w: WeightQ, J: Iterable[int]) -> WeightQ:
    """Projection onto the span of ``omega_j`` (j in J) along the others."""
    J = set(J)
    return tuple(x if (k + 1) in J else 0 * x for k, x in enumerate(w))


def in_A(w: WeightQ, J: Iterable[int]) -> bool:
    """``w`` in ``A_J``: non-negative, supported on ``J``."""
    J = set(J)
    return all(x >= 0 if (k + 1) in J else x == 0 for k, x in enumerate(w))


def in_C(datum: RootDatum, w: WeightQ, K: Iterable[int]) -> bool:
    """``w`` in ``C_K``: ``2 rho - w`` is a non-negative combination of
    ``alpha_k``, k in K."""
    K = set(K)
    c = to_root_basis(datum, sub(scale(2, datum.rho), w))
    return all(x >= 0 if (k + 1) in K else x == 0 for k, x in enumerate(c))


def _intersection_lp(datum: RootDatum, H, K):
    """Constraints of ``A_{I minus H} & C_K`` in the variables ``t_k`` (k in K)
    followed by slacks ``y_j`` (j not in H), where ``y = 2 rho - sum t_k alpha_k``."""
    r = datum.rank
    Ks = sorted(K)
    free = [j for j in range(1, r + 1) if j not in H]
    A = []
    for j in range(1, r + 1):
        row = [Fraction(datum.cartan[k - 1][j - 1]) for k in Ks]
        row += [Fraction(int(j == f)) for f in free]
        A.append(row)
    b = [Fraction(2)] * r
    return A, b, len(Ks)


@dataclass
class SubsetRecord:
    J: Subset
    b: Weight
    c: Weight
    b_shape: bool
    c_in_face: bool
    single_point: bool

    @property
    def passed(self) -> bool:
        return self.b_shape and self.c_in_face and self.single_point


@dataclass
class VertexReport:
    datum: RootDatum
    records: list[SubsetRecord] = field(default_factory=list)
    endpoints: bool = False
    distinct: bool = False
    empty_pairs: int = 0
    empty_failures: list = field(default_factory=list)
    witness_pairs: int = 0
    witness_failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.endpoints and self.distinct and all(r.passed for r in self.records)
                and not self.empty_failures and not self.witness_failures)

    def vertices(self) -> list[Weight]:
        return [rec.c for rec in self.records]


def lemma7_check(datum: RootDatum, rank_cap: int | None = None) -> VertexReport:
    """Verify that ``A_{I minus J} & C_J = {c_J}`` for every ``J`` and that no
    other intersection ``A_{I minus H} & C_K`` is a single point."""
    _check_rank(datum, rank_cap)
    r = datum.rank
    I = frozenset(range(1, r + 1))
    report = VertexReport(datum)
    cs = {}
    for J in subsets(datum):
        b = b_of_J(datum, J)
        c = vertex_c(datum, J)
        cs[J] = c
        shape = all(b[k] == 2 if (k + 1) in J else b[k] <= 0 for k in range(r))
        in_face = in_A(c, I - J) and in_C(datum, c, J)
        report.records.append(SubsetRecord(J, b, c, shape, in_face, _single_point(datum, J)))
    two_rho = scale(2, datum.rho)
    report.endpoints = cs[frozenset()] == two_rho and cs[I] == (0,) * r
    report.distinct = len(set(cs.values())) == len(cs)

    for H in subsets(datum):
        for K in subsets(datum):
            if not H <= K:
                report.empty_pairs += 1
                A, b, _ = _intersection_lp(datum, H, K)
                res = solve_lp(A, b)
                if res.feasible or not check_farkas(A, b, res.farkas):
                    report.empty_failures.append((H, K))
            elif H != K:
                report.witness_pairs += 1
                ok = all(in_A(cs[X], I - H) and in_C(datum, cs[X], K) for X in (H, K))
                if not ok or cs[H] == cs[K]:
                    report.witness_failures.append((H, K))
    return report


def _single_point(datum: RootDatum, J) -> bool:
    """Every coordinate ``t_k`` is pinned: min and max agree over the face."""
    A, b, nt = _intersection_lp(datum, J, J)
    n = len(A[0])
    for k in range(nt):
        lo = solve_lp(A, b, [int(j == k) for j in range(n)])
        hi = solve_lp(A, b, [-int(j == k) for j in range(n)])
        if lo.status != "optimal" or hi.status != "optimal" or lo.value != -hi.value:
            return False
        if not check_solution(A, b, lo.x):
            return False
    if nt == 0:
        return solve_lp(A, b).feasible
    return True


def corollary8_membership(datum: RootDatum, lam: WeightQ, rank_cap: int | None = None) -> bool:
    """``lam`` is a convex combination of the points ``c_J``."""
    _check_rank(datum, rank_cap)
    verts = [vertex_c(datum, J) for J in subsets(datum)]
    r = datum.rank
    A = [[Fraction(v[j]) for v in verts] for j in range(r)]
    A.append([Fraction(1)] * len(verts))
    b = [Fraction(x) for x in lam] + [Fraction(1)]
    res = solve_lp(A, b)
    if res.feasible and not check_solution(A, b, res.x):
        raise InternalConsistencyError("LP returned an invalid convex combination")
    if not res.feasible and not check_farkas(A, b, res.farkas):
        raise InternalConsistencyError("LP returned an invalid Farkas certificate")
    return res.feasible


def in_polytope_by_definition(datum: RootDatum, lam: WeightQ) -> bool:
    """``lam`` dominant and ``2 rho - lam`` in the rational cone of positive roots."""
    return is_dominant(lam) and leq_rational(datum, lam, scale(2, datum.rho))


def bounding_box(datum: RootDatum, margin: int = 1) -> Iterator[Weight]:
    """Lattice points of the coordinate box around the vertices ``c_J``,
    widened by ``margin`` on each side."""
    verts = [vertex_c(datum, J) for J in subsets(datum)]
    ranges = [range(min(v[k] for v in verts) - margin, max(v[k] for v in verts) + margin + 1)
              for k in range(datum.rank)]
    return itertools.product(*ranges)


def prop9_decompose(datum: RootDatum, lam: Weight, freudenthal_rank_cap: int = 4) -> Weight:
    """Write a dominant ``lam <= 2 rho`` as ``rho + beta`` with ``beta`` a weight
    of ``V(rho)``, certified by the lattice/hull test and, up to the rank cap,
    by the Freudenthal character of ``V(rho)``."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise PreconditionViolated(f"{lam} is not dominant")
    if not leq_root_order(datum, lam, scale(2, datum.rho)):
        raise PreconditionViolated(f"{lam} is not <= 2 rho")
    beta = sub(lam, datum.rho)
    by_hull = weight_of_v_rho(datum, beta)
    if datum.rank <= freudenthal_rank_cap:
        by_char = freudenthal_multiplicities(datum, datum.rho).multiplicity(beta) > 0
        if by_char != by_hull:
            raise InternalConsistencyError(
                f"oracles disagree on {beta}: hull={by_hull}, character={by_char}")
    if not by_hull:
        raise InternalConsistencyError(f"{beta} = {lam} - rho is not a weight of V(rho)")
    return beta


def rho_shift_identity(datum: RootDatum, J: Iterable[int]) -> bool:
    """``c_J - rho == w_o^J(rho)``."""
    return sub(vertex_c(datum, J), datum.rho) == apply_word(datum, longest_element(datum, J), datum.rho)


def pi_injective_on_B(datum: RootDatum, J: Iterable[int], max_coeff: int = 3) -> bool:
    """``pi_J`` separates the points ``-sum t_j alpha_j`` with ``0 <= t_j <= max_coeff``."""
    Js = sorted(J)
    seen = {}
    for coeffs in itertools.product(range(max_coeff + 1), repeat=len(Js)):
        c = [0] * datum.rank
        for j, t in zip(Js, coeffs):
            c[j - 1] = -t
        img = project_pi_J(datum, from_root_basis(datum, c), Js)
        if img in seen:
            return False
        seen[img] = coeffs
    return True

