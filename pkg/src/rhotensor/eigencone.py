"""Maximal parabolics, minimal coset representatives and the inequality chain
used to place ``(rho, rho, lam*)`` in the saturated tensor semigroup.

``x_P`` is never materialised: evaluating a weight at ``x_P`` is reading off its
simple-root coordinate at the node ``i_P`` (see :func:`eval_coweight`).
Weyl elements are handled as reduced words and compared through their action
on ``rho``, which is regular, so that action is injective.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionViolated, ResourceLimit
from .order import enumerate_dominant_below, leq_root_order
from .rootsystem import (
    RootDatum,
    Weight,
    WeightQ,
    WeylWord,
    add,
    apply_word,
    dominate,
    dual_weight,
    eval_coweight,
    from_root_basis,
    inverse_word,
    is_dominant,
    longest_element,
    reduce_word,
    scale,
    sub,
    to_root_basis,
    weyl_orbit,
)

DEFAULT_RANK_CAP = 6


@dataclass(frozen=True)
class MaximalParabolic:
    datum: RootDatum
    node: int
    levi: frozenset
    rho_levi: tuple  # rational weight
    w_o_levi: WeylWord

    def __str__(self):
        return f"P{self.node}"


@lru_cache(maxsize=None)
def maximal_parabolic(datum: RootDatum, node: int) -> MaximalParabolic:
    if not 1 <= node <= datum.rank:
        raise ValueError(f"node {node} out of range")
    levi = frozenset(range(1, datum.rank + 1)) - {node}
    total = [0] * datum.rank
    for root in datum.positive_roots:
        if root[node - 1] == 0:
            total = [t + x for t, x in zip(total, root)]
    rho_l = tuple(Fraction(x, 2) for x in from_root_basis(datum, total))
    P = MaximalParabolic(datum, node, levi, rho_l, longest_element(datum, levi))
    return P


def check_parabolic(P: MaximalParabolic) -> bool:
    """``rho^L(x_P) = 0`` and ``w_o^P`` fixes ``x_P``.  The latter is tested on
    every fundamental weight: ``(w_o^P omega_i)(x_P) = omega_i(x_P)``."""
    d = P.datum
    if eval_coweight(d, P.rho_levi, P.node) != 0:
        return False
    for i in range(d.rank):
        om = tuple(int(i == k) for k in range(d.rank))
        # (w nu)(x) = nu(w^{-1} x); w_o^P is an involution
        if eval_coweight(d, apply_word(d, P.w_o_levi, om), P.node) != eval_coweight(d, om, P.node):
            return False
    return True


def fundamental_weight(datum: RootDatum, i: int) -> Weight:
    return tuple(int(i == k + 1) for k in range(datum.rank))


@lru_cache(maxsize=None)
def minimal_coset_reps(datum: RootDatum, P: MaximalParabolic | int,
                       rank_cap: int = DEFAULT_RANK_CAP) -> tuple[WeylWord, ...]:
    """Reduced words of the minimal length representatives of ``W / W_L``.

    They are in bijection with the orbit of ``omega_P``: for each orbit point
    ``mu``, :func:`dominate` yields a reduced ``u`` with ``u mu = omega_P`` and
    ``u^{-1}`` is the shortest element carrying ``omega_P`` to ``mu``.
    """
    if isinstance(P, int):
        P = maximal_parabolic(datum, P)
    if datum.rank > rank_cap:
        raise ResourceLimit(f"rank {datum.rank} exceeds cap {rank_cap}")
    om = fundamental_weight(datum, P.node)
    reps = {}
    for mu in weyl_orbit(datum, om):
        _, u = dominate(datum, mu)
        w = inverse_word(u)
        key = apply_word(datum, w, datum.rho)
        reps[key] = w
    words = sorted(reps.values(), key=lambda w: (len(w), w))
    for w in words:
        for j in P.levi:
            img = apply_word(datum, w, datum.cartan[j - 1])
            if any(c < 0 for c in to_root_basis(datum, img)):
                raise AssertionError(f"{w} sends alpha_{j} to a negative root")
    return tuple(words)


def chi(datum: RootDatum, P: MaximalParabolic, w: WeylWord) -> WeightQ:
    """``chi_w = rho - 2 rho^L + w^{-1} rho``."""
    winv_rho = apply_word(datum, inverse_word(w), datum.rho)
    return add(sub(datum.rho, scale(2, P.rho_levi)), winv_rho)


def _winv_rho_at_xp(datum, P, w) -> Fraction:
    return eval_coweight(datum, apply_word(datum, inverse_word(w), datum.rho), P.node)


def twisted(datum: RootDatum, P: MaximalParabolic, w: WeylWord) -> WeylWord:
    """Reduced word for ``w_o w w_o^P``."""
    return reduce_word(datum, longest_element(datum) + tuple(w) + P.w_o_levi)


def eq4_identity_check(datum: RootDatum, P: MaximalParabolic, u: WeylWord,
                       v: WeylWord, w: WeylWord) -> bool:
    """``(chi_{w_o w w_o^P} - chi_u - chi_v)(x_P)
    == (-rho - u^{-1} rho - v^{-1} rho - w^{-1} rho)(x_P)``."""
    node = P.node
    lhs = sub(sub(chi(datum, P, twisted(datum, P, w)), chi(datum, P, u)), chi(datum, P, v))
    rhs = (-eval_coweight(datum, datum.rho, node) - _winv_rho_at_xp(datum, P, u)
           - _winv_rho_at_xp(datum, P, v) - _winv_rho_at_xp(datum, P, w))
    return eval_coweight(datum, lhs, node) == rhs


@dataclass
class _ParabolicTable:
    """Per-element values at ``x_P`` so triple sweeps are O(1) per triple."""

    chi_at: list[Fraction]
    chi_twisted_at: list[Fraction]
    winv_rho_at: list[Fraction]
    rho_at: Fraction


def parabolic_table(datum: RootDatum, P: MaximalParabolic) -> _ParabolicTable:
    reps = minimal_coset_reps(datum, P)
    node = P.node
    return _ParabolicTable(
        chi_at=[eval_coweight(datum, chi(datum, P, w), node) for w in reps],
        chi_twisted_at=[eval_coweight(datum, chi(datum, P, twisted(datum, P, w)), node)
                        for w in reps],
        winv_rho_at=[_winv_rho_at_xp(datum, P, w) for w in reps],
        rho_at=eval_coweight(datum, datum.rho, node),
    )


def eq4_triple_holds(tab: _ParabolicTable, iu: int, iv: int, iw: int) -> bool:
    lhs = tab.chi_twisted_at[iw] - tab.chi_at[iu] - tab.chi_at[iv]
    rhs = -tab.rho_at - tab.winv_rho_at[iu] - tab.winv_rho_at[iv] - tab.winv_rho_at[iw]
    return lhs == rhs


def ineq3_check(datum: RootDatum, P: MaximalParabolic, u: WeylWord, v: WeylWord,
                w: WeylWord) -> Fraction:
    """The value ``(rho + u^{-1} rho + v^{-1} rho + w^{-1} rho)(x_P)``.  No sign
    is asserted: the cup-product hypothesis under which it is non-positive is
    not computed here."""
    return (eval_coweight(datum, datum.rho, P.node) + _winv_rho_at_xp(datum, P, u)
            + _winv_rho_at_xp(datum, P, v) + _winv_rho_at_xp(datum, P, w))


@dataclass
class IneqViolation:
    lam: Weight
    node: int
    word: WeylWord
    lhs: Fraction
    rhs: Fraction


@dataclass
class Ineq5Report:
    datum: RootDatum
    checked: int = 0
    violations: list[IneqViolation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def ineq5_check(datum: RootDatum, lam: Weight, report: Ineq5Report | None = None) -> Ineq5Report:
    """For every maximal ``P`` and ``w`` in ``W^P`` test
    ``(w^{-1} lam*)(x_P) <= (rho + w^{-1} rho)(x_P)``."""
    lam = tuple(lam)
    if not is_dominant(lam) or not leq_root_order(datum, lam, scale(2, datum.rho)):
        raise PreconditionViolated(f"{lam} must be dominant and <= 2 rho")
    report = report if report is not None else Ineq5Report(datum)
    dual = dual_weight(datum, lam)
    for node in range(1, datum.rank + 1):
        P = maximal_parabolic(datum, node)
        rho_at = eval_coweight(datum, datum.rho, node)
        for w in minimal_coset_reps(datum, P):
            winv = inverse_word(w)
            lhs = eval_coweight(datum, apply_word(datum, winv, dual), node)
            rhs = rho_at + eval_coweight(datum, apply_word(datum, winv, datum.rho), node)
            report.checked += 1
            if lhs > rhs:
                report.violations.append(IneqViolation(lam, node, w, lhs, rhs))
    return report


def ineq5_sweep(datum: RootDatum) -> Ineq5Report:
    """:func:`ineq5_check` for every dominant ``lam <= 2 rho``."""
    report = Ineq5Report(datum)
    for lam in enumerate_dominant_below(datum, scale(2, datum.rho)):
        ineq5_check(datum, lam, report)
    return report
