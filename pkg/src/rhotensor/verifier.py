"""Named verification campaigns with machine-readable verdicts."""

from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass, field
from typing import Any

from .errors import PreconditionViolated, ResourceLimit
from .order import enumerate_dominant_below, in_root_lattice, leq_root_order
from .reps import invariant_dim_triple, tensor_decompose, weyl_dim
from .rootsystem import RootDatum, RootSystemSpec, add, scale


@dataclass(frozen=True)
class SaturationEntry:
    family: str
    ranks: str
    factor: int
    note: str


SATURATION_TABLE = (
    SaturationEntry("A", "r>=1", 1, "Knutson-Tao"),
    SaturationEntry("B", "r>=2", 2, "Belkale-Kumar, Sam"),
    SaturationEntry("C", "r>=2", 2, "Belkale-Kumar, Sam; Hong-Shen"),
    SaturationEntry("D", "r>=4", 4, "Sam"),
    SaturationEntry("G", "2", 2, "Kapovich-Millson; any d>=2 works"),
    SaturationEntry("F", "4", 144, "Kapovich-Millson"),
    SaturationEntry("E", "6", 36, "Kapovich-Millson"),
    SaturationEntry("E", "7", 144, "Kapovich-Millson"),
    SaturationEntry("E", "8", 3600, "Kapovich-Millson"),
)


def saturation_entry(spec: RootSystemSpec) -> SaturationEntry:
    for e in SATURATION_TABLE:
        if e.family == spec.family and (e.family != "E" or int(e.ranks) == spec.rank):
            return e
    raise ValueError(f"no saturation factor recorded for {spec}")


def saturation_factor(spec: RootSystemSpec) -> int:
    return saturation_entry(spec).factor


@dataclass
class CaseResult:
    case: Any
    expected: Any
    observed: Any
    passed: bool


@dataclass
class VerdictReport:
    campaign: str
    spec: str
    cases: list[CaseResult] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def failures(self) -> int:
        return sum(not c.passed for c in self.cases)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def add(self, case, expected, observed, passed: bool):
        self.cases.append(CaseResult(case, expected, observed, bool(passed)))

    def to_dict(self) -> dict:
        return {
            "campaign": self.campaign,
            "spec": self.spec,
            "cases": [asdict(c) for c in self.cases],
            "extra": self.extra,
            "totals": {"cases": len(self.cases), "failures": self.failures},
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
        }


HEAVY_FAMILIES = "E"


def require_not_heavy(datum: RootDatum, allow_heavy: bool):
    if datum.spec.family in HEAVY_FAMILIES and not allow_heavy:
        raise ResourceLimit(
            f"{datum.spec} campaigns are refused by default: the saturation factor "
            f"{saturation_factor(datum.spec)} makes V(d rho) far too large; pass allow_heavy "
            "to try anyway")


def kostant_check(datum: RootDatum, d: int = 1, allow_heavy: bool = False,
                  threads: int = 1) -> VerdictReport:
    """Every dominant ``lam <= 2 rho`` has ``V(d lam)`` inside
    ``V(d rho) (x) V(d rho)``; for ``d = 1`` also every component is ``<= 2 rho``."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    require_not_heavy(datum, allow_heavy)
    t0 = time.perf_counter()
    rep = VerdictReport("kostant", str(datum.spec))
    drho = scale(d, datum.rho)
    delta = tensor_decompose(datum, drho, drho, threads)
    two_rho = scale(2, datum.rho)
    lams = enumerate_dominant_below(datum, two_rho)
    for lam in lams:
        m = delta.mult(scale(d, lam))
        rep.add(list(lam), ">=1", m, m >= 1)
    if d == 1:
        for nu in delta.entries:
            rep.add({"component": list(nu)}, "<= 2rho", leq_root_order(datum, nu, two_rho),
                    leq_root_order(datum, nu, two_rho))
    rep.extra = {
        "d": d,
        "weights_below_2rho": len(lams),
        "components": len(delta),
        "multiplicities": [{"weight": list(nu), "mult": m} for nu, m in delta.entries.items()]
        if d == 1 else [],
        "dimension_check": delta.dimension() == weyl_dim(datum, drho) ** 2,
    }
    if not rep.extra["dimension_check"]:
        rep.add("dimension", weyl_dim(datum, drho) ** 2, delta.dimension(), False)
    rep.wall_time = time.perf_counter() - t0
    return rep


def exterior_dim_check(datum: RootDatum) -> VerdictReport:
    """``2^r (dim V(rho))^2 == 2^{dim g}``."""
    t0 = time.perf_counter()
    rep = VerdictReport("dims", str(datum.spec))
    dv = weyl_dim(datum, datum.rho)
    lhs = 2 ** datum.rank * dv * dv
    rhs = 2 ** datum.dim_g
    rep.add("2^r dim(V(rho))^2 == 2^dim(g)", str(rhs), str(lhs), lhs == rhs)
    rep.extra = {"rank": datum.rank, "dim_g": datum.dim_g, "dim_v_rho": str(dv)}
    rep.wall_time = time.perf_counter() - t0
    return rep


def conjecture4_probe(datum: RootDatum, height_cap: int, scales=(2, 3),
                      allow_heavy: bool = False) -> VerdictReport:
    """Search small dominant triples for failures of saturation with ``d = 1``.

    A candidate is a triple with ``lam + mu + nu`` in the root lattice, no
    invariants at scale 1 but invariants at one of ``scales``.  Findings are
    reported, never asserted: every case "passes" and the candidates are
    listed in ``extra``.
    """
    if not datum.spec.simply_laced:
        raise PreconditionViolated(f"{datum.spec} is not simply laced")
    require_not_heavy(datum, allow_heavy)
    t0 = time.perf_counter()
    rep = VerdictReport("probe-saturation", str(datum.spec))
    box = [w for w in itertools.product(range(height_cap + 1), repeat=datum.rank)]
    candidates = []
    scanned = 0
    for lam, mu, nu in itertools.combinations_with_replacement(box, 3):
        if not in_root_lattice(datum, add(add(lam, mu), nu)):
            continue
        scanned += 1
        if invariant_dim_triple(datum, lam, mu, nu) > 0:
            continue
        for N in scales:
            if invariant_dim_triple(datum, scale(N, lam), scale(N, mu), scale(N, nu)) > 0:
                candidates.append({"triple": [list(lam), list(mu), list(nu)], "scale": N})
                break
    rep.add({"height_cap": height_cap, "scales": list(scales)}, "report only",
            len(candidates), True)
    rep.extra = {"triples_scanned": scanned, "candidates": candidates}
    rep.wall_time = time.perf_counter() - t0
    return rep
