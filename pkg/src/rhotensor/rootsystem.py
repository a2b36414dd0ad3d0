"""Root data for the simple Lie algebras and the Weyl group action on weights.

Conventions
-----------
* Nodes are numbered 1..r following Bourbaki.
* Weights are tuples in the fundamental-weight basis.  Integer tuples are
  integral weights; tuples holding :class:`fractions.Fraction` are rational
  weights.  Every function here accepts either.
* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` of the Cartan matrix
  is the simple root ``alpha_i`` written in the fundamental basis.
* A Weyl word ``(i1, ..., ik)`` denotes ``s_i1 s_i2 ... s_ik``; it acts on the
  left, so ``s_ik`` is applied first.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidSpec, NonDominantInput

Weight = tuple[int, ...]
WeightQ = tuple  # tuple of int | Fraction
WeylWord = tuple[int, ...]

FAMILIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class RootSystemSpec:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in FAMILIES or not isinstance(r, int):
            raise InvalidSpec(f"unknown type {f}{r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[f]
        if not ok:
            raise InvalidSpec(f"rank {r} is not valid for family {f}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"


def parse_spec(text: str) -> RootSystemSpec:
    """Parse ``"B3"``, ``"e8"``, ``"A 2"`` into a :class:`RootSystemSpec`."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text or "")
    if not m:
        raise InvalidSpec(f"cannot parse Lie type {text!r}")
    return RootSystemSpec(m.group(1).upper(), int(m.group(2)))


def cartan_matrix(spec: RootSystemSpec) -> tuple[tuple[int, ...], ...]:
    f, r = spec.family, spec.rank
    m = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i, j, a=-1, b=-1):
        # i, j are 1-based; m[i][j] = <alpha_i, alpha_j^vee>
        m[i - 1][j - 1] = a
        m[j - 1][i - 1] = b

    if f in "ABCD":
        chain = r if f != "D" else r - 1
        for i in range(1, chain):
            link(i, i + 1)
        if f == "B":
            link(r - 1, r, -2, -1)  # alpha_r short
        elif f == "C":
            link(r - 1, r, -1, -2)  # alpha_r long
        elif f == "D":
            link(r - 2, r)
    elif f == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, r):
            link(i, i + 1)
    elif f == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif f == "G":
        link(1, 2, -1, -3)  # alpha_1 short
    return tuple(tuple(row) for row in m)


def _invert(mat: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def _symmetrizer(cartan) -> tuple[int, ...]:
    """Half squared root lengths d_i with the short roots normalised to 1."""
    r = len(cartan)
    d: list[Fraction | None] = [None] * r
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(r):
            if cartan[i][j] and d[j] is None:
                # (alpha_i, alpha_j) = cartan[i][j] d_j = cartan[j][i] d_i
                d[j] = Fraction(cartan[j][i]) * d[i] / cartan[i][j]
                todo.append(j)
    lo = min(d)
    return tuple(int(x / lo) for x in d)


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Immutable description of a simple root system.

    ``positive_roots`` are in simple-root coordinates; ``positive_roots_fund``
    hold the same roots in the fundamental basis and ``coroots`` the matching
    coroots in simple-coroot coordinates, so ``<lam, beta^vee>`` is a dot
    product with ``lam``.
    """

    spec: RootSystemSpec
    cartan: tuple[tuple[int, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    rho: Weight
    num_positive_roots: int
    dim_g: int
    root_lengths: tuple[int, ...] = field(repr=False)
    positive_roots_fund: tuple[Weight, ...] = field(repr=False)
    coroots: tuple[tuple[int, ...], ...] = field(repr=False)
    gram: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    def __eq__(self, other):
        return isinstance(other, RootDatum) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"RootDatum({self.spec})"


@lru_cache(maxsize=None)
def build_root_datum(spec: RootSystemSpec | str) -> RootDatum:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    cartan = cartan_matrix(spec)
    r = spec.rank
    inv = _invert(cartan)
    d = _symmetrizer(cartan)

    simple = [tuple(int(i == k) for k in range(r)) for i in range(r)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(r):
            p = sum(beta[k] * cartan[k][i] for k in range(r))
            if p >= 0:
                continue
            # s_i raises beta; it stays positive
            new = list(beta)
            new[i] -= p
            new = tuple(new)
            if new not in seen:
                seen.add(new)
                queue.append(new)
    roots = tuple(sorted(seen, key=lambda b: (sum(b), b)))

    fund = tuple(
        tuple(sum(b[k] * cartan[k][j] for k in range(r)) for j in range(r))
        for b in roots
    )
    coroots = []
    for b in roots:
        # d_beta = (beta, beta)/2
        db = Fraction(sum(b[k] * b[l] * cartan[k][l] * d[l]
                          for k in range(r) for l in range(r)), 2)
        cv = [Fraction(b[k] * d[k]) / db for k in range(r)]
        assert all(c.denominator == 1 for c in cv)
        coroots.append(tuple(int(c) for c in cv))

    # (omega_i, omega_j) = inv[j][i] d_i, cleared to integers
    g = [[inv[j][i] * d[i] for j in range(r)] for i in range(r)]
    den = 1
    for row in g:
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
    gram = tuple(tuple(int(x * den) for x in row) for row in g)

    n = len(roots)
    datum = RootDatum(
        spec=spec,
        cartan=cartan,
        cartan_inverse=inv,
        positive_roots=roots,
        rho=(1,) * r,
        num_positive_roots=n,
        dim_g=2 * n + r,
        root_lengths=d,
        positive_roots_fund=fund,
        coroots=tuple(coroots),
        gram=gram,
    )
    _check_datum(datum)
    return datum


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _check_datum(datum: RootDatum) -> None:
    r = datum.rank
    for i in range(r):
        for j in range(r):
            s = sum(datum.cartan[i][k] * datum.cartan_inverse[k][j] for k in range(r))
            assert s == (i == j)
    expected = {
        "A": r * (r + 1) // 2, "B": r * r, "C": r * r, "D": r * (r - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(r), "F": 24, "G": 6,
    }[datum.spec.family]
    assert datum.num_positive_roots == expected, (datum.spec, datum.num_positive_roots)
    half = tuple(Fraction(sum(b[k] for b in datum.positive_roots), 2) for k in range(r))
    assert half == to_root_basis(datum, datum.rho)


# --- basic arithmetic -------------------------------------------------------

def add(a: WeightQ, b: WeightQ) -> WeightQ:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: WeightQ, b: WeightQ) -> WeightQ:
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: WeightQ) -> WeightQ:
    return tuple(c * x for x in a)


def is_dominant(w: WeightQ) -> bool:
    return all(x >= 0 for x in w)


def check_weight(datum: RootDatum, w: WeightQ) -> WeightQ:
    if len(w) != datum.rank:
        raise ValueError(f"weight {w} has length {len(w)}, expected {datum.rank}")
    return tuple(w)


def simple_root(datum: RootDatum, i: int) -> Weight:
    return datum.cartan[i - 1]


def from_root_basis(datum: RootDatum, c: Sequence) -> WeightQ:
    r = datum.rank
    return tuple(sum(c[k] * datum.cartan[k][j] for k in range(r)) for j in range(r))


def to_root_basis(datum: RootDatum, w: WeightQ) -> tuple[Fraction, ...]:
    """Coordinates ``c`` with ``w = sum c_i alpha_i``."""
    r = datum.rank
    inv = datum.cartan_inverse
    return tuple(sum((w[k] * inv[k][j] for k in range(r)), Fraction(0)) for j in range(r))


def eval_coweight(datum: RootDatum, w: WeightQ, j: int) -> Fraction:
    """Value ``w(x_j)`` where ``alpha_i(x_j) = delta_ij``."""
    if not 1 <= j <= datum.rank:
        raise ValueError(f"node {j} out of range")
    inv = datum.cartan_inverse
    return sum((w[k] * inv[k][j - 1] for k in range(datum.rank)), Fraction(0))


def coroot_pairing(datum: RootDatum, w: WeightQ, n: int):
    """``<w, beta_n^vee>`` for the n-th positive root (0-based)."""
    return sum(c * x for c, x in zip(datum.coroots[n], w))


def inner(datum: RootDatum, a: WeightQ, b: WeightQ):
    """Invariant form, scaled so that it is integral on integral weights."""
    g = datum.gram
    r = datum.rank
    return sum(a[i] * g[i][j] * b[j] for i in range(r) for j in range(r))


# --- Weyl group action ------------------------------------------------------

def _check_node(datum, i):
    if not 1 <= i <= datum.rank:
        raise ValueError(f"node {i} out of range 1..{datum.rank}")


def simple_reflection(datum: RootDatum, i: int, w: WeightQ) -> WeightQ:
    _check_node(datum, i)
    c = w[i - 1]
    if not c:
        return tuple(w)
    row = datum.cartan[i - 1]
    return tuple(x - c * a for x, a in zip(w, row))


def apply_word(datum: RootDatum, word: Iterable[int], w: WeightQ) -> WeightQ:
    word = tuple(word)
    for i in word:
        _check_node(datum, i)
    cartan = datum.cartan
    v = list(w)
    for i in reversed(word):
        c = v[i - 1]
        if c:
            row = cartan[i - 1]
            for k in range(len(v)):
                v[k] -= c * row[k]
    return tuple(v)


def inverse_word(word: Iterable[int]) -> WeylWord:
    return tuple(reversed(tuple(word)))


def dominate(datum: RootDatum, w: WeightQ) -> tuple[WeightQ, WeylWord]:
    """Dominant representative of the orbit of ``w`` and a reduced word
    ``u`` with ``apply_word(u, w)`` equal to it.  Always reflects at the
    smallest node with a negative coordinate."""
    cartan = datum.cartan
    v = list(w)
    steps = []
    r = len(v)
    while True:
        for i in range(r):
            if v[i] < 0:
                break
        else:
            return tuple(v), tuple(reversed(steps))
        c = v[i]
        row = cartan[i]
        for k in range(r):
            v[k] -= c * row[k]
        steps.append(i + 1)


def dominate_signed(cartan, v: list) -> tuple[tuple, int] | None:
    """Fast path for integral weights: ``(dominant, length)`` or ``None`` when
    ``v`` is singular (a zero coordinate shows up during the reduction).
    Mutates ``v``."""
    r = len(v)
    n = 0
    while True:
        neg = -1
        for i in range(r):
            x = v[i]
            if x < 0:
                if neg < 0:
                    neg = i
            elif x == 0:
                return None
        if neg < 0:
            return tuple(v), n
        c = v[neg]
        row = cartan[neg]
        for k in range(r):
            v[k] -= c * row[k]
        n += 1


def dominant_rep(cartan, w) -> tuple:
    """Dominant representative only (no word), for hot loops."""
    v = list(w)
    r = len(v)
    while True:
        for i in range(r):
            if v[i] < 0:
                break
        else:
            return tuple(v)
        c = v[i]
        row = cartan[i]
        for k in range(r):
            v[k] -= c * row[k]


def word_length(datum: RootDatum, word: Iterable[int]) -> int:
    """Length of the Weyl group element (number of inversions)."""
    v = apply_word(datum, word, datum.rho)
    return sum(1 for n in range(datum.num_positive_roots) if coroot_pairing(datum, v, n) < 0)


def reduce_word(datum: RootDatum, word: Iterable[int]) -> WeylWord:
    """Canonical reduced word of the element denoted by ``word``."""
    _, u = dominate(datum, apply_word(datum, word, datum.rho))
    return inverse_word(u)


def is_reduced(datum: RootDatum, word: Iterable[int]) -> bool:
    word = tuple(word)
    return len(word) == word_length(datum, word)


def longest_element(datum: RootDatum, J: Iterable[int] | None = None) -> WeylWord:
    """Reduced word for the longest element of the parabolic subgroup W_J
    (``J=None`` means all nodes)."""
    nodes = sorted(set(range(1, datum.rank + 1) if J is None else J))
    for j in nodes:
        _check_node(datum, j)
    cartan = datum.cartan
    v = list(datum.rho)
    steps = []
    while True:
        j = next((j for j in nodes if v[j - 1] > 0), None)
        if j is None:
            return tuple(reversed(steps))
        c = v[j - 1]
        row = cartan[j - 1]
        for k in range(len(v)):
            v[k] -= c * row[k]
        steps.append(j)


@lru_cache(maxsize=None)
def _w0(datum: RootDatum) -> WeylWord:
    return longest_element(datum)


def dual_weight(datum: RootDatum, lam: WeightQ) -> WeightQ:
    """``lam* = -w_o lam``."""
    if not is_dominant(lam):
        raise NonDominantInput(f"{lam} is not dominant")
    return tuple(-x for x in apply_word(datum, _w0(datum), lam))


def weyl_orbit(datum: RootDatum, lam: WeightQ) -> list[WeightQ]:
    """All elements of ``W lam``; the input may be any weight."""
    start = dominate(datum, lam)[0]
    cartan = datum.cartan
    r = datum.rank
    seen = {start}
    out = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(r):
                c = v[i]
                if c > 0:
                    row = cartan[i]
                    u = tuple(v[k] - c * row[k] for k in range(r))
                    if u not in seen:
                        seen.add(u)
                        out.append(u)
                        nxt.append(u)
        frontier = nxt
    return out


def parabolic_order(datum: RootDatum, J: Iterable[int] | None = None) -> int:
    """|W_J| by enumerating the W_J-orbit of the regular weight rho."""
    nodes = [j - 1 for j in (range(1, datum.rank + 1) if J is None else J)]
    cartan = datum.cartan
    start = datum.rho
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in nodes:
                c = v[i]
                row = cartan[i]
                u = tuple(x - c * a for x, a in zip(v, row))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return len(seen)


def parse_weight(text: str) -> Weight:
    """``"2,0,1"`` -> ``(2, 0, 1)``."""
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}") from None
