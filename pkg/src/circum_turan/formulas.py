"""Closed-form Turán-type values and arithmetic audits of the supporting inequalities.

Edge counts are Python integers; every inequality with a fractional side is
evaluated in :class:`fractions.Fraction`, so no tolerance is involved anywhere.

Notation used throughout: ``t = floor((k-1)/2)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterator


class RangeError(ValueError):
    """Parameters outside the range where a formula or construction is defined."""


def half_circ(k: int) -> int:
    return (k - 1) // 2


def turan_part_sizes(n: int, p: int) -> list[int]:
    """Part sizes of T(n, p), largest first (``min(n, p)`` nonempty parts)."""
    if p < 1:
        raise RangeError(f"T(n,p) needs p >= 1, got p={p}")
    if n < 0:
        raise RangeError(f"T(n,p) needs n >= 0, got n={n}")
    q, rem = divmod(n, p)
    return [q + 1] * rem + [q] * (p - rem) if q else [1] * rem


def t_edges(n: int, p: int) -> int:
    """Edges of the Turán graph T(n, p)."""
    return comb(n, 2) - sum(comb(s, 2) for s in turan_part_sizes(n, p))


def ex_clique(n: int, r: int) -> int:
    """``ex(n, K_r)`` by Turán's theorem."""
    if r < 2:
        raise RangeError(f"ex(n, K_r) needs r >= 2, got r={r}")
    if n < 0:
        raise RangeError(f"ex(n, K_r) needs n >= 0, got n={n}")
    return t_edges(n, r - 1)


# -- division decompositions ----------------------------------------------------


@dataclass(frozen=True)
class DivisionDecomp:
    p: int
    q: int


def decomp_cycle(n: int, k: int) -> DivisionDecomp:
    """``n - 1 = p(k-2) + q`` with ``0 <= q <= k-3``."""
    if k < 3 or n < 1:
        raise RangeError(f"decomp_cycle needs n >= 1 and k >= 3, got n={n}, k={k}")
    p, q = divmod(n - 1, k - 2)
    return DivisionDecomp(p, q)


def decomp_path(n: int, k: int) -> DivisionDecomp:
    """``n = p(k-1) + q`` with ``0 <= q <= k-2``."""
    if k < 2 or n < 0:
        raise RangeError(f"decomp_path needs n >= 0 and k >= 2, got n={n}, k={k}")
    p, q = divmod(n, k - 1)
    return DivisionDecomp(p, q)


# -- construction edge counts -----------------------------------------------------


def _f(n: int, k: int, r: int) -> int:
    d = decomp_cycle(n, k)
    return d.p * ex_clique(k - 1, r) + ex_clique(d.q + 1, r)


def f_value(n: int, k: int, r: int) -> int:
    """Edges of F(n,k,r): ``p ex(k-1,K_r) + ex(q+1,K_r)`` where ``n-1 = p(k-2)+q``.

    Defined for every ``n >= 1`` (for ``n <= k-1`` it is ``ex(n, K_r)``).
    """
    if not 3 <= r < k or n < 1:
        raise RangeError(f"f(n,k,r) requires 3 <= r < k and n >= 1, got n={n}, k={k}, r={r}")
    return _f(n, k, r)


def _check_a(n: int, a: int, k: int) -> None:
    if not 2 <= a <= half_circ(k):
        raise RangeError(f"requires 2 <= a <= floor((k-1)/2), got a={a}, k={k}")
    if n < k:
        raise RangeError(f"requires n >= k, got n={n}, k={k}")


def _g(n: int, a: int, k: int, r: int) -> int:
    return (n - k + a) * a + ex_clique(k - a, r)


def g_value(n: int, a: int, k: int, r: int) -> int:
    """``g_r(n,a,k) = (n-k+a) a + ex(k-a, K_r)``."""
    _check_a(n, a, k)
    if r < 3:
        raise RangeError(f"g_r(n,a,k) requires r >= 3, got r={r}")
    return _g(n, a, k, r)


def h_value(n: int, a: int, k: int) -> int:
    """``h(n,a,k) = C(k-a, 2) + a (n - k + a)``."""
    _check_a(n, a, k)
    return comb(k - a, 2) + a * (n - k + a)


def e_G1(n: int, k: int) -> int:
    """Edges of ``K_t v I_{n-t}``."""
    if not n >= k >= 5:
        raise RangeError(f"G_1 requires n >= k >= 5, got n={n}, k={k}")
    t = half_circ(k)
    return comb(t, 2) + t * (n - t)


def g_prime(n: int, t: int, r: int) -> int:
    """``g'_r(n,t) = (n-t) t + ex(t, K_{r-1})``."""
    if r < 3 or t < 0 or n < t:
        raise RangeError(f"g'_r(n,t) requires r >= 3 and n >= t >= 0, got n={n}, t={t}, r={r}")
    return (n - t) * t + ex_clique(t, r - 1)


def e_G2(n: int, k: int, r: int) -> int:
    """Edges of ``T(t, r-2) v I_{n-t}``."""
    if not n >= k >= 5:
        raise RangeError(f"G_2 requires n >= k >= 5, got n={n}, k={k}")
    t = half_circ(k)
    if not 3 <= r <= t + 1:
        raise RangeError(f"G_2 requires 3 <= r <= floor((k-1)/2)+1, got r={r}, k={k}")
    return g_prime(n, t, r)


def e_G3(n: int, k: int, r: int) -> int:
    """Edges of ``p T(k-1, r-1) + T(q, r-1)`` where ``n = p(k-1) + q``."""
    if not (k // 2 + 1 <= r < k <= n):
        raise RangeError(
            f"G_3 requires floor(k/2)+1 <= r < k <= n, got n={n}, k={k}, r={r}"
        )
    d = decomp_path(n, k)
    return d.p * ex_clique(k - 1, r) + ex_clique(d.q, r)


def e_G4(n: int, k: int) -> int:
    """Edges of ``K_{s} v I_{n-s}`` with ``s = floor(k/2) - 1``."""
    if not n >= k >= 4:
        raise RangeError(f"G_4 requires n >= k >= 4, got n={n}, k={k}")
    s = k // 2 - 1
    return comb(s, 2) + s * (n - s)


def e_KX(n: int, k: int, r: int) -> int:
    """Edges of ``T(s, r-2) v I_{n-s}`` with ``s = floor(k/2) - 1``."""
    if not (3 <= r <= k // 2 and k <= n):
        raise RangeError(f"requires 3 <= r <= floor(k/2) and k <= n, got n={n}, k={k}, r={r}")
    s = k // 2 - 1
    return ex_clique(s, r - 1) + s * (n - s)


def eg_cycle_bound(n: int, k: int) -> Fraction:
    if k < 3:
        raise RangeError("the cycle bound needs k >= 3")
    return Fraction((k - 1) * (n - 1), 2)


def eg_path_bound(n: int, k: int) -> Fraction:
    if k < 2:
        raise RangeError("the path bound needs k >= 2")
    return Fraction((k - 2) * n, 2)


# -- dispatchers ------------------------------------------------------------------


class Status(str, enum.Enum):
    EXACT = "Exact"
    EXACT_BY_THEOREM = "ExactByTheorem"
    LOWER_BOUND_ONLY = "LowerBoundOnly"
    ASYMPTOTIC_ONLY = "AsymptoticOnly"

    @property
    def is_exact(self) -> bool:
        return self in (Status.EXACT, Status.EXACT_BY_THEOREM)


@dataclass(frozen=True)
class ConstructionId:
    tag: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.tag}(" + ",".join(map(str, self.params)) + ")"


@dataclass(frozen=True)
class ExtremalResult:
    problem: str
    n: int
    k: int
    r: int
    value: int
    status: Status
    achievers: tuple[ConstructionId, ...]
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "problem": self.problem,
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "value": self.value,
            "status": self.status.value,
            "achievers": [str(a) for a in self.achievers],
            "note": self.note,
        }


def _require_base(n: int, k: int, r: int) -> None:
    if not 3 <= r < k <= n:
        raise RangeError(f"requires 3 <= r < k <= n, got n={n}, k={k}, r={r}")


def _best(n: int, k: int, r: int, problem: str, options: list[tuple[ConstructionId, int]],
          status: Status, note: str = "") -> ExtremalResult:
    value = max(v for _, v in options)
    achievers = tuple(c for c, v in options if v == value)
    return ExtremalResult(problem, n, k, r, value, status, achievers, note)


def turan_number_cycles(n: int, k: int, r: int) -> ExtremalResult:
    """``ex(n, {K_r, C_{>=k}})``."""
    _require_base(n, k, r)
    t = half_circ(k)
    if (k, r) == (4, 3):
        return ExtremalResult(
            "cycles", n, k, r, n - 1, Status.EXACT_BY_THEOREM,
            (ConstructionId("Tree", (n,)),), "triangle-free and no cycle of length >= 4: a forest",
        )
    if r >= t + 2:
        options = [(ConstructionId("F", (n, k, r)), f_value(n, k, r))]
        if k % 2 == 1:
            options.append((ConstructionId("G1", (n, k)), e_G1(n, k)))
        return _best(n, k, r, "cycles", options, Status.EXACT)
    status = Status.EXACT if 4 * n >= k ** 3 else Status.LOWER_BOUND_ONLY
    note = "" if status is Status.EXACT else f"n < k^3/4 = {Fraction(k ** 3, 4)}"
    return _best(n, k, r, "cycles", [(ConstructionId("G2", (n, k, r)), e_G2(n, k, r))], status, note)


def turan_number_cycles_2conn(n: int, k: int, r: int) -> ExtremalResult:
    """Maximum edges of a 2-connected ``{K_r, C_{>=k}}``-free graph on ``n`` vertices."""
    if not (n >= k >= 5 and 3 <= r < k):
        raise RangeError(f"requires n >= k >= 5 and 3 <= r < k, got n={n}, k={k}, r={r}")
    t = half_circ(k)
    if r >= t + 2:
        options = [(ConstructionId("Gr", (n, a, k, r)), g_value(n, a, k, r)) for a in sorted({2, t})]
        return _best(n, k, r, "cycles2conn", options, Status.EXACT)
    status = Status.EXACT if 2 * n >= k ** 2 else Status.LOWER_BOUND_ONLY
    note = "" if status is Status.EXACT else f"n < k^2/2 = {Fraction(k ** 2, 2)}"
    return _best(n, k, r, "cycles2conn", [(ConstructionId("G2", (n, k, r)), e_G2(n, k, r))], status, note)


def turan_number_paths(n: int, k: int, r: int) -> ExtremalResult:
    """``ex(n, {K_r, P_k})``.

    Besides ``3 <= r < k <= n`` the trivial case ``k = 3, r = 2`` is accepted
    (it lies in the ``r >= floor(k/2) + 1`` regime and the answer is 0).
    """
    if not ((3 <= r < k <= n) or (k == 3 and r == 2 and n >= k)):
        raise RangeError(f"requires 3 <= r < k <= n, got n={n}, k={k}, r={r}")
    if r >= k // 2 + 1:
        options = [(ConstructionId("G3", (n, k, r)), e_G3(n, k, r))]
        if k % 2 == 0:
            options.append((ConstructionId("G4", (n, k)), e_G4(n, k)))
        return _best(n, k, r, "paths", options, Status.EXACT)
    return _best(
        n, k, r, "paths", [(ConstructionId("KX", (n, k, r)), e_KX(n, k, r))],
        Status.ASYMPTOTIC_ONLY, "valid for sufficiently large n only",
    )


PROBLEMS: dict[str, Callable[[int, int, int], ExtremalResult]] = {
    "cycles": turan_number_cycles,
    "cycles2conn": turan_number_cycles_2conn,
    "paths": turan_number_paths,
}


# -- lemma audits -------------------------------------------------------------------


@dataclass
class LemmaAuditReport:
    lemma: str
    grid: str
    checked: int = 0
    failures: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "grid": self.grid,
            "checked": self.checked,
            "failures": [list(f) for f in self.failures],
            "passed": self.passed,
        }


@dataclass(frozen=True)
class AuditGrid:
    k_min: int = 5
    k_max: int = 30
    n_max: int = 200

    def ks(self, low: int = 3) -> range:
        return range(max(self.k_min, low), self.k_max + 1)

    def describe(self) -> str:
        return f"k in [{self.k_min},{self.k_max}], n <= {self.n_max}"


def _audit(name: str, grid: AuditGrid, cases: Iterator[tuple[tuple[int, ...], bool]]) -> LemmaAuditReport:
    rep = LemmaAuditReport(name, grid.describe())
    for params, ok in cases:
        rep.checked += 1
        if not ok:
            rep.failures.append(params)
    return rep


def _convex(grid: AuditGrid):
    for k in grid.ks(5):
        t = half_circ(k)
        for r in range(3, k):
            for n in range(k, grid.n_max + 1):
                m = [_g(n, a + 1, k, r) - _g(n, a, k, r) for a in range(2, t + 1)]
                for a in range(2, t):
                    yield (n, k, r, a), m[a - 1] > m[a - 2]


def _subadditivity(grid: AuditGrid):
    for k in grid.ks(5):
        t = half_circ(k)
        for r in range(t + 2, k):
            f = [0] + [_f(n, k, r) for n in range(1, grid.n_max + 1)]
            for n in range(1, grid.n_max + 1):
                for n1 in range(1, (n + 1) // 2 + 1):
                    n2 = n + 1 - n1
                    yield (n, k, r, n1, n2), f[n1] + f[n2] <= f[n]


def _fact1(grid: AuditGrid):
    for k in grid.ks(7):
        t = half_circ(k)
        for r in range(t + 2, k):
            for n in range(k, grid.n_max + 1):
                if _g(n, 2, k, r) > _g(n, t, k, r):
                    yield (n, k, r), n <= Fraction(5 * k, 4) - 1
                else:
                    yield (n, k, r), True


def _g2f(grid: AuditGrid):
    for k in grid.ks(6):
        t = half_circ(k)
        for r in range(t + 2, k):
            for n in range(k, grid.n_max + 1):
                if n > Fraction(5 * k, 4) - 1:
                    break
                yield (n, k, r), _g(n, 2, k, r) <= _f(n, k, r)


def _gtf(grid: AuditGrid):
    for k in grid.ks(6):
        if k % 2:
            continue
        for r in range(k // 2 + 1, k):
            for n in range(k, grid.n_max + 1):
                yield (n, k, r), _g(n, (k - 2) // 2, k, r) <= _f(n, k, r)


def _edges_turan(grid: AuditGrid):
    for k in grid.ks(3):
        t = half_circ(k)
        for r in range(t + 2, k):
            for n in range(r - 1, k):
                yield (n, k, r), t_edges(n, r - 1) == comb(n, 2) - (n - r + 1)


def _onemore(grid: AuditGrid):
    for k in grid.ks(5):
        t = half_circ(k)
        for r in range(3, t + 2):
            for n in range(2, k):
                yield (n, k, r), ex_clique(n, r) <= (t - Fraction(1, k)) * (n - 1)


def _twomore(grid: AuditGrid):
    for k in grid.ks(5):
        t = half_circ(k)
        for r in range(3, t + 2):
            for n in range(k, grid.n_max + 1):
                lhs = ex_clique(k - 1, r) + (t - Fraction(1, 2)) * (n - k + 1)
                yield (n, k, r), lhs <= (t - Fraction(1, k)) * (n - 1)


def _k_minus_2(grid: AuditGrid):
    for k in grid.ks(4):
        t = half_circ(k)
        for r in range(3, k):
            for n in range(k, grid.n_max + 1):
                lhs = ex_clique(k - 2, r) + (t - Fraction(1, 2)) * (n - k + 2)
                rhs = ex_clique(k - 1, r) + (t - Fraction(1, 2)) * (n - k + 1)
                yield (n, k, r), lhs < rhs


LEMMAS: dict[str, Callable[[AuditGrid], Iterator[tuple[tuple[int, ...], bool]]]] = {
    "convex": _convex,
    "subadditivity": _subadditivity,
    "fact1": _fact1,
    "g2f": _g2f,
    "gtf": _gtf,
    "edgesTuran": _edges_turan,
    "onemore": _onemore,
    "twomore": _twomore,
    "k-2": _k_minus_2,
}


def audit_lemmas(grid: AuditGrid | None = None, only: list[str] | None = None) -> list[LemmaAuditReport]:
    grid = grid or AuditGrid()
    names = only or list(LEMMAS)
    unknown = set(names) - set(LEMMAS)
    if unknown:
        raise KeyError(f"unknown lemma(s): {sorted(unknown)}")
    return [_audit(name, grid, LEMMAS[name](grid)) for name in names]


def critical_case_rows(
    ks: tuple[int, ...] = (6, 8, 10, 12), p_max: int = 5
) -> Iterator[tuple[int, int, int, int, int, int, int]]:
    """``(n, k, r, p, q, lhs, rhs)`` rows of the even-``k``, ``r = k/2 + 1`` identity

    ``max(g_r(n,2,k), g_r(n,k/2-1,k)) = f(n,k,r)`` for ``q in {k/2-1, k/2-2}``.
    """
    for k in ks:
        r = k // 2 + 1
        for p in range(1, p_max + 1):
            for q in (k // 2 - 1, k // 2 - 2):
                n = p * (k - 2) + q + 1
                lhs = max(_g(n, 2, k, r), _g(n, k // 2 - 1, k, r))
                yield n, k, r, p, q, lhs, _f(n, k, r)
