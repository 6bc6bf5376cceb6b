"""Closed-form lower central series ranks of conjugation-free groups.

For a conjugation-free group whose relation graph is cycle-separated, the
ranks ``phi_k = rank(G_k / G_{k+1})`` depend only on how many relations of
each length there are::

    phi_1 = n,    phi_k = sum_{i >= 3} n_i * witt(k, i - 1)   (k >= 2)

where ``witt(k, m)`` is the rank of the degree-k part of the free Lie
algebra on m generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .errors import HypothesisError, ResourceLimitError
from .presentation import IncidenceData
from .relgraph import graph_of_incidence, is_cycle_separated
from .series import TruncatedSeries

MAX_DEGREE = 64


@lru_cache(maxsize=None)
def mobius(k: int) -> int:
    if k < 1:
        raise ValueError("mobius() needs a positive integer")
    if k > MAX_DEGREE:
        raise ResourceLimitError(f"degree {k} exceeds the supported bound {MAX_DEGREE}")
    result, m, p = 1, k, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def witt(k: int, n: int) -> int:
    """Necklace polynomial ``(1/k) sum_{d | k} mu(d) n^(k/d)``."""
    if k < 1:
        raise ValueError("witt() needs k >= 1")
    if n < 0:
        raise ValueError("witt() needs n >= 0")
    total = sum(mobius(d) * n ** (k // d) for d in range(1, k + 1) if k % d == 0)
    q, r = divmod(total, k)
    assert r == 0
    return q


@dataclass(frozen=True)
class RankTable:
    phi: dict[int, int]
    conjectural: bool = False
    notes: tuple[str, ...] = field(default=())

    @property
    def max_k(self) -> int:
        return max(self.phi)

    def __getitem__(self, k: int) -> int:
        return self.phi[k]

    def as_list(self) -> list[int]:
        return [self.phi[k] for k in sorted(self.phi)]


def hypothesis_failures(inc: IncidenceData) -> list[str]:
    """Reasons the decomposability theorem does not apply (empty when it does)."""
    reasons = []
    if not inc.conjugation_free:
        reasons.append("presentation is not conjugation-free")
    if not is_cycle_separated(graph_of_incidence(inc)):
        reasons.append("relation graph is not cycle-separated")
    return reasons


def phi_formula(inc: IncidenceData, K: int, assume_decomposable: bool = False) -> RankTable:
    """``phi_1 .. phi_K`` from the relation-length census.

    Refuses with :class:`HypothesisError` unless the input is conjugation-free
    with a cycle-separated graph, or ``assume_decomposable`` is set, in which
    case the table is marked conjectural.
    """
    if K < 1:
        raise ValueError("truncation degree K must be >= 1")
    if K > MAX_DEGREE:
        raise ResourceLimitError(f"K = {K} exceeds the supported bound {MAX_DEGREE}")
    reasons = hypothesis_failures(inc)
    if reasons and not assume_decomposable:
        raise HypothesisError(
            "closed-form ranks need a conjugation-free presentation with cycle-separated graph: "
            + "; ".join(reasons)
        )
    counts = inc.counts()
    phi = {1: inc.n}
    for k in range(2, K + 1):
        phi[k] = sum(n_i * witt(k, i - 1) for i, n_i in counts.items() if i >= 3)
    return RankTable(phi, conjectural=bool(reasons), notes=tuple(reasons))


def phi2_combinatorial(inc: IncidenceData) -> int:
    """Each relation of length m contributes ``C(m,2) - m + 1`` to phi_2."""
    return sum(comb(len(s), 2) - len(s) + 1 for s in inc.supports if len(s) >= 3)


def b2(inc: IncidenceData) -> int:
    return sum(len(s) - 1 for s in inc.supports)


@dataclass(frozen=True)
class LcsCheck:
    ok: bool
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    first_difference: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def lcs_product(phi: dict[int, int], K: int) -> TruncatedSeries:
    """``prod_{k <= K} (1 - t^k)^phi_k`` truncated at degree K."""
    out = TruncatedSeries.one(K)
    for k in range(1, K + 1):
        if phi.get(k, 0):
            out = out * TruncatedSeries.binomial(k, -1, K) ** phi[k]
    return out


def lcs_series_check(inc: IncidenceData, K: int, phi: dict[int, int] | None = None) -> LcsCheck:
    """Compare ``prod (1-t^k)^phi_k`` with ``(1-t)^(n-b2) prod_p (1-(m_p-1)t)`` up to ``t^K``.

    The factor ``(1-t)^(n-b2)`` is moved to whichever side keeps its
    exponent non-negative, so everything stays polynomial.
    """
    if phi is None:
        phi = phi_formula(inc, K, assume_decomposable=True).phi
    missing = [k for k in range(1, K + 1) if k not in phi]
    if missing:
        raise ValueError(f"phi is missing degrees {missing}")
    lhs = lcs_product(phi, K)
    rhs = TruncatedSeries.one(K)
    for s in inc.supports:
        rhs = rhs * TruncatedSeries.binomial(1, -(len(s) - 1), K)
    e = inc.n - b2(inc)
    one_minus_t = TruncatedSeries.binomial(1, -1, K)
    if e >= 0:
        rhs = rhs * one_minus_t**e
    else:
        lhs = lhs * one_minus_t ** (-e)
    diff = lhs.first_difference(rhs)
    return LcsCheck(diff is None, lhs, rhs, diff)


def format_ranks(table: RankTable, b2_value: int, check: LcsCheck) -> str:
    lines = [f"phi[{k}] = {v}" for k, v in sorted(table.phi.items())]
    lines.append(f"b2 = {b2_value}")
    verdict = "pass" if check.ok else f"fail@coeff{check.first_difference}"
    lines.append(f"lcs_identity = {verdict}")
    return "\n".join(lines) + "\n"
