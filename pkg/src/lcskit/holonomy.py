"""Holonomy Lie algebra ranks in degrees 2 and 3.

This is an independent check on the closed-form ranks.  Each support S
contributes the degree-2 relators

    rho_{S,k} = sum_{j in S, j != k} [x_k, x_j]        (k in S)

and the degree-3 part of the ideal they generate is spanned by the brackets
``[rho, x_l]``.  Lie elements are handled inside the tensor algebra: a
bracket ``[u, v]`` is expanded as ``uv - vu`` on words, so ranks are taken in
the ``n^d``-dimensional word basis and compared with ``dim L_d = witt(d, n)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb

from .errors import ResourceLimitError
from .linalg import SparseEchelon
from .presentation import IncidenceData
from .ranks import witt

Word = tuple[int, ...]

DEFAULT_MAX_GENERATORS = 16


@dataclass(frozen=True)
class TensorVector:
    """Sparse integer combination of words of a fixed length."""

    degree: int
    coeffs: dict[Word, int]

    @classmethod
    def commutator(cls, i: int, j: int) -> "TensorVector":
        return cls(2, {(i, j): 1, (j, i): -1})

    def __add__(self, other: "TensorVector") -> "TensorVector":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return TensorVector(self.degree, out)

    def bracket(self, gen: int) -> "TensorVector":
        """``[self, x_gen] = self * x_gen - x_gen * self``."""
        out: dict[Word, int] = defaultdict(int)
        for w, c in self.coeffs.items():
            out[w + (gen,)] += c
            out[(gen,) + w] -= c
        return TensorVector(self.degree + 1, {w: c for w, c in out.items() if c})

    def is_antisymmetric(self) -> bool:
        if self.degree != 2:
            raise ValueError("antisymmetry is a degree-2 notion")
        return all(self.coeffs.get((j, i), 0) == -c for (i, j), c in self.coeffs.items())

    def rotation_sums_vanish(self) -> bool:
        """Coefficients summed over each class of cyclically rotated words are zero.

        True for every Lie element of degree >= 2, since ``uv`` and ``vu`` are rotations.
        """
        sums: dict[Word, int] = defaultdict(int)
        for w, c in self.coeffs.items():
            key = min(w[i:] + w[:i] for i in range(len(w)))
            sums[key] += c
        return all(v == 0 for v in sums.values())

    def to_column_map(self, n: int) -> dict[int, int]:
        """Coefficients keyed by the word's index in base-n lexicographic order."""
        out = {}
        for w, c in self.coeffs.items():
            idx = 0
            for letter in w:
                idx = idx * n + (letter - 1)
            out[idx] = c
        return out


@dataclass(frozen=True)
class RelatorSet:
    n: int
    # (support, k, rho_{S,k}) in support order, then k ascending
    relators: tuple[tuple[tuple[int, ...], int, TensorVector], ...]

    def vectors(self) -> list[TensorVector]:
        return [rho for _, _, rho in self.relators]

    def spanning_vectors(self) -> list[TensorVector]:
        """Drop the last relator of each support; the relators of a support sum to zero."""
        out = []
        last = {}
        for s, k, _ in self.relators:
            last[s] = k
        return [rho for s, k, rho in self.relators if k != last[s]]


def build_relators(inc: IncidenceData, n: int | None = None) -> RelatorSet:
    n = inc.n if n is None else n
    rels = []
    for s in inc.supports:
        for k in s:
            rho = TensorVector(2, {})
            for j in s:
                if j != k:
                    rho = rho + TensorVector.commutator(k, j)
            rels.append((s, k, rho))
    return RelatorSet(n, tuple(rels))


def _check_size(n: int, max_generators: int) -> None:
    if n > max_generators:
        raise ResourceLimitError(
            f"holonomy oracle limited to n <= {max_generators} generators (got {n})"
        )


@dataclass(frozen=True)
class OracleReport:
    n: int
    dim_l2: int
    dim_l3: int
    relator_rank_deg2: int
    ideal_rank_deg3: int

    @property
    def phi2(self) -> int:
        return self.dim_l2 - self.relator_rank_deg2

    @property
    def phi3(self) -> int:
        return self.dim_l3 - self.ideal_rank_deg3

    def format(self) -> str:
        return (
            f"phi2_oracle = {self.phi2}\n"
            f"phi3_oracle = {self.phi3}\n"
            f"dimL2 = {self.dim_l2}\n"
            f"dimL3 = {self.dim_l3}\n"
            f"relator_rank_deg2 = {self.relator_rank_deg2}\n"
            f"ideal_rank_deg3 = {self.ideal_rank_deg3}\n"
        )


def relator_rank_deg2(inc: IncidenceData, n: int | None = None) -> int:
    n = inc.n if n is None else n
    ech = SparseEchelon()
    for rho in build_relators(inc, n).vectors():
        ech.add(rho.to_column_map(n))
    return ech.rank


def ideal_rank_deg3(inc: IncidenceData, n: int | None = None) -> int:
    n = inc.n if n is None else n
    ech = SparseEchelon()
    for rho in build_relators(inc, n).spanning_vectors():
        for l in range(1, n + 1):
            ech.add(rho.bracket(l).to_column_map(n))
    return ech.rank


def holonomy_phi2(inc: IncidenceData, n: int | None = None) -> int:
    n = inc.n if n is None else n
    return comb(n, 2) - relator_rank_deg2(inc, n)


def holonomy_phi3(inc: IncidenceData, n: int | None = None, max_generators: int = DEFAULT_MAX_GENERATORS) -> int:
    n = inc.n if n is None else n
    _check_size(n, max_generators)
    return witt(3, n) - ideal_rank_deg3(inc, n)


def oracle_report(inc: IncidenceData, max_generators: int = DEFAULT_MAX_GENERATORS) -> OracleReport:
    n = inc.n
    _check_size(n, max_generators)
    return OracleReport(
        n=n,
        dim_l2=witt(2, n),
        dim_l3=witt(3, n),
        relator_rank_deg2=relator_rank_deg2(inc, n),
        ideal_rank_deg3=ideal_rank_deg3(inc, n),
    )
