"""Integer power series truncated at a fixed degree."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_K t^K``; arithmetic drops every term above ``t^K``."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Sequence[int], degree: int | None = None):
        coeffs = [int(c) for c in coefficients]
        if degree is None:
            degree = len(coeffs) - 1
        if degree < 0:
            raise ValueError("truncation degree must be non-negative")
        coeffs = (coeffs + [0] * (degree + 1))[: degree + 1]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls([1], degree)

    @classmethod
    def binomial(cls, k: int, a: int, degree: int) -> "TruncatedSeries":
        """``1 + a t^k``."""
        c = [0] * (degree + 1)
        c[0] = 1
        if k <= degree:
            c[k] += a
        return cls(c, degree)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def _check(self, other: "TruncatedSeries") -> None:
        if other.degree != self.degree:
            raise ValueError(f"truncation degrees differ: {self.degree} vs {other.degree}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coefficients, other.coefficients)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coefficients])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        K = self.degree
        a, b = self.coefficients, other.coefficients
        out = [0] * (K + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(K + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; only units (constant term +-1) have integer inverses."""
        c0 = self.coefficients[0]
        if c0 not in (1, -1):
            raise ValueError("only series with constant term +-1 are invertible over the integers")
        a = self.coefficients
        inv = [0] * (self.degree + 1)
        inv[0] = c0
        for m in range(1, self.degree + 1):
            inv[m] = -c0 * sum(a[i] * inv[m - i] for i in range(1, m + 1))
        return TruncatedSeries(inv)

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries.one(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def first_difference(self, other: "TruncatedSeries") -> int | None:
        """Lowest degree where the coefficients differ, or None when equal."""
        self._check(other)
        for k, (a, b) in enumerate(zip(self.coefficients, other.coefficients)):
            if a != b:
                return k
        return None

    def __str__(self) -> str:
        terms = [f"{c}*t^{k}" if k else str(c) for k, c in enumerate(self.coefficients) if c]
        return (" + ".join(terms) or "0") + f" + O(t^{self.degree + 1})"
