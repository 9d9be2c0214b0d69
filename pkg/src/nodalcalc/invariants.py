"""Invariants of smooth surfaces and their transfer across a nodal contraction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "SurfaceInvariants",
    "ContractionData",
    "noether",
    "contract",
    "bmy_slack",
    "bmy_solution_enumerator",
]


@dataclass(frozen=True)
class SurfaceInvariants:
    q: int
    pg: int
    h11: int

    def __post_init__(self):
        if self.q < 0 or self.pg < 0:
            raise ValueError("q and pg must be nonnegative")
        if self.h11 < 1:
            raise ValueError("h11 must be positive")

    @property
    def chi(self) -> int:
        return 1 - self.q + self.pg

    @property
    def euler(self) -> int:
        return 2 - 4 * self.q + 2 * self.pg + self.h11

    @property
    def ksq(self) -> int:
        # Noether: K^2 + e = 12 chi
        return 12 * self.chi - self.euler

    @property
    def b1(self) -> int:
        return 2 * self.q

    @property
    def b2(self) -> int:
        return self.h11 + 2 * self.pg

    def to_json(self) -> dict:
        return {"q": self.q, "pg": self.pg, "h11": self.h11, "ksq": self.ksq, "euler": self.euler}


def noether(q: int, pg: int, h11: int) -> SurfaceInvariants:
    return SurfaceInvariants(q, pg, h11)


@dataclass(frozen=True)
class ContractionData:
    """Contraction ``f: X -> S`` of ``mu`` disjoint nodal curves."""

    x: SurfaceInvariants
    mu: int

    @property
    def euler_s(self) -> int:
        return self.x.euler - self.mu

    @property
    def ksq_s(self) -> int:
        # nodes have zero discrepancy, so K_X = f^* K_S
        return self.x.ksq

    @property
    def e_orb(self) -> Fraction:
        return self.euler_s - Fraction(self.mu, 2)

    def to_json(self) -> dict:
        return {
            "x": self.x.to_json(),
            "mu": self.mu,
            "euler_s": self.euler_s,
            "ksq_s": self.ksq_s,
            "e_orb": str(self.e_orb),
        }


def contract(x: SurfaceInvariants, mu: int) -> ContractionData:
    if not 0 <= mu <= x.h11 - 1:
        raise ValueError(f"mu={mu} outside the Hodge index range 0..{x.h11 - 1}")
    return ContractionData(x, mu)


def bmy_slack(codim: int) -> Fraction:
    """Right-hand side ``B`` of ``4q + 4pg + h11/2 <= B`` when ``mu = h11 - codim``.

    With ``mu = h11 - c``:  ``K^2 = 10 - 8q + 10pg - h11`` and
    ``e_orb(S) = 2 - 4q + 2pg + c - (h11 - c)/2``, so ``K^2 <= 3 e_orb``
    rearranges to ``4q + 4pg + h11/2 <= 9c/2 - 4``.
    """
    if codim < 1:
        raise ValueError("codim must be >= 1 (Hodge index)")
    return Fraction(9 * codim, 2) - 4


def bmy_solution_enumerator(bound, h11_min: int = 1) -> list[tuple[int, int, int]]:
    """All ``(q, pg, h11)`` with ``4q + 4pg + h11/2 <= bound`` and ``h11 >= h11_min``.

    Lexicographic order.
    """
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if h11_min < 1:
        raise ValueError("h11_min must be >= 1")
    out = []
    for q in range(math.floor(bound / 4) + 1):
        for pg in range(math.floor((bound - 4 * q) / 4) + 1):
            h_max = math.floor(2 * (bound - 4 * q - 4 * pg))
            out.extend((q, pg, h) for h in range(h11_min, h_max + 1))
    return out
