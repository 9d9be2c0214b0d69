"""Resolution strings of quotient singularities and orbifold Euler numbers.

For a quotient singularity ``p`` with exceptional curves ``E_1 .. E_l`` the
discrepancy divisor ``D_p = sum a_j E_j`` is the unique solution of

    D_p . E_i = 2 + E_i^2        (1 <= i <= l)

and ``K_S^2 = K_{S'}^2 - sum_p D_p^2``.  Only cyclic (Hirzebruch-Jung chain)
resolution graphs carry a group order here; for those ``|G_p|`` is the
absolute determinant of the chain's Gram matrix.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import Gram, determinant, signature, solve

__all__ = [
    "ResolutionString",
    "OrbifoldSurface",
    "Canonical",
    "BMYVerdict",
    "hj_string",
    "chain_gram",
    "solve_discrepancies",
    "orbifold_euler",
    "bmy_check",
    "max_singular_points_filter",
]


@dataclass(frozen=True)
class ResolutionString:
    self_intersections: tuple[int, ...]
    discrepancies: tuple[Fraction, ...]
    dsq: Fraction
    # None when the graph is not a chain (order not determined by the determinant)
    group_order: int | None

    @property
    def is_rational_double_point(self) -> bool:
        return not any(self.discrepancies)

    def to_json(self) -> dict:
        return {
            "self_intersections": list(self.self_intersections),
            "discrepancies": [str(a) for a in self.discrepancies],
            "dsq": str(self.dsq),
            "group_order": self.group_order,
        }


NODE = ResolutionString((-2,), (Fraction(0),), Fraction(0), 2)


def hj_string(n: int, q: int) -> list[int]:
    """Self-intersections of the resolution of the cyclic singularity ``(n, q)``.

    ``n/q = b_1 - 1/(b_2 - 1/(...))`` with every ``b_i >= 2``; returns ``[-b_1, ...]``.
    """
    if not (n > q >= 1) or math.gcd(n, q) != 1:
        raise ValueError(f"invalid type ({n}, {q})")
    out = []
    while q:
        b = -(-n // q)
        out.append(-b)
        n, q = q, b * q - n
    return out


def chain_gram(self_intersections: Sequence[int]) -> Gram:
    l = len(self_intersections)
    rows = [[0] * l for _ in range(l)]
    for i, b in enumerate(self_intersections):
        rows[i][i] = b
        if i + 1 < l:
            rows[i][i + 1] = rows[i + 1][i] = 1
    return Gram.from_rows(rows)


def _is_chain(g: Gram) -> bool:
    n = g.n
    for i in range(n):
        for j in range(i + 1, n):
            want = 1 if j == i + 1 else 0
            if g[i, j] != want:
                return False
    return True


def solve_discrepancies(config) -> ResolutionString:
    """Solve the discrepancy system for a chain or for a full Gram matrix.

    ``config`` is either a list of self-intersections (a chain, consecutive
    curves meeting once) or a :class:`~nodalcalc.lattice.Gram` describing an
    arbitrary tree such as an ADE configuration.
    """
    if isinstance(config, Gram):
        g = config
    else:
        config = [int(b) for b in config]
        if not config:
            raise ValueError("empty resolution string")
        g = chain_gram(config)
    if g.n == 0:
        raise ValueError("empty resolution string")
    b = [g[i, i] for i in range(g.n)]
    if any(x > -2 for x in b):
        raise ValueError("not a quotient-singularity string")
    sig = signature(g)
    if sig.positive or sig.zero:
        raise ValueError("not a quotient-singularity string")
    rhs = [2 + x for x in b]
    a = tuple(solve(g.rows(), rhs))
    if any(not (0 <= x < 1) for x in a):
        raise ValueError("not a quotient-singularity string")
    dsq = sum((x * r for x, r in zip(a, rhs)), Fraction(0))
    order = abs(determinant(g)) if _is_chain(g) else None
    return ResolutionString(tuple(b), a, dsq, order)


@dataclass(frozen=True)
class OrbifoldSurface:
    euler_smooth: int
    singularities: tuple[ResolutionString, ...] = ()
    ksq: Fraction | None = None

    @classmethod
    def with_nodes(cls, euler_smooth: int, nodes: int, ksq=None) -> "OrbifoldSurface":
        return cls(euler_smooth, (NODE,) * nodes, None if ksq is None else Fraction(ksq))

    def group_orders(self) -> list[int]:
        orders = []
        for s in self.singularities:
            if s.group_order is None:
                raise ValueError("local group order unsupported for non-chain graphs")
            orders.append(s.group_order)
        return orders


def orbifold_euler(s: OrbifoldSurface | int, group_orders: Iterable[int] = ()) -> Fraction:
    """``e(S) - sum_p (1 - 1/|G_p|)`` as an exact rational.

    Either pass an :class:`OrbifoldSurface`, or the Euler number followed by
    the local group orders.
    """
    if isinstance(s, OrbifoldSurface):
        euler, orders = s.euler_smooth, s.group_orders()
    else:
        euler, orders = s, list(group_orders)
    if any(o < 2 for o in orders):
        raise ValueError("group orders must be >= 2")
    return Fraction(euler) - sum((1 - Fraction(1, o) for o in orders), Fraction(0))


class Canonical(enum.Enum):
    NEF = "nef"
    ANTI_NEF = "anti_nef"


class BMYVerdict(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    EQUALITY = "equality"


def bmy_check(s: OrbifoldSurface, canonical: Canonical | str) -> BMYVerdict:
    """``K^2 <= 3 e_orb`` when K is nef; ``0 <= e_orb`` when -K is nef.

    Equality is reported separately from strict satisfaction.
    """
    canonical = Canonical(canonical)
    e = orbifold_euler(s)
    if canonical is Canonical.NEF:
        if s.ksq is None:
            raise ValueError("K^2 required for the nef branch")
        lhs, rhs = Fraction(s.ksq), 3 * e
    else:
        lhs, rhs = Fraction(0), e
    if lhs == rhs:
        return BMYVerdict.EQUALITY
    return BMYVerdict.SATISFIED if lhs < rhs else BMYVerdict.VIOLATED


def max_singular_points_filter(euler_smooth: int, min_group_order: int) -> int:
    """Largest ``k`` with ``e - k (1 - 1/m) >= 0``.

    For a rational homology plane with nodes this gives 6.  The sharp bound
    of 5 needs a further argument not reproduced here; nothing downstream
    depends on the difference because the square-discriminant test already
    kills every k >= 2.
    """
    if min_group_order < 2:
        raise ValueError("min_group_order must be >= 2")
    if euler_smooth < 0:
        raise ValueError("euler_smooth must be nonnegative")
    m = min_group_order
    return (euler_smooth * m) // (m - 1)


def dsq_total(strings: Iterable[ResolutionString]) -> Fraction:
    return sum((s.dsq for s in strings), Fraction(0))


def canonical_square_on_singular(ksq_resolution, strings: Iterable[ResolutionString]) -> Fraction:
    """``K_S^2`` from ``K_{S'}^2`` and the discrepancy divisors."""
    return Fraction(ksq_resolution) - dsq_total(strings)

