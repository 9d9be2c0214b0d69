"""Exact arithmetic on integer lattices given by symmetric Gram matrices.

Everything here works over Python integers and :class:`fractions.Fraction`;
there is no floating point anywhere.  Curves are basis vectors with their
self-intersection on the diagonal, so a nodal curve is the block ``<-2>``
and a canonical class with ``K^2 = c`` is the block ``<c>``.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "Gram",
    "EMPTY",
    "Signature",
    "SmithForm",
    "determinant",
    "signature",
    "smith_normal_form",
    "direct_sum",
    "square_discriminant_test",
    "ade_gram",
    "diagonal",
    "nodal_block",
    "solve",
]


@dataclass(frozen=True)
class Gram:
    """A symmetric integer Gram matrix.

    The 0x0 matrix is the empty lattice (determinant 1, signature (0, 0, 0)).
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_as_int(x) for x in row) for row in self.entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Gram":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return self.n

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data) -> "Gram":
        """Accept a JSON string or an already-decoded array of arrays.

        Entries may be decimal strings or JSON integers.
        """
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("Gram JSON must be an array of arrays")
        return cls.from_rows([[_as_int(x) for x in r] for r in data])

    def __repr__(self):
        return f"Gram({self.rows()!r})"


EMPTY = Gram(())


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise ValueError("boolean is not a Gram entry")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip().replace("−", "-"))
        except ValueError:
            raise ValueError(f"not a decimal integer: {x!r}") from None
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    raise ValueError(f"not an integer: {x!r}")


def as_gram(g) -> Gram:
    return g if isinstance(g, Gram) else Gram.from_rows(g)


@dataclass(frozen=True)
class Signature:
    positive: int
    negative: int
    zero: int

    def __iter__(self):
        return iter((self.positive, self.negative, self.zero))

    def __add__(self, other: "Signature") -> "Signature":
        return Signature(
            self.positive + other.positive,
            self.negative + other.negative,
            self.zero + other.zero,
        )

    @property
    def rank(self) -> int:
        return self.positive + self.negative + self.zero

    def to_json(self):
        return {"positive": self.positive, "negative": self.negative, "zero": self.zero}


@dataclass(frozen=True)
class SmithForm:
    elementary_divisors: tuple[int, ...]

    def __iter__(self):
        return iter(self.elementary_divisors)

    def nonzero_product(self) -> int:
        return math.prod(d for d in self.elementary_divisors if d)

    def discriminant_group(self) -> tuple[int, ...]:
        """Orders of the nontrivial cyclic factors of the cokernel."""
        return tuple(d for d in self.elementary_divisors if d > 1)

    def to_json(self):
        return [str(d) for d in self.elementary_divisors]


def determinant(g) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = as_gram(g).rows()
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def signature(g) -> Signature:
    """Sylvester signature by congruence diagonalization over the rationals.

    At step ``i`` the pivot is the diagonal entry if nonzero, else the lowest
    later nonzero diagonal entry (swapped in), else ``e_i <- e_i + e_j`` for
    the lowest ``j`` with a nonzero off-diagonal entry.  A row that is zero
    on the remaining block contributes to the radical.
    """
    a = [[Fraction(x) for x in row] for row in as_gram(g).entries]
    n = len(a)
    pos = neg = zero = 0
    for i in range(n):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if j is None:
                    zero += 1
                    continue
                # e_i <- e_i + e_j; new diagonal is 2*a[i][j] since a[j][j] == 0
                for k in range(n):
                    a[i][k] += a[j][k]
                for k in range(n):
                    a[k][i] += a[k][j]
        p = a[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for r in range(i + 1, n):
            f = a[r][i] / p
            if f:
                for c in range(i, n):
                    a[r][c] -= f * a[i][c]
        for r in range(i + 1, n):
            a[i][r] = Fraction(0)
            a[r][i] = Fraction(0)
    return Signature(pos, neg, zero)


def smith_normal_form(g) -> SmithForm:
    """Elementary divisors d_1 | d_2 | ... | d_n, zeros last."""
    a = as_gram(g).rows()
    n = len(a)
    divisors = []
    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                divisors.extend([0] * (n - t))
                return SmithForm(tuple(divisors))
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                q = a[i][t] // p
                if q:
                    for c in range(t, n):
                        a[i][c] -= q * a[t][c]
                dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for r in range(t, n):
                        a[r][j] -= q * a[r][t]
                dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            for c in range(t, n):
                a[t][c] += a[bad][c]
        divisors.append(abs(a[t][t]))
    return SmithForm(tuple(divisors))


def direct_sum(a, b) -> Gram:
    a, b = as_gram(a), as_gram(b)
    n, m = a.n, b.n
    rows = [list(r) + [0] * m for r in a.entries]
    rows += [[0] * n + list(r) for r in b.entries]
    return Gram.from_rows(rows)


def diagonal(*values: int) -> Gram:
    n = len(values)
    return Gram.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def nodal_block(k: int, ksq: int | None = None) -> Gram:
    """``A1^k`` optionally followed by the canonical block ``<ksq>``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    diag = [-2] * k if ksq is None else [-2] * k + [ksq]
    n = len(diag)
    return Gram(tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)))


def square_discriminant_test(g) -> bool:
    """Necessary condition for ``g`` to have finite index in a unimodular lattice."""
    d = determinant(g)
    if d == 0:
        raise ValueError("radical nonzero")
    d = abs(d)
    r = math.isqrt(d)
    return r * r == d


_ADE_RE = re.compile(r"^\s*([ADE])_?(\d+)\s*$")


def _ade_edges(kind: str, n: int) -> list[tuple[int, int]]:
    if kind == "A":
        if n < 1:
            raise ValueError(f"invalid ADE rank: A{n}")
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        if n < 4:
            raise ValueError(f"invalid ADE rank: D{n}")
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if n not in (6, 7, 8):
        raise ValueError(f"invalid ADE rank: E{n}")
    return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]


def ade_gram(label: str) -> Gram:
    """Negative-definite root lattice: -2 on the diagonal, +1 on Dynkin edges."""
    m = _ADE_RE.match(label) if isinstance(label, str) else None
    if m is None:
        raise ValueError(f"invalid ADE label: {label!r}")
    kind, n = m.group(1), int(m.group(2))
    rows = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _ade_edges(kind, n):
        rows[i][j] = rows[j][i] = 1
    return Gram.from_rows(rows)


def solve(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Solve a nonsingular square integer system exactly.

    Forward elimination is fraction-free (Bareiss) on the augmented matrix;
    only the back substitution touches rationals.
    """
    n = len(matrix)
    if len(rhs) != n or any(len(r) != n for r in matrix):
        raise ValueError("system must be square with matching right-hand side")
    a = [[_as_int(x) for x in row] + [_as_int(b)] for row, b in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise ValueError("singular system")
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * akk - aik * a[k][j]) // prev
            a[i][k] = 0
        prev = akk
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        s = Fraction(a[i][n]) - sum(a[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / a[i][i]
    return x
