"""Mod-2 reduction of the nodal sublattice and the doubly-even kernel search.

Let ``M`` be spanned by ``mu`` disjoint nodal classes inside an odd unimodular
lattice ``L`` of rank ``r``.  Reduction mod 2 gives ``tau: M/2M -> L/2L``.
Two necessary conditions follow:

* ``M/2M`` carries the zero form, so its image is totally isotropic in the
  nondegenerate space ``L/2L`` and has dimension at most ``r // 2``.  Hence
  ``dim ker(tau) >= mu - r // 2``.
* A kernel element ``C_1 + ... + C_k`` equals ``2D`` modulo torsion.  Since
  ``D.K = 0`` and ``D^2 = D.K (mod 2)``, ``D^2`` is even, and
  ``-2k = (2D)^2 = 4 D^2`` gives ``k = 0 (mod 4)``.  So every kernel vector
  has weight divisible by 4: the kernel is a doubly-even binary code.

Vectors are stored as Python ints; coordinate ``i`` is bit ``i`` and is the
``i``-th character of the printed bitstring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

__all__ = [
    "SEARCH_BUDGET",
    "F2Vector",
    "F2Subspace",
    "ObstructionReport",
    "f2_rank",
    "gram_mod2",
    "min_kernel_dimension",
    "max_doubly_even_dimension",
    "doubly_even_subspace_search",
    "nodal_embedding_obstruction",
]

SEARCH_BUDGET = 16


@dataclass(frozen=True, order=True)
class F2Vector:
    bits: int
    length: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside the ambient length")

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def pivot(self) -> int | None:
        if not self.bits:
            return None
        return (self.bits & -self.bits).bit_length() - 1

    def __add__(self, other: "F2Vector") -> "F2Vector":
        return F2Vector(self.bits ^ other.bits, self.length)

    def dot(self, other: "F2Vector") -> int:
        return (self.bits & other.bits).bit_count() & 1

    def __str__(self):
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    @classmethod
    def from_string(cls, s: str) -> "F2Vector":
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"not a bitstring: {s!r}")
        return cls(bits, len(s))

    @classmethod
    def from_support(cls, support, length: int) -> "F2Vector":
        bits = 0
        for i in support:
            bits |= 1 << i
        return cls(bits, length)


def f2_rank(vectors: Sequence[int]) -> int:
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                break
    return len(pivots)


@dataclass(frozen=True)
class F2Subspace:
    basis: tuple[F2Vector, ...]
    length: int
    dimension: int = field(init=False)

    def __post_init__(self):
        basis = tuple(self.basis)
        if any(v.length != self.length for v in basis):
            raise ValueError("basis vectors have the wrong length")
        if f2_rank([v.bits for v in basis]) != len(basis):
            raise ValueError("basis vectors are dependent over F2")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "dimension", len(basis))

    def vectors(self) -> Iterator[F2Vector]:
        """All ``2**dimension`` elements of the span, zero first."""
        for coeffs in product((0, 1), repeat=self.dimension):
            bits = 0
            for c, v in zip(coeffs, self.basis):
                if c:
                    bits ^= v.bits
            yield F2Vector(bits, self.length)

    def weights(self) -> list[int]:
        return sorted(v.weight for v in self.vectors())

    def is_doubly_even(self) -> bool:
        return all(v.weight % 4 == 0 for v in self.vectors())

    def is_totally_isotropic(self, form: Sequence[Sequence[int]]) -> bool:
        """Check ``b(x, y) = 0`` on the basis for a symmetric F2 bilinear form."""
        for x in self.basis:
            for y in self.basis:
                s = 0
                for i in range(self.length):
                    if x.bits >> i & 1:
                        for j in range(self.length):
                            if y.bits >> j & 1:
                                s ^= form[i][j] & 1
                if s:
                    return False
        return True

    def to_json(self) -> list[str]:
        return [str(v) for v in self.basis]


def gram_mod2(g) -> list[list[int]]:
    from .lattice import as_gram

    return [[x % 2 for x in row] for row in as_gram(g).entries]


def min_kernel_dimension(mu: int, ambient_rank: int) -> int:
    """Lower bound on ``dim ker(tau)`` forced by the isotropic image."""
    if mu < 0 or ambient_rank < 1:
        raise ValueError("need mu >= 0 and ambient_rank >= 1")
    return max(0, mu - ambient_rank // 2)


def _tails(p: int, length: int) -> Iterator[int]:
    # vectors with pivot p in bitstring order of coordinates p+1 .. length-1
    m = length - 1 - p
    positions = [p + 1 + t for t in range(m)]
    for c in range(1 << m):
        bits = 1 << p
        for t, pos in enumerate(positions):
            if c >> (m - 1 - t) & 1:
                bits |= 1 << pos
        yield bits


def _b(x: int, y: int) -> int:
    return (x & y).bit_count() & 1


def _q(x: int) -> int:
    # weight/2 mod 2, a quadratic form on even-weight vectors with polar form x.y
    return (x.bit_count() >> 1) & 1


def _restrict(basis: list[int], functionals: Sequence[int]) -> list[int]:
    """Basis of the subspace of span(basis) killed by every functional ``v -> v.f``."""
    basis = list(basis)
    for f in functionals:
        hit = [v for v in basis if _b(v, f)]
        if not hit:
            continue
        u = hit[0]
        basis = [v ^ u if _b(v, f) else v for v in basis if v != u]
    return basis


def max_doubly_even_dimension(basis: Sequence[int]) -> int:
    """Largest doubly-even subspace inside the span of even-weight vectors.

    This is the Witt index of ``q(v) = wt(v)/2 mod 2``.  Split the span
    into the radical of ``x.y`` and hyperbolic pairs; ``q`` is linear on
    the radical, and the answer is ``dim ker(q|rad)`` plus the number of
    pairs, minus the Arf invariant when ``q`` vanishes on the radical.
    """
    vecs = []
    for v in basis:
        if v.bit_count() & 1:
            raise ValueError("basis vectors must have even weight")
        vecs.append(v)
    if f2_rank(vecs) != len(vecs):
        raise ValueError("basis vectors are dependent over F2")
    radical, pairs = [], []
    while vecs:
        e = vecs.pop()
        f = next((v for v in vecs if _b(e, v)), None)
        if f is None:
            radical.append(e)
            continue
        vecs.remove(f)
        rest = []
        for v in vecs:
            if _b(v, f):
                v ^= e
            if _b(v, e):
                v ^= f
            rest.append(v)
        vecs = rest
        pairs.append((e, f))
    defective = any(_q(z) for z in radical)
    r0 = len(radical) - 1 if defective else len(radical)
    if defective:
        return r0 + len(pairs)
    arf = sum(_q(e) & _q(f) for e, f in pairs) & 1
    return r0 + len(pairs) - arf


def doubly_even_subspace_search(mu: int, target_dim: int) -> F2Subspace | None:
    """Find a ``target_dim``-dimensional doubly-even subspace of ``F2^mu``.

    The search is exhaustive over reduced row echelon bases.  Bases are
    compared vector by vector, each vector by (pivot position, bitstring),
    and the first one in that order is returned.  A set of generators spans
    a doubly-even code iff each has weight divisible by 4 and every pair
    meets in an even number of coordinates; the search prunes on that and
    on :func:`max_doubly_even_dimension` of the space still available.
    """
    if mu > SEARCH_BUDGET:
        raise ValueError("search budget exceeded")
    if mu < 0 or target_dim < 0:
        raise ValueError("mu and target_dim must be nonnegative")
    if target_dim == 0:
        return F2Subspace((), mu)
    # doubly even implies self-orthogonal, so dim <= mu / 2
    if 2 * target_dim > mu:
        return None

    basis: list[int] = []

    def extend(first_pivot: int) -> bool:
        need = target_dim - len(basis)
        if need == 0:
            return True
        # the remaining vectors live in the even-weight vectors supported from
        # first_pivot on and orthogonal to the basis so far
        tail = [1 << i for i in range(first_pivot, mu)]
        ones = sum(tail)
        room = _restrict(tail, [ones] + basis)
        if max_doubly_even_dimension(room) < need:
            return False
        used = 0
        for b in basis:
            used |= b
        for p in range(first_pivot, mu - need + 1):
            if used >> p & 1:
                continue
            for v in _tails(p, mu):
                if v.bit_count() % 4:
                    continue
                if any((v & b).bit_count() & 1 for b in basis):
                    continue
                basis.append(v)
                if extend(p + 1):
                    return True
                basis.pop()
        return False

    if not extend(0):
        return None
    return F2Subspace(tuple(F2Vector(b, mu) for b in basis), mu)


@dataclass(frozen=True)
class ObstructionReport:
    mu: int
    ambient_rank: int
    min_kernel_dim: int
    feasible: bool
    witness: F2Subspace | None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "ambient_rank": self.ambient_rank,
            "min_kernel_dim": self.min_kernel_dim,
            "feasible": self.feasible,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def nodal_embedding_obstruction(mu: int, ambient_rank: int) -> ObstructionReport:
    """Can ``mu`` disjoint nodal classes sit in an odd unimodular lattice of this rank?

    ``feasible`` means only that neither mod-2 condition rules it out.
    """
    d = min_kernel_dimension(mu, ambient_rank)
    witness = doubly_even_subspace_search(mu, d)
    if witness is None:
        note = f"no doubly-even subspace of dimension {d} in F2^{mu}"
    elif d == 0:
        note = "image of M/2M fits in a maximal isotropic subspace"
    else:
        note = f"doubly-even kernel of dimension {d} exists"
    return ObstructionReport(mu, ambient_rank, d, witness is not None, witness, note)
