"""Independent reference computations used only by the tests.

None of these share code with the package: determinants by cofactor
expansion, signatures by Descartes' rule on the characteristic polynomial,
Smith forms by determinantal divisors, subspaces by brute enumeration.
"""

from fractions import Fraction
from itertools import combinations, product
from math import gcd


def cofactor_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def charpoly(m):
    """Coefficients c_0..c_n of det(xI - m), highest degree first (Faddeev-LeVerrier)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        prod = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[-1]
        mk = prod
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(am[i][i] for i in range(n)) / k)
    return coeffs


def _sign_changes(seq):
    signs = [1 if c > 0 else -1 for c in seq if c != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def descartes_signature(m):
    """(positive, negative, zero) eigenvalue counts of a real symmetric matrix.

    All roots of the characteristic polynomial are real, so Descartes' rule
    of signs is exact.
    """
    n = len(m)
    c = charpoly(m)  # c[k] multiplies x^(n-k)
    zero = 0
    while zero < n and c[n - zero] == 0:
        zero += 1
    pos = _sign_changes(c)
    neg = _sign_changes([ck * (-1) ** (n - k) for k, ck in enumerate(c)])
    return pos, neg, zero


def determinantal_divisors(m):
    """Smith elementary divisors from gcds of k x k minors."""
    n = len(m)
    out = []
    prev = 1
    for k in range(1, n + 1):
        g = 0
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                g = gcd(g, cofactor_det([[m[i][j] for j in cols] for i in rows]))
        if g == 0:
            out.extend([0] * (n - k + 1))
            return out
        out.append(g // prev)
        prev = g
    return out


def cramer_solve(m, rhs):
    d = cofactor_det(m)
    out = []
    for i in range(len(m)):
        mi = [row[:i] + [b] + row[i + 1:] for row, b in zip(m, rhs)]
        out.append(Fraction(cofactor_det(mi), d))
    return out


def span(vectors):
    out = set()
    for coeffs in product((0, 1), repeat=len(vectors)):
        x = 0
        for c, v in zip(coeffs, vectors):
            if c:
                x ^= v
        out.add(x)
    return frozenset(out)


def doubly_even_subspaces(n, dim):
    """All doubly-even subspaces of F2^n of the given dimension, as frozensets of ints.

    Enumerates every dim-subset of candidate basis vectors, keeps the
    independent ones, and checks every element of the span.
    """
    if dim == 0:
        return {frozenset({0})}
    candidates = [v for v in range(1, 1 << n) if bin(v).count("1") % 4 == 0]
    found = set()
    for basis in combinations(candidates, dim):
        s = span(basis)
        if len(s) == 1 << dim and all(bin(v).count("1") % 4 == 0 for v in s):
            found.add(s)
    return found


def max_isotropic_dim_identity_form(n):
    """Largest totally isotropic subspace of F2^n under x.y (odd unimodular mod 2)."""
    best = 0
    vecs = [v for v in range(1, 1 << n) if bin(v).count("1") % 2 == 0]
    for d in range(1, n + 1):
        ok = False
        for basis in combinations(vecs, d):
            if all(bin(a & b).count("1") % 2 == 0 for a in basis for b in basis) and len(span(basis)) == 1 << d:
                ok = True
                break
        if not ok:
            break
        best = d
    return best


def mis_exhaustive(vertices, edges):
    vertices = list(vertices)
    es = {(min(a, b), max(a, b)) for a, b in edges}
    for size in range(len(vertices), -1, -1):
        for sub in combinations(vertices, size):
            if all((min(a, b), max(a, b)) not in es for a, b in combinations(sub, 2)):
                return size
    return 0


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest
