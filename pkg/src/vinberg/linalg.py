"""Exact linear algebra over the rationals and the integers.

Matrices are plain lists of row lists, vectors are sequences of ints or
Fractions.  Nothing here ever touches floating point; every routine is
deterministic, so identical inputs give byte-identical downstream reports.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, isqrt
from typing import Sequence


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*A)]


def mat_mul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def dot(u, v):
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum(a * b for a, b in zip(u, v))


def vec_content(v) -> int:
    """Gcd of the entries, 0 for the zero vector."""
    g = 0
    for x in v:
        g = gcd_int(g, x)
    return g


def gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def exgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def rref(A) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals.

    Returns (R, pivots) where pivots lists the pivot column of each nonzero
    row.  The input is not modified.
    """
    R = [[Fraction(x) for x in row] for row in A]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if R[i][c] != 0), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = R[r][c]
        R[r] = [x / inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rank(A) -> int:
    return len(rref(A)[1])


def kernel(A) -> list[list[Fraction]]:
    """Basis of the rational null space {x : A x = 0}."""
    m = len(A)
    n = len(A[0]) if m else 0
    R, pivots = rref(A)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        basis.append(v)
    return basis


def solve(A, b):
    """One exact solution of A x = b, or None if the system is inconsistent."""
    m = len(A)
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    n = len(A[0]) if m else 0
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = R[r][n]
    return x


def det(A):
    """Exact determinant; integer input gives an int back."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c] != 0), None)
        if pr is None:
            return 0
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            sign = -sign
        piv = M[c][c]
        result *= piv
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] / piv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    result *= sign
    return int(result) if result.denominator == 1 else result


def mat_inv(A) -> list[list[Fraction]]:
    """Exact inverse of a square matrix; raises on singular input."""
    n = len(A)
    aug = [list(map(Fraction, A[i])) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    R, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


def row_hnf(A) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite normal form of an integer matrix.

    Returns (H, U) with U unimodular and U A = H.  Pivots are positive,
    entries above a pivot are reduced into [0, pivot), zero rows sink to
    the bottom.
    """
    H = [[int(x) for x in row] for row in A]
    m = len(H)
    n = len(H[0]) if m else 0
    U = identity(m)
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if H[i][c] != 0), None)
        if piv is None:
            continue
        H[r], H[piv] = H[piv], H[r]
        U[r], U[piv] = U[piv], U[r]
        for i in range(r + 1, m):
            if H[i][c] == 0:
                continue
            g, s, t = exgcd(H[r][c], H[i][c])
            a, b = H[r][c] // g, H[i][c] // g
            # det of [[s, t], [-b, a]] is s*a + t*b = 1
            H[r], H[i] = (
                [s * x + t * y for x, y in zip(H[r], H[i])],
                [a * y - b * x for x, y in zip(H[r], H[i])],
            )
            U[r], U[i] = (
                [s * x + t * y for x, y in zip(U[r], U[i])],
                [a * y - b * x for x, y in zip(U[r], U[i])],
            )
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
        if r == m:
            break
    return H, U


def hnf_basis(vectors) -> list[list[int]]:
    """Canonical basis (nonzero HNF rows) of the lattice spanned by the rows."""
    if not vectors:
        return []
    H, _ = row_hnf(vectors)
    return [row for row in H if any(row)]


def integer_kernel(A) -> list[list[int]]:
    """Basis of the saturated lattice {x in Z^n : A x = 0}.

    The zero rows of the HNF of A^T correspond to unimodular-transform rows
    spanning exactly the integer kernel.
    """
    At = transpose(A)
    H, U = row_hnf(At)
    return [list(U[i]) for i in range(len(H)) if not any(H[i])]


def snf(A) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form.  Returns (D, U, V) with U A V = D diagonal,
    each diagonal entry nonnegative and dividing the next."""
    D = [[int(x) for x in row] for row in A]
    m = len(D)
    n = len(D[0]) if m else 0
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def combine_rows(i, j, s, t, a, b):
        # rows i, j <- (s i + t j, a j - b i), unimodular since s a + t b = 1
        D[i], D[j] = (
            [s * x + t * y for x, y in zip(D[i], D[j])],
            [a * y - b * x for x, y in zip(D[i], D[j])],
        )
        U[i], U[j] = (
            [s * x + t * y for x, y in zip(U[i], U[j])],
            [a * y - b * x for x, y in zip(U[i], U[j])],
        )

    def combine_cols(i, j, s, t, a, b):
        for row in (*D, *V):
            x, y = row[i], row[j]
            row[i], row[j] = s * x + t * y, a * y - b * x

    for t0 in range(min(m, n)):
        while True:
            # move a nonzero entry of the trailing block to the corner
            pos = next(
                ((i, j) for i in range(t0, m) for j in range(t0, n) if D[i][j] != 0),
                None,
            )
            if pos is None:
                break
            if pos[0] != t0:
                swap_rows(t0, pos[0])
            if pos[1] != t0:
                swap_cols(t0, pos[1])
            for i in range(t0 + 1, m):
                if D[i][t0] == 0:
                    continue
                if D[i][t0] % D[t0][t0] == 0:
                    # plain subtraction keeps the corner row untouched
                    q = D[i][t0] // D[t0][t0]
                    D[i] = [x - q * y for x, y in zip(D[i], D[t0])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t0])]
                else:
                    g, s, t = exgcd(D[t0][t0], D[i][t0])
                    combine_rows(t0, i, s, t, D[t0][t0] // g, D[i][t0] // g)
            for j in range(t0 + 1, n):
                if D[t0][j] == 0:
                    continue
                if D[t0][j] % D[t0][t0] == 0:
                    q = D[t0][j] // D[t0][t0]
                    for row in (*D, *V):
                        row[j] -= q * row[t0]
                else:
                    g, s, t = exgcd(D[t0][t0], D[t0][j])
                    combine_cols(t0, j, s, t, D[t0][t0] // g, D[t0][j] // g)
            # column ops can re-dirty the column under the corner
            if any(D[i][t0] for i in range(t0 + 1, m)) or any(
                D[t0][j] for j in range(t0 + 1, n)
            ):
                continue
            bad = next(
                (
                    (i, j)
                    for i in range(t0 + 1, m)
                    for j in range(t0 + 1, n)
                    if D[i][j] % D[t0][t0] != 0
                ),
                None,
            )
            if bad is None:
                break
            # fold the offending row in so the corner gcd can shrink
            D[t0] = [x + y for x, y in zip(D[t0], D[bad[0]])]
            U[t0] = [x + y for x, y in zip(U[t0], U[bad[0]])]
        if D[t0][t0] < 0:
            D[t0] = [-x for x in D[t0]]
            U[t0] = [-x for x in U[t0]]
    return D, U, V


def complete_basis(v: Sequence[int]) -> list[list[int]]:
    """Basis of Z^n, as rows, whose first row is the primitive vector v."""
    n = len(v)
    if vec_content(v) != 1:
        raise ValueError("vector is not primitive")
    col = [[int(x)] for x in v]
    H, U = row_hnf(col)
    if H[0][0] != 1:
        raise ValueError("vector is not primitive")
    # U v = e1, so the first column of U^-1 is v
    B = mat_inv(U)
    W = transpose(B)
    return [[int(x) for x in row] for row in W]


def psd_classify(G) -> str:
    """Classify a symmetric rational matrix by its quadratic form.

    Returns "definite" (positive definite), "degenerate" (positive
    semidefinite with nontrivial kernel) or "indefinite".  Uses exact
    Schur-complement pivoting on positive diagonal entries: a PSD matrix
    with a zero diagonal entry must have the whole row zero.
    """
    A = [[Fraction(x) for x in row] for row in G]
    active = list(range(len(A)))
    while active:
        piv = next((i for i in active if A[i][i] > 0), None)
        if piv is None:
            for i in active:
                for j in active:
                    if A[i][j] != 0:
                        return "indefinite"
            return "degenerate"
        active.remove(piv)
        d = A[piv][piv]
        for i in active:
            if A[i][piv] != 0:
                f = A[i][piv] / d
                for j in active:
                    A[i][j] -= f * A[piv][j]
    return "definite"


def charpoly(M) -> list:
    """Characteristic polynomial det(x I - M) by the Faddeev-LeVerrier
    recurrence.  Returns coefficients [1, c1, ..., cn]; integer matrices
    give integer coefficients."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    coeffs = [Fraction(1)]
    Mk = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        Mk = mat_mul(A, Mk)
        c = -sum(Mk[i][i] for i in range(n)) / k
        for i in range(n):
            Mk[i][i] += c
        coeffs.append(c)
    out = []
    for c in coeffs:
        out.append(int(c) if c.denominator == 1 else c)
    return out


def ldl(G) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Decompose a positive definite rational matrix as Q(x) = sum_i
    d_i (x_i + sum_{j>i} l_ij x_j)^2.  Returns (L, d) with L unit upper
    triangular row-wise coefficients."""
    n = len(G)
    A = [[Fraction(x) for x in row] for row in G]
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    for i in range(n):
        d[i] = A[i][i]
        if d[i] <= 0:
            raise ValueError("matrix is not positive definite")
        for j in range(i + 1, n):
            L[i][j] = A[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                A[r][c] -= A[i][r] * A[i][c] / d[i]
    return L, d


def short_vectors(G, bound) -> list[tuple[int, ...]]:
    """All x in Z^n with 0 < x^T G x <= bound, one per sign pair.

    G must be positive definite.  The representative of {x, -x} has its
    first nonzero coordinate positive.  Exact Fincke-Pohst walk; interval
    endpoints come from integer square roots plus a two-sided exact
    correction, so no candidate is ever missed.
    """
    n = len(G)
    L, d = ldl(G)
    bound = Fraction(bound)
    found: list[tuple[int, ...]] = []
    x = [0] * n

    def center(i: int) -> Fraction:
        return sum(L[i][j] * x[j] for j in range(i + 1, n))

    def walk(i: int, remaining: Fraction) -> None:
        if i < 0:
            if remaining < bound:  # excludes the zero vector: x = 0 keeps remaining == bound
                vec = tuple(x)
                for entry in vec:
                    if entry > 0:
                        found.append(vec)
                        break
                    if entry < 0:
                        break
            return
        c = center(i)
        r = remaining / d[i]
        # integer window: -c - sqrt(r) <= t <= -c + sqrt(r)
        s = isqrt(r.numerator * r.denominator)
        approx = Fraction(s, r.denominator)  # sqrt(r) lies in [approx, approx + 1/den)

        def fits(v: Fraction) -> bool:
            return v <= 0 or v * v <= r

        hi = floor(approx - c)
        if fits(hi + 1 + c):
            hi += 1
        lo = -floor(approx + c)
        if fits(-(lo - 1) - c):
            lo -= 1
        for t in range(lo, hi + 1):
            x[i] = t
            walk(i - 1, remaining - d[i] * (t + c) ** 2)
        x[i] = 0

    walk(n - 1, bound)
    return sorted(found)
