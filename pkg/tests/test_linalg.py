"""Exact integer and rational linear algebra, cross-checked against sympy."""

import random
from fractions import Fraction

import sympy
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_form

from vinberg import linalg


def random_matrix(rng, rows, cols, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def test_hnf_matches_sympy_row_span():
    rng = random.Random(11)
    for _ in range(40):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        A = random_matrix(rng, rows, cols)
        ours = linalg.hnf_basis(A)
        M = sympy.Matrix(A)
        if M.rank() == 0:
            assert ours == []
            continue
        # sympy computes a column-style HNF; compare row spans via ranks
        theirs = hermite_normal_form(M.T).T.tolist()
        combined = [list(r) for r in ours] + [list(r) for r in theirs]
        assert linalg.rank(ours) == linalg.rank(theirs) == linalg.rank(combined)
        # integer span equality: each basis solves over Z in the other
        for basis, other in ((ours, theirs), (theirs, ours)):
            for row in other:
                sol = linalg.solve([[b[i] for b in basis] for i in range(len(row))], list(row))
                assert sol is not None
                assert all(x.denominator == 1 for x in sol)


def test_snf_invariant_factors_match_sympy():
    rng = random.Random(13)
    for _ in range(30):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        A = random_matrix(rng, rows, cols)
        D, U, V = linalg.snf(A)
        # D = U A V with unimodular U, V
        assert abs(linalg.det(U)) == 1
        assert abs(linalg.det(V)) == 1
        assert linalg.mat_mul(linalg.mat_mul(U, A), V) == D
        diag = [D[i][i] for i in range(min(rows, cols))]
        for a, b in zip(diag, diag[1:]):
            if b:
                assert a != 0 and b % a == 0
        sdiag = smith_normal_form(sympy.Matrix(A))
        sd = [abs(sdiag[i, i]) for i in range(min(rows, cols))]
        assert [abs(d) for d in diag] == sd


def test_integer_kernel_is_saturated():
    rng = random.Random(17)
    for _ in range(40):
        rows, cols = rng.randint(1, 3), rng.randint(2, 5)
        A = random_matrix(rng, rows, cols, -5, 5)
        K = linalg.integer_kernel(A)
        for k in K:
            assert all(sum(a * x for a, x in zip(row, k)) == 0 for row in A)
        # saturation: every rational kernel vector, scaled integral,
        # must lie in the integer span of K
        for q in linalg.kernel(A):
            denom = 1
            for x in q:
                denom = denom * x.denominator // sympy.gcd(denom, x.denominator)
            v = [int(x * denom) for x in q]
            if not any(v):
                continue
            sol = linalg.solve([[b[i] for b in K] for i in range(cols)], v)
            assert sol is not None and all(x.denominator == 1 for x in sol)


def test_solve_and_inverse():
    rng = random.Random(19)
    for _ in range(30):
        d = rng.randint(1, 4)
        A = random_matrix(rng, d, d)
        b = [rng.randint(-9, 9) for _ in range(d)]
        x = linalg.solve(A, b)
        if linalg.det(A) == 0:
            continue
        assert x is not None
        for i in range(d):
            assert sum(Fraction(A[i][j]) * x[j] for j in range(d)) == b[i]
        Ai = linalg.mat_inv(A)
        eye = linalg.mat_mul(A, Ai)
        for i in range(d):
            for j in range(d):
                assert eye[i][j] == (1 if i == j else 0)


def test_charpoly_matches_sympy():
    rng = random.Random(23)
    for _ in range(20):
        d = rng.randint(1, 4)
        A = random_matrix(rng, d, d, -4, 4)
        ours = linalg.charpoly(A)
        lam = sympy.symbols("lam")
        theirs = sympy.Matrix(A).charpoly(lam).all_coeffs()
        assert ours == [int(c) for c in theirs]


def test_short_vectors_against_box_scan():
    rng = random.Random(29)
    for _ in range(15):
        d = rng.randint(1, 3)
        B = random_matrix(rng, d, d, -2, 2)
        G = [[sum(B[i][k] * B[j][k] for k in range(d)) + (4 if i == j else 0)
              for j in range(d)] for i in range(d)]
        bound = rng.randint(1, 30)
        got = set(linalg.short_vectors(G, bound))
        # brute force over a generous box
        lim = bound  # diagonal entries are >= 4, so coords are small
        brute = set()
        def norm(v):
            return sum(v[i] * G[i][j] * v[j] for i in range(d) for j in range(d))
        from itertools import product
        for v in product(range(-lim, lim + 1), repeat=d):
            if not any(v):
                continue
            if norm(v) <= bound:
                brute.add(v)
        # short_vectors returns one of each +/- pair
        assert all(norm(v) <= bound for v in got)
        paired = got | {tuple(-x for x in v) for v in got}
        assert paired == brute


def test_psd_classify():
    assert linalg.psd_classify([[2, 0], [0, 3]]) == "definite"
    assert linalg.psd_classify([[1, 1], [1, 1]]) == "degenerate"
    assert linalg.psd_classify([[1, 3], [3, 1]]) == "indefinite"
    assert linalg.psd_classify([[0]]) == "degenerate"
    assert linalg.psd_classify([[-1]]) == "indefinite"


def test_ldl_reconstructs_gram():
    rng = random.Random(31)
    for _ in range(20):
        d = rng.randint(1, 4)
        B = random_matrix(rng, d, d, -3, 3)
        G = [[sum(B[i][k] * B[j][k] for k in range(d)) + (2 if i == j else 0)
              for j in range(d)] for i in range(d)]
        L, diag = linalg.ldl(G)
        # convention: Q(x) = sum_k d_k (x_k + sum_{j>k} L[k][j] x_j)^2,
        # so G = L^T D L with L unit upper triangular
        for i in range(d):
            for j in range(d):
                s = sum(diag[k] * L[k][i] * L[k][j] for k in range(d))
                assert s == G[i][j]
