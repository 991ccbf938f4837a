"""Form arithmetic: inner products, root tests, admissible norms."""

import random
from fractions import Fraction

import pytest

import oracles
from vinberg.forms import Form, is_quadratic_residue


def legendre(a, p):
    # Euler's criterion, independent of the package's residue scan
    r = pow(a % p, (p - 1) // 2, p)
    return 0 if r == 0 else (1 if r == 1 else -1)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_admissible_norms_match_residue_conditions(p):
    form = Form(p, 3)
    expected = [1, 2]
    if legendre(-1, p) == 1:
        expected.append(p)
    if legendre(-2, p) == 1:
        expected.append(2 * p)
    assert form.admissible_root_norms == tuple(sorted(expected))


def test_admissible_norms_known_families():
    assert Form(5, 2).admissible_root_norms == (1, 2, 5)
    assert Form(7, 2).admissible_root_norms == (1, 2)
    assert Form(11, 2).admissible_root_norms == (1, 2, 22)
    assert Form(13, 2).admissible_root_norms == (1, 2, 13)
    assert Form(17, 2).admissible_root_norms == (1, 2, 17, 34)
    assert Form(19, 2).admissible_root_norms == (1, 2, 38)
    assert Form(23, 2).admissible_root_norms == (1, 2)


def test_residue_helper_agrees_with_legendre():
    for p in (5, 7, 11, 13, 17, 19, 23):
        for a in range(1, p):
            assert is_quadratic_residue(a, p) == (legendre(a, p) == 1)


def test_inner_product_signature():
    form = Form(7, 3)
    assert form.norm((1, 0, 0, 0)) == -7
    assert form.norm((0, 1, 0, 0)) == 1
    assert form.inner_product((1, 2, 3, 4), (1, 0, 0, 0)) == -7
    u, v = (1, 2, 3, 4), (4, 3, 2, 1)
    assert form.inner_product(u, v) == form.inner_product(v, u)


def test_initial_roots_shape():
    for p, n in ((5, 2), (11, 4), (23, 3)):
        form = Form(p, n)
        roots = form.initial_roots()
        assert len(roots) == n
        for r in roots:
            assert form.is_root(r)
            assert r[0] == 0
            assert form.norm(r) in (1, 2)
        # pairwise obtuse or orthogonal: a valid simple-root system
        for i, a in enumerate(roots):
            for b in roots[:i]:
                assert form.inner_product(a, b) <= 0


def test_is_root_matches_reflection_integrality():
    rng = random.Random(20230)
    for _ in range(600):
        p = rng.choice([5, 7, 11, 13, 17, 19, 23])
        n = rng.randint(2, 4)
        form = Form(p, n)
        v = tuple(rng.randint(-6, 6) for _ in range(n + 1))
        if form.norm(v) <= 0 or not form.is_primitive(v):
            continue
        assert form.satisfies_crystallographic_condition(v) == \
            oracles.reflection_is_integral(form, v)


def test_reflection_involution_and_isometry():
    rng = random.Random(4711)
    form = Form(5, 3)
    roots = [r for r in form.initial_roots()] + [(2, 5, 0, 0), (1, 2, 1, 1)]
    for r in roots:
        assert form.is_root(r)
        for _ in range(20):
            x = tuple(rng.randint(-9, 9) for _ in range(form.dim))
            y = form.reflect(x, r)
            assert form.reflect(y, r) == x
            assert form.norm(y) == form.norm(x)
        assert form.reflect(r, r) == tuple(-c for c in r)


def test_height_values():
    form = Form(5, 2)
    assert form.height((2, 5, 0)) == Fraction(4, 5)
    assert form.height((3, 5, 5)) == Fraction(9, 5)


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        Form(4, 3)
    with pytest.raises(ValueError):
        Form(3, 3)
    with pytest.raises(ValueError):
        Form(7, 1)
    with pytest.raises(ValueError):
        Form(5, 2).norm((1, 2))
