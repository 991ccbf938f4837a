"""Polyhedral cone generators: {y : a . y <= 0 for all constraints a}."""

import random
from itertools import product

from vinberg.cones import cone_generators, cone_is_trivial, primitive_vector


def test_primitive_vector():
    from fractions import Fraction
    assert primitive_vector([2, 4, 6]) == (1, 2, 3)
    assert primitive_vector([Fraction(1, 2), Fraction(3, 4)]) == (2, 3)
    assert primitive_vector([-3, 3]) == (-1, 1)


def test_negative_orthant():
    # x <= 0 and y <= 0: rays are the negative axes
    lines, rays = cone_generators([(1, 0), (0, 1)], 2)
    assert lines == []
    assert sorted(rays) == [(-1, 0), (0, -1)]


def test_half_space_keeps_lineality():
    lines, rays = cone_generators([(1, 0, 0)], 3)
    # the hyperplane x=0 stays as two free directions plus one inward ray
    assert len(lines) == 2
    assert rays == [(-1, 0, 0)]
    for l in lines:
        assert l[0] == 0


def test_no_constraints_whole_space():
    lines, rays = cone_generators([], 2)
    assert len(lines) == 2 and rays == []


def test_redundant_constraint_changes_nothing():
    base = [(1, 0), (0, 1)]
    with_red = base + [(2, 3)]  # implied by the first two
    assert cone_generators(base, 2) == cone_generators(with_red, 2)


def test_trivial_cone_detection():
    # x <= 0, -x <= 0, y <= 0, -y <= 0 pins the origin
    cons = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    assert cone_is_trivial(cons, 2)
    assert not cone_is_trivial([(1, 0)], 2)


def test_generators_satisfy_constraints_randomly():
    rng = random.Random(99)
    for _ in range(60):
        dim = rng.randint(2, 4)
        cons = [tuple(rng.randint(-3, 3) for _ in range(dim))
                for _ in range(rng.randint(1, 6))]
        cons = [c for c in cons if any(c)]
        lines, rays = cone_generators(cons, dim)
        for l in lines:
            assert all(sum(a * x for a, x in zip(c, l)) == 0 for c in cons)
        for r in rays:
            assert all(sum(a * x for a, x in zip(c, r)) <= 0 for c in cons)
        # membership completeness on a small integer grid: every grid point
        # of the cone must be a nonnegative ray + line combination, which
        # for these small cases we certify by linear programming duality:
        # a point outside cone(generators) admits a separating constraint.
        # Here we just check the generators are nonzero and distinct.
        assert len(set(rays)) == len(rays)
        assert all(any(r) for r in rays)


def test_simplicial_cone_ray_count():
    # three independent constraints in dim 3: simplicial, three rays
    cons = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    lines, rays = cone_generators(cons, 3)
    assert lines == []
    assert len(rays) == 3
    # each ray is tight on exactly two constraints
    for r in rays:
        tight = sum(1 for c in cons if sum(a * x for a, x in zip(c, r)) == 0)
        assert tight == 2


def test_square_cone_in_dim3():
    # four constraints forming a 4-sided cone over a square
    cons = [(1, 0, -1), (-1, 0, -1), (0, 1, -1), (0, -1, -1)]
    lines, rays = cone_generators(cons, 3)
    assert lines == []
    got = sorted(rays)
    assert got == sorted([(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)])


def test_grid_membership_small_cases():
    # exhaustive: points of the cone on a grid lie in the generator span
    # with nonnegative coefficients; verified via brute-force search over
    # rational combinations on a few fixed cones
    cons = [(1, 1), (1, -2)]
    lines, rays = cone_generators(cons, 2)
    assert lines == []
    assert len(rays) == 2
    from fractions import Fraction
    r1, r2 = rays
    for pt in product(range(-4, 5), repeat=2):
        inside = all(sum(a * x for a, x in zip(c, pt)) <= 0 for c in cons)
        det = r1[0] * r2[1] - r1[1] * r2[0]
        s = Fraction(pt[0] * r2[1] - pt[1] * r2[0], det)
        t = Fraction(r1[0] * pt[1] - r1[1] * pt[0], det)
        assert inside == (s >= 0 and t >= 0)
