"""The quadratic lattices Z^{n+1} with form -p x0^2 + x1^2 + ... + xn^2.

Vectors are (n+1)-tuples of ints indexed 0..n; coordinate 0 carries the
negative sign.  Throughout, p is an odd prime >= 5 and n >= 2, giving a
Lorentzian lattice of signature (1, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

Vector = tuple[int, ...]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


def is_quadratic_residue(a: int, p: int) -> bool:
    a %= p
    return any(x * x % p == a for x in range(p))


@dataclass(frozen=True)
class Form:
    """The form -p x0^2 + x1^2 + ... + xn^2 on Z^{n+1}."""

    p: int
    n: int

    def __post_init__(self):
        if not _is_prime(self.p) or self.p < 5:
            raise ValueError("p must be a prime >= 5")
        if self.n < 2:
            raise ValueError("n must be >= 2")

    @property
    def dim(self) -> int:
        return self.n + 1

    def inner_product(self, u: Vector, v: Vector) -> int:
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("dimension mismatch")
        return -self.p * u[0] * v[0] + sum(a * b for a, b in zip(u[1:], v[1:]))

    def norm(self, v: Vector) -> int:
        return self.inner_product(v, v)

    def gram(self, vectors) -> list[list[int]]:
        return [[self.inner_product(u, v) for v in vectors] for u in vectors]

    @property
    def form_matrix(self) -> list[list[int]]:
        d = self.dim
        return [
            [(-self.p if i == 0 else 1) if i == j else 0 for j in range(d)]
            for i in range(d)
        ]

    @property
    def control_vector(self) -> Vector:
        """The norm -p vector the fundamental chamber is built around."""
        return (1,) + (0,) * self.n

    def is_primitive(self, v: Vector) -> bool:
        g = 0
        for x in v:
            g = gcd(g, x)
        return g == 1

    def satisfies_crystallographic_condition(self, v: Vector, m: int | None = None) -> bool:
        """Whether reflection in v maps the lattice to itself.

        The reflection x -> x - 2 <x,v>/<v,v> v is integral exactly when
        <v,v> divides 2 <b,v> for every basis vector b, i.e. m | 2 p v0 and
        m | 2 vi for i >= 1.  Pass m to test divisibility against a declared
        norm instead of <v,v>.
        """
        if m is None:
            m = self.norm(v)
        if m <= 0:
            return False
        if (2 * self.p * v[0]) % m != 0:
            return False
        return all((2 * x) % m == 0 for x in v[1:])

    def is_root(self, v: Vector) -> bool:
        """Primitive, positive norm, and reflection in v preserves the lattice."""
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        if self.norm(v) <= 0:
            return False
        if not self.is_primitive(v):
            return False
        return self.satisfies_crystallographic_condition(v)

    @cached_property
    def admissible_root_norms(self) -> tuple[int, ...]:
        """Norms that roots of this form can have, in increasing order.

        A root norm m satisfies m | 2 v_i and m | 2 p v_0, hence
        m | 2 gcd(p v_0, v_1, ..., v_n) and m | 2p; the candidates are
        1, 2, p, 2p.  Norm p needs v_0^2 = -1 (mod p) solvable and norm 2p
        needs v_0^2 = -2 (mod p) solvable, because p must divide every v_i
        with i >= 1 in those cases.
        """
        norms = [1, 2]
        if is_quadratic_residue(-1, self.p):
            norms.append(self.p)
        if is_quadratic_residue(-2, self.p):
            norms.append(2 * self.p)
        return tuple(sorted(norms))

    def initial_roots(self) -> list[Vector]:
        """Simple roots of the stabilizer of the control vector.

        e_i = v_{i+1} - v_i for 1 <= i < n and e_n = -v_n cut out the cone
        of vectors with x_1 >= x_2 >= ... >= x_n >= 0.
        """
        roots = []
        for i in range(1, self.n):
            e = [0] * self.dim
            e[i] = -1
            e[i + 1] = 1
            roots.append(tuple(e))
        last = [0] * self.dim
        last[self.n] = -1
        roots.append(tuple(last))
        return roots

    def reflect(self, x: Vector, r: Vector) -> Vector:
        """Reflection of x in the hyperplane orthogonal to the root r."""
        m = self.norm(r)
        t = Fraction(2 * self.inner_product(x, r), m)
        if t.denominator != 1:
            raise ValueError("reflection is not integral")
        t = int(t)
        return tuple(a - t * b for a, b in zip(x, r))

    def height(self, v: Vector) -> Fraction:
        """Distance measure k0^2 / <v,v> ordering the root search."""
        return Fraction(v[0] * v[0], self.norm(v))
