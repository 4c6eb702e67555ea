"""Euler-pairing Gram matrices built from Hilbert polynomials.

Conventions.  For a profile with Hilbert polynomial P and a twist sequence
(c_0, ..., c_r), the Gram matrix has entry(i, j) = P(c_j - c_i): the pairing
of the i-th object against the j-th.  With twists (0, 1, ..., n) this is the
matrix a_{i,j} = P(j - i), whose determinant is (n! p_n)^(n+1) for P of
degree exactly n.  A Gram matrix is numerically exceptional when its
diagonal is 1 and every entry below the diagonal vanishes.

The Serre operator of an invertible Gram matrix A is S = A^(-1) A^t.  It
satisfies (u, v) = (v, S u), hence A S = A^t and S^t A S = A; both relations
are verified at construction.

Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactmat import ExactMatrix, is_prime
from .intpoly import IntValuedPolynomial


@dataclass(frozen=True)
class HilbertProfile:
    """A named Hilbert polynomial k -> chi(O(k)) with its dimension data."""

    name: str
    dimension: int
    polynomial: IntValuedPolynomial

    def __post_init__(self):
        if self.dimension < 0:
            raise ValueError("dimension must be nonnegative")
        if self.polynomial.degree != self.dimension:
            raise ValueError(
                f"polynomial degree {self.polynomial.degree} != dimension {self.dimension}"
            )
        if self.deg == 0:
            raise ValueError("degree invariant n! * p_n must be nonzero")

    @property
    def deg(self) -> int:
        """n! times the leading coefficient; an integer for integer-valued P."""
        v = factorial(self.dimension) * self.polynomial.leading_coefficient
        if v.denominator != 1:
            raise ValueError("n! * p_n is not an integer")
        return int(v)


def projective_space(n: int) -> HilbertProfile:
    """chi(O(k)) = binom(k+n, n): roots at -1, ..., -n, value 1 at 0."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = IntValuedPolynomial.from_roots(range(-n, 0), Fraction(1, factorial(n)))
    return HilbertProfile(f"pn:{n}", n, poly)


def fake_projective_space(n: int) -> HilbertProfile:
    """chi(O(k)) = (-1)^n (k-1)(k-2)...(k-n)/n!: roots at 1..n, value 1 at 0."""
    if n < 1:
        raise ValueError("n must be positive")
    scale = Fraction((-1) ** n, factorial(n))
    poly = IntValuedPolynomial.from_roots(range(1, n + 1), scale)
    return HilbertProfile(f"fake-pn:{n}", n, poly)


def wilson_fourfold() -> HilbertProfile:
    """The dimension-4 profile with chi(O(l)) = 1 + (25/8) l(l+1)(3l^2+3l+2)."""
    x = IntValuedPolynomial((0, 1))
    inner = x * (x + 1) * (3 * x * x + 3 * x + 2)
    poly = inner * Fraction(25, 8) + 1
    return HilbertProfile("wilson", 4, poly)


def profile_from_polynomial(polynomial: IntValuedPolynomial, name: str = "custom") -> HilbertProfile:
    return HilbertProfile(name, max(polynomial.degree, 0), polynomial)


@dataclass(frozen=True)
class GramMatrix:
    """Euler-pairing matrix of twisted line-bundle classes.

    p_divides_deg is None over Z and records, after reduce_mod, whether the
    prime divides the profile degree (when it does, existence of a
    semi-orthonormal basis is no longer forced by unimodular descent).
    """

    profile: HilbertProfile
    twists: tuple[int, ...]
    base: ExactMatrix
    p_divides_deg: bool | None = None

    def __post_init__(self):
        if len(self.twists) != self.base.size:
            raise ValueError("twist count must match matrix size")
        p = self.base.modulus
        for i in range(self.base.size):
            for j in range(self.base.size):
                expected = self.profile.polynomial(self.twists[j] - self.twists[i])
                got = self.base.rows[i][j]
                mismatch = (got - expected) % p != 0 if p else got != expected
                if mismatch:
                    raise ValueError(f"entry law violated at ({i}, {j})")

    @property
    def size(self) -> int:
        return self.base.size

    @property
    def modulus(self) -> int:
        return self.base.modulus

    def determinant(self):
        return self.base.determinant()


def gram_from_twists(profile: HilbertProfile, twists) -> GramMatrix:
    twists = tuple(int(t) for t in twists)
    if not twists:
        raise ValueError("twist sequence must be nonempty")
    rows = [[profile.polynomial(cj - ci) for cj in twists] for ci in twists]
    return GramMatrix(profile, twists, ExactMatrix(rows, 0))


def reduce_mod(gram: GramMatrix, p: int) -> GramMatrix:
    """Entrywise residues mod a prime, recording whether p divides deg."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if gram.modulus:
        raise ValueError("Gram matrix is already reduced")
    base = ExactMatrix(gram.base.int_rows(), p)
    return GramMatrix(gram.profile, gram.twists, base, gram.profile.deg % p == 0)


@dataclass(frozen=True)
class SerreOperator:
    """S = A^(-1) A^t for an invertible Gram matrix A."""

    matrix: ExactMatrix
    source: GramMatrix

    def __post_init__(self):
        a = self.source.base
        s = self.matrix
        if a * s != a.transpose():
            raise ValueError("Serre relation A*S = A^t failed")
        if s.transpose() * a * s != a:
            raise ValueError("Serre relation S^t*A*S = A failed")


def serre_operator(gram: GramMatrix) -> SerreOperator:
    a = gram.base
    if a.determinant() == 0:
        raise ValueError("Gram matrix is singular over its field")
    return SerreOperator(a.inverse() * a.transpose(), gram)


def numerically_exceptional(gram: GramMatrix) -> bool:
    """Unit diagonal and vanishing pairings of later objects against earlier."""
    p = gram.modulus
    one = 1 % p if p else 1
    rows = gram.base.rows
    for i in range(gram.size):
        if rows[i][i] != one:
            return False
        for j in range(i):
            if rows[i][j] != 0:
                return False
    return True


def chern_identity(n: int) -> int:
    """The Chern number c_1 c_(n-1) forced by projective-space Hodge data."""
    if n < 1:
        raise ValueError("n must be positive")
    v = n * (n + 1) ** 2
    assert v % 2 == 0
    return v // 2


# -- equivariant Hochschild counting ---------------------------------------

@dataclass(frozen=True)
class EquivariantRow:
    """Curated invariants of a quotient-surface resolution.

    r_g counts non-special stabilizer characters at the fixed points;
    euler_char is the topological Euler characteristic of the minimal
    resolution; both are shipped data, not derived here.
    """

    group: str
    irrep_count: int
    singularities: tuple[str, ...]
    r_g: int
    euler_char: int
    kodaira: int

    def __post_init__(self):
        if self.r_g < 0:
            raise ValueError("r_g must be nonnegative")
        if self.euler_char < 3:
            raise ValueError("Euler characteristic below 3 is impossible here")


EQUIVARIANT_ROWS: tuple[EquivariantRow, ...] = (
    EquivariantRow("1", 1, (), 0, 3, 2),
    EquivariantRow("Z/3", 3, ("1/3(1,2)",) * 3, 0, 9, 2),
    EquivariantRow("Z/7", 7, ("1/7(1,3)",) * 3, 9, 12, 1),
    EquivariantRow("G21", 5, ("1/3(1,2)",) * 3 + ("1/7(1,3)",), 3, 12, 1),
)


def equivariant_count_check(row: EquivariantRow) -> bool:
    """3 * #irreducibles == euler characteristic of resolution + r_g."""
    return 3 * row.irrep_count == row.euler_char + row.r_g


def orbifold_hh_dimension(conjugacy_class_count: int) -> int:
    """Total orbifold cohomology dimension: 3 per conjugacy class.

    Valid under the two standing hypotheses (trivial action on cohomology,
    three fixed points per nontrivial element); the caller asserts them.
    """
    if conjugacy_class_count < 1:
        raise ValueError("class count must be positive")
    return 3 * conjugacy_class_count
