"""Exhaustive semi-orthonormal basis search for bilinear-form spaces.

The pairing is (u, v) = u^t A v.  A basis e_1, ..., e_d is semi-orthonormal
when (e_i, e_i) = 1 and (e_j, e_i) = 0 for j > i.  The search builds bases
left to right: once e_1, ..., e_k are placed, any later vector x must
satisfy the k linear constraints (x, e_i) = 0, so the feasible set at depth
k is the intersection of the self-pairing-one locus with a linear subspace.
That subspace is enumerated directly from a reduced basis of the constraint
kernel, which keeps large Found instances cheap without giving up
exhaustiveness on Exhausted ones.

Determinism.  Vectors over F_p are ordered by their integer code
sum(x_i * p^i) -- coordinate 0 is the least significant digit -- so
(1, 0, ..., 0) is the first nonzero vector.  Candidate enumeration, orbit
representatives and the first-found basis all follow this order.  With
Serre symmetry enabled, only orbit representatives are tried in the first
slot; this is sound because the operator preserves the pairing, so any
basis can be translated to one starting at a representative.  Subtrees are
independent after the first-slot choice, so first-slot candidates may be
partitioned across workers with node counts summed and found bases merged
by canonical order; the sequential implementation here is one such
schedule and already deterministic.

Integer spaces (modulus 0) support verification of supplied bases and
mutation, not open-ended search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eulerform import GramMatrix, SerreOperator
from .exactmat import ExactMatrix, is_prime

DEFAULT_ENUMERATION_CAP = 1 << 20


@dataclass(frozen=True)
class FormSpace:
    """A bilinear form u^t A v on F_p^d (modulus p) or Z^d (modulus 0)."""

    dimension: int
    modulus: int
    form: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if self.modulus and not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        if len(self.form) != self.dimension or any(
            len(r) != self.dimension for r in self.form
        ):
            raise ValueError("form matrix must be square of the stated dimension")
        if self.modulus and any(
            not 0 <= x < self.modulus for r in self.form for x in r
        ):
            raise ValueError("entries must be reduced mod p")

    @classmethod
    def from_gram(cls, gram: GramMatrix) -> "FormSpace":
        return cls(gram.size, gram.modulus, gram.base.int_rows())

    @classmethod
    def from_matrix(cls, matrix: ExactMatrix) -> "FormSpace":
        return cls(matrix.size, matrix.modulus, matrix.int_rows())

    def pair(self, u, v) -> int:
        s = 0
        for i, ui in enumerate(u):
            if ui:
                row = self.form[i]
                s += ui * sum(row[j] * v[j] for j in range(self.dimension))
        return s % self.modulus if self.modulus else s

    def constraint_vector(self, e) -> tuple[int, ...]:
        """w with (x, e) = x . w for all x; that is, w = A e."""
        p = self.modulus
        out = []
        for i in range(self.dimension):
            s = sum(self.form[i][j] * e[j] for j in range(self.dimension))
            out.append(s % p if p else s)
        return tuple(out)

    @property
    def total_vectors(self) -> int:
        if not self.modulus:
            raise ValueError("integer spaces are infinite")
        return self.modulus ** self.dimension


def vector_code(vector, p: int) -> int:
    """Base-p integer code with coordinate 0 least significant."""
    code = 0
    for x in reversed(vector):
        code = code * p + (x % p)
    return code


def vector_from_code(code: int, p: int, dimension: int) -> tuple[int, ...]:
    out = []
    for _ in range(dimension):
        out.append(code % p)
        code //= p
    return tuple(out)


@dataclass(frozen=True)
class CandidateSet:
    """All self-pairing-one vectors of a space, in canonical order."""

    space: FormSpace
    vectors: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.vectors)


def enumerate_candidates(
    space: FormSpace,
    cap: int = DEFAULT_ENUMERATION_CAP,
    box: int | None = None,
) -> CandidateSet:
    """Exact set of vectors with (x, x) = 1.

    Finite modulus: all p^d - 1 nonzero vectors are scanned (requires
    p^d <= cap).  Modulus 0: a bounded box [-box, box]^d must be supplied.
    """
    d = space.dimension
    if space.modulus:
        if space.total_vectors > cap:
            raise ValueError(
                f"enumeration cap exceeded: {space.total_vectors} > {cap}"
            )
        p = space.modulus
        vecs = []
        for code in range(1, p**d):
            v = vector_from_code(code, p, d)
            if space.pair(v, v) == 1:
                vecs.append(v)
        return CandidateSet(space, tuple(vecs))
    if box is None:
        raise ValueError("integer spaces need an explicit search box")
    width = 2 * box + 1
    if width**d > cap:
        raise ValueError(f"enumeration cap exceeded: {width ** d} > {cap}")
    vecs = []
    for code in range(width**d):
        shifted = vector_from_code(code, width, d)
        v = tuple(x - box for x in shifted)
        if any(v) and space.pair(v, v) == 1:
            vecs.append(v)
    return CandidateSet(space, tuple(vecs))


def _operator_rows(operator) -> tuple[tuple[int, ...], ...]:
    if isinstance(operator, SerreOperator):
        operator = operator.matrix
    if isinstance(operator, ExactMatrix):
        return operator.int_rows()
    return tuple(tuple(int(x) for x in r) for r in operator)


def serre_orbits(candidates: CandidateSet, operator) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Partition candidates into orbits of the (form-preserving) operator.

    Each orbit is listed from its canonically least representative by
    repeated application; orbits are sorted by their representative.
    Raises if the operator fails to map the candidate set to itself.
    """
    space = candidates.space
    p = space.modulus
    if not p:
        raise ValueError("orbit partition requires a finite modulus")
    rows = _operator_rows(operator)
    d = space.dimension

    def apply(v):
        return tuple(
            sum(rows[i][j] * v[j] for j in range(d)) % p for i in range(d)
        )

    remaining = {vector_code(v, p): v for v in candidates.vectors}
    orbits = []
    while remaining:
        rep_code = min(remaining)
        rep = remaining.pop(rep_code)
        orbit = [rep]
        cur = apply(rep)
        while cur != rep:
            code = vector_code(cur, p)
            if code not in remaining:
                raise ValueError(
                    "operator does not preserve the candidate set "
                    "(form-preservation defect)"
                )
            orbit.append(remaining.pop(code))
            cur = apply(cur)
        orbits.append(tuple(orbit))
    return tuple(orbits)


def pairing_matrix(space: FormSpace, vectors) -> tuple[tuple[int, ...], ...]:
    """(v_i, v_j) at position (i, j) for an ordered family of vectors."""
    return tuple(
        tuple(space.pair(vi, vj) for vj in vectors) for vi in vectors
    )


@dataclass(frozen=True)
class SearchResult:
    basis: tuple[tuple[int, ...], ...] | None
    nodes_explored: int
    stats: tuple[tuple[str, int], ...]

    @property
    def found(self) -> bool:
        return self.basis is not None

    @property
    def exhausted(self) -> bool:
        return self.basis is None

    def stat(self, key: str) -> int:
        return dict(self.stats)[key]


def _nullspace_basis(constraints, d: int, p: int):
    """Reduced basis of {x : x . w = 0 for all w}, ordered by free column."""
    rows = [list(w) for w in constraints]
    pivots = []
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * d
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-rows[ri][fc]) % p
        basis.append(tuple(v))
    return basis


def search(
    space: FormSpace,
    symmetry: SerreOperator | ExactMatrix | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> SearchResult:
    """Find a semi-orthonormal basis or prove none exists.

    Returns the first basis in canonical order, or an Exhausted result with
    the number of partial placements explored.  With symmetry, the first
    basis vector ranges over orbit representatives only.
    """
    p = space.modulus
    if not p:
        raise ValueError(
            "integer spaces support verification only; use verify_semi_orthonormal"
        )
    d = space.dimension
    if space.total_vectors > cap:
        raise ValueError(f"enumeration cap exceeded: {space.total_vectors} > {cap}")

    first_slot = None
    if symmetry is not None:
        orbits = serre_orbits(enumerate_candidates(space, cap), symmetry)
        first_slot = [orbit[0] for orbit in orbits]
        first_slot.sort(key=lambda v: vector_code(v, p))

    nodes = 0
    pairing_rejections = 0
    dependent_rejections = 0
    echelon: list[tuple[int, tuple[int, ...]]] = []  # (pivot index, reduced row)
    chosen: list[tuple[int, ...]] = []
    constraints: list[tuple[int, ...]] = []

    def reduce_by_echelon(v):
        w = list(v)
        for pc, row in echelon:
            f = w[pc] % p
            if f:
                for j in range(d):
                    w[j] = (w[j] - f * row[j]) % p
        return w

    def level_vectors(depth):
        if depth == 0 and first_slot is not None:
            yield from first_slot
            return
        basis = _nullspace_basis(constraints, d, p)
        m = len(basis)
        for t in range(1, p**m):
            digits = vector_from_code(t, p, m)
            v = [0] * d
            for coef, bvec in zip(digits, basis):
                if coef:
                    for j in range(d):
                        v[j] = (v[j] + coef * bvec[j]) % p
            yield tuple(v)

    def dfs() -> tuple[tuple[int, ...], ...] | None:
        nonlocal nodes, pairing_rejections, dependent_rejections
        depth = len(chosen)
        if depth == d:
            return tuple(chosen)
        for x in level_vectors(depth):
            if space.pair(x, x) != 1:
                pairing_rejections += 1
                continue
            w = reduce_by_echelon(x)
            pc = next((j for j in range(d) if w[j]), None)
            if pc is None:
                dependent_rejections += 1
                continue
            inv = pow(w[pc], -1, p)
            echelon.append((pc, tuple(y * inv % p for y in w)))
            chosen.append(x)
            constraints.append(space.constraint_vector(x))
            nodes += 1
            result = dfs()
            if result is not None:
                return result
            echelon.pop()
            chosen.pop()
            constraints.pop()
        return None

    basis = dfs()
    stats = (
        ("placements", nodes),
        ("pairing_rejections", pairing_rejections),
        ("dependent_rejections", dependent_rejections),
    )
    return SearchResult(basis, nodes, stats)


def is_semi_orthonormal_family(space: FormSpace, vectors) -> bool:
    """Pairing conditions plus linear independence, for any family length."""
    vectors = [tuple(v) for v in vectors]
    one = 1 % space.modulus if space.modulus else 1
    for i, vi in enumerate(vectors):
        if space.pair(vi, vi) != one:
            return False
        for j in range(i):
            if space.pair(vi, vectors[j]) != 0:
                return False
    return _rank(vectors, space) == len(vectors)


def verify_semi_orthonormal(space: FormSpace, basis) -> bool:
    """Independent check of a full basis: pairing conditions plus full rank."""
    basis = [tuple(v) for v in basis]
    if len(basis) != space.dimension:
        return False
    return is_semi_orthonormal_family(space, basis)


def _rank(vectors, space: FormSpace) -> int:
    d = space.dimension
    p = space.modulus
    if p:
        rows = [list(v) for v in vectors]
        r = 0
        for col in range(d):
            piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = pow(rows[r][col], -1, p)
            rows[r] = [x * inv % p for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][col] % p:
                    f = rows[i][col]
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
            r += 1
        return r
    rows = [[Fraction(x) for x in v] for v in vectors]
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def mutate(basis, index: int, space: FormSpace):
    """Exchange move at (index, index+1), 0-based.

    Replaces the pair (e, f) with (f, e - (e, f) f), which stays
    semi-orthonormal and spans the same sublattice.  With (e, f) = 0 this
    is a pure swap; over F_2 it is the classical move (f, e + (e, f) f).
    """
    basis = [tuple(v) for v in basis]
    if not 0 <= index < len(basis) - 1:
        raise ValueError("index out of range")
    if not is_semi_orthonormal_family(space, basis):
        raise ValueError("input basis is not semi-orthonormal")
    e, f = basis[index], basis[index + 1]
    c = space.pair(e, f)
    p = space.modulus
    new = tuple(
        (ei - c * fi) % p if p else ei - c * fi for ei, fi in zip(e, f)
    )
    out = basis[:index] + [f, new] + basis[index + 2 :]
    return tuple(out)


def mutate_inverse(basis, index: int, space: FormSpace):
    """Inverse of mutate at the same position: (g, h) -> (h - (g, h) g, g)."""
    basis = [tuple(v) for v in basis]
    if not 0 <= index < len(basis) - 1:
        raise ValueError("index out of range")
    if not is_semi_orthonormal_family(space, basis):
        raise ValueError("input basis is not semi-orthonormal")
    g, h = basis[index], basis[index + 1]
    c = space.pair(g, h)
    p = space.modulus
    new = tuple(
        (hi - c * gi) % p if p else hi - c * gi for gi, hi in zip(g, h)
    )
    out = basis[:index] + [new, g] + basis[index + 2 :]
    return tuple(out)
