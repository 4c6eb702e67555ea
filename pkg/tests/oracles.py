"""Independent oracles the production code is checked against.

Nothing here shares an algorithm with the package: determinants come from
cofactor expansion, the basis search is plain enumeration over candidate
tuples with the defining conditions checked directly, and integrality is
checked by evaluation.
"""

from fractions import Fraction


def cofactor_determinant(rows, modulus=0):
    """Naive Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1 % modulus if modulus else Fraction(1)
    if n == 1:
        return rows[0][0] % modulus if modulus else Fraction(rows[0][0])
    total = 0
    for j in range(n):
        a = rows[0][j]
        if a == 0:
            continue
        minor = [[r[c] for c in range(n) if c != j] for r in rows[1:]]
        term = a * cofactor_determinant(minor, modulus)
        total = total - term if j % 2 else total + term
    return total % modulus if modulus else Fraction(total)


def brute_force_sonb(form, p, dimension):
    """Unpruned search: try every candidate in every slot, checking the
    defining pairing conditions against the chosen prefix directly and
    linear independence by incremental elimination.

    Returns (basis-or-None, nodes, candidate_count).
    """
    d = dimension

    def pair(u, v):
        return sum(u[i] * form[i][j] * v[j] for i in range(d) for j in range(d)) % p

    vectors = []
    for code in range(1, p**d):
        v = []
        c = code
        for _ in range(d):
            v.append(c % p)
            c //= p
        vectors.append(tuple(v))
    candidates = [v for v in vectors if pair(v, v) == 1]
    nc = len(candidates)
    memo = {}

    def cand_pair(i, j):
        key = (i, j)
        if key not in memo:
            memo[key] = pair(candidates[i], candidates[j])
        return memo[key]

    nodes = 0
    echelon = []

    def reduced_nonzero(v):
        w = list(v)
        for pc, row in echelon:
            f = w[pc] % p
            if f:
                for j in range(d):
                    w[j] = (w[j] - f * row[j]) % p
        pc = next((j for j in range(d) if w[j]), None)
        if pc is None:
            return None
        inv = pow(w[pc], -1, p)
        return pc, tuple(x * inv % p for x in w)

    def dfs(chosen):
        nonlocal nodes
        if len(chosen) == d:
            return tuple(candidates[i] for i in chosen)
        for i in range(nc):
            if any(cand_pair(i, e) for e in chosen):
                continue
            step = reduced_nonzero(candidates[i])
            if step is None:
                continue
            echelon.append(step)
            nodes += 1
            result = dfs(chosen + [i])
            echelon.pop()
            if result is not None:
                return result
        return None

    return dfs([]), nodes, nc


def random_int_valued_poly(rng, degree):
    """Random integer-valued polynomial of exact given degree (binomial basis)."""
    from semiortho import IntValuedPolynomial

    coeffs = [rng.randrange(-9, 10) for _ in range(degree)]
    coeffs.append(rng.choice([c for c in range(-9, 10) if c]))
    return IntValuedPolynomial.from_binomial(coeffs)
