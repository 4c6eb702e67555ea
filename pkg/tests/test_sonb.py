import random

import pytest

from semiortho import (
    ExactMatrix,
    FormSpace,
    enumerate_candidates,
    fake_projective_space,
    gram_from_twists,
    mutate,
    mutate_inverse,
    pairing_matrix,
    projective_space,
    reduce_mod,
    search,
    serre_operator,
    serre_orbits,
    verify_semi_orthonormal,
    wilson_fourfold,
)
from semiortho import reference as ref
from semiortho.sonb import vector_code, vector_from_code

from oracles import brute_force_sonb


def wilson_space():
    gram = reduce_mod(gram_from_twists(wilson_fourfold(), range(5)), 2)
    return FormSpace.from_gram(gram), serre_operator(gram)


def pn_space(n, p):
    gram = reduce_mod(gram_from_twists(projective_space(n), range(n + 1)), p)
    return FormSpace.from_gram(gram)


def standard_basis(d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def test_vector_codes_round_trip():
    for p in (2, 3, 5):
        for code in range(p**3):
            assert vector_code(vector_from_code(code, p, 3), p) == code
    assert vector_from_code(1, 2, 5) == (1, 0, 0, 0, 0)


def test_wilson_candidates():
    space, _ = wilson_space()
    cands = enumerate_candidates(space)
    assert len(cands) == 12
    for v in cands.vectors:
        assert space.pair(v, v) == 1


def test_identity_form_candidates():
    space = FormSpace(5, 2, tuple(tuple(ExactMatrix.identity(5, 2).rows[i]) for i in range(5)))
    # (x, x) = sum x_i over F_2: the 16 odd-weight vectors
    cands = enumerate_candidates(space)
    assert len(cands) == 16
    assert all(sum(v) % 2 == 1 for v in cands.vectors)


def test_zero_form_has_no_candidates():
    space = FormSpace(4, 3, tuple(tuple(0 for _ in range(4)) for _ in range(4)))
    assert len(enumerate_candidates(space)) == 0


def test_enumeration_cap():
    space = pn_space(2, 7)
    with pytest.raises(ValueError):
        enumerate_candidates(space, cap=10)


def test_wilson_orbits():
    space, op = wilson_space()
    orbits = serre_orbits(enumerate_candidates(space), op)
    assert tuple(len(o) for o in orbits) == (8, 4)
    assert orbits[0][0] == (1, 0, 0, 0, 0)
    assert orbits[1][0] == (1, 0, 1, 0, 0)
    # successive entries are images under the operator
    rows = op.matrix.rows
    for orbit in orbits:
        for a, b in zip(orbit, orbit[1:]):
            assert tuple(sum(r[j] * a[j] for j in range(5)) % 2 for r in rows) == b


def test_identity_operator_gives_singletons():
    space, _ = wilson_space()
    cands = enumerate_candidates(space)
    orbits = serre_orbits(cands, ExactMatrix.identity(5, 2))
    assert all(len(o) == 1 for o in orbits)
    assert len(orbits) == 12


def test_non_preserving_operator_rejected():
    space, _ = wilson_space()
    cands = enumerate_candidates(space)
    shift = ExactMatrix([[0, 1, 0, 0, 0],
                         [0, 0, 1, 0, 0],
                         [0, 0, 0, 1, 0],
                         [0, 0, 0, 0, 1],
                         [1, 0, 0, 0, 0]], 2)
    with pytest.raises(ValueError):
        serre_orbits(cands, shift)


def test_wilson_pairing_matrix_matches_reference():
    space, op = wilson_space()
    orbits = serre_orbits(enumerate_candidates(space), op)
    ordered = [v for orbit in orbits for v in orbit]
    assert pairing_matrix(space, ordered) == ref.WILSON_PAIRING_12


def test_wilson_search_exhausted_both_orientations():
    space, op = wilson_space()
    plain = search(space)
    assert plain.exhausted
    assert plain.nodes_explored < 10**6
    with_symmetry = search(space, symmetry=op)
    assert with_symmetry.exhausted
    assert with_symmetry.nodes_explored <= plain.nodes_explored
    flipped = FormSpace(5, 2, tuple(zip(*space.form)))
    assert search(flipped).exhausted


def test_p2_mod_2_finds_standard_basis():
    space = pn_space(2, 2)
    result = search(space)
    assert result.found
    assert result.basis == standard_basis(3)


def test_pn_profiles_find_standard_basis():
    for n in (1, 2, 3):
        for p in (2, 3, 5, 7):
            result = search(pn_space(n, p))
            assert result.basis == standard_basis(n + 1)


def test_integer_space_verifies_standard_basis():
    for n in (1, 2, 3, 4):
        gram = gram_from_twists(projective_space(n), range(n + 1))
        space = FormSpace.from_gram(gram)
        assert verify_semi_orthonormal(space, standard_basis(n + 1))
        with pytest.raises(ValueError):
            search(space)


def test_verifier_catches_bad_bases():
    space = pn_space(2, 5)
    good = standard_basis(3)
    assert verify_semi_orthonormal(space, good)
    assert not verify_semi_orthonormal(space, (good[1], good[0], good[2]))  # (e1,e0)=3
    assert not verify_semi_orthonormal(space, (good[0], good[0], good[2]))  # dependent
    assert not verify_semi_orthonormal(space, good[:2])  # not a full basis


def test_wilson_mod_7_agrees_with_oracle():
    gram = reduce_mod(gram_from_twists(wilson_fourfold(), range(5)), 7)
    space = FormSpace.from_gram(gram)
    oracle_basis, _, _ = brute_force_sonb(space.form, 7, 5)
    result = search(space)
    assert (oracle_basis is None) == result.exhausted
    if result.found:
        assert verify_semi_orthonormal(space, result.basis)
        assert result.basis == oracle_basis


def test_random_forms_agree_with_oracle_smoke():
    rng = random.Random(2024)
    for p in (2, 3):
        for _ in range(8):
            d = rng.randrange(2, 5)
            rows = tuple(tuple(rng.randrange(p) for _ in range(d)) for _ in range(d))
            space = FormSpace(d, p, rows)
            oracle_basis, _, _ = brute_force_sonb(rows, p, d)
            result = search(space)
            assert (oracle_basis is None) == result.exhausted
            if result.found:
                assert result.basis == oracle_basis
                assert verify_semi_orthonormal(space, result.basis)


def test_symmetry_outcome_matches_plain_search():
    rng = random.Random(31)
    checked = 0
    while checked < 10:
        d = rng.randrange(2, 5)
        p = rng.choice((2, 3))
        rows = [[rng.randrange(p) for _ in range(d)] for _ in range(d)]
        m = ExactMatrix(rows, p)
        if m.determinant() == 0:
            continue
        s = m.inverse() * m.transpose()
        space = FormSpace(d, p, m.int_rows())
        assert search(space).found == search(space, symmetry=s).found
        checked += 1


def test_mutation_p2_standard_basis():
    gram = gram_from_twists(projective_space(2), (0, 1, 2))
    space = FormSpace.from_gram(gram)
    basis = standard_basis(3)
    mutated = mutate(basis, 0, space)
    # pairing (e0, e1) = 3: new pair is (e1, e0 - 3 e1)
    assert mutated == ((0, 1, 0), (1, -3, 0), (0, 0, 1))
    assert verify_semi_orthonormal(space, mutated)
    assert mutate_inverse(mutated, 0, space) == basis


def test_mutation_zero_pairing_is_swap():
    # 1 - x^2 makes the twists (0, 1) pair to the identity matrix
    from semiortho import IntValuedPolynomial, profile_from_polynomial

    flat = profile_from_polynomial(IntValuedPolynomial((1, 0, -1)))
    space = FormSpace.from_gram(gram_from_twists(flat, (0, 1)))
    basis = standard_basis(2)
    assert mutate(basis, 0, space) == (basis[1], basis[0])


def test_mutation_over_f2_is_classical_form():
    # mutate a semi-orthonormal candidate pair of the Wilson form: the move
    # becomes (f, e + (e, f) f) in characteristic two
    space, op = wilson_space()
    orbits = serre_orbits(enumerate_candidates(space), op)
    e = orbits[0][0]
    f = orbits[0][2]
    assert space.pair(f, e) == 0 and space.pair(e, f) == 1
    mutated = mutate((e, f), 0, space)
    assert mutated == (f, tuple((ei + fi) % 2 for ei, fi in zip(e, f)))


def test_mutation_closure_seeded():
    rng = random.Random(8)
    space = pn_space(3, 7)
    result = search(space)
    assert result.found
    basis = result.basis
    for _ in range(30):
        i = rng.randrange(len(basis) - 1)
        if rng.random() < 0.5:
            basis = mutate(basis, i, space)
        else:
            basis = mutate_inverse(basis, i, space)
        assert verify_semi_orthonormal(space, basis)


def test_mutation_round_trip():
    space = pn_space(2, 5)
    basis = standard_basis(3)
    for i in range(2):
        assert mutate_inverse(mutate(basis, i, space), i, space) == basis
        assert mutate(mutate_inverse(basis, i, space), i, space) == basis


def test_mutation_rejects_non_semi_orthonormal_input():
    space = pn_space(2, 5)
    bad = (standard_basis(3)[1], standard_basis(3)[0], standard_basis(3)[2])
    with pytest.raises(ValueError):
        mutate(bad, 0, space)
    with pytest.raises(ValueError):
        mutate(standard_basis(3), 5, space)


def test_mutation_over_integers():
    gram = gram_from_twists(fake_projective_space(2), (0, -1, -2))
    space = FormSpace.from_gram(gram)
    basis = standard_basis(3)
    for i in (0, 1):
        out = mutate(basis, i, space)
        assert verify_semi_orthonormal(space, out)


def test_integer_candidate_box_enumeration():
    gram = gram_from_twists(fake_projective_space(2), (0, -1, -2))
    space = FormSpace.from_gram(gram)
    cands = enumerate_candidates(space, box=1)
    assert all(space.pair(v, v) == 1 for v in cands.vectors)
    assert (1, 0, 0) in cands.vectors
    assert len(set(cands.vectors)) == len(cands.vectors)
    with pytest.raises(ValueError):
        enumerate_candidates(space)  # box required over Z


def test_search_stats_present():
    result = search(pn_space(1, 3))
    keys = dict(result.stats)
    assert "placements" in keys and keys["placements"] == result.nodes_explored
