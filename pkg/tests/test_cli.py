import io
import sys

import pytest

from semiortho import dump_records, load_default
from semiortho.cli import main, parse_polynomial


def run_cli(*argv):
    out = io.StringIO()
    old = sys.stdout
    sys.stdout = out
    try:
        code = main(list(argv))
    finally:
        sys.stdout = old
    return code, out.getvalue()


def test_gram_wilson_mod_2():
    code, out = run_cli("gram", "--profile", "wilson", "--mod", "2", "--format", "machine")
    assert code == 0
    assert "record.matrix.row0=1,1,0,0,0" in out
    assert "record.matrix.row3=0,1,1,1,1" in out
    assert "check.det_formula=PASS" in out
    assert out.rstrip().endswith("verdict=PASS")


def test_gram_constant_polynomial():
    code, out = run_cli("gram", "--poly", "1", "--twists", "0", "--format", "machine")
    assert code == 0
    assert "record.matrix.row0=1" in out
    assert "record.determinant=1" in out


def test_gram_fake_plane_exceptional():
    code, out = run_cli(
        "gram", "--profile", "fake-pn:3", "--twists", "0,-1,-2,-3",
        "--expect-exceptional", "--format", "machine",
    )
    assert code == 0
    assert "record.numerically_exceptional=true" in out
    assert "check.numerically_exceptional=PASS" in out


def test_gram_expect_exceptional_fails_on_wilson():
    code, out = run_cli(
        "gram", "--profile", "wilson", "--expect-exceptional", "--format", "machine"
    )
    assert code == 1
    assert "check.numerically_exceptional=FAIL" in out
    assert "verdict=FAIL" in out


def test_gram_rejects_bad_poly():
    code, _ = run_cli("gram", "--poly", "banana")
    assert code == 2
    code, _ = run_cli("gram", "--poly", "0,1/2")
    assert code == 2


def test_detcheck_profile():
    code, out = run_cli("detcheck", "--profile", "wilson", "--format", "machine")
    assert code == 0
    assert "record.determinant=576650390625" in out
    assert "check.determinant_identity=PASS" in out


def test_detcheck_sample_deterministic():
    code1, out1 = run_cli("detcheck", "--sample", "40", "--seed", "5", "--format", "machine")
    code2, out2 = run_cli("detcheck", "--sample", "40", "--seed", "5", "--format", "machine")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "check.determinant_identity_sample=PASS" in out1


def test_serre_command():
    code, out = run_cli("serre", "--profile", "wilson", "--mod", "2", "--format", "machine")
    assert code == 0
    assert "record.serre.row0=1,1,0,0,0" in out
    assert "record.order=8" in out
    assert "check.form_preserved=PASS" in out


def test_sonb_wilson():
    code, out = run_cli(
        "sonb", "--profile", "wilson", "--mod", "2", "--symmetry", "serre",
        "--format", "machine",
    )
    assert code == 0
    assert "record.candidates=12" in out
    assert "record.orbit_sizes=8,4" in out
    assert "record.outcome=exhausted" in out


def test_sonb_finds_basis_with_verification():
    code, out = run_cli("sonb", "--profile", "pn:2", "--mod", "2", "--format", "machine")
    assert code == 0
    assert "record.outcome=found" in out
    assert "record.basis.row0=1,0,0" in out
    assert "check.found_basis_verified=PASS" in out


def test_sonb_raw_matrix_and_verify_basis():
    code, out = run_cli(
        "sonb", "--matrix", "1,1;0,1", "--mod", "2", "--format", "machine"
    )
    assert code == 0 and "record.outcome=found" in out
    code, out = run_cli(
        "sonb", "--matrix", "1,3;0,1", "--verify-basis", "1,0;0,1",
        "--format", "machine",
    )
    assert code == 0
    assert "check.basis_verified=PASS" in out


def test_lefschetz_command():
    code, out = run_cli("lefschetz", "--format", "machine")
    assert code == 0
    assert "record.solutions={1,3} {1,5} {2,3} {2,6} {4,5} {4,6}" in out
    assert "record.canonical_exponents=4,1,2" in out
    assert "record.twist_exponents=6,5,3" in out
    assert "check.trace_k4_is_bbar=PASS" in out


def test_lefschetz_conjugate_branch():
    code, out = run_cli("lefschetz", "--branch", "conjugate", "--format", "machine")
    assert code == 0
    assert "record.canonical_exponents=3,6,5" in out
    assert "check.trace_k4_is_b=PASS" in out


def test_chartable_command():
    code, out = run_cli("chartable", "--format", "machine")
    assert code == 0
    assert "record.dimensions=1,1,1,3,3" in out
    assert "check.orthogonality=PASS" in out


def test_decompose_regular():
    code, out = run_cli("decompose", "--regular", "--format", "machine")
    assert code == 0
    assert "record.multiplicity.V3=3" in out
    assert "check.is_character=PASS" in out


def test_decompose_combination():
    code, out = run_cli("decompose", "--chi", "C+2*V1+V3bar", "--format", "machine")
    assert code == 0
    assert "record.multiplicity.V1=2" in out
    assert "record.multiplicity.V3bar=1" in out


def test_decompose_unknown_name():
    code, _ = run_cli("decompose", "--chi", "C+V9")
    assert code == 2


def test_atlas_count():
    code, out = run_cli("atlas", "--count", "--format", "machine")
    assert code == 0
    assert "record.records=50" in out
    assert "record.surfaces=100" in out


def test_atlas_aut_query():
    code, out = run_cli("atlas", "--aut", "G21", "--format", "machine")
    assert code == 0
    assert "record.matched=3" in out
    assert "record.surfaces=6" in out


def test_atlas_three_torsion_free_filter():
    code, out = run_cli(
        "atlas", "--aut", "G21", "--three-torsion-free", "--format", "machine"
    )
    assert code == 0
    assert "record.matched=3" in out


def test_atlas_verify():
    code, out = run_cli("atlas", "--verify", "--format", "machine")
    assert code == 0
    assert "check.record_count=PASS" in out
    assert "check.k_phantom_pairs=PASS" in out
    assert "check.round_trip=PASS" in out


def test_atlas_k_phantom():
    code, out = run_cli("atlas", "--k-phantom", "--format", "machine")
    assert code == 0
    assert "record.pairs=4" in out


def test_atlas_data_override(tmp_path):
    alt = tmp_path / "two.csv"
    alt.write_text(dump_records(load_default()[:2]), encoding="utf-8")
    code, out = run_cli("atlas", "--count", "--data", str(alt), "--format", "machine")
    assert code == 0
    assert "record.records=2" in out


def test_atlas_missing_data():
    code, _ = run_cli("atlas", "--count", "--data", "/nonexistent/nope.csv")
    assert code == 2


def test_reproduce_wilson():
    code, out = run_cli("reproduce", "wilson", "--format", "machine")
    assert code == 0
    assert "check.no_basis=PASS" in out
    assert "check.pairing_matrix=PASS" in out
    assert "check.serre_order=PASS" in out


def test_reproduce_keum():
    code, out = run_cli("reproduce", "keum", "--format", "machine")
    assert code == 0
    assert "check.trace_k4_is_bbar=PASS" in out
    assert "check.h0_O4_irreducible=PASS" in out
    assert "check.h0_O2_vanishes=PASS" in out


def test_reproduce_equivariant():
    code, out = run_cli("reproduce", "equivariant", "--format", "machine")
    assert code == 0
    assert "check.count_identity.G21=PASS" in out
    assert "check.orbifold_dimension.Z/7=PASS" in out


def test_reproduce_outputs_are_deterministic():
    for target in ("wilson", "keum", "equivariant"):
        _, out1 = run_cli("reproduce", target, "--format", "machine")
        _, out2 = run_cli("reproduce", target, "--format", "machine")
        assert out1 == out2


def test_text_format_renders():
    code, out = run_cli("reproduce", "wilson")
    assert code == 0
    assert "verdict: PASS" in out
    assert "[PASS]" in out


def test_machine_format_is_key_value():
    _, out = run_cli("chartable", "--format", "machine")
    for line in out.strip().splitlines():
        assert "=" in line


def test_parse_polynomial_forms():
    assert parse_polynomial("roots:1,2;scale:1/2")(-1) == 3
    assert parse_polynomial("1,-3/2,1/2")(3) == 1
    with pytest.raises(Exception):
        parse_polynomial("roots:1,2;oops:3")
