import pytest

from exotic4.constructions import (
    ABELIAN_EVIDENCE,
    INFINITE_CYCLIC,
    REFUTED,
    TRIVIAL,
    UNDECIDED,
    UNDECIDED_CLAIM,
    VERIFIED,
    HomeoType,
    Pi1Verdict,
    build_X,
    build_X0,
    build_X_cyclic,
    build_X_free,
    build_X_m,
    check_claim,
    classify_homeo,
    free_pattern,
    verify_simply_connected,
)
from exotic4.fpgroup import AbelianInvariants, abelianize
from exotic4.surface import standard_presentation


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (1, 2), (4, 3)])
def test_char_formulas(n, k):
    ch = build_X(n, k).char
    assert ch.core() == (8 * n + 4 * k - 4, -4 * n, 4 * n + 8 * k - 8, n + k - 1)
    assert ch.b1 == 0


def test_homeo_type_2_1():
    M = build_X(2, 1)
    h = classify_homeo(M, verify_simply_connected(M))
    assert (h.b2plus, h.b2minus) == (3, 11)
    assert h.render() == "3 CP2 # 11 CP2bar"


def test_m1_is_X():
    assert build_X_m(2, 1, 1).presentation == build_X(2, 1).presentation
    with pytest.raises(ValueError):
        build_X_m(1, 1, 0)


def test_m_family_is_not_symplectic_but_same_numbers():
    M = build_X_m(1, 1, 2)
    assert not M.symplectic
    assert M.char == build_X(1, 1).char


@pytest.mark.parametrize("bad", [(0, 1), (1, 0), (-1, 2), (1.5, 1)])
def test_parameter_checks(bad):
    with pytest.raises(ValueError):
        build_X(*bad)


def test_surface_group_is_not_trivial():
    v = verify_simply_connected(standard_presentation(2))
    assert v.status == ABELIAN_EVIDENCE
    assert v.abelian == AbelianInvariants(4, ())
    assert check_claim("simply connected", v) == REFUTED


def test_classify_refuses_nontrivial():
    M = build_X0(1, 1)
    with pytest.raises(ValueError):
        classify_homeo(M, verify_simply_connected(M))


def test_x0_keeps_numbers():
    for n, k in [(1, 1), (1, 2)]:
        assert build_X0(n, k).char.core() == build_X(n, k).char.core()


def test_x0_one_one_is_infinite_cyclic():
    M = build_X0(1, 1)
    v = verify_simply_connected(M)
    assert v.status == INFINITE_CYCLIC
    assert check_claim(M.claim, v) == VERIFIED


def test_coset_cap_gives_undecided():
    v = verify_simply_connected(build_X(1, 1), coset_cap=1)
    assert v.status == UNDECIDED
    assert check_claim("simply connected", v) == UNDECIDED_CLAIM
    assert "coset cap 1 reached" in v.summary()


def test_trivial_verdict_needs_cosets():
    with pytest.raises(ValueError):
        Pi1Verdict(TRIVIAL, AbelianInvariants(0, ()))


def test_free_pattern():
    assert free_pattern(4) == ((1, 1, 0, 0), (1, 1, 1, 1))


def test_x_free_pattern_length_checked():
    with pytest.raises(ValueError):
        build_X_free(1, 3, p=[1, 1])


def test_x_free_claim():
    assert build_X_free(1, 3).claim == "free of rank 1"
    assert build_X_free(1, 4).claim == "free of rank 2"
    assert build_X_free(1, 3, q=[1, 1, 1, 1, 1, 2]).claim == ""


def test_x_cyclic_reports_h1_only():
    M = build_X_cyclic(1, 3, [1, 1, 2, 1, 1, 1])
    assert M.claim == ""
    v = verify_simply_connected(M)
    assert v.abelian == abelianize(M.presentation)
    assert check_claim(M.claim, v) == VERIFIED
    with pytest.raises(ValueError):
        build_X_cyclic(1, 3, [1, 1, 0, 1, 1, 1])


def test_homeo_json():
    assert HomeoType(1, 5).to_json() == {"b2plus": 1, "b2minus": 5, "parity": "odd", "type": "1 CP2 # 5 CP2bar"}
