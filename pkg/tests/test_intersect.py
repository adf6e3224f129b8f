import pytest
from hypothesis import given
from hypothesis import strategies as st

from xxrx import (
    IntersectionReport,
    QuadCase,
    QuadExponents,
    avoids_xxrx_naive,
    build_quad_word,
    complement,
    quad_predicate,
    reverse,
    verify_intersection_claim,
)


def test_predicate_examples():
    assert not quad_predicate(QuadExponents(1, 1, 1, 1))
    assert quad_predicate(QuadExponents(1, 2, 3, 1))
    assert not quad_predicate(QuadExponents(2, 1, 1, 2))


def test_build_examples():
    assert build_quad_word(QuadExponents(1, 1, 1, 1)) == "01100110"
    assert build_quad_word(QuadExponents(1, 2, 1, 1)) == "0110100110"
    assert build_quad_word(QuadExponents(2, 1, 1, 1)) == "0101100110"


def test_exponent_validation():
    with pytest.raises(ValueError):
        QuadExponents(0, 1, 1, 1)
    with pytest.raises(ValueError):
        QuadExponents(1, 1, -3, 1)


def test_smallest_case_is_excluded_on_both_sides():
    e = QuadExponents(1, 1, 1, 1)
    assert not quad_predicate(e)
    assert not avoids_xxrx_naive(build_quad_word(e))


def test_verify_small_boxes():
    r1 = verify_intersection_claim(1)
    assert r1.ok and r1.total_cases == 1
    r4 = verify_intersection_claim(4)
    assert r4.ok and r4.total_cases == 256


def test_verify_guard():
    with pytest.raises(ValueError):
        verify_intersection_claim(0)
    with pytest.raises(ValueError):
        verify_intersection_claim(11)


exponents = st.integers(min_value=1, max_value=6)


@given(exponents, exponents, exponents, exponents)
def test_membership_invariant_under_reverse_complement(i, j, k, l):
    w = build_quad_word(QuadExponents(i, j, k, l))
    assert avoids_xxrx_naive(w) == avoids_xxrx_naive(reverse(complement(w)))


def test_report_rendering():
    clean = verify_intersection_claim(2)
    assert "agree everywhere" in clean.as_text()
    assert clean.as_csv() == "i,j,k,l,in_L,predicate\n"

    fabricated = IntersectionReport(
        2, 16, (QuadCase(QuadExponents(1, 2, 3, 4), True, False),)
    )
    assert not fabricated.ok
    assert "1 mismatches" in fabricated.as_text()
    assert fabricated.as_csv() == "i,j,k,l,in_L,predicate\n1,2,3,4,true,false\n"
