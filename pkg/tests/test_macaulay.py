import pytest
from hypothesis import given, strategies as st

from hilbertseq.macaulay import (
    binom,
    bound,
    defect,
    expand,
    first_o_failure,
    is_max_growth,
    is_o_sequence,
    min_b,
    min_b_closed_form,
    poly_dim,
)

from oracles import canonical_terms, literal_expansions, shadow_bound


@pytest.mark.parametrize("n, k, expected", [(0, 0, 1), (8, 3, 56), (13, 3, 286), (3, 5, 0)])
def test_binom(n, k, expected):
    assert binom(n, k) == expected


@pytest.mark.parametrize(
    "h, a, terms",
    [
        (7, 6, ((7, 6),)),
        (0, 3, ()),
        (57, 18, ((19, 18), (18, 17), (17, 16), (15, 15), (14, 14), (13, 13))),
    ],
)
def test_expand_examples(h, a, terms):
    assert expand(h, a).terms == terms


def test_expand_rejects_degree_zero():
    with pytest.raises(ValueError):
        expand(5, 0)


def test_expand_57_18_unique_by_search():
    sols = literal_expansions(57, 18)
    assert len(sols) == 1
    assert canonical_terms(sols[0], 18) == expand(57, 18).terms


def test_expand_matches_exhaustive_search():
    for a in range(1, 13):
        for h in range(0, 201):
            sols = literal_expansions(h, a)
            assert len(sols) == 1, (h, a)
            assert canonical_terms(sols[0], a) == expand(h, a).terms, (h, a)


@pytest.mark.parametrize("h, a, expected", [(7, 6, 8), (0, 5, 0), (57, 18, 60)])
def test_bound_examples(h, a, expected):
    assert bound(h, a) == expected


@pytest.mark.parametrize("h, a, expected", [(7, 6, 1), (23, 11, 2), (57, 18, 3)])
def test_defect_examples(h, a, expected):
    assert defect(h, a) == expected


def test_bound_matches_lex_shadow():
    for nvars in (2, 3, 4):
        for a in range(1, 6):
            for h in range(0, min(poly_dim(nvars, a), 40) + 1):
                assert bound(h, a) == shadow_bound(h, a, nvars), (nvars, a, h)


@pytest.mark.parametrize(
    "h_a, h_next, a, expected", [(7, 8, 6, True), (7, 7, 6, False), (10, 11, 9, True)]
)
def test_is_max_growth(h_a, h_next, a, expected):
    assert is_max_growth(h_a, h_next, a) is expected


@pytest.mark.parametrize(
    "H, failure",
    [
        ((1, 3, 6, 10), None),
        ((1, 2, 4), 2),
        ((1, 3, 6, 10, 15, 21, 28, 8, 9), None),
        ((2, 3), 0),
        ((1, 3, -1), 2),
        ((1, 0, 0, 0), None),
        ((1, 0, 1), 2),
    ],
)
def test_o_sequence(H, failure):
    assert first_o_failure(H) == failure
    assert is_o_sequence(H) is (failure is None)


@pytest.mark.parametrize("n, d, expected", [(4, 5, 56), (3, 10, 66), (1, 7, 1), (4, 8, 165)])
def test_poly_dim(n, d, expected):
    assert poly_dim(n, d) == expected


@pytest.mark.parametrize("delta, a, expected", [(2, 11, 23), (3, 19, 57), (4, 20, 78)])
def test_min_b_examples(delta, a, expected):
    assert min_b(delta, a) == expected


def test_min_b_by_scan_and_closed_form():
    for a in range(1, 25):
        for delta in range(1, a + 1):
            b = min_b(delta, a)
            assert defect(b, a) >= delta
            assert all(defect(x, a) < delta for x in range(1, b))
            assert b == min_b_closed_form(delta, a), (delta, a)


def test_min_b_rejects_small_degree():
    with pytest.raises(ValueError):
        min_b(5, 3)


# -- properties -------------------------------------------------------------

values = st.integers(min_value=0, max_value=10**6)
degrees = st.integers(min_value=1, max_value=40)


@given(values, degrees)
def test_reconstruction(h, a):
    e = expand(h, a)
    assert e.evaluate() == h
    tops = [t for t, _ in e.terms]
    bottoms = [b for _, b in e.terms]
    assert tops == sorted(set(tops), reverse=True)
    assert bottoms == list(range(a, a - len(bottoms), -1))
    assert all(binom(t, b) >= 1 for t, b in e.terms)


@given(st.integers(min_value=0, max_value=10**400), st.integers(min_value=1, max_value=300))
def test_reconstruction_big(h, a):
    assert expand(h, a).evaluate() == h


@given(values, values, degrees)
def test_bound_monotone(h1, h2, a):
    lo, hi = sorted((h1, h2))
    assert bound(lo, a) <= bound(hi, a)


@given(st.integers(min_value=1, max_value=10**6), degrees)
def test_bound_at_least_value(h, a):
    assert bound(h, a) >= h


@given(st.data())
def test_defect_counts_near_diagonal_terms(data):
    a = data.draw(st.integers(min_value=1, max_value=60))
    h = data.draw(st.integers(min_value=1, max_value=poly_dim(3, a) - 1))
    near = sum(1 for t, b in expand(h, a).terms if t == b + 1)
    assert defect(h, a) == near


def test_constant_persistence():
    for a in range(1, 40):
        for s in range(0, a + 1):
            assert bound(s, a + 1) == s
