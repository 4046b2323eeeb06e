"""Criteria tests: inequalities, thresholds, discriminants, degrees, verdicts."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pluricot.chern import SurfaceInvariants, chi_sym_cotangent
from pluricot.criteria import (
    ROOT_BRACKET_WIDTH,
    Verdict,
    classify,
    compare_to_upper_root,
    corollary_c_threshold,
    deg_psi_upper_bound,
    degree_relation,
    discriminant_analysis,
    gauss_divisibility_check,
    h0_lower_bound,
    quadratic_Q,
    theorem_b_holds,
    veronese_bound,
)
from pluricot.errors import (
    HypothesisNotMetError,
    InconsistentInputError,
    PreconditionError,
    SegreNotPositiveError,
)

THETA = SurfaceInvariants(6, 6)
PQ2 = SurfaceInvariants(32, 16)
AB4 = SurfaceInvariants(48, 36)
BMY_EDGE = SurfaceInvariants(36, 12)

# c2 in [1, 500] and c1^2 in (c2, 3c2] puts u = c1^2/c2 in (1, 3].
admissible_surfaces = st.integers(min_value=1, max_value=500).flatmap(
    lambda c2: st.tuples(st.integers(min_value=c2 + 1, max_value=3 * c2), st.just(c2))
).map(lambda pair: SurfaceInvariants(c1_sq=pair[0], c2=pair[1]))


def test_veronese_bound_values():
    assert veronese_bound(1) == 3
    assert veronese_bound(2) == 6
    assert veronese_bound(5) == 21
    with pytest.raises(ValueError):
        veronese_bound(0)


def test_h0_lower_bound_values():
    assert h0_lower_bound(3, PQ2) == -16  # negative: the bound is vacuous here
    assert h0_lower_bound(4, PQ2) == 20
    assert h0_lower_bound(3, BMY_EDGE) == 40
    with pytest.raises(ValueError):
        h0_lower_bound(2, PQ2)


def test_theorem_b_examples():
    assert not theorem_b_holds(3, PQ2)
    assert theorem_b_holds(4, PQ2)
    for n in range(3, 31):
        assert not theorem_b_holds(n, THETA)
    with pytest.raises(ValueError):
        theorem_b_holds(2, PQ2)


def test_theorem_b_boundary_is_strict():
    # At n = 3, c2 = 16 the inequality's right side is exactly 38.
    assert not theorem_b_holds(3, SurfaceInvariants(38, 16))
    assert quadratic_Q(3, SurfaceInvariants(38, 16)) == 0
    assert theorem_b_holds(3, SurfaceInvariants(39, 16))


def test_quadratic_Q_values():
    assert quadratic_Q(0, PQ2) == 36  # the constant term gamma
    assert quadratic_Q(3, PQ2) == -78
    assert quadratic_Q(4, PQ2) == 12
    # On the diagonal alpha = 0 and gamma = 0, so Q(x) = -2*21*x.
    assert quadratic_Q(Fraction(1, 2), THETA) == -21


@settings(max_examples=300)
@given(surface=admissible_surfaces, n=st.integers(min_value=3, max_value=30))
def test_three_way_equivalence(surface, n):
    tb = theorem_b_holds(n, surface)
    assert tb == (quadratic_Q(n, surface) > 0)
    assert tb == (chi_sym_cotangent(n, surface) > veronese_bound(n))


def _assert_certified(result):
    # Bracket is certified by Q signs at the rational endpoints.
    assert result.root_upper - result.root_lower <= ROOT_BRACKET_WIDTH
    assert quadratic_Q(result.root_lower, result.surface) <= 0
    assert quadratic_Q(result.root_upper, result.surface) > 0


def test_threshold_product_quotient_k2():
    result = corollary_c_threshold(PQ2, m=2)
    assert (result.alpha, result.beta, result.gamma, result.delta) == (32, 67, 36, 3337)
    assert result.min_n == 4
    assert Fraction(389, 100) <= result.root_lower < result.root_upper <= Fraction(391, 100)
    _assert_certified(result)


def test_threshold_abelian_fourfold():
    result = corollary_c_threshold(AB4, m=2)
    assert (result.alpha, result.beta, result.gamma) == (24, 123, 72)
    assert result.delta == 123**2 - 24 * 72 == 13401
    assert result.min_n == 10
    assert Fraction(994, 100) <= result.root_lower < result.root_upper <= Fraction(995, 100)
    _assert_certified(result)


def test_threshold_bmy_boundary():
    result = corollary_c_threshold(BMY_EDGE, m=1)
    assert (result.alpha, result.beta, result.gamma, result.delta) == (48, 63, 36, 2241)
    assert result.min_n == 3
    assert Fraction(229, 100) <= result.root_lower < result.root_upper <= Fraction(230, 100)
    _assert_certified(result)


def test_threshold_rejects_nonpositive_segre():
    with pytest.raises(SegreNotPositiveError):
        corollary_c_threshold(THETA, m=1)
    with pytest.raises(SegreNotPositiveError):
        corollary_c_threshold(SurfaceInvariants(12, 24), m=2)
    with pytest.raises(ValueError):
        corollary_c_threshold(PQ2, m=0)


def test_threshold_without_real_root():
    # (120, 0): delta = 123^2 - 240*108 < 0, so Q > 0 everywhere and only
    # the n >= 3 floor matters.
    surface = SurfaceInvariants(120, 0)
    for m, expected in [(1, 3), (2, 4), (3, 3), (5, 5)]:
        result = corollary_c_threshold(surface, m=m)
        assert result.delta < 0
        assert result.root_lower is None and result.root_upper is None
        assert result.min_n == expected


def test_threshold_with_rational_root():
    # (24, 12): delta = 2025 = 45^2 and the root is exactly 4, so the
    # strictly-greater requirement matters.
    surface = SurfaceInvariants(24, 12)
    assert compare_to_upper_root(4, 24, 51, 2025) == 0
    assert corollary_c_threshold(surface, m=1).min_n == 5
    assert corollary_c_threshold(surface, m=2).min_n == 6
    assert corollary_c_threshold(surface, m=4).min_n == 8
    result = corollary_c_threshold(surface, m=1)
    assert result.root_lower < 4 < result.root_upper  # strict even at a rational root


def test_bracket_strict_on_synthetic_rational_roots():
    from pluricot.criteria import bracket_upper_root

    lo, hi = bracket_upper_root(1, 5, 4)  # root exactly 7
    assert lo < 7 < hi and hi - lo <= ROOT_BRACKET_WIDTH
    lo, hi = bracket_upper_root(2, 7, 0)  # double root exactly 7/2, hit by bisection
    assert lo < Fraction(7, 2) < hi and hi - lo <= ROOT_BRACKET_WIDTH


@settings(max_examples=150, deadline=None)
@given(surface=admissible_surfaces)
def test_threshold_is_a_sharp_boundary(surface):
    result = corollary_c_threshold(surface, m=1)
    for n in range(3, result.min_n):
        assert not theorem_b_holds(n, surface)
    for n in range(result.min_n, result.min_n + 21):
        assert theorem_b_holds(n, surface)


def test_criterion_never_holds_on_the_segre_diagonal():
    for c in (6, 12, 96):
        surface = SurfaceInvariants(c, c)
        for n in range(3, 101):
            assert not theorem_b_holds(n, surface)


@pytest.mark.parametrize(
    "surface,delta,u,delta_bar",
    [
        (PQ2, 3337, Fraction(2), Fraction(486)),
        (AB4, 13401, Fraction(4, 3), Fraction(110)),
        (BMY_EDGE, 2241, Fraction(3), Fraction(1440)),
    ],
)
def test_discriminant_examples(surface, delta, u, delta_bar):
    analysis = discriminant_analysis(surface)
    assert analysis.delta == delta
    assert analysis.u == u
    assert analysis.delta_bar == delta_bar
    assert analysis.delta_bar_sign == 1


def test_discriminant_preconditions():
    with pytest.raises(PreconditionError):
        discriminant_analysis(SurfaceInvariants(6, 0))
    with pytest.raises(PreconditionError):
        discriminant_analysis(SurfaceInvariants(6, -6))
    with pytest.raises(SegreNotPositiveError):
        discriminant_analysis(THETA)  # u = 1
    with pytest.raises(SegreNotPositiveError):
        discriminant_analysis(SurfaceInvariants(5, 6))  # u < 1


@settings(max_examples=300)
@given(surface=admissible_surfaces)
def test_discriminant_positive_in_bmy_range(surface):
    analysis = discriminant_analysis(surface)
    assert Fraction(1) < analysis.u <= 3
    assert analysis.delta > 0
    assert analysis.delta_bar > 0


def test_deg_psi_upper_bound_values():
    assert deg_psi_upper_bound(4, PQ2, 20) == 60  # floor of 1024/17
    assert deg_psi_upper_bound(2, AB4, 10) == 13  # floor of 96/7
    with pytest.raises(HypothesisNotMetError):
        deg_psi_upper_bound(4, PQ2, veronese_bound(4))
    with pytest.raises(ValueError):
        deg_psi_upper_bound(4, PQ2, 3)
    with pytest.raises(SegreNotPositiveError):
        deg_psi_upper_bound(3, THETA, 100)


def test_degree_relation_values():
    assert degree_relation(1, SurfaceInvariants(13, 12), 1) == 1
    assert degree_relation(2, AB4, 2) == 48
    with pytest.raises(InconsistentInputError):
        degree_relation(3, PQ2, 5)  # 432 is not divisible by 5
    with pytest.raises(ValueError):
        degree_relation(3, PQ2, 0)
    with pytest.raises(SegreNotPositiveError):
        degree_relation(3, THETA, 1)


def test_gauss_divisibility():
    assert gauss_divisibility_check(6, 3)
    assert not gauss_divisibility_check(6, 4)


@given(k=st.integers(min_value=1, max_value=100), t=st.integers(min_value=1, max_value=100))
def test_gauss_divisibility_by_construction(k, t):
    assert gauss_divisibility_check(k * t, k)


def test_classify_generically_finite_via_inequality():
    report = classify(4, PQ2, global_generation_asserted=True)
    assert report.verdict is Verdict.GENERICALLY_FINITE
    assert report.chi == 20
    assert report.h0_lower == 20
    assert report.veronese_dim == 15
    assert report.q_of_n == 12
    assert report.theorem_b_holds
    assert report.deg_psi_upper == 60


def test_classify_veronese_obstructed_on_theta():
    for n in range(1, 51):
        report = classify(n, THETA, True, h0_exact=veronese_bound(n))
        assert report.verdict is Verdict.VERONESE_OBSTRUCTED


def test_classify_generically_finite_via_section_count():
    report = classify(2, AB4, True, h0_exact=10)
    assert report.verdict is Verdict.GENERICALLY_FINITE
    assert report.deg_psi_upper == 13


def test_classify_requires_global_generation():
    report = classify(4, PQ2, global_generation_asserted=False)
    assert report.verdict is Verdict.INCONCLUSIVE
    report = classify(2, AB4, False, h0_exact=10)
    assert report.verdict is Verdict.INCONCLUSIVE


@settings(max_examples=200)
@given(
    surface=admissible_surfaces,
    n=st.integers(min_value=1, max_value=30),
    h0=st.one_of(st.none(), st.integers(min_value=40, max_value=4000)),
)
def test_classify_never_finite_without_global_generation(surface, n, h0):
    report = classify(n, surface, global_generation_asserted=False, h0_exact=h0)
    assert report.verdict is not Verdict.GENERICALLY_FINITE


def test_classify_section_count_below_rank_is_inconsistent():
    with pytest.raises(InconsistentInputError):
        classify(5, PQ2, True, h0_exact=5)
    # Without the global-generation assertion a small count is allowed.
    report = classify(5, PQ2, False, h0_exact=5)
    assert report.verdict is Verdict.INCONCLUSIVE


def test_classify_n1_section_count_path_not_applied():
    # The section-count argument needs n >= 2; at n = 1 even a large count
    # stays inconclusive.
    report = classify(1, SurfaceInvariants(100, 8), True, h0_exact=12)
    assert report.verdict is Verdict.INCONCLUSIVE


def test_classify_exact_count_below_veronese_wins_over_inequality():
    surface = SurfaceInvariants(100, 8)
    assert theorem_b_holds(3, surface)
    report = classify(3, surface, True, h0_exact=9)  # below the bound of 10
    assert report.verdict is Verdict.INCONCLUSIVE


def test_classify_h0_lower_only_from_three_onward():
    assert classify(2, PQ2, False).h0_lower is None
    assert classify(3, PQ2, False).h0_lower == -16
