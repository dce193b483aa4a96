"""Randomized invariants, mostly via hypothesis."""

from hypothesis import given, settings
from hypothesis import strategies as st

from pseudofuzzy import (
    DEFAULT_EPS,
    BinaryOpCode,
    CaseLabel,
    Kind,
    MembershipPair,
    PseudoTfn,
    TriangleShape,
    add,
    alpha_cut_mu,
    beta_cut_lambda,
    classify_case,
    cut_table,
    extension_oracle,
    is_dependent_pair,
    lambda_at,
    lambda_of_result,
    magnitude_sum,
    mu_at,
    mul,
    pair_at,
    parametric_point,
    scale,
    sub,
    validate_pair,
)

finite_mu = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
finite_lam = st.floats(min_value=-1.0, max_value=0.0, allow_nan=False)
pairs = st.builds(MembershipPair, finite_mu, finite_lam)
kinds = st.sampled_from(Kind)


def shape_strategy(min_side=1e-3, max_side=5.0, span=10.0):
    return st.builds(
        lambda a, left, right: TriangleShape(a, a + left, a + left + right),
        st.floats(min_value=-span, max_value=span),
        st.floats(min_value=min_side, max_value=max_side),
        st.floats(min_value=min_side, max_value=max_side),
    )


ptfns = st.builds(PseudoTfn, shape_strategy(), kinds)
sample_xs = st.floats(min_value=-40.0, max_value=40.0)
levels = st.floats(min_value=0.0, max_value=1.0)


@given(pairs)
def test_magnitude_sum_in_range(pair):
    assert 0.0 <= magnitude_sum(pair) <= 2.0


@given(pairs)
def test_classify_is_a_partition(pair):
    s = magnitude_sum(pair)
    label = classify_case(pair)
    if abs(s - 1.0) <= DEFAULT_EPS:
        assert label is CaseLabel.B
    elif s < 1.0:
        assert label is CaseLabel.A
    else:
        assert label is CaseLabel.C


@given(pairs, pairs)
def test_classify_monotone_in_sum(p1, p2):
    if magnitude_sum(p1) < magnitude_sum(p2):
        assert classify_case(p1) <= classify_case(p2)


@given(pairs)
def test_dependent_predicate_matches_case_b(pair):
    assert is_dependent_pair(pair) == (classify_case(pair) is CaseLabel.B)


@given(pairs)
def test_validate_pair_idempotent(pair):
    assert validate_pair(pair.mu, pair.lam) == pair


@given(shape_strategy(min_side=1e-7), sample_xs)
def test_dependent_identity(shape, x):
    p = PseudoTfn(shape, Kind.DEPENDENT)
    assert abs(lambda_at(p, x) - (mu_at(p, x) - 1.0)) <= 1e-12


@given(shape_strategy(min_side=1e-7), sample_xs)
def test_independent_identity(shape, x):
    p = PseudoTfn(shape, Kind.INDEPENDENT)
    assert abs(lambda_at(p, x) + mu_at(p, x)) <= 1e-12


@given(ptfns, sample_xs)
def test_pair_at_is_always_valid(p, x):
    pair = pair_at(p, x)
    assert validate_pair(pair.mu, pair.lam) == pair


@given(shape_strategy(), sample_xs)
def test_dependent_numbers_are_case_b_everywhere(shape, x):
    p = PseudoTfn(shape, Kind.DEPENDENT)
    assert classify_case(pair_at(p, x)) is CaseLabel.B


@given(shape_strategy(), sample_xs)
def test_independent_sum_is_twice_mu(shape, x):
    p = PseudoTfn(shape, Kind.INDEPENDENT)
    mu = mu_at(p, x)
    assert abs(magnitude_sum(pair_at(p, x)) - 2.0 * mu) <= 1e-12
    label = classify_case(pair_at(p, x))
    if 2.0 * mu < 1.0 - DEFAULT_EPS:
        assert label is CaseLabel.A
    elif 2.0 * mu > 1.0 + DEFAULT_EPS:
        assert label is CaseLabel.C


@given(ptfns, levels, levels)
def test_alpha_cuts_nest(p, alpha1, alpha2):
    lo_level, hi_level = min(alpha1, alpha2), max(alpha1, alpha2)
    outer = alpha_cut_mu(p, lo_level)
    inner = alpha_cut_mu(p, hi_level)
    assert inner.lo >= outer.lo - 1e-12
    assert inner.hi <= outer.hi + 1e-12


@given(ptfns, levels)
def test_cut_endpoints_reproduce_level(p, alpha):
    cut = alpha_cut_mu(p, alpha)
    assert abs(mu_at(p, cut.lo) - alpha) <= 1e-9
    assert abs(mu_at(p, cut.hi) - alpha) <= 1e-9


@given(shape_strategy(), st.floats(min_value=-1.0, max_value=0.0))
def test_dependent_beta_cut_correspondence(shape, beta):
    p = PseudoTfn(shape, Kind.DEPENDENT)
    got = beta_cut_lambda(p, beta)
    want = alpha_cut_mu(p, beta + 1.0)
    assert abs(got.lo - want.lo) <= 1e-9
    assert abs(got.hi - want.hi) <= 1e-9


@given(
    shape_strategy(),
    st.floats(min_value=-1.0, max_value=0.0),
    st.floats(min_value=-1.0, max_value=0.0),
)
def test_beta_cuts_nest_per_kind(shape, beta1, beta2):
    lo_level, hi_level = min(beta1, beta2), max(beta1, beta2)
    # dependent cuts shrink toward beta = 0, independent toward beta = -1
    dep = PseudoTfn(shape, Kind.DEPENDENT)
    outer, inner = beta_cut_lambda(dep, lo_level), beta_cut_lambda(dep, hi_level)
    assert inner.lo >= outer.lo - 1e-12 and inner.hi <= outer.hi + 1e-12
    ind = PseudoTfn(shape, Kind.INDEPENDENT)
    outer, inner = beta_cut_lambda(ind, hi_level), beta_cut_lambda(ind, lo_level)
    assert inner.lo >= outer.lo - 1e-12 and inner.hi <= outer.hi + 1e-12


@given(ptfns, levels, levels, levels)
def test_parametric_point_monotone_and_spans_cut(p, r, s1, s2):
    cut = alpha_cut_mu(p, r)
    assert abs(parametric_point(p, r, 0.0) - cut.lo) <= 1e-12
    assert abs(parametric_point(p, r, 1.0) - cut.hi) <= 1e-12
    lo_s, hi_s = min(s1, s2), max(s1, s2)
    assert parametric_point(p, r, lo_s) <= parametric_point(p, r, hi_s) + 1e-12


@given(shape_strategy(), shape_strategy(), kinds)
def test_add_commutes_exactly(shape1, shape2, kind):
    p, q = PseudoTfn(shape1, kind), PseudoTfn(shape2, kind)
    assert add(p, q).shape == add(q, p).shape


@given(shape_strategy(), shape_strategy(), shape_strategy(), kinds)
def test_add_associative(shape1, shape2, shape3, kind):
    p, q, r = (PseudoTfn(s, kind) for s in (shape1, shape2, shape3))
    left = add(add(p, q), r).shape
    right = add(p, add(q, r)).shape
    assert abs(left.a - right.a) <= 1e-12
    assert abs(left.b - right.b) <= 1e-12
    assert abs(left.c - right.c) <= 1e-12


@given(shape_strategy(), shape_strategy(), kinds)
def test_sub_peak_is_peak_difference(shape1, shape2, kind):
    p, q = PseudoTfn(shape1, kind), PseudoTfn(shape2, kind)
    assert sub(p, q).b == p.b - q.b


@given(ptfns, st.floats(min_value=0.05, max_value=20.0), st.sampled_from((1.0, -1.0)))
def test_scale_round_trip(p, magnitude, sign):
    k = sign * magnitude
    r = scale(scale(p, k), 1.0 / k)
    assert abs(r.a - p.a) <= 1e-9
    assert abs(r.b - p.b) <= 1e-9
    assert abs(r.c - p.c) <= 1e-9
    assert r.kind is p.kind


@given(shape_strategy(span=3.0), shape_strategy(span=3.0), kinds, st.integers(2, 9))
def test_mul_tables_satisfy_invariants(shape1, shape2, kind, n_levels):
    # CutTable construction validates level ordering and nesting
    table = mul(PseudoTfn(shape1, kind), PseudoTfn(shape2, kind), n_levels)
    assert table.rows[0][0] == 0.0
    assert table.rows[-1][0] == 1.0
    assert table.kind is kind


@given(shape_strategy(span=3.0), shape_strategy(span=3.0), kinds, sample_xs)
def test_result_pairs_follow_kind_identity(shape1, shape2, kind, x):
    table = mul(PseudoTfn(shape1, kind), PseudoTfn(shape2, kind), 7)
    pair = lambda_of_result(table, x)
    if kind is Kind.DEPENDENT:
        assert abs(pair.lam - (pair.mu - 1.0)) <= 1e-12
    else:
        assert abs(pair.lam + pair.mu) <= 1e-12


@given(ptfns, sample_xs)
def test_tabulated_triangle_reconstructs_mu(p, x):
    # edges are linear, so interpolating the table is exact up to rounding
    table = cut_table(p, 11)
    got = lambda_of_result(table, x).mu
    assert abs(got - mu_at(p, x)) <= 1e-7


@settings(max_examples=20, deadline=None)
@given(shape_strategy(min_side=0.05), shape_strategy(min_side=0.05), kinds)
def test_oracle_add_convergence(shape1, shape2, kind):
    p, q = PseudoTfn(shape1, kind), PseudoTfn(shape2, kind)
    grid = 64
    bound = 2.0 * max(shape1.width, shape2.width) / grid
    got = extension_oracle(p, q, BinaryOpCode.ADD, grid, 6)
    want = cut_table(add(p, q), 6)
    for (_, gi), (_, wi) in zip(got.rows, want.rows):
        assert abs(gi.lo - wi.lo) <= bound
        assert abs(gi.hi - wi.hi) <= bound


@settings(max_examples=20, deadline=None)
@given(shape_strategy(min_side=0.05, max_side=0.5, span=1.0),
       shape_strategy(min_side=0.05, max_side=0.5, span=1.0),
       kinds)
def test_oracle_mul_convergence_on_unit_scale(shape1, shape2, kind):
    # |operand| <= 2 keeps the product's sampling error within the
    # per-operand bound used for add
    p, q = PseudoTfn(shape1, kind), PseudoTfn(shape2, kind)
    grid = 128
    bound = 2.0 * 2.0 * max(shape1.width, shape2.width) / grid
    got = extension_oracle(p, q, BinaryOpCode.MUL, grid, 6)
    want = mul(p, q, 6)
    for (_, gi), (_, wi) in zip(got.rows, want.rows):
        assert abs(gi.lo - wi.lo) <= bound
        assert abs(gi.hi - wi.hi) <= bound
