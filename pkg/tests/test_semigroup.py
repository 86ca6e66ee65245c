import pytest

from curvegb.errors import (
    GcdNotOne,
    NonIncreasing,
    NotArithmetic,
    NotInSemigroup,
    NotMinimallyGenerated,
    TooShort,
)
from curvegb.semigroup import (
    apery_table,
    compute_parameters,
    degree_split,
    in_v_minus_w,
    representation_counts,
    unique_representation,
    validate_input,
    window,
)
from curvegb.sweep import almost_arithmetic_instances


def naive_members(gens, upto):
    ok = [False] * (upto + 1)
    ok[0] = True
    for x in range(1, upto + 1):
        ok[x] = any(x >= g and ok[x - g] for g in gens)
    return ok


def test_valid_inputs(small, wide):
    assert (small.p, small.n) == (1, 2)
    assert (wide.p, wide.n) == (4, 5)
    assert small.weights == (7, 8, 6)
    assert str(small) == "(7,8;6)"


@pytest.mark.parametrize("arith, mn, error", [
    ((5, 6), 11, NotMinimallyGenerated),
    ((5,), 7, TooShort),
    ((8, 7), 6, NonIncreasing),
    ((5, 6, 8), 7, NotArithmetic),
    ((4, 6), 8, GcdNotOne),
    ((4, 6), 15, None),
    ((3, 6), 5, NotMinimallyGenerated),
    ((4, 6), 9, None),
    ((6, 8, 10), 9, None),
    ((6, 8, 10), 16, GcdNotOne),
    ((6, 11, 16), 17, NotMinimallyGenerated),
    ((4, 8), 5, NotMinimallyGenerated),
])
def test_validation_errors(arith, mn, error):
    if error is None:
        validate_input(arith, mn)
    else:
        with pytest.raises(error):
            validate_input(arith, mn)


def test_gcd_rejected():
    with pytest.raises(GcdNotOne):
        validate_input((6, 9), 15 + 6)  # every generator divisible by 3


def test_redundant_generator_is_named():
    with pytest.raises(NotMinimallyGenerated) as info:
        validate_input((5, 6), 11)
    assert info.value.generator == 11


def test_apery_examples():
    table = apery_table((7, 8, 6))
    assert table.apery[0] == 0
    assert 13 in table and 5 not in table
    prime = apery_table((20, 21, 22, 23, 24), partial=True)
    assert 29 not in prime and 87 in prime
    assert prime.complete
    even = apery_table((6, 8, 10), partial=True)
    assert not even.complete and 7 not in even and 14 in even


def test_apery_requires_gcd_one():
    with pytest.raises(GcdNotOne):
        apery_table((4, 6))


@pytest.mark.parametrize("gens", [(7, 8, 6), (3, 4, 5), (20, 21, 22, 23, 24, 29),
                                  (9, 10, 8), (11, 13, 15, 7), (5, 9, 13, 17, 19)])
def test_apery_agrees_with_dynamic_programming(gens):
    table = apery_table(gens)
    upto = 3 * table.max_apery
    ok = naive_members(gens, upto)
    assert [g in table for g in range(upto + 1)] == ok
    for r, a in enumerate(table.apery):
        assert a % gens[0] == r


@pytest.mark.parametrize("arith, mn, t, expected", [
    ((20, 21, 22, 23, 24), 29, 7, (1, 3, 47)),
    ((20, 21, 22, 23, 24), 29, 0, (-1, 4, 0)),
    ((7, 8), 6, 3, (2, 1, 24)),
    ((7, 8), 6, 0, (-1, 1, 0)),
    ((20, 21, 22, 23, 24), 29, 4, (0, 4, 24)),
])
def test_degree_split(arith, mn, t, expected):
    split = degree_split(validate_input(arith, mn), t)
    assert (split.q, split.r, split.g) == expected
    assert split.t == split.q * len(arith[1:]) + split.r


def test_parameters_small(small_params):
    d = small_params.as_dict()
    want = dict(u=4, upsilon=4, w=3, z=3, **{"lambda": 2}, mu=0, nu=2, q=3, r=1,
                q_prime=0, r_prime=1, q_z=2, r_z=1, epsilon=1, I=[], J=[0])
    assert {k: d[k] for k in want} == want


def test_parameters_wide(wide_params):
    d = wide_params.as_dict()
    # q' is 0 here: u - z = 2 = 0*4 + 2 is the only split with r' in [1, 4]
    want = dict(upsilon=3, mu=2, q_z=1, r_z=3, z=7, q=2, r=1, u=9, **{"lambda": 2}, w=1,
                r_prime=2, q_prime=0, epsilon=1, J=[0, 1, 2], I=[0, 1, 2, 3])
    assert {k: d[k] for k in want} == want


@pytest.mark.parametrize("arith, mn, want", [
    ((9, 10), 8, dict(u=5, upsilon=5, w=4, z=4, mu=0, **{"lambda": 2})),
    ((3, 4), 5, dict(u=2, upsilon=2, w=1, z=1, mu=2, nu=3, **{"lambda": 1})),
])
def test_parameters_other(arith, mn, want):
    d = compute_parameters(validate_input(arith, mn)).as_dict()
    assert {k: d[k] for k in want} == want


def test_window(small_params):
    assert in_v_minus_w(small_params, 0, 0)
    assert not in_v_minus_w(small_params, 3, 3)
    assert not in_v_minus_w(small_params, 4, 0)
    assert not in_v_minus_w(small_params, 0, 4)
    points = list(window(small_params))
    assert len(points) == 4 * 4 - 3 * 3


def test_window_with_empty_w():
    for curve in almost_arithmetic_instances(12, 3, 30):
        params = compute_parameters(curve)
        if params.w_empty:
            assert len(list(window(params))) == params.u * params.v
            break
    else:
        pytest.fail("no instance with empty W")


def test_unique_representation(small_params):
    assert unique_representation(small_params, 13) == (1, 0, 1)
    assert unique_representation(small_params, 0) == (0, 0, 0)
    with pytest.raises(NotInSemigroup):
        unique_representation(small_params, 5)


def _identities(params):
    curve = params.curve
    m0, mn = curve.m[0], curve.mn
    g = lambda t: degree_split(curve, t).g
    assert params.g_u == params.lam * m0 + params.w * mn
    assert params.v * mn == params.mu * m0 + params.g_z
    assert g(params.u - params.z) + (params.v - params.w) * mn == params.nu * m0
    assert params.u > params.p and params.q > 0
    assert params.w < params.v and params.z < params.u
    split = degree_split(curve, params.u - params.z)
    assert (split.q, split.r) == (params.q_prime, params.r_prime)
    assert params.q_prime == params.q - params.q_z - params.eps
    assert params.r_prime == params.eps * params.p + params.r - params.r_z
    assert params.w_empty == (params.w == 0 or params.z == 0)


def test_identities_on_a_grid():
    count = 0
    for curve in almost_arithmetic_instances(16, 4, 40, max_step=3):
        _identities(compute_parameters(curve))
        count += 1
    assert count > 500


def test_representation_counts_match_exhaustive_search(wide_params):
    counts = representation_counts(wide_params, 150)
    gamma = wide_params.curve.gamma
    for g in range(151):
        assert counts.get(g, 0) == (1 if g in gamma else 0)
        if g in gamma:
            a, s, b = unique_representation(wide_params, g)
            assert in_v_minus_w(wide_params, s, b)
