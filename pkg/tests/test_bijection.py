from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylpart import bijection as bj
from cylpart.partitions import enumerate_cylindric, iter_partitions, validate_cylindric

P11, P20 = bj.P11, bj.P20


def lam11(top, bottom):
    return validate_cylindric([top, bottom], P11)


def lam20(top, bottom):
    return validate_cylindric([top, bottom], P20)


def pair(mu, beta, flavor=bj.DISTINCT_ODD):
    return bj.PartitionPair(tuple(mu), tuple(beta), flavor)


# golden examples


def test_forward_golden_with_trace():
    result, trace = bj.forward_11(lam11((7, 4, 4, 3), (6, 5, 4)))
    assert result.mu == (5, 5, 4, 3, 3, 3, 2)
    assert result.beta == (7, 1)
    assert [(s.direction, s.j, s.part) for s in trace] == [("forward", 4, 7), ("forward", 1, 1)]


def test_inverse_golden_with_trace():
    trace = bj.MoveTrace()
    lam = bj.inverse_11(pair((6, 5, 5, 3, 1), (9, 7, 3)), trace=trace)
    assert lam.rows == ((8, 8, 2, 2, 1), (9, 5, 3, 1))
    assert [s.part for s in trace] == [3, 7, 9]
    assert all(s.direction == "backward" for s in trace)


def test_trace_replays_backward():
    lam = lam11((7, 4, 4, 3), (6, 5, 4))
    result, trace = bj.forward_11(lam)
    replay = bj.MoveTrace()
    assert bj.inverse_11(result, trace=replay) == lam
    assert replay.to_json() == trace.reversed().to_json()


def test_padding():
    form = bj.pad_11(lam11((7, 4, 4, 3), (6, 5, 4)))
    assert (form.a, form.b) == ([7, 4, 4, 3], [6, 5, 4, 0])
    form = bj.pad_11(lam11((), (1,)))
    assert (form.a, form.b, form.r) == ([0], [1], 1)
    assert bj.pad_11(lam11((), ())).r == 0


@pytest.mark.parametrize("top,bottom,mu,beta", [
    ((), (), (), ()),
    ((1,), (), (), (1,)),
    ((), (1,), (1,), ()),
])
def test_forward_11_small(top, bottom, mu, beta):
    result, _ = bj.forward_11(lam11(top, bottom))
    assert (result.mu, result.beta) == (mu, beta)
    assert bj.inverse_11(result).rows == (top, bottom)


@pytest.mark.parametrize("top,bottom,mu,beta", [
    ((2,), (), (2,), ()),
    ((1, 1), (), (), (2,)),
    ((), (), (), ()),
    ((2, 1), (1,), (2, 1, 1), ()),
])
def test_profile_20_small(top, bottom, mu, beta):
    result, _ = bj.forward_20(lam20(top, bottom))
    assert (result.mu, result.beta, result.flavor) == (mu, beta, bj.DISTINCT_EVEN)
    assert bj.inverse_20(result).rows == (top, bottom)


@pytest.mark.parametrize("top,bottom,mu,beta", [
    ((), (1,), (1,), ()),
    ((3,), (), (1,), (1,)),
    ((), (), (), ()),
])
def test_odd_flavor_small(top, bottom, mu, beta):
    result, _ = bj.forward_odd_11(lam11(top, bottom))
    assert (result.mu, result.beta) == (mu, beta)
    assert result.weight == sum(top) + sum(bottom)
    assert bj.inverse_odd_11(result).rows == (top, bottom)


def test_odd_flavor_not_in_image():
    with pytest.raises(bj.NotInImage):
        bj.forward_odd_11(lam11((1,), ()))


def test_largest_part_statistic_examples():
    p = pair((6, 5, 5, 3, 1), (9, 7, 3))
    assert bj.largest_part_statistic(p) == 9 == bj.inverse_11(p).max_part
    assert bj.largest_part_statistic(pair((), ())) == 0
    assert bj.largest_part_statistic(pair((), (1,))) == 1


# input errors


def test_beta_validation():
    with pytest.raises(bj.BetaNotDistinctOdd):
        bj.inverse_11(pair((1,), (3, 3)))
    with pytest.raises(bj.BetaNotDistinctOdd):
        bj.inverse_11(pair((1,), (2,)))
    with pytest.raises(bj.BetaNotDistinctEven):
        bj.inverse_20(pair((1,), (3,), bj.DISTINCT_EVEN))
    with pytest.raises(bj.BetaNotDistinctEven):
        bj.inverse_20(pair((1,), (4, 4), bj.DISTINCT_EVEN))


def test_doubled_odd_validation():
    with pytest.raises(bj.MuNotOdd):
        bj.inverse_odd_11(pair((2,), (), bj.DOUBLED_ODD))
    with pytest.raises(bj.DependencyViolated):
        bj.inverse_odd_11(pair((1,), (3,), bj.DOUBLED_ODD))
    with pytest.raises(bj.BetaNotDistinctOdd):
        bj.inverse_odd_11(pair((1, 1, 1), (1, 1), bj.DOUBLED_ODD))


def test_dependency_readings():
    assert bj.dependency_holds((1, 1), (1,))
    assert not bj.dependency_holds((1, 1), (3,))
    assert bj.dependency_holds((1, 1, 1), (3,))
    assert bj.dependency_holds((1, 1, 1), (1,))
    assert not bj.dependency_holds((1, 1, 1), (1,), strict=True)
    assert bj.dependency_holds((), (), strict=True)
    assert not bj.dependency_holds((1,), (), strict=True)


def test_wrong_profile_rejected():
    with pytest.raises(ValueError):
        bj.forward_11(lam20((1,), ()))
    with pytest.raises(ValueError):
        bj.PartitionPair((), (), "mixed")


def test_pair_json():
    p = pair((5, 5), (7, 1))
    assert bj.PartitionPair.from_json(p.to_json()) == p
    assert p.to_json() == {"mu": [5, 5], "beta": [7, 1], "flavor": "distinct-odd"}


# exhaustive suites at small weight (the acceptance suite goes to 20)


@pytest.mark.parametrize("profile,flavor", [(P11, bj.DISTINCT_ODD), (P20, bj.DISTINCT_EVEN)])
def test_round_trips_to_weight_12(profile, flavor):
    for n in range(13):
        objs = enumerate_cylindric(profile, n)
        images = set()
        for lam in objs:
            result, trace = bj.forward(lam)
            assert result.weight == n
            assert bj.inverse(result) == lam
            images.add(result)
        pairs = set(bj.iter_pairs(flavor, n))
        assert images == pairs


def test_statistic_transport_to_weight_14():
    for n in range(15):
        for p in bj.iter_pairs(bj.DISTINCT_ODD, n):
            assert bj.inverse_11(p).max_part == bj.largest_part_statistic(p)


def test_odd_round_trip_to_weight_14():
    for n in range(15):
        for p in bj.iter_pairs(bj.DOUBLED_ODD, n):
            lam = bj.inverse_odd_11(p)
            assert all(x % 2 for x in lam.parts())
            assert lam.weight == n
            assert bj.forward_odd_11(lam)[0] == p


def test_odd_forward_image_satisfies_pair_invariants():
    for n in range(15):
        for lam in enumerate_cylindric(P11, n, "odd"):
            try:
                result, _ = bj.forward_odd_11(lam)
            except bj.NotInImage:
                continue
            result.validate()
            assert bj.inverse_odd_11(result) == lam


# properties


def moves_balance(trace: bj.MoveTrace, doubled: bool) -> bool:
    factor = 2 if doubled else 1
    return all(s.amount * s.touched == factor * s.part for s in trace)


@st.composite
def cylindric_11(draw):
    n = draw(st.integers(0, 16))
    objs = enumerate_cylindric(P11, n)
    return draw(st.sampled_from(objs))


@st.composite
def distinct_odd_pairs(draw):
    b = draw(st.integers(0, 30))
    betas = list(iter_partitions(b, distinct=True, parity=1)) or [()]
    beta = draw(st.sampled_from(betas))
    m = draw(st.integers(0, 15))
    mu = draw(st.sampled_from(list(iter_partitions(m))))
    return pair(mu, beta if sum(beta) == b else ())


@settings(max_examples=150, deadline=None)
@given(cylindric_11())
def test_forward_properties(lam):
    result, trace = bj.forward_11(lam)
    assert list(result.beta) == sorted(set(result.beta), reverse=True)
    assert all(x % 2 for x in result.beta)
    assert result.weight == lam.weight
    assert moves_balance(trace, doubled=False)
    assert [s.j for s in trace] == sorted((s.j for s in trace), reverse=True)


@settings(max_examples=150, deadline=None)
@given(distinct_odd_pairs())
def test_inverse_properties(p):
    trace = bj.MoveTrace()
    lam = bj.inverse_11(p, trace=trace)
    assert lam.weight == p.weight
    assert lam.max_part == bj.largest_part_statistic(p)
    assert moves_balance(trace, doubled=False)
    assert bj.forward_11(lam)[0] == p
