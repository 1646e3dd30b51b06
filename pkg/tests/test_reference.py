"""The brute-force oracles, and their agreement with the fast paths."""

import pytest

import vectors
from eccipher import ecdlp_bsgs, ecdlp_exhaustive, slow_scalar_mul


def test_slow_scalar_mul_vector(e37):
    assert slow_scalar_mul(5, e37.point(10, 20)) == e37.point(33, 23)


def test_slow_scalar_mul_zero(e37):
    assert slow_scalar_mul(0, e37.point(9, 4)).is_infinity


def test_group_order_annihilates(e37):
    # 43 comes straight from counting the enumerated points.
    assert len(e37.enumerate_points()) == 43
    assert slow_scalar_mul(43, e37.point(5, 25)).is_infinity


def test_slow_scalar_mul_rejects_negative(e37):
    with pytest.raises(ValueError):
        slow_scalar_mul(-1, e37.point(9, 4))


def test_fast_equals_slow_for_sampled_inputs(e37):
    for coords in ((5, 25), (9, 4), (10, 20)):
        p = e37.point(*coords)
        for k in (0, 1, 2, 7, 42, 43, 44, 85):
            assert k * p == slow_scalar_mul(k, p)


def test_recover_scalar_from_public_point(e37):
    # The secret 5 is recoverable from 5*A at this scale, which is the
    # whole reason these curves are toys.
    g, q = e37.point(10, 20), e37.point(33, 23)
    assert ecdlp_exhaustive(g, q, 43) == 5
    assert ecdlp_bsgs(g, q, 43) == 5


def test_recover_nonce_from_first_cipher_point(e37):
    g, q = e37.point(9, 4), e37.point(1, 30)
    assert ecdlp_exhaustive(g, q, 43) == 8
    assert ecdlp_bsgs(g, q, 43) == 8


def test_log_of_generator_is_one(e37):
    p = e37.point(5, 25)
    assert ecdlp_exhaustive(p, p, 43) == 1
    assert ecdlp_bsgs(p, p, 43) == 1


def test_log_of_identity_is_zero(e37):
    p = e37.point(5, 25)
    assert ecdlp_exhaustive(p, e37.infinity(), 43) == 0
    assert ecdlp_bsgs(p, e37.infinity(), 43) == 0


def test_target_outside_generator_span_returns_none(e37):
    inf = e37.infinity()
    assert ecdlp_exhaustive(inf, e37.point(5, 25), 43) is None
    assert ecdlp_bsgs(inf, e37.point(5, 25), 43) is None


def test_solvers_agree_on_proper_subgroup(e1009):
    # The base generates a proper subgroup (order 530 of 1060), so points
    # outside it exist and both solvers must report them as unreachable.
    base = e1009.point(*vectors.MID_BASE)
    order = e1009.order_of(base)
    assert order < e1009.order
    span = set()
    acc = e1009.infinity()
    for _ in range(order):
        span.add(acc)
        acc = acc + base
    outside = next(p for p in e1009.enumerate_points() if p not in span)
    assert ecdlp_exhaustive(base, outside, order) is None
    assert ecdlp_bsgs(base, outside, order) is None
    inside = 123 * base
    assert ecdlp_exhaustive(base, inside, order) == 123
    assert ecdlp_bsgs(base, inside, order) == 123
