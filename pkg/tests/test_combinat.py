# -*- coding: utf-8 -*-
import math
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from genrank.combinat import (
    SupportFilter, WeakComposition, balanced_fiber_transversal, enumerate_Lambda,
    enumerate_lambda, fiber_counting_identity_holds, fiber_images, fiber_map,
    multinomial, multiset_count, supported_count, zhu_identity_holds)
from genrank.exceptions import ConstraintError


def test_multiset_count_values():
    assert multiset_count(1, 5) == 1
    assert multiset_count(3, 2) == 6
    assert multiset_count(2, 0) == 1
    assert multiset_count(100, 3) == 171700
    assert multiset_count(100, 3) >= 100000
    with pytest.raises(ValueError):
        multiset_count(0, 1)


def test_enumerate_lambda_order_and_size():
    assert enumerate_lambda(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert enumerate_lambda(3, 0) == [(0, 0, 0)]
    for d in range(1, 7):
        for k in range(9):
            comps = enumerate_lambda(d, k)
            assert len(comps) == multiset_count(d, k)
            assert comps == sorted(comps)
            assert all(c.degree == k for c in comps)


def test_enumerate_Lambda_with_filter():
    assert len(enumerate_Lambda(2, 2)) == 6
    cubic = enumerate_Lambda(2, 3, SupportFilter('0,0,0,1'))
    assert cubic == enumerate_lambda(2, 3)
    assert enumerate_Lambda(3, 4, SupportFilter('0')) == []


def test_support_filter():
    f = SupportFilter('1,0,1/2')
    assert f.K == 2
    assert f.support() == [0, 2]
    assert f[7] == 0
    assert str(f) == '1,0,1/2'
    assert SupportFilter('0,0').is_zero()
    assert supported_count(3, '0,1,0,1') == 3 + 10
    assert supported_count(3, '0,1,0,1', shift=1) == 6 + 15


def test_weak_composition():
    c = WeakComposition([0, 2, 1])
    assert c.degree == 3 and c.d == 3
    assert c.support == (1, 2)
    assert c.add_unit(0) == (1, 2, 1)
    with pytest.raises(ValueError):
        WeakComposition([1, -1])


def test_multinomial():
    assert multinomial((1, 1)) == 2
    assert multinomial((2, 1, 1)) == 12
    assert multinomial((0, 0)) == 1


def test_multinomial_pascal_recurrence():
    # multinomial(k) = sum over i with k_i > 0 of multinomial(k - e_i)
    for d in range(1, 5):
        for degree in range(1, 7):
            for comp in enumerate_lambda(d, degree):
                below = sum(multinomial(comp.sub_unit(i)) for i in comp.support)
                assert multinomial(comp) == below
                assert multinomial(comp) == math.factorial(degree) // math.prod(
                    math.factorial(p) for p in comp)
    assert sum(multinomial(c) for c in enumerate_lambda(3, 4)) == 3 ** 4


def test_fiber_map_preimages():
    for d in range(1, 5):
        for degree in range(4):
            pairs = [(i, c) for i in range(d) for c in enumerate_lambda(d, degree)]
            for i, k in pairs:
                for j, r in pairs:
                    same = all(k[t] + (t == i) == r[t] + (t == j) for t in range(d))
                    assert (fiber_map(i, k) == fiber_map(j, r)) == same

            # Preimage of a target t is {(i, t - e_i) : t_i > 0}
            for target in enumerate_lambda(d, degree + 1):
                preimage = {(i, k) for i, k in pairs if fiber_map(i, k) == target}
                assert preimage == {(i, target.sub_unit(i)) for i in target.support}


def test_identities():
    for d in range(1, 7):
        for K in range(11):
            assert zhu_identity_holds(d, K)
            assert fiber_counting_identity_holds(d, K)


def test_fiber_map():
    assert fiber_map(0, (0, 0)) == (1, 0)
    assert fiber_map(1, (1, 0)) == (1, 1)
    with pytest.raises(IndexError):
        fiber_map(2, (0, 0))


def test_fiber_map_surjects():
    for d in range(1, 5):
        for k in range(4):
            pairs = [(i, c) for i in range(d) for c in enumerate_lambda(d, k)]
            images = fiber_images(pairs)
            assert set(images) == set(enumerate_lambda(d, k + 1))


def _check_transversal(pairs, d, k, s, cap):
    assert len(pairs) == s
    images = fiber_images(pairs)
    assert all(count == 1 for count in images.values())
    loads = Counter(i for i, _ in pairs)
    assert all(load <= cap for load in loads.values())
    for i, comp in pairs:
        assert 0 <= i < d and comp.degree == k


def test_transversal_small_case():
    pairs = balanced_fiber_transversal(2, 1, 3, 2)
    _check_transversal(pairs, 2, 1, 3, 2)
    assert set(fiber_images(pairs)) == set(enumerate_lambda(2, 2))


def test_transversal_single_fiber():
    assert balanced_fiber_transversal(1, 4, 1, 1) == [(0, (4,))]
    assert balanced_fiber_transversal(1, 4, 0, 1) == []
    with pytest.raises(ConstraintError):
        balanced_fiber_transversal(1, 4, 2, 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 4), st.data())
def test_transversal_properties(d, k, data):
    total = multiset_count(d, k + 1)
    cap = data.draw(st.integers(1, total))
    s = data.draw(st.integers(0, min(cap * d, total)))
    _check_transversal(balanced_fiber_transversal(d, k, s, cap), d, k, s, cap)


def test_transversal_balanced_caps():
    d, k = 3, 2
    total = multiset_count(d, k + 1)
    cap = math.ceil(total / d)
    pairs = balanced_fiber_transversal(d, k, total, cap)
    _check_transversal(pairs, d, k, total, cap)
