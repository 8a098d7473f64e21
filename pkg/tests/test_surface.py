import pytest
from hypothesis import given, settings, strategies as st

from groupgrowth.errors import ClosureBudgetExceeded
from groupgrowth.surface import (
    SurfaceRelator,
    dehn_reduce,
    geodesic_closure,
    surface_canonical,
)
from groupgrowth.words import free_reduce, invert

import oracles

R2 = SurfaceRelator(2)

letters4 = st.integers(min_value=-4, max_value=4).filter(lambda x: x != 0)
words4 = st.lists(letters4, max_size=10).map(tuple)


def test_relator_layout():
    assert R2.relator == (1, 2, -1, -2, 3, 4, -3, -4)
    assert R2.length == 8 and R2.half == 4
    assert len(R2.variants) == 16
    # all length-2 prefixes of variants are distinct (small cancellation)
    assert len({v[:2] for v in R2.variants}) == 16


def test_relator_reduces_to_identity():
    for v in R2.variants:
        assert dehn_reduce(v, R2) == ()


def test_more_than_half_subword_is_shortened():
    w = (1, 2, -1, -2, 3)  # 5 > half of the relator, complement has 3 letters
    out = dehn_reduce(w, R2)
    assert len(out) == 3
    assert oracles.surface_equal_ref(w, out, 2)


def test_exactly_half_is_left_alone_by_dehn():
    half = R2.relator[:4]
    assert dehn_reduce(half, R2) == half


def test_half_swap_closure_pairs():
    half = (1, 2, -1, -2)
    closure = geodesic_closure(half, R2)
    assert closure == {(1, 2, -1, -2), (4, 3, -4, -3)}
    assert surface_canonical(half, R2) == (1, 2, -1, -2)
    # both members map to the same canonical word
    assert surface_canonical((4, 3, -4, -3), R2) == (1, 2, -1, -2)


def test_generic_word_has_singleton_closure():
    w = (1, 3)
    assert geodesic_closure(w, R2) == {w}


def test_closure_budget_raises():
    with pytest.raises(ClosureBudgetExceeded):
        geodesic_closure((1, 2, -1, -2), R2, budget=1)


def test_genus_three_relator():
    r3 = SurfaceRelator(3)
    assert r3.length == 12
    assert len(r3.variants) == 24
    assert dehn_reduce(r3.relator * 2, r3) == ()


def test_genus_below_two_rejected():
    with pytest.raises(ValueError):
        SurfaceRelator(1)


@settings(max_examples=60, deadline=None)
@given(words4)
def test_dehn_reduce_matches_reference(w):
    ours = dehn_reduce(free_reduce(w), R2)
    ref = oracles.dehn_reduce_ref(w, 2)
    assert len(ours) <= len(free_reduce(w))
    # the two reducers may pick different short words for the same element
    assert oracles.surface_equal_ref(ours, ref, 2)
    assert (ours == ()) == (ref == ())


@settings(max_examples=40, deadline=None)
@given(words4)
def test_canonical_constant_on_closures(w):
    reduced = dehn_reduce(free_reduce(w), R2)
    closure = geodesic_closure(reduced, R2)
    canon = surface_canonical(reduced, R2)
    assert canon in closure or len(canon) < len(reduced)
    for u in closure:
        assert surface_canonical(u, R2) == canon


@settings(max_examples=40, deadline=None)
@given(words4)
def test_canonical_word_represents_the_same_element(w):
    reduced = dehn_reduce(free_reduce(w), R2)
    canon = surface_canonical(reduced, R2)
    assert oracles.surface_equal_ref(canon, tuple(w), 2)


def test_inverse_through_canonical():
    w = (1, 2, 3)
    canon = surface_canonical(dehn_reduce(w, R2), R2)
    inv = surface_canonical(dehn_reduce(invert(canon), R2), R2)
    assert oracles.surface_equal_ref(free_reduce(canon + inv), (), 2)
