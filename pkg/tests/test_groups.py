import itertools

import pytest
from hypothesis import given, settings, strategies as st

from groupgrowth import (
    GroupOrder,
    GroupSpec,
    InvalidGenus,
    InvalidSpec,
    MatrixZ2,
    ball_elements,
    group_order,
    make_generating_set,
    make_group,
)

import oracles

A21 = MatrixZ2.from_rows(((2, 1), (1, 1)))
A_DETM1 = MatrixZ2.from_rows(((1, 1), (1, 0)))  # det = -1

ALL_SPECS = [
    GroupSpec.trivial(),
    GroupSpec.cyclic(2),
    GroupSpec.cyclic(6),
    GroupSpec.free(1),
    GroupSpec.free(2),
    GroupSpec.free_abelian(2),
    GroupSpec.free_abelian(3),
    GroupSpec.heisenberg(),
    GroupSpec.klein_bottle(),
    GroupSpec.surface(2),
    GroupSpec.torus_bundle(A21),
    GroupSpec.torus_bundle(A_DETM1),
    GroupSpec.free_product(GroupSpec.cyclic(2), GroupSpec.cyclic(3)),
    GroupSpec.free_product(GroupSpec.cyclic(2), GroupSpec.free(1)),
    GroupSpec.direct_product_with_Z(GroupSpec.surface(2)),
    GroupSpec.direct_product_with_Z(GroupSpec.free(2)),
]


# --- spec construction and validation ---------------------------------------


def test_invalid_specs_rejected():
    with pytest.raises(InvalidSpec):
        GroupSpec.cyclic(0)
    with pytest.raises(InvalidSpec):
        GroupSpec.free(0)
    with pytest.raises(InvalidGenus):
        GroupSpec.surface(1)
    with pytest.raises(InvalidSpec):
        GroupSpec.torus_bundle(MatrixZ2.from_rows(((2, 0), (0, 2))))  # det 4
    with pytest.raises(InvalidSpec):
        GroupSpec.free_product(GroupSpec.cyclic(2))  # needs two factors
    with pytest.raises(InvalidSpec):
        GroupSpec.free_product(GroupSpec.cyclic(2), GroupSpec.trivial())
    with pytest.raises(InvalidSpec):
        GroupSpec.from_dict({"family": "nope", "params": {}})


def test_matrix_validation():
    with pytest.raises(InvalidSpec):
        MatrixZ2.from_rows(((1, 2), (3,)))
    with pytest.raises(InvalidSpec):
        MatrixZ2.from_rows(((1.5, 0), (0, 1)))
    with pytest.raises(InvalidSpec):
        MatrixZ2.from_rows(((True, 0), (0, 1)))


def test_matrix_algebra():
    assert A21.det() == 1
    assert A21.trace() == 3
    ident = MatrixZ2.identity()
    assert A21.mul(ident) == A21
    assert A21.mul(A21.inverse()) == ident
    assert A_DETM1.det() == -1
    assert A_DETM1.mul(A_DETM1.inverse()) == ident
    with pytest.raises(InvalidSpec):
        MatrixZ2.from_rows(((2, 0), (0, 2))).inverse()


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.describe())
def test_spec_dict_roundtrip(spec):
    again = GroupSpec.from_dict(spec.to_dict())
    assert again == spec


def test_spec_label_roundtrip():
    spec = GroupSpec.free(2, label="F2")
    assert spec.label == "F2"
    assert GroupSpec.from_dict(spec.to_dict()).label == "F2"


def test_group_order_values():
    assert group_order(GroupSpec.trivial()) == GroupOrder.finite(1)
    assert group_order(GroupSpec.cyclic(6)) == GroupOrder.finite(6)
    assert group_order(GroupSpec.cyclic(6)).is_finite
    for spec in ALL_SPECS[3:]:
        assert not group_order(spec).is_finite


# --- group laws on sampled ball elements -------------------------------------


def sample_elements(spec, radius=3, cap=40):
    handle = make_group(spec)
    gens = handle.default_generators()
    elements = ball_elements(handle, gens, radius)
    return handle, elements[:cap]


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.describe())
def test_group_laws(spec):
    handle, elements = sample_elements(spec)
    e = handle.identity
    for g in elements:
        assert handle.mul(g, e) == g
        assert handle.mul(e, g) == g
        assert handle.mul(g, handle.inv(g)) == e
        assert handle.mul(handle.inv(g), g) == e
    # associativity on a deterministic sample of triples
    for g, h, k in itertools.islice(itertools.product(elements[:8], repeat=3), 200):
        assert handle.mul(handle.mul(g, h), k) == handle.mul(g, handle.mul(h, k))


@pytest.mark.parametrize("spec", ALL_SPECS, ids=lambda s: s.describe())
def test_canonical_keys_are_injective(spec):
    handle, elements = sample_elements(spec, radius=3, cap=200)
    keys = [handle.canonical_key(g) for g in elements]
    assert len(set(keys)) == len(elements)
    assert handle.canonical_key(handle.identity) == b""


# --- family-specific relations ----------------------------------------------


def test_cyclic_matches_residues():
    handle = make_group(GroupSpec.cyclic(6))
    for a in range(6):
        for b in range(6):
            assert handle.mul(a, b) == (a + b) % 6
        assert handle.inv(a) == (-a) % 6


@given(st.lists(st.integers(-3, 3).filter(bool), max_size=8))
def test_free_mul_is_reduced_concatenation(w):
    handle = make_group(GroupSpec.free(3))
    left = tuple(w[: len(w) // 2])
    right = tuple(w[len(w) // 2 :])
    assert handle.mul(left, right) == oracles.reduce_free(left + right)


def test_heisenberg_multiplication_oracle():
    handle = make_group(GroupSpec.heisenberg())
    triples = [(x, y, z) for x in (-1, 0, 2) for y in (-2, 0, 1) for z in (-1, 0, 3)]
    for a in triples:
        for b in triples:
            assert handle.mul(a, b) == oracles.heisenberg_mul(a, b)
        assert handle.mul(a, handle.inv(a)) == (0, 0, 0)


def test_heisenberg_commutator_is_central():
    handle = make_group(GroupSpec.heisenberg())
    x, y = (1, 0, 0), (0, 1, 0)
    comm = handle.mul(
        handle.mul(x, y), handle.inv(handle.mul(y, x))
    )
    assert comm == (0, 0, 1)
    for g in ball_elements(handle, handle.default_generators(), 3):
        assert handle.mul(comm, g) == handle.mul(g, comm)


def test_klein_bottle_defining_relation():
    handle = make_group(GroupSpec.klein_bottle())
    a, b = (1, 0), (0, 1)
    # b a b' = a'
    assert handle.mul(handle.mul(b, a), handle.inv(b)) == handle.inv(a)
    # a and b^2 commute (index-2 Z^2 subgroup)
    b2 = handle.mul(b, b)
    assert handle.mul(a, b2) == handle.mul(b2, a)


def test_surface_relator_is_identity():
    handle = make_group(GroupSpec.surface(2))
    word = handle.identity
    for letter in (1, 2, -1, -2, 3, 4, -3, -4):
        word = handle.mul(word, (letter,))
    assert word == handle.identity


@pytest.mark.parametrize("matrix", [A21, A_DETM1], ids=["det+1", "det-1"])
def test_torus_bundle_conjugation(matrix):
    handle = make_group(GroupSpec.torus_bundle(matrix))
    t = (0, 0, 1)
    e1, e2 = (1, 0, 0), (0, 1, 0)
    # t (x, y) t^-1 = A (x, y)
    for v in (e1, e2, (3, -2, 0)):
        conj = handle.mul(handle.mul(t, v), handle.inv(t))
        ax, ay = matrix.apply((v[0], v[1]))
        assert conj == (ax, ay, 0)
    # the fiber Z^2 is abelian
    assert handle.mul(e1, e2) == handle.mul(e2, e1)


def test_free_product_syllables_alternate():
    spec = GroupSpec.free_product(GroupSpec.cyclic(2), GroupSpec.cyclic(3))
    handle = make_group(spec)
    for g in ball_elements(handle, handle.default_generators(), 5):
        sides = [side for side, _ in g]
        assert all(sides[i] != sides[i + 1] for i in range(len(sides) - 1))
        for side, payload in g:
            assert payload != handle.factor_handles[side].identity


def test_free_product_factor_orders():
    spec = GroupSpec.free_product(GroupSpec.cyclic(2), GroupSpec.cyclic(3))
    handle = make_group(spec)
    a = ((0, 1),)
    b = ((1, 1),)
    assert handle.mul(a, a) == ()
    assert handle.mul(handle.mul(b, b), b) == ()
    # mixed word stays in normal form and collapses correctly
    ab = handle.mul(a, b)
    assert ab == ((0, 1), (1, 1))
    assert handle.mul(ab, handle.inv(ab)) == ()


def test_direct_product_with_z_components():
    spec = GroupSpec.direct_product_with_Z(GroupSpec.free(2))
    handle = make_group(spec)
    t = (1, ())
    a = (0, (1,))
    assert handle.mul(t, a) == (1, (1,))
    assert handle.mul(a, t) == (1, (1,))  # z-factor is central
    assert handle.inv((2, (1, 2))) == (-2, (-2, -1))


def test_direct_product_z_letter_avoids_collision():
    # surface names use a1/b1/..., so "t" is free to use
    handle = make_group(GroupSpec.direct_product_with_Z(GroupSpec.surface(2)))
    names = [n for n, _ in handle._letters()]
    assert names[0] == "t"
    assert len(set(names)) == len(names)


# --- generating sets ----------------------------------------------------------


def test_default_generators_are_symmetrized():
    handle = make_group(GroupSpec.free(2))
    gens = handle.default_generators()
    assert gens.symmetrized
    keys = {handle.canonical_key(g) for g in gens.elements}
    for g in gens.elements:
        assert handle.canonical_key(handle.inv(g)) in keys
    assert len(gens.elements) == 4
    assert list(gens.names) == ["a", "b", "a'", "b'"]


def test_involutions_not_duplicated():
    spec = GroupSpec.free_product(GroupSpec.cyclic(2), GroupSpec.cyclic(2))
    handle = make_group(spec)
    gens = handle.default_generators()
    # both generators are involutions; symmetrization adds nothing
    assert len(gens.elements) == 2


def test_make_generating_set_rejects_identity():
    handle = make_group(GroupSpec.free(2))
    with pytest.raises(InvalidSpec):
        make_generating_set(handle, [("e", ())])
    with pytest.raises(InvalidSpec):
        make_generating_set(handle, [])


def test_trivial_group_has_empty_generating_set():
    handle = make_group(GroupSpec.trivial())
    gens = handle.default_generators()
    assert gens.elements == ()


def test_custom_generating_set_symmetrization():
    handle = make_group(GroupSpec.free_abelian(1))
    gens = make_generating_set(handle, [("s", (2,)), ("u", (3,))])
    assert [handle.canonical_key(g) for g in gens.elements] == [b"2", b"3", b"-2", b"-3"]
    assert list(gens.names) == ["s", "u", "s'", "u'"]
    plain = make_generating_set(handle, [("s", (2,))], symmetrize=False)
    assert not plain.symmetrized
    assert len(plain.elements) == 1


# --- formatting ---------------------------------------------------------------


def test_format_element_examples():
    assert make_group(GroupSpec.cyclic(6)).format_element(4) == "a^4"
    assert make_group(GroupSpec.cyclic(6)).format_element(0) == "1"
    assert make_group(GroupSpec.free(2)).format_element((1, -2)) == "a b'"
    assert make_group(GroupSpec.trivial()).format_element(()) == "1"


def test_describe_strings():
    assert GroupSpec.free(2).describe() == "free(2)"
    assert "cyclic(2) * cyclic(3)" == GroupSpec.free_product(
        GroupSpec.cyclic(2), GroupSpec.cyclic(3)
    ).describe()
    assert GroupSpec.direct_product_with_Z(GroupSpec.surface(2)).describe() == (
        "Z x (surface(2))"
    )
