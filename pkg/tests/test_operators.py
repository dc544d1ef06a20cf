import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from collapsum import (
    DimensionError,
    Flavor,
    GroupMismatchError,
    Integers,
    IntegersMod,
    Matrix,
    MongeClass,
    UnsupportedError,
    canonicalize,
    checkerboard,
    collapse,
    collapse_balanced,
    count_classes,
    count_preimages,
    equivalent,
    in_kernel,
    make_kernel_element,
    monge_class,
    plus_construction,
    preimage_of,
)
from collapsum.oracle import all_matrices

Z = Integers()
Z2 = IntegersMod(2)
Z5 = IntegersMod(5)


def naive_plus(a: Matrix) -> Matrix:
    g = a.group
    return Matrix.build(
        g,
        a.m + 1,
        a.n + 1,
        lambda p, q: g.sum(a[i, j] for i in range(p) for j in range(q)),
    )


@st.composite
def int_matrices(draw, min_dim=2, max_dim=6, bound=10**6):
    m = draw(st.integers(min_dim, max_dim))
    n = draw(st.integers(min_dim, max_dim))
    rows = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m))
    return Matrix(Z, rows)


@st.composite
def mod_matrices(draw, min_dim=2, max_dim=5):
    k = draw(st.integers(2, 9))
    g = IntegersMod(k)
    m = draw(st.integers(min_dim, max_dim))
    n = draw(st.integers(min_dim, max_dim))
    rows = draw(st.lists(st.lists(st.integers(0, k - 1), min_size=n, max_size=n), min_size=m, max_size=m))
    return Matrix(g, rows)


any_matrices = st.one_of(int_matrices(), mod_matrices())


# collapse_balanced / collapse ---------------------------------------------


def test_collapse_balanced_examples(section2_example):
    assert collapse_balanced(section2_example) == Matrix(Z, [[5]])
    plus = Matrix(Z, [[0, 0, 0], [0, 2, 1], [0, 3, 5]])
    assert collapse_balanced(plus) == section2_example
    assert collapse_balanced(Matrix(Z, [[7] * 4] * 3)).is_zero()


def test_collapse_examples(section2_example):
    assert collapse(Matrix(Z, [[1, 1], [1, 1]])) == Matrix(Z, [[4]])
    assert collapse(section2_example) == Matrix(Z, [[5]])


def test_collapse_brute_on_random_4x4():
    rng = random.Random(7)
    for _ in range(50):
        a = Matrix(Z, [[rng.randint(-50, 50) for _ in range(4)] for _ in range(4)])
        direct = Matrix.build(
            Z, 3, 3, lambda i, j: a[i, j] + a[i + 1, j] + a[i, j + 1] + a[i + 1, j + 1]
        )
        assert collapse(a) == direct
        assert collapse(checkerboard(a)) == checkerboard(collapse_balanced(a))


@pytest.mark.parametrize("shape", [(1, 1), (1, 3), (4, 1)])
def test_collapse_rejects_thin(shape):
    a = Matrix.zeros(Z, *shape)
    for op in (collapse, collapse_balanced):
        with pytest.raises(DimensionError):
            op(a)


# checkerboard --------------------------------------------------------------


def test_checkerboard_examples():
    assert checkerboard(Matrix(Z, [[1, 1], [1, 1]])) == Matrix(Z, [[1, -1], [-1, 1]])
    assert checkerboard(Matrix(Z5, [[1, 2], [3, 4]])) == Matrix(Z5, [[1, 3], [2, 4]])


@given(any_matrices)
def test_checkerboard_involution(a):
    assert checkerboard(checkerboard(a)) == a


@given(any_matrices)
def test_conjugation_bridge(a):
    assert collapse(a) == checkerboard(collapse_balanced(checkerboard(a)))


# plus construction ---------------------------------------------------------


def test_plus_examples(section2_example):
    assert plus_construction(section2_example) == Matrix(Z, [[0, 0, 0], [0, 2, 1], [0, 3, 5]])
    assert plus_construction(Matrix.zeros(Z, 2, 3)).is_zero()
    assert plus_construction(Matrix(Z, [[5]])) == Matrix(Z, [[0, 0], [0, 5]])


@given(st.one_of(int_matrices(min_dim=1), mod_matrices(min_dim=1)))
def test_plus_matches_definition(b):
    assert plus_construction(b) == naive_plus(b)


@given(st.one_of(int_matrices(min_dim=1, max_dim=8), mod_matrices(min_dim=1)))
def test_right_inverse(b):
    assert collapse_balanced(plus_construction(b)) == b


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)])
def test_right_inverse_exhaustive_z2(m, n):
    for b in all_matrices(m, n, Z2):
        assert collapse_balanced(plus_construction(b)) == b


def test_plus_overflow_reported():
    from collapsum import GroupOverflowError

    big = 2**62
    with pytest.raises(GroupOverflowError):
        plus_construction(Matrix(Z, [[big, big], [big, big]]))


# canonical form and kernel -------------------------------------------------


def test_canonicalize_examples(section2_example):
    assert canonicalize(section2_example) == Matrix(Z, [[0, 0], [0, 5]])
    k = make_kernel_element(Z, [1, 2], [10, 20, 30]).materialize()
    assert canonicalize(k).is_zero()
    b = plus_construction(Matrix(Z, [[4, -2, 9], [0, 1, 1]]))
    assert canonicalize(b) == b


@given(any_matrices)
def test_canonical_form_identity(a):
    assert canonicalize(a) == plus_construction(collapse_balanced(a))
    c = canonicalize(a)
    assert all(x == 0 for x in c.rows[0]) and all(row[0] == 0 for row in c.rows)
    assert equivalent(a, c)


def test_kernel_element_examples():
    assert make_kernel_element(Z, [1, 2], [10, 20, 30]).materialize() == Matrix(Z, [[11, 21, 31], [12, 22, 32]])
    assert make_kernel_element(Z, [0, 0], [0, 0, 0]).materialize().is_zero()
    assert make_kernel_element(Z, [1, 1], [0, 0], Flavor.UNBALANCED).materialize() == Matrix(Z, [[-1, 1], [-1, 1]])


@given(st.integers(2, 6), st.integers(2, 6), st.integers(2, 9), st.randoms(use_true_random=False))
def test_kernel_elements_collapse_to_zero(m, n, k, rng):
    for g in (Z, IntegersMod(k)):
        u = [rng.randint(-100, 100) for _ in range(m)]
        v = [rng.randint(-100, 100) for _ in range(n)]
        bal = make_kernel_element(g, u, v).materialize()
        unb = make_kernel_element(g, u, v, "unbalanced").materialize()
        assert collapse_balanced(bal).is_zero() and in_kernel(bal)
        assert collapse(unb).is_zero() and in_kernel(unb, Flavor.UNBALANCED)


def test_kernel_group_mismatch():
    with pytest.raises(TypeError):
        make_kernel_element(Z5, [1, 2], ["a"])


def test_in_kernel_examples():
    assert in_kernel(Matrix(Z, [[11, 21, 31], [12, 22, 32]]))
    assert not in_kernel(Matrix(Z, [[0, 0], [0, 5]]))
    assert in_kernel(Matrix.zeros(Z5, 3, 2))
    with pytest.raises(DimensionError):
        in_kernel(Matrix.zeros(Z, 1, 4))


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_kernel_characterization_exhaustive_z2(m, n):
    g = Z2
    materialized = {
        make_kernel_element(g, u, v).materialize()
        for u in itertools.product((0, 1), repeat=m)
        for v in itertools.product((0, 1), repeat=n)
    }
    for a in all_matrices(m, n, g):
        zero_collapse = collapse_balanced(a).is_zero()
        assert zero_collapse == canonicalize(a).is_zero() == (a in materialized) == in_kernel(a)


@pytest.mark.parametrize("k,m,n", [(2, 2, 2), (2, 3, 3), (3, 2, 3)])
def test_kernel_representation_multiplicity(k, m, n):
    g = IntegersMod(k)
    els = tuple(g.elements())
    seen = {}
    for u in itertools.product(els, repeat=m):
        for v in itertools.product(els, repeat=n):
            mat = make_kernel_element(g, u, v).materialize()
            seen[mat] = seen.get(mat, 0) + 1
            for shift in els:
                moved = make_kernel_element(
                    g, [g.add(x, shift) for x in u], [g.sub(y, shift) for y in v]
                ).materialize()
                assert moved == mat
    assert set(seen.values()) == {k}


# equivalence ---------------------------------------------------------------


def test_equivalent_examples(section2_example):
    k = make_kernel_element(Z, [3, -1], [4, 4]).materialize()
    assert equivalent(section2_example, section2_example + k)
    assert not equivalent(Matrix(Z, [[0, 0], [0, 5]]), Matrix(Z, [[0, 0], [0, 4]]))
    assert equivalent(section2_example, Matrix(Z, [[0, 0], [0, 5]]))
    with pytest.raises(DimensionError):
        equivalent(section2_example, Matrix.zeros(Z, 2, 3))
    with pytest.raises(GroupMismatchError):
        equivalent(Matrix.zeros(Z5, 2, 2), Matrix.zeros(Z, 2, 2))


@given(any_matrices, st.randoms(use_true_random=False))
def test_constant_on_classes(a, rng):
    u = [rng.randint(-1000, 1000) for _ in range(a.m)]
    v = [rng.randint(-1000, 1000) for _ in range(a.n)]
    b = a + make_kernel_element(a.group, u, v).materialize()
    assert equivalent(a, b)
    assert collapse_balanced(a) == collapse_balanced(b)


# Monge ---------------------------------------------------------------------


def quadruple_class(a: Matrix) -> MongeClass:
    le = ge = True
    for i, j in itertools.combinations(range(a.m), 2):
        for k, l in itertools.combinations(range(a.n), 2):
            lhs, rhs = a[i, k] + a[j, l], a[i, l] + a[j, k]
            le &= lhs <= rhs
            ge &= lhs >= rhs
    return {(True, True): MongeClass.BOTH, (True, False): MongeClass.MONGE,
            (False, True): MongeClass.ANTI_MONGE, (False, False): MongeClass.NEITHER}[le, ge]


def test_monge_examples():
    assert monge_class(Matrix(Z, [[1, 2], [2, 4]])) is MongeClass.ANTI_MONGE
    assert monge_class(Matrix(Z, [[11, 21, 31], [12, 22, 32]])) is MongeClass.BOTH
    a = Matrix(Z, [[0, 1, 0], [0, 0, 1]])
    assert collapse_balanced(a) == Matrix(Z, [[-1, 2]])
    assert monge_class(a) is MongeClass.NEITHER
    assert monge_class(Matrix(Z, [[0, 1], [1, 0]])) is MongeClass.MONGE


def test_monge_unordered_group():
    with pytest.raises(UnsupportedError):
        monge_class(Matrix.zeros(Z5, 2, 2))


@given(int_matrices(bound=20))
@settings(max_examples=300)
def test_monge_matches_quadruple_definition(a):
    assert monge_class(a) is quadruple_class(a)


# preimages and counts ------------------------------------------------------


def test_preimage_examples(section2_example):
    assert preimage_of(section2_example) == Matrix(Z, [[0, 0, 0], [0, 2, 1], [0, 3, 5]])
    assert preimage_of(Matrix.zeros(Z, 2, 2)).is_zero()
    x = preimage_of(Matrix(Z, [[4]]), "unbalanced")
    assert x == Matrix(Z, [[0, 0], [0, 4]])
    assert collapse(x) == Matrix(Z, [[4]])


@given(any_matrices)
def test_preimage_both_flavors(b):
    assert collapse_balanced(preimage_of(b, "balanced")) == b
    assert collapse(preimage_of(b, "unbalanced")) == b


def test_counts():
    assert count_preimages(3, 3, Z2) == 32 and count_classes(3, 3, Z2) == 16
    assert count_preimages(2, 2, Z2) == 8 and count_classes(2, 2, Z2) == 2
    assert count_preimages(3, 3, Z2) * count_classes(3, 3, Z2) == 2**9
    assert count_preimages(40, 40, Z5) == 5**79
    with pytest.raises(UnsupportedError):
        count_preimages(2, 2, Z)
    with pytest.raises(DimensionError):
        count_classes(1, 3, Z2)
