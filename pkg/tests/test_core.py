import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from precubical.core import (
    MAX_DIM,
    CubeId,
    PrecubicalSet,
    circle,
    interval,
    iterated_face,
    permutation_sign,
    remove_at,
    remove_at_shift,
    shift_above,
    standard_cube,
    subset_with_sign,
    subsets_with_sign,
    tensor_many,
    tensor_product,
    torus,
    validate,
)


def brute_force_sign(seq):
    inv = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


# -- subsets and signs ---------------------------------------------------------


def test_subsets_n2_p1():
    subs = subsets_with_sign(2, 1)
    assert [(s.members, s.complement, s.sign) for s in subs] == [
        ((1,), (2,), 1),
        ((2,), (1,), -1),
    ]


def test_subsets_p0_is_single_positive():
    for n in range(7):
        subs = subsets_with_sign(n, 0)
        assert len(subs) == 1
        assert subs[0].members == ()
        assert subs[0].complement == tuple(range(1, n + 1))
        assert subs[0].sign == 1


def test_sign_of_2_4_in_4():
    # permutation 2,4,1,3 has inversions (2,1), (4,1), (4,3)
    s = subset_with_sign(4, (2, 4))
    assert s.sign == -1
    assert brute_force_sign((2, 4, 1, 3)) == -1


def test_subsets_reject_bad_sizes():
    with pytest.raises(ValueError):
        subsets_with_sign(3, 4)
    with pytest.raises(ValueError):
        subsets_with_sign(3, -1)


@given(st.integers(0, 7), st.data())
def test_sign_matches_inversion_count(n, data):
    p = data.draw(st.integers(0, n))
    members = tuple(sorted(data.draw(st.permutations(range(1, n + 1)))[:p]))
    s = subset_with_sign(n, members)
    assert s.sign == brute_force_sign(s.members + s.complement)
    assert s.sign == permutation_sign(s.members + s.complement)


def test_signature_pairing_sum():
    # complement-first signature differs by (-1)^(p(n-p)), so the pairwise
    # products sum to that sign times the subset count
    for n in range(7):
        for p in range(n + 1):
            total = 0
            for s in subsets_with_sign(n, p):
                rev = brute_force_sign(s.complement + s.members)
                assert rev == (-1) ** (p * (n - p)) * s.sign
                total += s.sign * rev
            assert total == (-1) ** (p * (n - p)) * math.comb(n, p)


def test_subset_surgery_helpers():
    g = (2, 5, 6)
    assert remove_at(g, 2) == (2, 6)
    assert remove_at_shift(g, 2) == (2, 5)
    assert shift_above(g, 3) == (2, 4, 5)
    with pytest.raises(ValueError):
        shift_above(g, 5)


# -- validation ----------------------------------------------------------------


def test_builtins_validate_clean():
    for x in (interval(), circle(), torus(), standard_cube(0), standard_cube(3)):
        assert validate(x) == []


def test_single_vertex_is_vacuously_valid():
    assert validate(PrecubicalSet([1], {})) == []


def test_missing_face_reported():
    x = PrecubicalSet([2, 1], {1: [[(CubeId(0, 0), None)]]})
    report = validate(x)
    assert [v.kind for v in report] == ["missing-face"]
    assert report[0].indices == (1, 1)


def test_wrong_dimension_face_reported():
    x = PrecubicalSet([2, 1], {1: [[(CubeId(0, 0), CubeId(1, 0))]]})
    report = validate(x)
    assert [v.kind for v in report] == ["bad-face"]


def test_corrupted_square_reports_exact_quadruples():
    # corrupt one edge endpoint of the standard square and cross-check the
    # violation list against a full brute-force enumeration
    good = standard_cube(2)
    faces1 = [
        [(good.face(CubeId(1, u), 1, 0), good.face(CubeId(1, u), 1, 1))]
        for u in range(good.count(1))
    ]
    bottom = good.find_label(1, "c*0")
    wrong = (faces1[bottom.index][0][0], CubeId(0, 0))
    if wrong == faces1[bottom.index][0]:
        wrong = (faces1[bottom.index][0][0], CubeId(0, 1))
    faces1[bottom.index] = [wrong]
    faces2 = [
        [
            (good.face(CubeId(2, 0), i, 0), good.face(CubeId(2, 0), i, 1))
            for i in (1, 2)
        ]
    ]
    bad = PrecubicalSet(
        good.cube_counts,
        {1: faces1, 2: faces2},
        {n: list(good.labels(n)) for n in range(3)},
    )

    expected = set()
    for i, j in [(1, 2)]:
        for alpha in (0, 1):
            for beta in (0, 1):
                lhs = bad.face(bad.face(CubeId(2, 0), j, beta), i, alpha)
                rhs = bad.face(bad.face(CubeId(2, 0), i, alpha), j - 1, beta)
                if lhs != rhs:
                    expected.add((i, j, alpha, beta))
    assert expected, "corruption failed to break any identity"

    report = validate(bad)
    got = {v.indices for v in report if v.kind == "identity"}
    assert got == expected
    assert all(v.cube == CubeId(2, 0) for v in report)


# -- iterated faces ------------------------------------------------------------


def test_iterated_face_full_subset_is_identity():
    x = standard_cube(3)
    u = CubeId(3, 0)
    assert iterated_face(x, u, (1, 2, 3), 0) == u
    assert iterated_face(x, u, (1, 2, 3), 1) == u


def test_iterated_face_torus_bottom_edge():
    x = torus()
    theta = CubeId(2, 0)
    # keeping direction 1 collapses direction 2 to its 0 end, the t2 edge
    assert x.label(iterated_face(x, theta, (1,), 0)) == "t2"
    assert x.label(iterated_face(x, theta, (2,), 0)) == "t1"


def test_iterated_face_on_standard_3_cube():
    x = standard_cube(3)
    top = CubeId(3, 0)
    got = iterated_face(x, top, (2,), 1)
    direct = x.face(x.face(top, 3, 1), 1, 1)
    assert got == direct
    # the surviving coordinate sits in slot 2 with the others pinned to 1
    assert x.label(got) == "c1*1"


def test_iterated_face_order_independence():
    from precubical.propcheck import GenConfig, random_precubical

    rng = random.Random(5)
    instances = [tensor_many([standard_cube(1), circle(), torus()])] + [
        random_precubical(GenConfig(seed=s, factors=3, vertices=2, edges=2))
        for s in (1, 2, 3)
    ]
    for x in instances:
        assert validate(x) == []
        for n in range(1, x.maxdim + 1):
            for u in x.cubes(n):
                for p in range(n + 1):
                    for sub in subsets_with_sign(n, p):
                        for eps in (0, 1):
                            expected = iterated_face(x, u, sub, eps)
                            for _ in range(10):
                                # eliminate in a random order, tracking shifts
                                order = list(sub.complement)
                                rng.shuffle(order)
                                cur = u
                                alive = list(range(1, n + 1))
                                for k in order:
                                    pos = alive.index(k) + 1
                                    cur = x.face(cur, pos, eps)
                                    alive.remove(k)
                                assert cur == expected


def test_iterated_face_rejects_non_subsets():
    x = torus()
    with pytest.raises(ValueError):
        iterated_face(x, CubeId(2, 0), (0, 1), 0)
    with pytest.raises(ValueError):
        iterated_face(x, CubeId(2, 0), (3,), 1)


def test_face_commutation_formulas():
    # the three reindexing formulas for composing a single face with an
    # iterated face, exercised over every cube and subset of a product set
    x = tensor_many([torus(), interval()])
    assert validate(x) == []
    for n in range(1, x.maxdim + 1):
        for u in x.cubes(n):
            for p in range(1, n + 1):
                for sub in subsets_with_sign(n, p):
                    g = sub.members
                    for mu in range(1, p + 1):
                        for eps in (0, 1):
                            for eta in (0, 1):
                                lhs = x.face(iterated_face(x, u, g, eta), mu, eps)
                                rhs = iterated_face(
                                    x,
                                    x.face(u, g[mu - 1], eps),
                                    remove_at_shift(g, mu),
                                    eta,
                                )
                                assert lhs == rhs
                            eps = (u.index + mu) % 2
                            assert x.face(
                                iterated_face(x, u, g, eps), mu, eps
                            ) == iterated_face(x, u, remove_at(g, mu), eps)
                    for j in range(1, n + 1):
                        if j in g:
                            continue
                        for eps in (0, 1):
                            assert iterated_face(x, u, g, eps) == iterated_face(
                                x, x.face(u, j, eps), shift_above(g, j), eps
                            )


# -- builders ------------------------------------------------------------------


def test_torus_shape():
    x = torus()
    assert x.cube_counts == (1, 2, 1)
    theta = CubeId(2, 0)
    assert x.label(x.face(theta, 1, 0)) == "t1"
    assert x.label(x.face(theta, 1, 1)) == "t1"
    assert x.label(x.face(theta, 2, 0)) == "t2"
    assert x.label(x.face(theta, 2, 1)) == "t2"
    (o,) = list(x.cubes(0))
    for e in x.cubes(1):
        assert x.face(e, 1, 0) == o
        assert x.face(e, 1, 1) == o


def test_tensor_interval_interval_counts():
    x = tensor_product(interval(), interval())
    assert x.cube_counts == (4, 4, 1)
    assert validate(x) == []


def _isomorphic(x: PrecubicalSet, y: PrecubicalSet) -> bool:
    if x.cube_counts != y.cube_counts:
        return False
    dims = range(x.maxdim + 1)
    perms = [
        list(itertools.permutations(range(x.count(n)))) for n in dims
    ]
    for combo in itertools.product(*perms):
        ok = True
        for n in range(1, x.maxdim + 1):
            for u in range(x.count(n)):
                for i in range(1, n + 1):
                    for eps in (0, 1):
                        fx = x.face(CubeId(n, u), i, eps)
                        fy = y.face(CubeId(n, combo[n][u]), i, eps)
                        if combo[n - 1][fx.index] != fy.index:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def test_interval_squared_is_the_standard_square():
    assert _isomorphic(tensor_product(interval(), interval()), standard_cube(2))


def test_interval_squared_not_isomorphic_to_broken_square():
    # sanity check the brute-force isomorphism oracle itself
    assert not _isomorphic(tensor_product(interval(), interval()), torus())


def test_tensor_torus_circle_counts():
    x = tensor_product(torus(), circle())
    assert x.cube_counts == (1, 3, 3, 1)
    assert validate(x) == []


def test_tensor_of_empty_is_empty():
    e = PrecubicalSet([], {})
    assert tensor_product(e, torus()).cube_counts == ()
    assert tensor_product(torus(), e).cube_counts == ()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 4))
def test_standard_cube_counts_are_binomials(n):
    x = standard_cube(n)
    assert x.cube_counts == tuple(
        math.comb(n, p) * 2 ** (n - p) for p in range(n + 1)
    )
    assert validate(x) == []


def test_dimension_cap_enforced():
    with pytest.raises(ValueError):
        PrecubicalSet([0] * (MAX_DIM + 2), {})
    with pytest.raises(ValueError):
        standard_cube(MAX_DIM + 1)


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        PrecubicalSet([2], {}, {0: ["a", "a"]})
