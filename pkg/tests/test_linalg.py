import random

import pytest

from projcode.constructions import gaussian_binomial
from projcode.gf import field_new, field_of_order
from projcode.linalg import (Matrix, Subspace, canonicalize, enumerate_subspaces,
                             format_matrix, full_space, hyperplanes_of,
                             intersect, intersect_dim, kernel_basis,
                             monic_vector, parse_matrix, rref, subspace_from_rows,
                             subspace_points, subspace_sum, superspaces_in,
                             zero_subspace)

F2 = field_new(2, 1)
F3 = field_new(3, 1)


def test_rref_identity_and_zero():
    ident = Matrix(F2, ((1, 0), (0, 1)))
    r, rank, piv = rref(ident)
    assert r == ident and rank == 2 and piv == (0, 1)
    zero = Matrix(F3, ((0, 0, 0), (0, 0, 0)))
    r, rank, piv = rref(zero)
    assert r == zero and rank == 0 and piv == ()


def test_rref_hand_example_gf2():
    m = Matrix(F2, ((1, 1, 0), (1, 0, 1)))
    r, rank, piv = rref(m)
    assert r.rows == ((1, 0, 1), (0, 1, 1))
    assert rank == 2


def test_rref_methods_agree_on_random_gf2():
    rng = random.Random(7)
    for _ in range(500):
        nr = rng.randint(1, 6)
        nc = rng.randint(1, 10)
        m = Matrix(F2, tuple(tuple(rng.randint(0, 1) for _ in range(nc))
                             for _ in range(nr)))
        assert rref(m, "generic") == rref(m, "bitpacked")


def test_bitpacked_requires_gf2():
    with pytest.raises(ValueError):
        rref(Matrix(F3, ((1, 2),)), "bitpacked")


def test_canonicalize_idempotent_and_row_op_invariant():
    rng = random.Random(3)
    f = field_of_order(5)
    for _ in range(100):
        rows = [[rng.randrange(5) for _ in range(6)] for _ in range(3)]
        s = subspace_from_rows(f, 6, rows)
        # random invertible row operations on the original generators
        a, b = rng.sample(range(3), 2)
        lam = rng.randrange(1, 5)
        rows[a] = [f.add(x, f.mul(lam, y)) for x, y in zip(rows[a], rows[b])]
        rows[b] = [f.mul(lam, x) for x in rows[b]]
        assert subspace_from_rows(f, 6, rows) == s
        assert subspace_from_rows(f, 6, s.rows) == s


def test_canonicalize_collapses_dependent_rows():
    x = (1, 2, 0)
    two_x = (2, 1, 0)
    s = subspace_from_rows(F3, 3, [x, two_x])
    assert s.dim == 1
    assert s.rows[0] == monic_vector(F3, x)


def test_fixture_generators_same_rowspace():
    # two different generating sets of the same 4-dim binary code
    from projcode.constructions import binary_fixture_lines
    l1, l2, _ = binary_fixture_lines()
    u1, u2 = l1.rows
    v1, v2 = l2.rows
    add = lambda a, b: tuple(x ^ y for x, y in zip(a, b))
    s1 = subspace_from_rows(F2, 15, [u1, u2, v1, v2])
    s2 = subspace_from_rows(F2, 15, [u2, u1, add(v1, v2), v1])
    assert s1 == s2


def test_subspace_equality_is_entrywise():
    a = subspace_from_rows(F2, 3, [(1, 0, 0), (0, 1, 0)])
    b = subspace_from_rows(F2, 3, [(0, 1, 0), (1, 0, 0)])
    c = subspace_from_rows(F2, 3, [(1, 0, 0), (0, 0, 1)])
    assert a == b
    assert a != c
    assert len({a, b, c}) == 2


def test_intersect_dim_examples():
    x = subspace_from_rows(F2, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert intersect_dim(x, x) == 2
    y = subspace_from_rows(F2, 4, [(0, 0, 1, 0), (0, 0, 0, 1)])
    assert intersect_dim(x, y) == 0
    with pytest.raises(ValueError):
        intersect_dim(x, subspace_from_rows(F3, 4, [(1, 0, 0, 0)]))


def test_sum_examples():
    x = subspace_from_rows(F3, 2, [(1, 2)])
    z = zero_subspace(F3, 2)
    assert subspace_sum(x, z) == x
    y = subspace_from_rows(F3, 2, [(0, 1)])
    assert subspace_sum(x, y) == full_space(F3, 2)


def test_dimension_formula_random():
    rng = random.Random(11)
    for f, n in [(F2, 5), (F3, 4), (field_of_order(4), 4)]:
        for _ in range(60):
            kx, ky = rng.randint(0, 3), rng.randint(0, 3)
            x = subspace_from_rows(f, n, [[rng.randrange(f.q) for _ in range(n)]
                                          for _ in range(kx)])
            y = subspace_from_rows(f, n, [[rng.randrange(f.q) for _ in range(n)]
                                          for _ in range(ky)])
            assert (subspace_sum(x, y).dim + intersect_dim(x, y)
                    == x.dim + y.dim)


def test_intersect_subspace_content():
    rng = random.Random(13)
    for _ in range(40):
        x = subspace_from_rows(F2, 6, [[rng.randint(0, 1) for _ in range(6)]
                                       for _ in range(3)])
        y = subspace_from_rows(F2, 6, [[rng.randint(0, 1) for _ in range(6)]
                                       for _ in range(3)])
        meet = intersect(x, y)
        assert meet.dim == intersect_dim(x, y)
        assert x.contains(meet) and y.contains(meet)


def test_hyperplanes_counts_and_membership():
    x = subspace_from_rows(F2, 5, [(1, 0, 0, 0, 1), (0, 1, 0, 0, 1),
                                   (0, 0, 1, 0, 0)])
    hs = hyperplanes_of(x)
    assert len(hs) == 7                      # [3]_2
    assert len(set(hs)) == 7
    assert all(h.dim == 2 and x.contains(h) for h in hs)

    y = subspace_from_rows(F3, 3, [(1, 0, 2), (0, 1, 1)])
    assert len(hyperplanes_of(y)) == 4       # [2]_3

    line = subspace_from_rows(F2, 3, [(1, 1, 0)])
    assert hyperplanes_of(line) == [zero_subspace(F2, 3)]

    with pytest.raises(ValueError):
        hyperplanes_of(zero_subspace(F2, 3))


def test_superspaces_examples():
    amb = full_space(F2, 2)
    zero = zero_subspace(F2, 2)
    lines = superspaces_in(zero, amb, 1)
    assert len(lines) == 3
    assert superspaces_in(zero, amb, 0) == [zero]

    y = subspace_from_rows(F2, 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    u = subspace_from_rows(F2, 4, [(1, 0, 0, 0)])
    planes = superspaces_in(u, y, 2)
    assert len(planes) == 3                  # [2]_2
    assert all(u.contains_vector((1, 0, 0, 0)) and y.contains(w) for w in planes)

    with pytest.raises(ValueError):
        superspaces_in(subspace_from_rows(F2, 4, [(0, 0, 0, 1)]), y, 2)
    with pytest.raises(ValueError):
        superspaces_in(u, y, 4)


def test_enumeration_matches_gaussian_binomial():
    for q, f in [(2, F2), (3, F3)]:
        for n in range(1, 6):
            for k in range(0, n + 1):
                subs = enumerate_subspaces(f, n, k)
                assert len(subs) == gaussian_binomial(n, k, q)
                assert len(set(subs)) == len(subs)
                assert subs == sorted(subs, key=lambda s: s.rows)


def test_superspace_count_full_f2_4():
    amb = full_space(F2, 4)
    planes = superspaces_in(zero_subspace(F2, 4), amb, 2)
    assert len(planes) == 35


def test_subspace_points_count_and_monic():
    f = field_of_order(7)
    x = subspace_from_rows(f, 4, [(1, 0, 3, 2), (0, 1, 5, 6)])
    pts = subspace_points(x)
    assert len(pts) == 8                     # [2]_7
    assert len(set(pts)) == 8
    assert all(monic_vector(f, p) == p for p in pts)
    assert all(x.contains_vector(p) for p in pts)


def test_kernel_basis_annihilates():
    m = Matrix(F3, ((1, 2, 0, 1), (0, 1, 1, 2)))
    for v in kernel_basis(m):
        for row in m.rows:
            acc = 0
            for a, b in zip(row, v):
                acc = F3.add(acc, F3.mul(a, b))
            assert acc == 0
    assert len(kernel_basis(m)) == 2


def test_matrix_text_roundtrip():
    f = field_of_order(9)
    m = Matrix(f, ((0, 8, 3, 1), (2, 0, 7, 5)))
    text = format_matrix(m)
    assert text.splitlines()[0] == "4 2 9 3 2"
    assert parse_matrix(text) == m


def test_subspace_text_roundtrip():
    s = subspace_from_rows(F2, 5, [(1, 1, 0, 1, 0), (0, 1, 1, 0, 1)])
    assert Subspace.from_text(s.to_text()) == s
    z = zero_subspace(F3, 4)
    assert Subspace.from_text(z.to_text()) == z


def test_parse_matrix_validates():
    with pytest.raises(ValueError):
        parse_matrix("4 1 6 2 2\n0 0 0 0\n")   # q != p^m
    with pytest.raises(ValueError):
        parse_matrix("3 2 2 2 1\n1 0 1\n")     # row count mismatch
    with pytest.raises(ValueError):
        parse_matrix("3 1 2 2 1\n1 0 2\n")     # entry out of range


def test_zero_subspace_accepted_by_lattice_ops():
    z = zero_subspace(F2, 4)
    x = subspace_from_rows(F2, 4, [(1, 1, 1, 1)])
    assert intersect_dim(z, x) == 0
    assert subspace_sum(z, x) == x
    assert intersect(z, x) == z
