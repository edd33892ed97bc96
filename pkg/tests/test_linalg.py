"""Exact linear algebra: the sparse echelon rank engines against an
independent Fraction-based row reduction oracle, plus the dense helpers
used by the exactness checker."""

import random
from fractions import Fraction

from edge_ideal_lab.linalg import (
    Echelon,
    FieldOps,
    is_prime,
    nullspace_rows,
    rank_dense_bareiss,
    rank_of_columns,
    rref_rows,
    solve_columns,
)


def oracle_rank(rows, p=0):
    """Plain Gaussian elimination over Fraction or GF(p); independent of
    the engines under test."""
    if p == 0:
        m = [[Fraction(x) for x in r] for r in rows]
    else:
        m = [[x % p for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    for c in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = (Fraction(1) / m[rank][c]) if p == 0 else pow(m[rank][c], -1, p)
        m[rank] = [(x * inv) if p == 0 else (x * inv) % p for x in m[rank]]
        for i in range(nr):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                if p == 0:
                    m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
                else:
                    m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def to_columns(rows):
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    return [{i: rows[i][j] for i in range(nr) if rows[i][j]} for j in range(nc)]


def random_matrix(rng, nr, nc, lo=-3, hi=3, density=0.6):
    return [
        [rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(nc)]
        for _ in range(nr)
    ]


def test_is_prime():
    assert [p for p in range(2, 30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)


def test_rank_engines_agree_with_oracle():
    rng = random.Random(42)
    for _ in range(150):
        nr, nc = rng.randint(1, 8), rng.randint(1, 8)
        m = random_matrix(rng, nr, nc)
        cols = to_columns(m)
        for p in (0, 2, 3, 5, 101):
            assert rank_of_columns(cols, p) == oracle_rank(m, p), (m, p)
        assert rank_dense_bareiss(m) == oracle_rank(m, 0)


def test_rank_corner_cases():
    assert rank_of_columns([], 0) == 0
    assert rank_of_columns([{}], 0) == 0
    assert rank_dense_bareiss([]) == 0
    assert rank_of_columns([{0: 2}, {0: -4}], 0) == 1
    assert rank_of_columns([{0: 2}], 2) == 0  # even entry dies mod 2


def test_rank_large_entries_stay_exact():
    # scaled rows are dependent over Q no matter the magnitudes
    base = [3, -7, 11, 0, 5]
    rows = [base, [10**12 * x for x in base], [1, 1, 1, 1, 1]]
    assert rank_of_columns(to_columns(rows), 0) == 2
    assert rank_dense_bareiss(rows) == 2


def test_rref_and_nullspace():
    rng = random.Random(9)
    for p in (0, 5):
        ops = FieldOps(p)
        for _ in range(60):
            nr, nc = rng.randint(1, 6), rng.randint(1, 6)
            m = random_matrix(rng, nr, nc)
            rows = [[ops.of_int(x) for x in r] for r in m]
            basis = nullspace_rows(rows, nc, ops)
            assert len(basis) == nc - oracle_rank(m, p)
            for v in basis:
                for r in rows:
                    acc = ops.zero
                    for x, y in zip(r, v):
                        acc = ops.add(acc, ops.mul(x, y))
                    assert acc == ops.zero


def test_solve_columns():
    ops = FieldOps(0)
    cols = [[ops.of_int(x) for x in col] for col in ([1, 0, 2], [0, 1, 1])]
    rhs = [ops.of_int(3), ops.of_int(4), ops.of_int(10)]
    sol = solve_columns(cols, rhs, ops)
    assert sol == [Fraction(3), Fraction(4)]
    bad = [ops.of_int(1), ops.of_int(0), ops.of_int(0)]
    assert solve_columns(cols, bad, ops) is None


def test_echelon_membership_and_dim():
    rng = random.Random(5)
    for p in (0, 3):
        ops = FieldOps(p)
        for _ in range(40):
            nc = rng.randint(1, 6)
            vecs = [[ops.of_int(rng.randint(-2, 2)) for _ in range(nc)] for _ in range(6)]
            ech = Echelon(ops)
            added = []
            for v in vecs:
                if ech.add(list(v)) is not None:
                    added.append(v)
            m = [list(v) for v in vecs]
            plain = [[int(x) if p else x for x in r] for r in m]
            assert ech.dim == oracle_rank([[int(x) for x in row] for row in plain], p)
            # every original vector reduces to zero against the echelon
            for v in vecs:
                assert all(x == ops.zero for x in ech.reduce(list(v)))
