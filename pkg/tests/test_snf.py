"""Tests for exact integer Smith normal form."""

import doctest
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotcover import snf
from knotcover.snf import smith_normal_form, smith_normal_form_sparse


def naive_snf(matrix):
    """Textbook dense reduction: repeatedly pick the least nonzero entry,
    clear its row and column Euclid-style, and collect the diagonal.
    Slow but simple enough to trust as an oracle."""
    m = [row[:] for row in matrix]
    factors = []
    while True:
        best = None
        for i, row in enumerate(m):
            for j, v in enumerate(row):
                if v and (best is None or (abs(v), i, j) < best):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, pr, pc = best
        while True:
            v = m[pr][pc]
            dirty = False
            for i in range(len(m)):
                if i != pr and m[i][pc]:
                    q = m[i][pc] // v
                    if q:
                        for j in range(len(m[i])):
                            m[i][j] -= q * m[pr][j]
                    if m[i][pc]:
                        pr = i
                        dirty = True
                        break
            if dirty:
                continue
            v = m[pr][pc]
            for j in range(len(m[pr])):
                if j != pc and m[pr][j]:
                    q = m[pr][j] // v
                    if q:
                        for i in range(len(m)):
                            m[i][j] -= q * m[i][pc]
                    if m[pr][j]:
                        pc = j
                        dirty = True
                        break
            if dirty:
                continue
            break
        factors.append(abs(m[pr][pc]))
        for j in range(len(m[pr])):
            m[pr][j] = 0
        for i in range(len(m)):
            m[i][pc] = 0
    chain = sorted(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(chain) - 1):
            a, b = chain[i], chain[i + 1]
            if b % a:
                g = gcd(a, b)
                chain[i], chain[i + 1] = g, a * b // g
                changed = True
        chain.sort()
    return chain, len(chain)


def test_docstring_examples():
    results = doctest.testmod(snf)
    assert results.attempted > 0 and results.failed == 0


def test_diagonal_merges_into_chain():
    assert smith_normal_form([[2, 0], [0, 3]]) == ([1, 6], 2)


def test_zero_matrix():
    assert smith_normal_form([[0, 0], [0, 0]]) == ([], 0)


def test_identity():
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert smith_normal_form(eye) == ([1, 1, 1], 3)


def test_rank_deficient():
    assert smith_normal_form([[1, 2], [2, 4]]) == ([1], 1)


def test_no_unit_entries_exercises_dense_stages():
    # all entries >= 2 so the unit-pivot stage finds nothing
    assert smith_normal_form([[6, 4], [4, 6]]) == ([2, 10], 2)
    assert smith_normal_form([[2, 4], [4, 2]]) == ([2, 6], 2)


def test_single_entry():
    assert smith_normal_form([[7]]) == ([7], 1)
    assert smith_normal_form([[-7]]) == ([7], 1)


def test_sparse_and_dense_agree():
    matrix = [[0, 3, 0], [2, 0, -5], [0, 0, 4]]
    rows = {
        i: {j: v for j, v in enumerate(row) if v}
        for i, row in enumerate(matrix)
    }
    assert smith_normal_form_sparse(rows) == smith_normal_form(matrix)


def test_empty_sparse_input():
    assert smith_normal_form_sparse({}) == ([], 0)


def test_known_torsion_presentation_matrix():
    # relator matrix of Z/2 + Z/4: rows 2e1, 4e2 plus a redundant sum
    matrix = [[2, 0], [0, 4], [2, 4]]
    assert smith_normal_form(matrix) == ([2, 4], 2)


matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda nc: st.lists(
        st.lists(st.integers(min_value=-10, max_value=10),
                 min_size=nc, max_size=nc),
        min_size=1, max_size=5,
    )
)


@given(matrices)
@settings(deadline=None)
def test_matches_naive_oracle(matrix):
    assert smith_normal_form(matrix) == naive_snf(matrix)


@given(matrices, st.randoms(use_true_random=False))
@settings(deadline=None)
def test_invariant_under_row_and_column_shuffle(matrix, rnd):
    shuffled = [row[:] for row in matrix]
    rnd.shuffle(shuffled)
    perm = list(range(len(matrix[0])))
    rnd.shuffle(perm)
    shuffled = [[row[p] for p in perm] for row in shuffled]
    assert smith_normal_form(shuffled) == smith_normal_form(matrix)


@given(matrices)
@settings(deadline=None)
def test_factors_form_divisibility_chain(matrix):
    factors, rank = smith_normal_form(matrix)
    assert len(factors) == rank
    assert all(f > 0 for f in factors)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


@given(matrices)
@settings(deadline=None)
def test_transpose_invariance(matrix):
    transposed = [list(col) for col in zip(*matrix)]
    assert smith_normal_form(matrix) == smith_normal_form(transposed)


def test_large_entries_stay_exact():
    # values chosen so intermediate arithmetic would overflow fixed width
    big = 10**30
    factors, rank = smith_normal_form([[big, 0], [0, big + 1]])
    assert rank == 2
    assert factors == [1, big * (big + 1)]


def test_random_stress_against_oracle():
    rng = random.Random(1207)
    for _ in range(300):
        nr = rng.randint(1, 6)
        nc = rng.randint(1, 6)
        matrix = [
            [rng.randint(-20, 20) if rng.random() < 0.7 else 0
             for _ in range(nc)]
            for _ in range(nr)
        ]
        if nr > 1 and rng.random() < 0.3:
            matrix[-1] = [2 * v for v in matrix[0]]
        assert smith_normal_form(matrix) == naive_snf(matrix)
