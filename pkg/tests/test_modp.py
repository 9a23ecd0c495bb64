import itertools
import random

import numpy as np
import pytest

from thompsonlinks.modp import is_prime, nullspace_mod_p, rank_mod_p, row_reduce


def kernel_size_by_enumeration(m, p):
    cols = m.shape[1]
    return sum(1 for v in itertools.product(range(p), repeat=cols)
               if not (m @ np.array(v) % p).any())


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_rank_matches_enumeration(p):
    rng = random.Random(p)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = np.array([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])
        assert kernel_size_by_enumeration(m, p) == p ** (cols - rank_mod_p(m, p))


def test_nullspace_vectors():
    rng = random.Random(4)
    for _ in range(30):
        p = rng.choice([3, 5, 11])
        m = np.array([[rng.randint(0, p - 1) for _ in range(6)] for _ in range(4)])
        basis = nullspace_mod_p(m, p)
        assert basis.shape[0] == 6 - rank_mod_p(m, p)
        assert not (m @ basis.T % p).any()


def test_rref_shape():
    a, pivots = row_reduce([[2, 4], [1, 2]], 3)
    assert pivots == [0]
    assert a.tolist() == [[1, 2], [0, 0]]


def test_composite_rejected():
    with pytest.raises(ValueError):
        rank_mod_p([[1]], 4)


def test_is_prime():
    assert [k for k in range(20) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_empty_matrix():
    assert rank_mod_p(np.zeros((0, 3), dtype=int), 3) == 0
    assert nullspace_mod_p(np.zeros((0, 2), dtype=int), 3).shape == (2, 2)
