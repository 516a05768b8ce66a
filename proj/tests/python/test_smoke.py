import itertools
import math

import pytest

import walkmat

W_D5 = [
    [1, 1, 3, 4, 10],
    [1, 1, 3, 4, 10],
    [1, 3, 4, 10, 14],
    [1, 2, 4, 6, 14],
    [1, 1, 2, 4, 6],
]


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inversions * math.prod(m[i][perm[i]] for i in range(n))
    return total


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def test_d5_walk_matrix():
    g = walkmat.dynkin_d(5)
    assert g.edges == [(1, 3), (2, 3), (3, 4), (4, 5)]
    assert walkmat.graph_walk_matrix(g) == W_D5
    assert walkmat.walk_matrix(g.adjacency()) == W_D5
    assert walkmat.hat_walk_matrix(g) == [row[:-1] for row in W_D5[1:]]


def test_exact_determinant_and_rank():
    hat = walkmat.hat_walk_matrix(walkmat.dynkin_d(7))
    assert walkmat.det(hat) == leibniz_det(hat)
    assert abs(walkmat.det(hat)) == 4
    assert walkmat.rank(walkmat.graph_walk_matrix(walkmat.dynkin_d(8))) == 6
    assert walkmat.rank_mod2(W_D5) <= 3


def test_big_integers_round_trip():
    w = walkmat.graph_walk_matrix(walkmat.dynkin_d(64))
    assert max(max(r) for r in w) > 2**63  # beyond int64
    big = [[2**80 + 1, 3], [5, 7]]
    assert walkmat.det(big) == (2**80 + 1) * 7 - 15


def test_smith_normal_form_witnesses():
    r = walkmat.smith_normal_form(W_D5)
    assert r["diag"] == [1, 1, 1, 2, 0]
    assert r["certificate"]
    prod = matmul(matmul(r["left"], W_D5), r["right"])
    assert prod == [[r["diag"][i] if i == j else 0 for j in range(5)] for i in range(5)]
    assert abs(leibniz_det(r["left"])) == 1
    assert walkmat.minor_gcd(W_D5, 4) == 2


def test_divisor_matrix():
    g = walkmat.dynkin_d(5)
    c, b = walkmat.divisor_matrix(g, [[1, 2], [3], [4], [5]])
    assert b == [[0, 1, 0, 0], [2, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]]
    assert matmul(g.adjacency(), c) == matmul(c, b)
    p4 = walkmat.Graph(4, [(1, 2), (2, 3), (3, 4)])
    with pytest.raises(walkmat.NotEquitable):
        walkmat.divisor_matrix(p4, [[1, 2], [3, 4]])


def test_chebyshev():
    assert walkmat.chebyshev_t(3) == [0, -3, 0, 4]
    assert walkmat.discriminant(walkmat.chebyshev_t(3)) == 432
    for n in range(1, 13):
        assert walkmat.discriminant(walkmat.chebyshev_t(n)) == 2 ** ((n - 1) ** 2) * n**n


def test_verify_and_corpus():
    reports = walkmat.verify(4, 12)
    assert [r["n"] for r in reports] == list(range(4, 13))
    assert all(r["pass"] for r in reports)
    assert reports[1]["snf_diag"] == ["1", "1", "1", "2", "0"]
    corpus = walkmat.rank2_corpus(200, 12, 42)
    assert corpus["violations"] == []


def test_main_eigenvalues_and_graph6():
    g = walkmat.dynkin_d(12)
    assert walkmat.main_eigenvalue_count(g) == 10
    assert walkmat.main_eigenvalue_count(g, numeric=True) == 10
    assert walkmat.Graph.from_graph6(g.to_graph6()) == g


def test_errors():
    with pytest.raises(ValueError):
        walkmat.dynkin_d(3)
    with pytest.raises(walkmat.ParseError):
        walkmat.Graph.from_graph6("DQd")
    with pytest.raises(ValueError):
        walkmat.walk_matrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        walkmat.det([[1.5]])
