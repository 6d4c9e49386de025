import itertools
import random

import pytest

from cayvol.evoalg import (
    NOT_REGULAR, REDUCIBLE, ZERO_SQUARE, AlgebraError, EvolutionAlgebra, vertex_edge_algebra, zero_algebra,
)
from cayvol.exactla import Matrix
from cayvol.field import ExtensionField, PrimeField, RationalField

F7 = PrimeField(7)


def _alg(rows, F=F7):
    return EvolutionAlgebra(F, rows)


def test_natural_basis_products():
    X = _alg([[1, 2, 0], [3, 0, 1], [0, 4, 5]])
    b = [X.basis_vector(i) for i in range(3)]
    for i, j in itertools.permutations(range(3), 2):
        assert X.multiply(b[i], b[j]) == (0, 0, 0)
    for i in range(3):
        assert X.multiply(b[i], b[i]) == X.matrix.column(i) == X.square(i)
    u = X.element([1, 1, 0])
    assert X.multiply(u, u) == tuple(a + c for a, c in zip(X.square(0), X.square(1)))


def test_multiplication_is_commutative_and_bilinear():
    rng = random.Random(11)
    X = _alg([[rng.randrange(7) for _ in range(4)] for _ in range(4)])
    for _ in range(20):
        u, v, w = ([rng.randrange(7) for _ in range(4)] for _ in range(3))
        assert X.multiply(u, v) == X.multiply(v, u)
        lhs = X.multiply([a + b for a, b in zip(u, v)], w)
        assert lhs == tuple(p + q for p, q in zip(X.multiply(u, w), X.multiply(v, w)))


def test_regular_and_degenerate():
    assert not zero_algebra(F7, 3).is_regular()
    assert zero_algebra(F7, 3).is_degenerate()
    I = EvolutionAlgebra(F7, Matrix.identity(F7, 3))
    assert I.is_regular() and not I.is_degenerate()
    X = _alg([[1, 2], [2, 1]])
    assert X.is_regular() and X.det == 4
    assert _alg([[1, 0], [1, 0]]).is_degenerate()


def test_simplicity_reasons():
    assert zero_algebra(F7, 2).simplicity() == (False, ZERO_SQUARE)
    assert _alg([[1, 1], [1, 1]]).simplicity() == (False, NOT_REGULAR)
    assert _alg([[1, 1], [0, 1]]).simplicity() == (False, REDUCIBLE)
    assert _alg([[1, 2], [2, 1]]).simplicity() == (True, None)
    identity = EvolutionAlgebra(F7, Matrix.identity(F7, 3))
    assert not identity.is_simple()           # every b_i spans an ideal
    assert EvolutionAlgebra(F7, Matrix.identity(F7, 1)).is_simple()


def test_block_fixture_not_simple():
    F = PrimeField(5)
    X = vertex_edge_algebra(F, 3, [(0, 1), (1, 2)])
    assert X.n == 5 and X.is_regular() and not X.is_simple()
    assert X.basis_ideal_oracle([0, 1, 2])
    assert not X.basis_ideal_oracle([3, 4])
    rows = X.matrix.rows
    assert all(rows[k][i] == (1 if i == k else 0) for i in range(3) for k in range(5))
    assert all(rows[k][i] == 0 for i in range(3, 5) for k in range(3, 5) if i != k)


def test_basis_ideal_oracle():
    X = _alg([[1, 0, 0], [0, 1, 1], [0, 1, 1]])
    assert X.basis_ideal_oracle([0])
    assert X.basis_ideal_oracle([1, 2])
    assert not X.basis_ideal_oracle([1])
    with pytest.raises(AlgebraError):
        X.basis_ideal_oracle([])
    with pytest.raises(AlgebraError):
        X.basis_ideal_oracle([0, 1, 2])


def test_regular_simple_iff_no_basis_ideal_random():
    rng = random.Random(2024)
    seen = {True: 0, False: 0}
    for _ in range(300):
        n = rng.randint(2, 5)
        rows = [[rng.choice([0, 0, 0, 1, 3]) for _ in range(n)] for _ in range(n)]
        X = _alg(rows)
        if not X.is_regular():
            assert not X.is_simple()
            continue
        assert X.is_simple() == (not X.has_basis_ideal())
        seen[X.is_simple()] += 1
    assert seen[True] and seen[False]


def test_attached_graph():
    I = EvolutionAlgebra(F7, Matrix.identity(F7, 3))
    assert I.attached_graph().sorted_edges() == [(0, 0), (1, 1), (2, 2)]
    assert zero_algebra(F7, 3).attached_graph().edges == frozenset()
    X = _alg([[0, 3], [5, 0]])
    assert X.attached_graph().sorted_edges() == [(0, 1), (1, 0)]   # b_1^2 = 5 b_2
    assert X.attached_weighted_graph().weight == {(0, 1): 5, (1, 0): 3}


def test_extend_scalars_and_scaled():
    F = PrimeField(13)
    X = EvolutionAlgebra(F, [[1, 2], [2, 1]])
    E = ExtensionField(13, 2)
    XE = X.extend_scalars(E)
    assert XE.field == E and XE.det == E(X.det.value)
    assert X.scaled(3).det == 9 * X.det


def test_json_round_trip(tmp_path):
    Q = RationalField()
    X = EvolutionAlgebra(Q, [[Q.parse("1/2"), 0], [0, Q.parse("-3")]], ["u", "v"])
    path = tmp_path / "x.json"
    X.dump(path)
    Y = EvolutionAlgebra.load(path)
    assert Y == X and Y.basis == ("u", "v") and Y.field == Q


def test_bad_inputs(tmp_path):
    with pytest.raises(AlgebraError):
        EvolutionAlgebra(F7, [[1, 2]])
    with pytest.raises(AlgebraError):
        EvolutionAlgebra.from_json({"matrix": [[1]]})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(AlgebraError):
        EvolutionAlgebra.load(bad)
