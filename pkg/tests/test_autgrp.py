import itertools

import pytest

from cayvol import autgrp, cayley
from cayvol.autgrp import AutError, NotRegular, algebra_isomorphic, automorphism_group, diag_group, exactness
from cayvol.cayley import WeightFunction, cay_group, realize
from cayvol.evoalg import EvolutionAlgebra, zero_algebra
from cayvol.field import PrimeField, RationalField
from cayvol.group import build, cyclic, symmetric
from cayvol.monomial import MonomialMap, preserves_products


def _brute_monomial(X):
    """Every (sigma, c) with phi(b_i b_j) = phi(b_i) phi(b_j), by exhaustion."""
    F, n = X.field, X.n
    units = list(F.iter_units())
    found = set()
    for sigma in itertools.permutations(range(n)):
        for c in itertools.product(units, repeat=n):
            phi = MonomialMap(sigma, c)
            if preserves_products(X, X, phi):
                found.add(phi)
    return found


def _brute_gl2(X):
    """All invertible 2x2 maps (not only monomial ones) preserving products."""
    F = X.field
    elems = [F.zero, *F.iter_units()]
    count = 0
    for a, b, c, d in itertools.product(elems, repeat=4):
        if (a * d - b * c).is_zero():
            continue
        cols = [(a, c), (b, d)]         # images of b_1, b_2

        def img(v):
            return tuple(v[0] * cols[0][k] + v[1] * cols[1][k] for k in range(2))

        ok = True
        for i, j in [(0, 0), (0, 1), (1, 1)]:
            bi, bj = X.basis_vector(i), X.basis_vector(j)
            if img(X.multiply(bi, bj)) != X.multiply(img(bi), img(bj)):
                ok = False
                break
        count += ok
    return count


def test_cyclic2_example():
    G = cyclic(2)
    F = PrimeField(5)
    X = cay_group(G, realize(G, F, [0, 1]))
    A = automorphism_group(X)
    assert A.order == 2
    assert A.elements[0].is_identity()
    assert A.elements[1].sigma == (1, 0) and all(c == 1 for c in A.elements[1].scalars)
    assert _brute_gl2(X) == 2                 # no non-monomial automorphisms either


@pytest.mark.parametrize("rows", [[[1, 2], [2, 1]], [[0, 1], [1, 0]], [[1, 0], [0, 1]], [[1, 1], [0, 1]],
                                  [[2, 3], [1, 3]], [[0, 3], [1, 1]]])
def test_against_full_gl2_enumeration(rows):
    X = EvolutionAlgebra(PrimeField(5), rows)
    assert X.is_regular()
    A = automorphism_group(X)
    assert A.order == _brute_gl2(X)
    assert set(A.elements) == _brute_monomial(X)


@pytest.mark.parametrize("p, rows", [
    (7, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
    (7, [[1, 1, 0], [0, 1, 1], [1, 0, 1]]),
    (5, [[1, 2, 0], [0, 0, 3], [4, 0, 1]]),
    (7, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    (7, [[0, 2, 0], [3, 0, 0], [0, 0, 1]]),
    (5, [[0, 1, 1], [1, 0, 1], [1, 1, 0]]),
])
def test_against_brute_force_monomial_search(p, rows):
    X = EvolutionAlgebra(PrimeField(p), rows)
    assert X.is_regular()
    assert set(automorphism_group(X).elements) == _brute_monomial(X)


def test_diag_examples():
    F = PrimeField(7)
    two_cycle = EvolutionAlgebra(F, [[0, 1], [1, 0]])
    D = diag_group(two_cycle)
    assert sorted(m.scalars[0] for m in D.elements) == [1, 2, 4]
    for m in D.elements:
        assert m.scalars[1] == m.scalars[0] ** 2
    looped = EvolutionAlgebra(F, [[1, 1], [1, 0]])
    assert diag_group(looped).order == 1
    G = symmetric(3)
    X = cay_group(G, realize(G, PrimeField(13), G.coprime_generating_set()))
    assert diag_group(X).order == 1


def test_exactness_identity():
    for X in [
        EvolutionAlgebra(PrimeField(7), [[0, 1], [1, 0]]),
        EvolutionAlgebra(PrimeField(13), [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        cay_group(symmetric(3), cayley.class_function_weights(symmetric(3), PrimeField(13))),
    ]:
        d, img, total = exactness(X)
        assert d * img == total


def test_class_function_aut_is_larger():
    G = symmetric(3)
    X = cay_group(G, cayley.class_function_weights(G, PrimeField(13)))
    A = automorphism_group(X)
    assert A.order == 72 and not autgrp.recognize(A, G)
    assert exactness(X, A) == (1, 72, 72)


def test_refuses_non_regular():
    F = PrimeField(5)
    with pytest.raises(NotRegular) as info:
        automorphism_group(zero_algebra(F, 3))
    assert info.value.reason == "not regular"
    with pytest.raises(NotRegular):
        diag_group(EvolutionAlgebra(F, [[1, 1], [1, 1]]))


def test_group_structure():
    G = build("dihedral:4")
    X = cay_group(G, realize(G, PrimeField(17), G.coprime_generating_set()))
    A = automorphism_group(X)
    assert A.order == 8 and A.is_closed()
    assert autgrp.recognize(A, G) and autgrp.recognized_name(A) == "dihedral:4"
    H = A.as_group()
    assert H.n == 8
    span = {A.elements[0]}
    frontier = list(span)
    while frontier:
        x = frontier.pop()
        for g in A.generators:
            y = x @ g
            if y not in span:
                span.add(y)
                frontier.append(y)
    assert span == set(A.elements)


def test_recognize_trivial():
    F = PrimeField(5)
    X = EvolutionAlgebra(F, [[2]])
    A = automorphism_group(X)
    assert A.order == 1 and autgrp.recognize(A, cyclic(1))


def test_rational_c4():
    G = cyclic(4)
    X = cay_group(G, realize(G, RationalField(), G.coprime_generating_set()))
    A = automorphism_group(X)
    assert A.order == 4 and autgrp.recognize(A, G)


def test_rational_scalar_roots():
    Q = RationalField()
    # b1^2 = b2, b2^2 = 4 b1: c2 = c1^2, 4 c1 = 4 c2^2 => c1^3 = 1 => c1 = 1 over Q
    X = EvolutionAlgebra(Q, [[0, 4], [1, 0]])
    A = automorphism_group(X)
    for m in A.elements:
        assert preserves_products(X, X, m)
    assert {m.sigma for m in A.elements} <= {(0, 1), (1, 0)}


def test_algebra_isomorphic():
    G = symmetric(3)
    F = PrimeField(13)
    f = realize(G, F, G.coprime_generating_set())
    X = cay_group(G, f)
    assert algebra_isomorphic(X, X)
    Y = cay_group(G, realize(G, F, range(6)))
    assert not algebra_isomorphic(X, Y)
    # a basis relabelling of X is isomorphic to X
    perm = [3, 0, 5, 1, 2, 4]
    rows = [[X.omega(perm.index(k), perm.index(i)) for i in range(6)] for k in range(6)]
    assert algebra_isomorphic(X, EvolutionAlgebra(F, rows))
    # scaling: just a computed answer, no a priori expectation
    assert isinstance(algebra_isomorphic(X, cay_group(G, f.scaled(F(2)))), bool)
    with pytest.raises(AutError):
        algebra_isomorphic(X, EvolutionAlgebra(PrimeField(7), [[1]]))


def test_subgroup_report():
    G = symmetric(3)
    rep = autgrp.subgroup_report(G, cayley.class_function_weights(G, PrimeField(13)))
    assert (len(rep.k1), len(rep.k2), len(rep.intersection)) == (6, 6, 1)
    Q8 = build("quaternion:8")
    rep = autgrp.subgroup_report(Q8, cayley.class_function_weights(Q8, PrimeField(17)))
    assert len(rep.k2) == 4 and rep.center_order == 2
    C = cyclic(4)
    rep = autgrp.subgroup_report(C, WeightFunction(PrimeField(11), [1, 2, 3, 4]))
    assert len(rep.k2) == 1
    with pytest.raises(AutError):
        autgrp.subgroup_report(G, WeightFunction(PrimeField(13), range(6)))


def test_dimension_cap():
    F = PrimeField(5)
    X = EvolutionAlgebra(F, [[1 if i == k else 0 for i in range(3)] for k in range(3)])
    with pytest.raises(AutError):
        autgrp.monomial_maps(X, X, max_dim=2)
