import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cayvol.group import (
    FiniteGroup, GroupError, build, cyclic, dihedral, direct_product, identify, isomorphic, isomorphism,
    quaternion, symmetric,
)

SPECS = ["cyclic:1", "cyclic:6", "dihedral:4", "dihedral:5", "symmetric:3", "quaternion:8", "alternating:4",
         "product:cyclic:2,cyclic:4", "product:cyclic:2,cyclic:2,cyclic:2", "symmetric:4"]


def _is_hom_bijection(G1, G2, phi):
    return sorted(phi) == list(range(G2.n)) and all(
        phi[G1.mul(a, b)] == G2.mul(phi[a], phi[b]) for a in range(G1.n) for b in range(G1.n)
    )


def test_preset_orders():
    assert build("symmetric:3").n == 6
    assert build("dihedral:4").n == 8
    G = build("product:cyclic:2,cyclic:3")
    assert G.n == 6 and isomorphic(G, build("cyclic:6"))
    assert build("quaternion:8").n == 8 and build("alternating:4").n == 12


def test_build_rejects_bad_specs():
    for bad in ("cyclic:0", "dihedral:0", "foo:3", "cyclic:x", "quaternion:16"):
        with pytest.raises(GroupError):
            build(bad)
    assert isomorphic(build("dihedral:2"), build("product:cyclic:2,cyclic:2"))
    with pytest.raises(GroupError):
        build("cyclic:30")                 # above the default order cap
    assert build("cyclic:30", max_order=30).n == 30


def test_max_order_env(monkeypatch):
    monkeypatch.setenv("CAYVOL_MAX_ORDER", "40")
    assert build("cyclic:30").n == 30


def test_table_validation():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]])            # not a Latin square
    with pytest.raises(GroupError):
        FiniteGroup([[1, 0], [0, 1]])            # index 0 is not the identity


def test_table_file(tmp_path):
    G = symmetric(3)
    path = tmp_path / "s3.json"
    import json
    path.write_text(json.dumps(G.to_json()))
    H = build(f"table:{path}")
    assert H.table == G.table and H.labels == G.labels


def test_element_orders():
    assert cyclic(6).element_order(0) == 1
    assert cyclic(6).element_order(1) == 6
    S3 = symmetric(3)
    transpositions = [g for g in range(6) if S3.labels[g].count(" ") == 1]
    assert len(transpositions) == 3 and all(S3.element_order(t) == 2 for t in transpositions)


@pytest.mark.parametrize("spec", SPECS)
def test_orders_divide_group_order(spec):
    G = build(spec)
    assert all(G.n % o == 0 for o in G.orders)
    assert all(G.mul(g, G.inv(g)) == 0 for g in range(G.n))


def test_center():
    assert cyclic(5).center() == list(range(5))
    assert symmetric(3).center() == [0]
    Q = quaternion()
    Z = Q.center()
    assert len(Z) == 2 and Q.is_subgroup(Z) and Q.is_normal(Z)
    # exhaustive commutation cross-check
    assert Z == [z for z in range(8) if all(Q.mul(z, g) == Q.mul(g, z) for g in range(8))]


def test_conjugacy_classes():
    assert all(len(c) == 1 for c in cyclic(6).conjugacy_classes())
    assert sorted(len(c) for c in symmetric(3).conjugacy_classes()) == [1, 2, 3]
    assert symmetric(3).conjugacy_classes()[0] == [0]
    assert len(dihedral(4).conjugacy_classes()) == 5
    assert len(quaternion().conjugacy_classes()) == 5
    assert len(build("alternating:4").conjugacy_classes()) == 4


@pytest.mark.parametrize("spec", SPECS)
def test_classes_partition_the_group(spec):
    G = build(spec)
    classes = G.conjugacy_classes()
    assert sorted(itertools.chain.from_iterable(classes)) == list(range(G.n))
    for c in classes:
        assert {G.conjugate(h, c[0]) for h in range(G.n)} == set(c)


def test_generates():
    D4 = dihedral(4)
    assert cyclic(2).generates(range(2))
    assert not cyclic(2).generates([0])
    assert len(D4.generated_subgroup([1])) == 4       # a rotation
    assert not D4.generates([1])
    assert D4.generates([1, 4])                       # rotation and reflection


def test_coprime_generating_set():
    S3 = symmetric(3)
    S = S3.coprime_generating_set()
    assert sorted(S3.element_order(s) for s in S) == [2, 3]
    assert cyclic(2).coprime_generating_set() == [0, 1]
    D4 = dihedral(4)
    S = D4.coprime_generating_set()
    assert 0 in S and D4.generates(S)
    assert cyclic(1).coprime_generating_set() == [0]


@pytest.mark.parametrize("spec", SPECS[1:])
def test_coprime_set_properties(spec):
    G = build(spec)
    S = G.coprime_generating_set()
    assert G.generates(S)
    from math import gcd
    assert any(gcd(G.element_order(a), G.element_order(b)) == 1 for a, b in itertools.combinations(S, 2))


def test_quotients():
    S3 = symmetric(3)
    assert isomorphic(S3.quotient(S3.center()), S3)
    C4 = cyclic(4)
    assert isomorphic(C4.quotient([0, 2]), cyclic(2))
    Q = quaternion()
    V = Q.quotient(Q.center())
    assert V.n == 4 and isomorphic(V, build("product:cyclic:2,cyclic:2"))
    with pytest.raises(GroupError):
        S3.quotient([0, S3.coprime_generating_set()[0]])  # a transposition subgroup is not normal


def test_isomorphism_examples():
    assert not isomorphic(cyclic(4), build("product:cyclic:2,cyclic:2"))
    assert isomorphic(cyclic(6), build("product:cyclic:2,cyclic:3"))
    assert not isomorphic(symmetric(3), cyclic(6))
    assert not isomorphic(dihedral(4), quaternion())
    assert isomorphic(dihedral(3), symmetric(3))


@pytest.mark.parametrize("a, b", [("cyclic:6", "product:cyclic:3,cyclic:2"), ("dihedral:3", "symmetric:3"),
                                  ("product:cyclic:2,cyclic:4", "product:cyclic:4,cyclic:2"),
                                  ("alternating:4", "alternating:4")])
def test_isomorphism_witness(a, b):
    G1, G2 = build(a), build(b)
    phi = isomorphism(G1, G2)
    assert phi is not None and _is_hom_bijection(G1, G2, phi)
    assert isomorphism(G2, G1) is not None


@settings(max_examples=30, derandomize=True)
@given(st.permutations(list(range(1, 8))))
def test_isomorphic_to_relabelled_copy(perm):
    G = dihedral(4)
    relabel = [0, *perm]                                    # new index of each old element
    inv = {v: k for k, v in enumerate(relabel)}
    table = [[relabel[G.mul(inv[i], inv[j])] for j in range(8)] for i in range(8)]
    H = FiniteGroup(table)
    phi = isomorphism(G, H)
    assert phi is not None and _is_hom_bijection(G, H, phi)


def test_identify():
    assert identify(build("product:cyclic:3,cyclic:2")) == "cyclic:6"
    assert identify(dihedral(3)) == "symmetric:3"
    assert identify(quaternion()) == "quaternion:8"


def test_direct_product_and_json_round_trip():
    G = direct_product(cyclic(2), cyclic(3))
    assert G.is_abelian and G.n == 6
    H = FiniteGroup.from_json(G.to_json())
    assert H.table == G.table and H.labels == G.labels
