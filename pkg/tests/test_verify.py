import pytest

from cayvol.field import PrimeField
from cayvol.monomial import MonomialMap
from cayvol.verify import SUITES, run_suite, smallest_prime_field


def test_smallest_prime_field():
    assert [smallest_prime_field(n).p for n in (2, 6, 8, 12)] == [5, 13, 17, 29]


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass(name):
    results = run_suite(name)
    assert results and [r.case for r in results] == sorted(r.case for r in results)
    failed = [r.line() for r in results if not r.passed]
    assert not failed, failed


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_monomial_map_algebra():
    F = PrimeField(7)
    a = MonomialMap((1, 2, 0), (F(2), F(3), F(1)))
    b = MonomialMap((0, 2, 1), (F(1), F(1), F(5)))
    v = (F(1), F(2), F(3))
    assert (a @ b)(v) == a(b(v))
    assert (a @ a.inverse()).is_identity() and (a.inverse() @ a).is_identity()
    assert MonomialMap.identity(3, F).fixed_points() == [0, 1, 2]
    assert not a.is_diagonal() and MonomialMap((0, 1), (F(3), F(1))).is_diagonal()
    with pytest.raises(ValueError):
        MonomialMap((0, 0), (F(1), F(1)))
    with pytest.raises(ValueError):
        MonomialMap((0, 1), (F(1), F(0)))
