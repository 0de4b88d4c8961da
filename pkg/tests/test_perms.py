import pytest

from subsym.perms import Perm, PermError


def test_rejects_non_bijection():
    with pytest.raises(PermError):
        Perm([0, 0, 1])


def test_identity_and_call():
    e = Perm.identity(4)
    assert e.is_identity()
    assert [e(i) for i in range(4)] == [0, 1, 2, 3]


def test_composition_is_left_to_right():
    a = Perm.from_cycles(3, [(0, 1)])
    b = Perm.from_cycles(3, [(1, 2)])
    ab = a * b
    # x^(ab) = (x^a)^b
    assert ab(0) == b(a(0)) == 2
    assert (a * b).images != (b * a).images


def test_inverse():
    p = Perm.from_cycles(5, [(0, 1, 2, 3, 4)])
    assert (p * p.inverse()).is_identity()
    assert p.inverse()(0) == 4


def test_apply_tuple():
    p = Perm.from_cycles(4, [(0, 1, 2)])
    assert p.apply_tuple((0, 1, 3)) == (1, 2, 3)


def test_cycles_and_repr():
    p = Perm.from_cycles(6, [(0, 1), (2, 3, 4)])
    assert p.cycles() == [(0, 1), (2, 3, 4)]
    assert repr(Perm.identity(3)) == "Perm(id)"
    assert "(0 1)" in repr(p)


def test_hash_eq():
    a = Perm.from_cycles(3, [(0, 1)])
    b = Perm([1, 0, 2])
    assert a == b and hash(a) == hash(b)
