import pytest
from hypothesis import given, strategies as st

from nmdskit.errors import FieldError
from nmdskit.gf import FieldSpec, field_from_json, make_field


@pytest.mark.parametrize("p,m,modulus", [
    (2, 1, (1, 1)),
    (2, 2, (1, 1, 1)),
    (2, 3, (1, 1, 0, 1)),
    (2, 4, (1, 1, 0, 0, 1)),
    (3, 1, (1, 1)),
    (3, 2, (2, 1, 1)),
    (5, 1, (2, 1)),
    (7, 1, (2, 1)),  # x + 2: the class of x is 5, of order 6 mod 7
])
def test_canonical_modulus(p, m, modulus):
    f = make_field(p, m)
    assert f.modulus == modulus
    assert f.q == p ** m


def test_primitive_element_generates_units():
    f = make_field(2, 4)
    w = f.primitive
    powers = set()
    x = 1
    for _ in range(f.q - 1):
        powers.add(x)
        x = f.mul(x, w)
    assert powers == set(range(1, f.q))
    assert x == 1  # w^(q-1) closes the cycle
    assert f.element_order(w) == f.q - 1


def test_units_are_primitive_powers():
    f = make_field(3, 2)
    units = f.units()
    assert len(units) == f.q - 1
    assert units[0] == 1
    for i in range(1, len(units)):
        assert units[i] == f.mul(units[i - 1], f.primitive)


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (5, 1), (2, 4)])
def test_field_axioms_exhaustive(p, m):
    """Every pair: commutativity, inverses, distributivity."""
    f = make_field(p, m)
    q = f.q
    for a in range(q):
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a in range(q):
        for b in range(q):
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in (0, 1, q - 1):
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_gf9_associativity(a, b, c):
    f = make_field(3, 2)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


@given(st.integers(1, 15), st.integers(-10, 20))
def test_gf16_pow_matches_repeated_mul(a, e):
    f = make_field(2, 4)
    expected = 1
    x = a if e >= 0 else f.inv(a)
    for _ in range(abs(e)):
        expected = f.mul(expected, x)
    assert f.pow(a, e) == expected


def test_char2_add_is_xor():
    f = make_field(2, 3)
    assert all(f.add(a, b) == (a ^ b) for a in range(8) for b in range(8))


def test_json_roundtrip():
    f = make_field(3, 2)
    g = field_from_json(f.to_json())
    assert g == f


def test_element_order_divides_group_order():
    f = make_field(2, 4)
    for a in range(1, f.q):
        d = f.element_order(a)
        assert (f.q - 1) % d == 0
        assert f.pow(a, d) == 1


@pytest.mark.parametrize("bad", [
    {"p": 4, "m": 1, "modulus": [1, 1]},
    {"p": 2, "m": 3, "modulus": [1, 1, 1]},       # wrong length
    {"p": 2, "m": 3, "modulus": [1, 1, 1, 1]},    # reducible/non-primitive
    {"p": 2, "m": 2, "modulus": [0, 0, 1]},       # x^2, not irreducible
])
def test_field_from_json_rejects_bad_input(bad):
    with pytest.raises(FieldError):
        field_from_json(bad)


def test_make_field_validation():
    with pytest.raises(FieldError):
        make_field(6, 1)
    with pytest.raises(FieldError):
        make_field(2, 0)
    with pytest.raises(FieldError):
        make_field(2, 20)  # exceeds the default size bound


def test_element_range_checks():
    f = make_field(2, 3)
    with pytest.raises(FieldError):
        f.add(8, 0)
    with pytest.raises(FieldError):
        f.mul(0, -1)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_frozen():
    f = make_field(2, 2)
    with pytest.raises(Exception):
        f.p = 3
    assert isinstance(f, FieldSpec)
