import itertools

import pytest

from projcode.errors import GuardExceeded
from projcode.gf import (Field, field_new, field_of_order, is_prime,
                         prime_power, _is_irreducible)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2),
                (11, 1), (13, 1), (2, 4)]


def test_prime_field_construction():
    assert field_new(2, 1).q == 2
    assert field_new(3, 1).q == 3


def test_non_prime_p_rejected():
    with pytest.raises(ValueError):
        field_new(4, 1)
    with pytest.raises(ValueError):
        field_new(1, 1)


def test_guards():
    with pytest.raises(GuardExceeded):
        field_new(2, 9)
    with pytest.raises(GuardExceeded):
        field_new(257, 2)


def test_gf4_modulus_unique_irreducible():
    # x^2+x+1 is the only monic irreducible quadratic over GF(2):
    # exhaust the candidates by root checking
    f = field_new(2, 2)
    assert f.modulus == 0b111
    irreducible = [enc for enc in range(4, 8) if _is_irreducible(enc, 2, 2)]
    assert irreducible == [0b111]


def test_pinned_moduli():
    assert field_new(2, 3).modulus == 0b1011   # x^3 + x + 1
    assert field_new(3, 2).modulus == 10       # x^2 + 1
    assert field_new(2, 4).modulus == 0b10011  # x^4 + x + 1


def test_modulus_is_irreducible_for_searched_fields():
    for p, m in [(5, 2), (3, 3), (2, 5), (7, 2)]:
        f = field_new(p, m)
        assert _is_irreducible(f.modulus, p, m)


def test_gf3_arithmetic():
    f = field_new(3, 1)
    assert f.add(2, 2) == 1
    assert f.pow(2, 2) == 1


def test_gf4_alpha_squared():
    # alpha * alpha reduces to alpha + 1 under x^2+x+1
    f = field_new(2, 2)
    assert f.mul(2, 2) == 3
    assert f.pow(2, 3) == 1


def test_division_by_zero():
    f = field_new(5, 1)
    with pytest.raises(ZeroDivisionError):
        f.div(3, 0)


def test_out_of_range_encoding_rejected():
    f = field_of_order(8)
    with pytest.raises(ValueError):
        f.pow(8, 2)


def test_arith_dispatch():
    f = field_new(7, 1)
    assert f.arith("add", 3, 5) == 1
    assert f.arith("div", 6, 2) == 3
    with pytest.raises(ValueError):
        f.arith("xor", 1, 1)


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1),
                                 (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)])
def test_field_axioms_exhaustive(p, m):
    f = field_new(p, m)
    if f.q > 16:
        pytest.skip("axiom exhaustion capped at q=16")
    els = list(f.elements())
    for a, b in itertools.product(els, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
    for a, b, c in itertools.product(els, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.sub(a, a) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1


def test_fermat_exhaustive_up_to_256():
    orders = [q for q in range(2, 257) if _is_prime_power(q)]
    for q in orders:
        f = field_of_order(q)
        for x in f.nonzero_elements():
            assert f.pow(x, q - 1) == 1
        assert all(f.pow(0, e) == 0 for e in (1, 2, 5))
        assert f.pow(0, 0) == 1


def _is_prime_power(q):
    try:
        prime_power(q)
        return True
    except ValueError:
        return False


def test_encoding_roundtrip_distinct():
    # multiplication by a fixed unit permutes the encodings
    for p, m in SMALL_FIELDS:
        f = field_new(p, m)
        unit = next(iter(f.nonzero_elements()))
        images = {f.mul(unit, x) for x in f.elements()}
        assert images == set(range(f.q))


def test_large_field_on_demand_path():
    f = field_new(2, 8)  # q = 256 uses tables
    g = field_new(257, 1)  # q = 257 > table limit: raw path
    assert f.mul(255, 255) != 0
    assert g.mul(256, 256) == (256 * 256) % 257
    assert g.inv(100) == pow(100, 255, 257)


def test_field_identity_cache():
    assert field_new(3, 2) is field_new(3, 2)
    assert field_of_order(9) is field_new(3, 2)
    assert field_new(3, 1) == field_new(3, 1)
    assert field_new(2, 2) != field_new(2, 1)


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_prime_power_rejects_composites():
    assert prime_power(49) == (7, 2)
    with pytest.raises(ValueError):
        prime_power(12)
