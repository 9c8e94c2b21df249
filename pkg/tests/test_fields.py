import random
from fractions import Fraction

import pytest

from crossratio.fields import (
    PrimeField,
    QuotientRing,
    RationalField,
    SplitRequired,
    f_divmod,
    f_from_ints,
    f_monic,
    f_mul,
    f_squarefree_part,
    f_xgcd,
    is_prime,
    random_prime,
    rpoly_gcd,
    rpoly_trim,
)


def test_prime_field_ops():
    F = PrimeField(101)
    assert F.add(70, 40) == 9
    assert F.mul(50, 50) == 2500 % 101
    assert F.mul(F.inv(7), 7) == 1
    assert F.is_zero(F.sub(5, 5))


def test_is_prime_knowns():
    assert is_prime(2) and is_prime(3) and is_prime(101)
    assert not is_prime(1) and not is_prime(91) and not is_prime(561)
    assert is_prime((1 << 61) - 1)  # Mersenne prime


def test_random_prime_bits():
    rng = random.Random(1)
    p = random_prime(rng, 62)
    assert p.bit_length() == 62
    assert is_prime(p)


@pytest.mark.parametrize("F", [PrimeField(10007), RationalField()])
def test_xgcd_identity(F):
    from crossratio.fields import f_add

    rng = random.Random(9)
    for _ in range(20):
        a = f_from_ints([rng.randrange(-9, 10) for _ in range(rng.randrange(1, 6))], F)
        b = f_from_ints([rng.randrange(-9, 10) for _ in range(rng.randrange(1, 6))], F)
        if not a and not b:
            continue
        g, s, t = f_xgcd(a, b, F)
        assert f_add(f_mul(s, a, F), f_mul(t, b, F), F) == g
        if a and b:
            _, ra = f_divmod(a, g, F)
            _, rb = f_divmod(b, g, F)
            assert not ra and not rb


@pytest.mark.parametrize("F", [PrimeField(10007), RationalField()])
def test_squarefree_part(F):
    # (x-1)^2 (x-2) -> (x-1)(x-2)
    square = f_mul(
        f_mul(f_from_ints([-1, 1], F), f_from_ints([-1, 1], F), F),
        f_from_ints([-2, 1], F),
        F,
    )
    expected = f_monic(f_mul(f_from_ints([-1, 1], F), f_from_ints([-2, 1], F), F), F)
    assert f_squarefree_part(square, F) == expected


def test_quotient_ring_split_on_zero_divisor():
    F = RationalField()
    # modulus (x-1)(x-2)
    modulus = f_mul(f_from_ints([-1, 1], F), f_from_ints([-2, 1], F), F)
    ring = QuotientRing(F, f_monic(modulus, F))
    x = ring.gen()
    value = ring.sub(x, ring.from_int(1))  # zero at x=1, unit at x=2
    with pytest.raises(SplitRequired) as exc:
        ring.is_zero(value)
    left, right = exc.value.left, exc.value.right
    parts = {tuple(left), tuple(right)}
    assert parts == {(Fraction(-1), Fraction(1)), (Fraction(-2), Fraction(1))}


def test_quotient_ring_unit_inverse():
    F = PrimeField(10007)
    # irreducible-enough modulus: x^2 + 1 over F_10007 (10007 % 4 == 3)
    ring = QuotientRing(F, f_from_ints([1, 0, 1], F))
    x = ring.gen()
    v = ring.add(ring.mul(x, ring.from_int(3)), ring.from_int(2))  # 3x+2
    assert not ring.is_zero(v)
    inv = ring.inv(v)
    assert ring.mul(v, inv) == ring.one()


def test_quotient_ring_linear_gen_is_root():
    F = RationalField()
    ring = QuotientRing(F, f_from_ints([-7, 1], F))  # x - 7
    assert ring.gen() == (Fraction(7),)


def test_rpoly_gcd_unique_common_root():
    F = RationalField()
    ring = QuotientRing(F, f_from_ints([-3, 1], F))  # base point x = 3
    # p(y) = (y-1)(y-2), q(y) = (y-1)(y-5): gcd should be y-1
    p = [ring.from_int(2), ring.from_int(-3), ring.one()]
    q = [ring.from_int(5), ring.from_int(-6), ring.one()]
    d = rpoly_gcd([p, q], ring)
    assert len(d) == 2
    assert d[1] == ring.one()
    assert d[0] == ring.from_int(-1)


def test_rpoly_gcd_all_zero_returns_none():
    F = RationalField()
    ring = QuotientRing(F, f_from_ints([-3, 1], F))
    assert rpoly_gcd([[ring.zero(), ring.zero()]], ring) is None


def test_rpoly_trim_splits_on_partial_zero():
    F = RationalField()
    modulus = f_monic(f_mul(f_from_ints([-1, 1], F), f_from_ints([-2, 1], F), F), F)
    ring = QuotientRing(F, modulus)
    x = ring.gen()
    lead = ring.sub(x, ring.from_int(1))  # vanishes only at x=1
    with pytest.raises(SplitRequired):
        rpoly_trim([ring.one(), lead], ring)
