import pytest

from tgrs.gf import Fe, FieldError, default_modulus, field, is_prime


def test_default_moduli():
    assert default_modulus(2, 4) == (1, 1, 0, 0, 1)  # x^4 + x + 1
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(3, 2) == (1, 0, 1)
    assert default_modulus(5, 1) == (0, 1)
    assert default_modulus(5, 2) == (2, 0, 1)


def test_irreducibility_verified_by_trial_division():
    # exhaustive trial division over GF(2) by all degree <= 2 polynomials
    # confirms x^4 + x + 1 has no small factor
    def poly_mod(f, g):
        f = f[:]
        while len(f) >= len(g):
            if f[-1]:
                for i in range(len(g)):
                    f[len(f) - len(g) + i] ^= g[i]
            f.pop()
        return f

    f = [1, 1, 0, 0, 1]
    for packed in range(2, 8):  # all monic degree 1..2 divisors over GF(2)
        g = [packed & 1, (packed >> 1) & 1, (packed >> 2) & 1]
        while g[-1] == 0:
            g.pop()
        if len(g) < 2:
            continue
        rem = poly_mod(f, g)
        assert any(rem), f"unexpected factor {g}"
    assert field(2, 4).modulus == (1, 1, 0, 0, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        field(2, 4, (1, 0, 1, 0, 1))  # x^4 + x^2 + 1 = (x^2 + x + 1)^2


def test_nonprime_characteristic_rejected():
    with pytest.raises(FieldError):
        field(4)
    with pytest.raises(FieldError):
        field(1)


def test_nonmonic_and_wrong_degree_rejected():
    with pytest.raises(FieldError):
        field(5, 2, (1, 1))
    with pytest.raises(FieldError):
        field(3, 2, (1, 1, 2))


def test_default_modulus_cap():
    with pytest.raises(FieldError):
        default_modulus(2, 25)


def test_mul_examples():
    f5 = field(5)
    assert f5.mul(2, 3) == 1
    f16 = field(2, 4)
    assert f16.mul(8, 2) == 3  # x^3 * x = x + 1
    for a in range(16):
        assert f16.mul(0, a) == 0


def test_inverse():
    f5 = field(5)
    assert f5.inv(2) == 3
    f16 = field(2, 4)
    assert f16.inv(2) == 9  # 1/x = x^3 + 1 under x^4 + x + 1
    assert f16.mul(2, 9) == 1
    with pytest.raises(ZeroDivisionError):
        f16.inv(0)


def test_pow_conventions():
    f5 = field(5)
    assert f5.pow(2, 4) == 1
    assert f5.pow(0, 0) == 1
    f16 = field(2, 4)
    assert f16.pow(0, 0) == 1
    for g in range(1, 16):
        assert f16.pow(g, 15) == 1
    with pytest.raises(ZeroDivisionError):
        f5.pow(0, -1)


def test_sqrt_odd_characteristic():
    f5 = field(5)
    assert f5.sqrt(4) == 2  # canonical root: 2 < 3
    assert f5.sqrt(2) is None
    squares = {x for x in range(5) if f5.sqrt(x) is not None}
    assert squares == {0, 1, 4}
    f25 = field(5, 2)
    with_roots = [a for a in range(25) if f25.sqrt(a) is not None]
    assert len(with_roots) == 13  # (q + 1) / 2 including zero
    for a in with_roots:
        r = f25.sqrt(a)
        assert f25.mul(r, r) == a
        assert r <= f25.neg(r)


def test_sqrt_char2_unique():
    f16 = field(2, 4)
    for a in range(16):
        r = f16.sqrt(a)
        assert r == f16.pow(a, 8)
        assert f16.mul(r, r) == a


def test_enumeration():
    f2 = field(2)
    assert [int(x) for x in f2.elements()] == [0, 1]
    f4 = field(2, 2)
    els = f4.elements()
    assert len(els) == 4 and int(els[0]) == 0
    f16 = field(2, 4)
    vals = [int(x) for x in f16.elements()]
    assert len(set(vals)) == 16


def test_subfield():
    f16 = field(2, 4)
    sub = [int(x) for x in f16.subfield(2)]
    assert len(sub) == 4
    # closure under both operations, and fixed-point scan agrees
    scan = [a for a in range(16) if f16.pow(a, 4) == a]
    assert sub == scan
    for a in sub:
        for b in sub:
            assert f16.add(a, b) in sub
            assert f16.mul(a, b) in sub
    assert len(f16.subfield(4)) == 16
    with pytest.raises(FieldError):
        f16.subfield(3)


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1),
                                 (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 6)])
def test_field_axioms_exhaustive(p, m):
    ctx = field(p, m)
    ctx.enable_tables()
    q = ctx.q
    els = range(q)
    for a in els:
        assert ctx.add(a, 0) == a
        assert ctx.mul(a, 1) == a
        assert ctx.add(a, ctx.neg(a)) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
    for a in els:
        for b in els:
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(a, b) == ctx.mul(b, a)
            for c in els:
                assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
                assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_frobenius_additive_char2(m):
    ctx = field(2, m)
    ctx.enable_tables()
    for a in range(ctx.q):
        for b in range(ctx.q):
            lhs = ctx.mul(ctx.add(a, b), ctx.add(a, b))
            rhs = ctx.add(ctx.mul(a, a), ctx.mul(b, b))
            assert lhs == rhs


def test_fe_wrapper():
    f5 = field(5)
    two, three = f5.fe(2), f5.fe(3)
    assert int(two * three) == 1
    assert int(two + three) == 0
    assert int(-two) == 3
    assert int(two ** 4) == 1
    assert int(two.inverse()) == 3
    assert (f5.fe(4).sqrt()).value == 2
    assert f5.fe(2).sqrt() is None
    assert two.coeffs == (2,)
    f7 = field(7)
    with pytest.raises(FieldError):
        two + f7.fe(1)


def test_pack_unpack_roundtrip():
    f27 = field(3, 3)
    for a in range(27):
        assert f27.pack(f27.unpack(a)) == a
    assert f27.unpack(5) == (2, 1, 0)


def test_same_parameters_same_context():
    assert field(2, 4) == field(2, 4)
    assert field(2, 4) == field(2, 4, (1, 1, 0, 0, 1))
    assert hash(field(3, 2)) == hash(field(3, 2))


def test_is_prime():
    assert is_prime(2) and is_prime(3) and is_prime(65537)
    assert not is_prime(1) and not is_prime(561) and not is_prime(2 ** 16)
