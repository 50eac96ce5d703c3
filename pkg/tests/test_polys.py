import pytest

from tgrs.gf import field
from tgrs.polys import (PolyGF, distinct_roots_in_field, poly_derivative,
                        poly_from_roots, poly_gcd)


def test_from_roots_whole_field_char2():
    f4 = field(2, 2)
    f = poly_from_roots(f4, range(4))
    # product over all of GF(4) is x^4 - x, i.e. x^4 + x in characteristic 2
    assert f.coeffs == (0, 1, 0, 0, 1)


def test_from_roots_single_zero():
    f5 = field(5)
    assert poly_from_roots(f5, [0]).coeffs == (0, 1)


def test_from_roots_whole_field_gf5():
    f5 = field(5)
    f = poly_from_roots(f5, range(5))
    assert f.coeffs == (0, 4, 0, 0, 0, 1)  # x^5 - x


def test_from_roots_duplicate():
    f5 = field(5)
    with pytest.raises(ValueError):
        poly_from_roots(f5, [0, 0, 1])


def test_from_roots_vanishes_at_points():
    f13 = field(13)
    pts = [0, 3, 7, 11]
    f = poly_from_roots(f13, pts)
    for a in pts:
        assert f.evaluate(a) == 0
    assert f.evaluate(1) != 0


def test_derivative_char2():
    f2 = field(2)
    f = PolyGF.make(f2, [1, 1, 0, 0, 1])  # x^4 + x + 1
    assert poly_derivative(f).coeffs == (1,)


def test_derivative_constant():
    f5 = field(5)
    assert poly_derivative(PolyGF.make(f5, [3])).coeffs == (0,)


def test_derivative_char3_wraparound():
    # d/dx (x^6 + b x^5 + c) = 5b x^4 = -b x^4 over GF(3)
    f3 = field(3)
    for b in (1, 2):
        f = PolyGF.make(f3, [2, 0, 0, 0, 0, b, 1])
        d = poly_derivative(f)
        assert d.coeffs == (0, 0, 0, 0, f3.neg(b))


def test_roots_scan_gf16():
    f16 = field(2, 4)
    f = PolyGF.make(f16, [1, 1, 0, 0, 1])
    roots = distinct_roots_in_field(f)
    assert len(roots) == 4
    for r in roots:
        assert f.evaluate(r) == 0


def test_roots_x2_plus_1_gf5():
    f5 = field(5)
    f = PolyGF.make(f5, [1, 0, 1])
    assert distinct_roots_in_field(f) == [2, 3]


def test_repeated_root_detection():
    f5 = field(5)
    f = PolyGF.make(f5, [0, 0, 1])  # x^2
    with pytest.raises(ValueError):
        distinct_roots_in_field(f, require_simple=True)
    assert distinct_roots_in_field(f) == [0]


def test_roots_roundtrip():
    f13 = field(13)
    pts = [1, 5, 6, 9]
    f = poly_from_roots(f13, pts)
    assert distinct_roots_in_field(f, require_simple=True) == sorted(pts)


def test_gcd():
    f5 = field(5)
    f = poly_from_roots(f5, [1, 2, 3])
    g = poly_from_roots(f5, [2, 3, 4])
    d = poly_gcd(f, g)
    assert d.coeffs == poly_from_roots(f5, [2, 3]).coeffs


def test_numpy_scan_matches_bruteforce_gf729():
    f729 = field(3, 6)
    f = PolyGF.make(f729, [1, 1, 0, 0, 0, 1, 1])  # x^6 + x^5 + x + 1
    fast = distinct_roots_in_field(f)
    slow = [x for x in range(729) if f.evaluate(x) == 0]
    assert fast == slow


def test_poly_arithmetic():
    f7 = field(7)
    a = PolyGF.make(f7, [1, 2])
    b = PolyGF.make(f7, [3, 1])
    assert (a * b).coeffs == (3, 0, 2)
    assert (a + b).coeffs == (4, 3)
    assert (a - a).is_zero()
    assert a.degree == 1 and PolyGF.make(f7, [0]).degree == -1
