import random
from fractions import Fraction

import pytest
import sympy

from realtrop import KPoly, Puiseux, RealTropPoly, SignedTrop, minus, parse_point, plus, trop, tropicalize
from realtrop.core import normalize_factor, proportional, residue_poly, squarefree_from_factors

x, y = sympy.symbols("x y")


def K(text, n=None):
    return KPoly.parse(text, n)


def kpoly_from_sympy(expr, gens):
    poly = sympy.Poly(sympy.expand(expr), *gens)
    return KPoly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}, len(gens))


class TestSignedTrop:
    def test_multiplication(self):
        assert plus(0) * plus(0) == plus(0)
        assert minus(1) * minus(2) == plus(3)
        assert trop(Puiseux.parse("2*t")) * trop(Puiseux.parse("4*t")) == plus(2) == trop(Puiseux.parse("8*t^2"))

    @pytest.mark.parametrize("text, value", [("+0", plus(0)), ("--1/2", minus(Fraction(-1, 2))),
                                             ("0^+", plus(0)), ("-1^-", minus(-1)), ("3-", minus(3))])
    def test_parse(self, text, value):
        assert SignedTrop.parse(text) == value

    def test_render(self):
        assert str(minus(-1)) == "--1"
        assert minus(-1).label() == "-1^-"
        assert SignedTrop.parse(str(minus(Fraction(3, 4)))) == minus(Fraction(3, 4))

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            SignedTrop(0, 1)


class TestRealTropPoly:
    def test_eval(self, quartic):
        assert quartic.evaluate(parse_point("+0")) == 0
        assert quartic.evaluate(parse_point("+-1")) == -2
        assert RealTropPoly({(1,): plus(3)}).evaluate(parse_point("+5")) == 8

    def test_argmin(self, quartic):
        assert quartic.argmin(parse_point("+0")) == [((0,), 1), ((2,), 1)]
        assert quartic.argmin(parse_point("+-1")) == [((2,), 1), ((3,), 1), ((4,), -1)]
        assert quartic.argmin(parse_point("--1")) == [((2,), 1), ((3,), -1), ((4,), -1)]

    def test_member(self, quartic, conic):
        assert not quartic.contains(parse_point("+0"))
        assert quartic.contains(parse_point("+-1"))
        assert parse_point("--1") in quartic
        assert conic.contains(parse_point("+0 +0"))
        const = RealTropPoly({(0, 0): plus(0)})
        assert not any(const.contains((SignedTrop(s, a), SignedTrop(r, b)))
                       for s in (1, -1) for r in (1, -1) for a in range(-2, 3) for b in range(-2, 3))

    def test_dimension_mismatch(self, quartic):
        with pytest.raises(ValueError, match="dimension mismatch"):
            quartic.evaluate(parse_point("+0 +0"))

    def test_eval_ignores_signs(self, cubic):
        rng = random.Random(1)
        for _ in range(50):
            a, b = Fraction(rng.randint(-9, 9), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), 3)
            vals = {cubic.evaluate((SignedTrop(s, a), SignedTrop(r, b))) for s in (1, -1) for r in (1, -1)}
            assert len(vals) == 1

    def test_text_round_trip(self, cubic):
        assert RealTropPoly.parse(cubic.dump()) == cubic

    def test_parse_errors(self):
        with pytest.raises(ValueError, match="line 2"):
            RealTropPoly.parse("+0 : 0\n+x : 1\n")
        with pytest.raises(ValueError, match="duplicate"):
            RealTropPoly.parse("+0 : 1\n-1 : 1\n")

    def test_twist_keeps_membership(self, conic):
        twisted = conic.twist((-1, 1))
        for a in range(-2, 3):
            for b in range(-2, 3):
                p = (minus(a), plus(b))
                assert conic.contains(p) == twisted.contains((plus(a), plus(b)))

    def test_negative_exponents_use_parity(self):
        f = RealTropPoly({(-1,): plus(0), (0,): plus(0)})
        assert f.argmin(parse_point("-0")) == [((-1,), -1), ((0,), 1)]


class TestTropicalize:
    def test_examples(self):
        assert tropicalize(K("2 : 1\n1 : -1\n0 : 1")) == RealTropPoly({2: plus(0), 1: minus(0), 0: plus(0)})
        assert tropicalize(K("2 : 1\n1 : -2 - t\n0 : 1")) == RealTropPoly({2: plus(0), 1: minus(0), 0: plus(0)})
        assert tropicalize(K("3 : 1\n0 : 1")) == RealTropPoly({3: plus(0), 0: plus(0)})

    def test_zero_polynomial(self):
        with pytest.raises(ValueError):
            tropicalize(KPoly({}, 1))


class TestResidue:
    def test_double_root(self):
        assert residue_poly(K("2 : 1\n1 : -2 - t\n0 : 1"), (0,)) == {(2,): 1, (1,): -2, (0,): 1}

    def test_cubic_residues(self):
        F = kpoly_from_sympy(x**3 + y**3 - x**2*y - x*y**2 + 2*x**2 + 2*y**2 + 4*x*y - 8*x - 8*y + 8, (x, y))
        assert residue_poly(F, (0, 1)) == {(3, 0): 1, (2, 0): 2, (1, 0): -8, (0, 0): 8}
        # the cubic part has coefficient -1 on x^2 y and x y^2
        assert residue_poly(F, (-1, -1)) == {(3, 0): 1, (0, 3): 1, (2, 1): -1, (1, 2): -1}

    def test_support_matches_argmin(self):
        rng = random.Random(8)
        for _ in range(50):
            F = KPoly({(rng.randint(0, 4), rng.randint(0, 4)):
                       Puiseux([(rng.randint(-2, 2), rng.choice([-2, -1, 1, 3]))]) for _ in range(6)}, 2)
            w = (Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3)))
            f = tropicalize(F)
            argmin = {e for e, _ in f.argmin((plus(w[0]), plus(w[1])))}
            assert set(residue_poly(F, w)) == argmin


class TestKPoly:
    def test_product_pair(self):
        F = kpoly_from_sympy(x**2*y + x**2 - x*y - x + y + 1, (x, y))
        G = kpoly_from_sympy(x*y**2 - x*y + y**2 + x - y + 1, (x, y))
        assert F * G == kpoly_from_sympy(x**3*y**3 + x**3 + y**3 + 1, (x, y))

    def test_eval(self, cubic_lift):
        assert K("2 : 1\n1 : -2 - t\n0 : 1")(1) == Puiseux.parse("-t")
        assert cubic_lift.eval([1, Puiseux.parse("t")]).is_zero()

    def test_against_sympy(self):
        rng = random.Random(4)
        for _ in range(40):
            a = sum(rng.randint(-3, 3) * x**rng.randint(0, 3) * y**rng.randint(0, 3) for _ in range(4))
            b = sum(rng.randint(-3, 3) * x**rng.randint(0, 3) * y**rng.randint(0, 3) for _ in range(4))
            if a == 0 or b == 0:
                continue
            A, B = kpoly_from_sympy(a, (x, y)), kpoly_from_sympy(b, (x, y))
            assert A * B == kpoly_from_sympy(a * b, (x, y))
            if sympy.expand(a + b) != 0:
                assert A + B == kpoly_from_sympy(a + b, (x, y))
            assert A ** 2 == kpoly_from_sympy(a**2, (x, y))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            KPoly.var(0, 1) * KPoly.var(0, 2)

    def test_euler(self):
        F = K("2 1 : 3\n0 0 : -1\n1 0 : t")
        assert F.euler(1, (2, -1)) == K("2 1 : 12\n0 0 : -1\n1 0 : 3*t")

    def test_text_round_trip(self, cubic_lift):
        assert KPoly.parse(cubic_lift.dump()) == cubic_lift

    def test_rendering(self):
        assert str(K("4 : -2\n1 : t - 1\n0 : 3")) == "-2*x^4 + (-1 + t)*x + 3"


class TestSquarefree:
    def test_duplicates(self):
        f = KPoly.var(0, 1) - 2
        assert squarefree_from_factors([f, f]) == f

    def test_proportional_factors(self):
        f = KPoly.var(0, 1) - 2
        g = KPoly.var(0, 1) * 2 - 4
        assert proportional(f, g)
        assert squarefree_from_factors([f, g]) == f

    def test_unit_multiples(self):
        f = KPoly.var(0, 1) - Puiseux.parse("t")
        g = f * Puiseux.parse("-3*t^(1/2)")
        assert proportional(f, g)
        assert normalize_factor(g) == normalize_factor(f)

    def test_distinct_classes_multiply(self):
        factors = [KPoly.var(0, 1) - c for c in (1, 2, 3)]
        assert squarefree_from_factors(factors) == factors[0] * factors[1] * factors[2]
