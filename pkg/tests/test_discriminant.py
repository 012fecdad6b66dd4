import itertools
import random
from fractions import Fraction

import pytest

from realtrop import KPoly, Puiseux, RealTropPoly, SignedTrop, minus, parse_point, plus, tropicalize
from realtrop.discriminant import (
    AffineFunctional,
    classify_plane_weight_classes,
    euler_derivative,
    euler_intersection_check,
    exhaustive_separating_L,
    find_separating_L,
    flag,
    is_singular,
    positivize,
    separates,
    weight_class_eq,
)
from realtrop.patchwork import plane_curve_cells

Q = Fraction


def L(b0, *b):
    return AffineFunctional(b0, b)


def signed(spec):
    """``{exponent: '+' or '-'}`` with every modulus 0."""
    return RealTropPoly({e: plus(0) if s == "+" else minus(0) for e, s in spec.items()})


def all_functionals(n, bound):
    for c in itertools.product(range(-bound, bound + 1), repeat=n + 1):
        if any(c):
            yield AffineFunctional(c[0], c[1:])


class TestAffineFunctional:
    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            L(0, 0, 0)

    def test_evaluation_and_text(self):
        ell = L(3, -1, -1)
        assert ell((1, 1)) == 1
        assert str(ell) == "3 - v - w"
        assert str(-ell) == "-3 + v + w"

    def test_from_rationals(self):
        assert AffineFunctional.from_rationals([Q(1, 2), Q(-3, 4), 0]) == L(2, -3, 0)


class TestEulerDerivative:
    def test_quadric(self):
        f = signed({(0, 0): "+", (1, 0): "+", (0, 1): "+", (2, 0): "+", (1, 1): "+", (0, 2): "+"})
        expected = signed({(1, 0): "+", (0, 1): "-", (2, 0): "+", (0, 2): "-"})
        assert euler_derivative(f, L(0, 1, -1)) == expected

    def test_cubic_partial(self, cubic):
        expected = signed({(0, 3): "+", (2, 1): "-", (1, 2): "-", (0, 2): "+", (1, 1): "+", (0, 1): "-"})
        assert euler_derivative(cubic, L(0, 0, 1)) == expected

    def test_zero_derivative(self):
        f = signed({(1, 0): "+", (1, 1): "-"})
        with pytest.raises(ValueError, match="derivative is zero"):
            euler_derivative(f, L(-1, 1, 0))

    def test_commutes_with_tropicalization(self):
        rng = random.Random(61)
        for _ in range(200):
            F = KPoly({(rng.randint(0, 3), rng.randint(0, 3)):
                       Puiseux.monomial(rng.choice((-3, -1, 1, 2)), rng.randint(-2, 2)) for _ in range(6)}, 2)
            try:
                ell = AffineFunctional(rng.randint(-2, 2), (rng.randint(-2, 2), rng.randint(-2, 2)))
            except ValueError:
                continue
            f = tropicalize(F)
            if all(ell(e) == 0 for e in f.support):
                continue
            assert tropicalize(F.euler(ell.b0, ell.b)) == euler_derivative(f, ell)


class TestLift:
    def test_singular_point_of_lift(self, cubic_lift, cubic):
        point = [Puiseux.parse("1"), Puiseux.parse("t")]
        assert tropicalize(cubic_lift) == cubic
        assert cubic_lift.eval(point).is_zero()
        for b in ((1, 0), (0, 1)):
            assert cubic_lift.euler(0, b).eval(point).is_zero()


class TestPositivize:
    def test_identity_on_positive_points(self, conic):
        p = parse_point("+1 +2")
        assert positivize(conic, p) == (conic, p)

    def test_univariate(self):
        f, p = positivize(signed({(1,): "+"}), parse_point("-0"))
        assert f == signed({(1,): "-"}) and p == parse_point("+0")

    def test_preserves_evaluation_data(self):
        rng = random.Random(62)
        for _ in range(200):
            f = RealTropPoly({(rng.randint(0, 3), rng.randint(0, 3)): SignedTrop(rng.choice((1, -1)), rng.randint(0, 3))
                              for _ in range(6)})
            p = (SignedTrop(rng.choice((1, -1)), Q(rng.randint(-4, 4), 2)),
                 SignedTrop(rng.choice((1, -1)), rng.randint(-2, 2)))
            g, q = positivize(f, p)
            assert all(c.sign > 0 for c in q)
            assert g.evaluate(q) == f.evaluate(p)
            assert g.argmin(q) == f.argmin(p)
            assert g.contains(q) == f.contains(p)

    def test_conic(self, conic):
        g, q = positivize(conic, parse_point("-0 +0"))
        assert g.contains(q) == conic.contains(parse_point("-0 +0"))


class TestFlag:
    def test_cubic_vertical_ray(self, cubic):
        fl = flag(cubic, parse_point("+0 +1"))
        pos, neg = fl.signed_parts[0]
        assert pos == {(0, 0), (2, 0), (3, 0)} and neg == {(1, 0)}

    def test_cubic_diagonal(self, cubic):
        fl = flag(cubic, parse_point("+-1 +-1"))
        assert fl.chain[0] == {(3, 0), (0, 3), (2, 1), (1, 2)}
        assert fl.r == 1

    def test_generic_point(self, conic):
        fl = flag(conic, parse_point("+5 +-3"))
        assert len(fl.chain[0]) == 1

    def test_chain_properties(self, cubic, conic):
        rng = random.Random(63)
        for f in (cubic, conic):
            for _ in range(50):
                p = tuple(SignedTrop(rng.choice((1, -1)), Q(rng.randint(-6, 6), 2)) for _ in range(2))
                fl = flag(f, p)
                assert all(a < b for a, b in zip(fl.chain, fl.chain[1:]))
                assert fl.chain == flag(*positivize(f, p)).chain

    def test_linear_span_variant(self, cubic):
        assert flag(cubic, parse_point("+0 +1"), span="linear").chain[0] == flag(cubic, parse_point("+0 +1")).chain[0]
        with pytest.raises(ValueError):
            flag(cubic, parse_point("+0 +1"), span="projective")

    def test_non_spanning_support(self):
        with pytest.raises(ValueError, match="span"):
            flag(signed({(0, 0): "+", (1, 1): "-"}), parse_point("+0 +0"))


class TestSeparation:
    def test_empty_side(self):
        assert separates(L(1, 0, 0), [], [(0, 0)])

    def test_one_side_in_kernel(self):
        assert separates(L(0, 1, 0), [(0, 0), (0, 2)], [(1, 0)])

    def test_kernel_contains_everything(self):
        assert not separates(L(0, 1, 0), [(0, 0)], [(0, 1)])

    def test_square(self):
        plus_, minus_ = [(0, 0), (1, 1)], [(1, 0), (0, 1)]
        assert not any(separates(ell, plus_, minus_) for ell in all_functionals(2, 3))
        assert find_separating_L([], plus_, minus_, 2) is None

    def test_constant(self):
        assert find_separating_L([], [(0,)], [], 1) == L(1, 0)

    def test_cubic_diagonal_level_zero(self):
        plus_, minus_ = [(3, 0), (0, 3)], [(2, 1), (1, 2)]
        # v + w - 3 vanishes on all four monomials, so no level-zero separator exists
        assert all(L(-3, 1, 1)(e) == 0 for e in plus_ + minus_)
        assert find_separating_L([], plus_, minus_, 2) is None

    def test_returned_functional_separates(self):
        rng = random.Random(64)
        grid = list(itertools.product(range(-1, 2), repeat=2))
        for _ in range(100):
            pts = rng.sample(grid, rng.randint(2, 8))
            k = rng.randint(0, 2)
            fixed, rest = pts[:k], pts[k:]
            cut = rng.randint(0, len(rest))
            ell = find_separating_L(fixed, rest[:cut], rest[cut:], 2) if rest else None
            if ell is not None:
                assert all(ell(e) == 0 for e in fixed)
                assert separates(ell, rest[:cut], rest[cut:])

    def test_agrees_with_exhaustive_scan(self):
        rng = random.Random(65)
        grid = list(itertools.product(range(-1, 2), repeat=2))
        for _ in range(100):
            pts = rng.sample(grid, rng.randint(1, 9))
            k = rng.randint(0, min(2, len(pts) - 1))
            fixed, rest = pts[:k], pts[k:]
            cut = rng.randint(0, len(rest))
            fm = find_separating_L(fixed, rest[:cut], rest[cut:], 2)
            ex = exhaustive_separating_L(fixed, rest[:cut], rest[cut:], 2, bound=3)
            assert (fm is None) == (ex is None)


class TestCubicNodes:
    def test_verdicts(self, cubic):
        assert is_singular(cubic, parse_point("+0 +0")).singular
        for a in (Q(1, 2), 1, 3):
            assert is_singular(cubic, (plus(0), plus(a))).singular
            assert is_singular(cubic, (plus(a), plus(0))).singular
        for a in (Q(-1, 3), -1, -4):
            v = is_singular(cubic, (plus(a), plus(a)))
            assert not v.singular and v.check()

    def test_diagonal_witness(self, cubic):
        v = is_singular(cubic, parse_point("+-1 +-1"))
        assert v.level == 1
        assert v.functional in (L(3, -1, -1), L(-3, 1, 1))
        assert separates(v.functional, *v.flag.signed_parts[1])

    def test_not_on_curve(self, cubic):
        with pytest.raises(ValueError, match="not on the real tropical hypersurface"):
            is_singular(cubic, parse_point("+5 +5"))

    def test_weight_classes(self, cubic):
        assert weight_class_eq(cubic, parse_point("+0 +1"), parse_point("+0 +2"))
        assert not weight_class_eq(cubic, parse_point("+-1 +-1"), parse_point("+0 +0"))
        assert weight_class_eq(cubic, parse_point("+0 +0"), parse_point("+0 +0"))

    def test_euler_intersection(self, cubic):
        assert euler_intersection_check(cubic, parse_point("+0 +0"), all_functionals(2, 2))
        assert not euler_intersection_check(cubic, parse_point("+-1 +-1"), [L(-3, 1, 1)])
        assert euler_intersection_check(cubic, parse_point("+-1 +-1"), [])

    def test_classes_in_positive_orthant(self, cubic):
        classes = classify_plane_weight_classes(cubic, (1, 1))
        assert len(classes) == 4
        verdicts = {}
        for wc in classes:
            x, y = (c.modulus for c in wc.representative)
            if x == y == 0:
                kind = "origin"
            elif x == y:
                assert x < 0
                kind = "diagonal"
            elif x == 0:
                assert y > 0
                kind = "vertical"
            else:
                assert y == 0 and x > 0
                kind = "horizontal"
            verdicts[kind] = wc.verdict.singular
        assert verdicts == {"origin": True, "diagonal": False, "vertical": True, "horizontal": True}


def _curve_samples(f):
    for orth, curve in plane_curve_cells(f).items():
        for v in curve.vertices:
            yield tuple(SignedTrop(s, x) for s, x in zip(orth, v))
        for a, b in curve.segments:
            for k in (Q(1, 4), Q(1, 2), Q(3, 4)):
                yield tuple(SignedTrop(s, x + k * (y - x)) for s, x, y in zip(orth, a, b))
        for a, d in curve.rays:
            for k in (Q(1, 3), 1, Q(5, 2), 7):
                yield tuple(SignedTrop(s, x + k * di) for s, x, di in zip(orth, a, d))


class TestClassInvariants:
    @pytest.mark.parametrize("name", ["cubic", "conic", "line"])
    def test_verdict_constant_on_classes(self, name, request):
        f = request.getfixturevalue(name)
        seen = {}
        for p in _curve_samples(f):
            if not f.contains(p):
                continue
            key = (flag(f, p).chain, tuple(c.sign for c in p))
            verdict = is_singular(f, p)
            assert verdict.check()
            assert seen.setdefault(key, verdict.singular) == verdict.singular

    @pytest.mark.parametrize("name", ["cubic", "conic"])
    def test_singular_points_pass_every_derivative(self, name, request):
        f = request.getfixturevalue(name)
        family = list(all_functionals(2, 2))
        for p in _curve_samples(f):
            if f.contains(p) and is_singular(f, p).singular:
                assert euler_intersection_check(f, p, family)

    def test_hyperplane_classes(self, line):
        for orth in ((1, -1), (-1, 1), (-1, -1)):
            classes = classify_plane_weight_classes(line, orth)
            assert classes and not any(wc.verdict.singular for wc in classes)

    def test_conic_classes(self, conic):
        for orth in ((1, 1), (-1, 1), (-1, -1), (1, -1)):
            for wc in classify_plane_weight_classes(conic, orth):
                assert wc.verdict.check()
                assert wc.verdict.singular == is_singular(conic, wc.representative).singular

    def test_not_bivariate(self, quartic):
        with pytest.raises(ValueError):
            classify_plane_weight_classes(quartic, (1, 1))


ORIGIN = parse_point("+0 +0")


class TestCircuits:
    def test_square_not_separable(self):
        f = signed({(0, 0): "+", (1, 1): "+", (1, 0): "-", (0, 1): "-"})
        v = is_singular(f, ORIGIN)
        assert v.singular and v.flag.r == 0

    def test_square_relabeled(self):
        f = signed({(0, 0): "+", (1, 0): "+", (1, 1): "-", (0, 1): "-"})
        v = is_singular(f, ORIGIN)
        assert not v.singular and v.level == 0 and v.check()

    def test_triangle_with_interior_point(self):
        f = signed({(0, 0): "+", (3, 0): "+", (0, 3): "+", (1, 1): "-"})
        assert is_singular(f, ORIGIN).singular
        g = signed({(0, 0): "-", (1, 1): "-", (3, 0): "+", (0, 3): "+"})
        assert not is_singular(g, ORIGIN).singular

    def _collinear(self, outer):
        terms = {(1, 0): plus(0), (1, 1): minus(0), (1, 2): plus(0)}
        terms.update({e: SignedTrop(1 if s == "+" else -1, 1) for e, s in outer.items()})
        return RealTropPoly(terms)

    def test_opposite_sides(self):
        # the two outer monomials straddle the line of the circuit
        f = self._collinear({(0, 1): "+", (2, 1): "+"})
        v = is_singular(f, ORIGIN)
        assert v.singular and v.flag.r == 1
        flipped = self._collinear({(0, 1): "+", (2, 1): "-"})
        v = is_singular(flipped, ORIGIN)
        assert not v.singular and v.level == 1 and v.check()

    def test_same_side(self):
        f = self._collinear({(2, 0): "+", (2, 1): "-"})
        v = is_singular(f, ORIGIN)
        assert v.singular and v.flag.r == 1
        flipped = self._collinear({(2, 0): "+", (2, 1): "+"})
        v = is_singular(flipped, ORIGIN)
        assert not v.singular and v.level == 1 and v.check()

    def test_circuit_sign_rule(self):
        # on the square, singularity is exactly non-separability of the sign classes
        square = [(0, 0), (1, 0), (0, 1), (1, 1)]
        for signs in itertools.product("+-", repeat=4):
            if len(set(signs)) < 2:
                continue
            f = signed(dict(zip(square, signs)))
            pos = [e for e, s in zip(square, signs) if s == "+"]
            neg = [e for e, s in zip(square, signs) if s == "-"]
            separable = any(separates(ell, pos, neg) for ell in all_functionals(2, 3))
            assert is_singular(f, ORIGIN).singular == (not separable)
