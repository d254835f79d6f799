import random
from fractions import Fraction

from bicrossed.forms import PolyForm
from bicrossed.scalars import Scalar

ORDER = ("theta", "x", "y", "z")


def dxi(name, coeff=None):
    return PolyForm.d_coord(ORDER, name, coeff)


def random_form(rng, degree, nterms=3):
    out = PolyForm.zero(ORDER)
    for _ in range(nterms):
        idx = rng.sample(ORDER, degree)
        coeff = Scalar.rational(Fraction(rng.randrange(-4, 5), rng.randrange(1, 4)))
        for _ in range(rng.randrange(3)):
            coeff = coeff * Scalar.var(rng.choice(ORDER))
        if rng.random() < 0.4:
            coeff = coeff * (Scalar.sin("theta") if rng.random() < 0.5 else Scalar.cos("theta"))
        out = out + PolyForm.from_terms(ORDER, [(tuple(idx), coeff)])
    return out


def test_wedge_antisymmetry():
    dx, dy = dxi("x"), dxi("y")
    assert dx.wedge(dy) == PolyForm.from_terms(ORDER, [(("x", "y"), Scalar.one())])
    assert dy.wedge(dx) == PolyForm.from_terms(ORDER, [(("x", "y"), -Scalar.one())])
    assert dx.wedge(dx).is_zero()


def test_wedge_graded_commutative():
    rng = random.Random(1)
    for _ in range(60):
        p = rng.randrange(0, 3)
        q = rng.randrange(0, 3)
        a = random_form(rng, p)
        b = random_form(rng, q)
        sign = -1 if (p * q) % 2 else 1
        assert a.wedge(b) == b.wedge(a).scale(sign)


def test_wedge_example_sorting():
    # (y/2 dx - x/2 dy + dz) ^ dx ^ dy = dx^dy^dz
    half = Fraction(1, 2)
    theta4 = (
        dxi("x", Scalar.var("y") * half)
        + dxi("y", Scalar.var("x") * (-half))
        + dxi("z")
    )
    got = theta4.wedge(dxi("x")).wedge(dxi("y"))
    want = PolyForm.from_terms(ORDER, [(("x", "y", "z"), Scalar.one())])
    assert got == want


def test_d_squared_zero_randomized():
    rng = random.Random(2)
    for _ in range(80):
        a = random_form(rng, rng.randrange(0, 4))
        assert a.exterior_derivative().exterior_derivative().is_zero()


def test_d_examples():
    # d(x dy) = dx^dy
    a = dxi("y", Scalar.var("x"))
    assert a.exterior_derivative() == PolyForm.from_terms(ORDER, [(("x", "y"), Scalar.one())])
    # d(z + xy/2) = dz + y/2 dx + x/2 dy
    s = Scalar.var("z") + Scalar.var("x") * Scalar.var("y") * Fraction(1, 2)
    got = PolyForm.scalar(ORDER, s).exterior_derivative()
    want = (
        dxi("z")
        + dxi("x", Scalar.var("y") * Fraction(1, 2))
        + dxi("y", Scalar.var("x") * Fraction(1, 2))
    )
    assert got == want
    # d(cos(theta) dx) = -sin(theta) dtheta^dx
    a = dxi("x", Scalar.cos("theta"))
    want = PolyForm.from_terms(ORDER, [(("theta", "x"), -Scalar.sin("theta"))])
    assert a.exterior_derivative() == want


def test_pullback_identity():
    rng = random.Random(3)
    ident = {v: Scalar.var(v) for v in ORDER}
    for _ in range(30):
        a = random_form(rng, rng.randrange(0, 3))
        assert a.pullback(ident, order=ORDER) == a


def test_pullback_functorial():
    rng = random.Random(4)
    for _ in range(30):
        a = random_form(rng, rng.randrange(0, 3), nterms=2)
        s1 = {
            "theta": Scalar.var("theta"),
            "x": Scalar.var("x") + Scalar.var("y"),
            "y": Scalar.var("y") * Scalar.var("z"),
            "z": Scalar.var("z") + Scalar.rational(2),
        }
        s2 = {
            "theta": Scalar.var("theta"),
            "x": Scalar.var("x") * Scalar.var("x"),
            "y": Scalar.var("y") - Scalar.var("x"),
            "z": Scalar.var("z"),
        }
        comp = {v: s1[v].substitute(s2) for v in ORDER}
        lhs = a.pullback(s1, order=ORDER).pullback(s2, order=ORDER)
        rhs = a.pullback(comp, order=ORDER)
        assert lhs == rhs


def test_pullback_rotation_example():
    # pullback of dx under x -> -cos(theta) x - sin(theta) y
    sub = {
        "theta": Scalar.var("theta"),
        "x": -Scalar.cos("theta") * Scalar.var("x") - Scalar.sin("theta") * Scalar.var("y"),
        "y": Scalar.var("y"),
        "z": Scalar.var("z"),
    }
    got = dxi("x").pullback(sub, order=ORDER)
    want = (
        dxi("theta", Scalar.sin("theta") * Scalar.var("x") - Scalar.cos("theta") * Scalar.var("y"))
        + dxi("x", -Scalar.cos("theta"))
        + dxi("y", -Scalar.sin("theta"))
    )
    assert got == want


def test_contract():
    vol = PolyForm.from_terms(ORDER, [(("x", "y", "z"), Scalar.one())])
    assert vol.contract("y") == PolyForm.from_terms(ORDER, [(("x", "z"), -Scalar.one())])
    v = {"x": Scalar.var("y"), "y": -Scalar.var("x"), "theta": Scalar.one()}
    got = vol.contract_vector(v)
    want = PolyForm.from_terms(
        ORDER,
        [(("y", "z"), Scalar.var("y")), (("x", "z"), Scalar.var("x"))],
    )
    assert got == want
