import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bicrossed.scalars import Scalar

VARS = ["x", "y", "z", "theta", "u"]


def random_scalar(rng, nterms=3, trig=True, maxdeg=3):
    s = Scalar.zero()
    for _ in range(rng.randrange(nterms + 1)):
        coeff = Fraction(rng.randrange(-6, 7), rng.randrange(1, 5))
        term = Scalar.rational(coeff)
        for _ in range(rng.randrange(maxdeg + 1)):
            term = term * Scalar.var(rng.choice(VARS))
        if trig and rng.random() < 0.5:
            v = rng.choice(["theta", "u"])
            term = term * (Scalar.sin(v) if rng.random() < 0.5 else Scalar.cos(v))
            if rng.random() < 0.3:
                term = term * Scalar.sin(v)
        s = s + term
    return s


def test_pythagorean_rewrite():
    s = Scalar.sin("theta") ** 2 + Scalar.cos("theta") ** 2
    assert s == Scalar.one()


def test_ring_identity():
    x, y = Scalar.var("x"), Scalar.var("y")
    assert (x + y) * (x - y) == x * x - y * y


def test_rotation_norm_collapses():
    # cos^2 + sin^2 coefficient collapse in a rotation-invariant combination
    c, s = Scalar.cos("theta"), Scalar.sin("theta")
    x, y = Scalar.var("x"), Scalar.var("y")
    rx = c * x + s * y
    ry = c * y - s * x
    assert rx * rx + ry * ry == x * x + y * y


def test_ring_axioms_randomized():
    rng = random.Random(7)
    for _ in range(1000):
        a = random_scalar(rng)
        b = random_scalar(rng)
        c = random_scalar(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(1, 9))
def test_rational_embedding(p, q, d):
    a = Scalar.rational(Fraction(p, d))
    b = Scalar.rational(Fraction(q, d))
    assert a + b == Scalar.rational(Fraction(p + q, d))
    assert a * b == Scalar.rational(Fraction(p * q, d * d))


def test_canonical_idempotence():
    rng = random.Random(11)
    for _ in range(200):
        a = random_scalar(rng)
        # rebuilding from terms reproduces the same canonical dict
        rebuilt = Scalar.zero()
        for key, c in a.terms.items():
            rebuilt = rebuilt + Scalar({key: c})
        assert rebuilt == a


def test_sqrt_radicals():
    assert Scalar.sqrt_int(8) == Scalar.rational(2) * Scalar.sqrt_int(2)
    assert Scalar.sqrt_int(2) * Scalar.sqrt_int(2) == Scalar.rational(2)
    assert Scalar.sqrt_int(6) * Scalar.sqrt_int(10) == Scalar.rational(2) * Scalar.sqrt_int(15)
    assert Scalar.sqrt_pi() * Scalar.sqrt_pi() == Scalar.sqrt_pi(2)


def test_derivative_product_rule():
    rng = random.Random(3)
    for _ in range(100):
        a = random_scalar(rng)
        b = random_scalar(rng)
        lhs = (a * b).derivative("theta")
        rhs = a.derivative("theta") * b + a * b.derivative("theta")
        assert lhs == rhs


def test_derivative_trig():
    s = Scalar.cos("theta") * Scalar.var("x")
    assert s.derivative("theta") == -Scalar.sin("theta") * Scalar.var("x")
    assert s.derivative("x") == Scalar.cos("theta")


def test_substitute_angle_addition():
    # sin(a+b), cos(a+b)
    a, b = Scalar.var("a"), Scalar.var("b")
    s = Scalar.sin("w").substitute({"w": a + b})
    expected = Scalar.sin("a") * Scalar.cos("b") + Scalar.cos("a") * Scalar.sin("b")
    assert s == expected
    c = Scalar.cos("w").substitute({"w": a - b})
    assert c == Scalar.cos("a") * Scalar.cos("b") + Scalar.sin("a") * Scalar.sin("b")


def test_substitute_trig_rejects_nonlinear():
    with pytest.raises(ValueError):
        Scalar.sin("w").substitute({"w": Scalar.var("a") * Scalar.var("a")})


def test_substitution_matches_numeric():
    rng = random.Random(5)
    for _ in range(50):
        a = random_scalar(rng, trig=False)
        sub = {v: random_scalar(rng, nterms=2, trig=False, maxdeg=2) for v in VARS}
        env = {v: rng.uniform(-1, 1) for v in VARS}
        inner = {v: s.eval_float(env) for v, s in sub.items()}
        lhs = a.substitute(sub).eval_float(env)
        rhs = a.eval_float(inner)
        assert abs(lhs - rhs) < 1e-8 * (1 + abs(rhs))


def test_text_deterministic():
    a = Scalar.var("x") * Scalar.var("y") + Scalar.rational(Fraction(1, 2)) * Scalar.cos("theta")
    assert a.text() == "x*y + 1/2*cos(theta)"
    assert a.latex() == r"x y + \frac{1}{2} \cos(\theta)"
