import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from bicrossed.forms import PolyForm
from bicrossed.scalars import Scalar
from bicrossed.simplex import AffineSimplex, dirichlet_moment, integrate_over_simplex

COORDS = ("x", "y", "z")


def test_dirichlet_examples():
    assert dirichlet_moment([1, 1]) == Fraction(1, 24)
    assert dirichlet_moment([0, 0]) == Fraction(1, 2)
    assert dirichlet_moment([0, 0, 0]) == Fraction(1, 6)
    assert dirichlet_moment([2]) == Fraction(1, 3)


def test_t1_t2_over_triangle():
    order = ("t1", "t2")
    form = PolyForm.from_terms(order, [(("t1", "t2"), Scalar.var("t1") * Scalar.var("t2"))])
    simplex = AffineSimplex(order, [
        {"t1": Scalar.rational(0), "t2": Scalar.rational(0)},
        {"t1": Scalar.rational(1), "t2": Scalar.rational(0)},
        {"t1": Scalar.rational(0), "t2": Scalar.rational(1)},
    ])
    assert integrate_over_simplex(form, simplex) == Scalar.rational(Fraction(1, 24))


def test_zero_simplex_evaluates():
    form = PolyForm.scalar(COORDS, Scalar.var("x") + Scalar.rational(3))
    simplex = AffineSimplex(COORDS, [{"x": Scalar.rational(2), "y": Scalar.rational(0), "z": Scalar.rational(0)}])
    assert integrate_over_simplex(form, simplex) == Scalar.rational(5)


def test_degree_mismatch_errors():
    form = PolyForm.from_terms(COORDS, [(("x", "y"), Scalar.one())])
    simplex = AffineSimplex(COORDS, [
        {c: Scalar.rational(i == 1) for i, c in enumerate(COORDS)},
        {c: Scalar.rational(0) for c in COORDS},
    ])
    with pytest.raises(ValueError):
        integrate_over_simplex(form, simplex)


def test_volume_form_over_tetrahedron():
    vol = PolyForm.from_terms(COORDS, [(COORDS, Scalar.one())])
    verts = [
        {"x": Scalar.rational(0), "y": Scalar.rational(0), "z": Scalar.rational(0)},
        {"x": Scalar.rational(1), "y": Scalar.rational(0), "z": Scalar.rational(0)},
        {"x": Scalar.rational(0), "y": Scalar.rational(1), "z": Scalar.rational(0)},
        {"x": Scalar.rational(0), "y": Scalar.rational(0), "z": Scalar.rational(1)},
    ]
    simplex = AffineSimplex(COORDS, verts)
    assert integrate_over_simplex(vol, simplex) == Scalar.rational(Fraction(1, 6))


def test_symbolic_tetrahedron_is_determinant_over_six():
    verts = [
        {c: Scalar.var(f"{c}{i}") for c in COORDS} for i in range(4)
    ]
    simplex = AffineSimplex(COORDS, verts)
    vol = PolyForm.from_terms(COORDS, [(COORDS, Scalar.one())])
    got = integrate_over_simplex(vol, simplex)
    det = Scalar.zero()
    for sigma in itertools.permutations((1, 2, 3)):
        sign = _perm_sign(sigma)
        term = (
            (Scalar.var(f"x{sigma[0]}") - Scalar.var("x0"))
            * (Scalar.var(f"y{sigma[1]}") - Scalar.var("y0"))
            * (Scalar.var(f"z{sigma[2]}") - Scalar.var("z0"))
        )
        det = det + term * sign
    assert got == det * Fraction(1, 6)


def _perm_sign(sigma):
    sign = 1
    s = list(sigma)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


def _gauss_legendre_simplex(fn, dim, n=12):
    """Iterated Gauss-Legendre over the standard simplex in dim t-variables."""
    xs, ws = np.polynomial.legendre.leggauss(n)
    xs = (xs + 1) / 2
    ws = ws / 2

    def rec(prefix, remaining):
        if remaining == 0:
            return fn(prefix)
        room = 1.0 - sum(prefix)
        total = 0.0
        for xi, wi in zip(xs, ws):
            total += wi * room * rec(prefix + [room * xi], remaining - 1)
        return total

    return rec([], dim)


def test_against_quadrature_oracle():
    rng = random.Random(9)
    for case in range(50):
        dim = rng.randrange(1, 4)
        coords = COORDS[:3]
        verts = []
        for _ in range(dim + 1):
            verts.append({c: Scalar.rational(Fraction(rng.randrange(-6, 7), rng.randrange(1, 4))) for c in coords})
        simplex = AffineSimplex(coords, verts)
        form = PolyForm.zero(coords)
        for _ in range(rng.randrange(1, 4)):
            idx = tuple(rng.sample(coords, dim))
            coeff = Scalar.rational(Fraction(rng.randrange(-3, 4), rng.randrange(1, 3)))
            for _ in range(rng.randrange(3)):
                coeff = coeff * Scalar.var(rng.choice(coords))
            form = form + PolyForm.from_terms(coords, [(idx, coeff)])
        exact = integrate_over_simplex(form, simplex)
        sub = simplex.barycentric_substitution()
        pulled = form.pullback(sub, order=tuple(f"t{i}" for i in range(1, dim + 1)))
        key = tuple(f"t{i}" for i in range(1, dim + 1))
        integrand = pulled.terms.get(key, Scalar.zero())

        def fn(ts, integrand=integrand):
            env = {f"t{i+1}": t for i, t in enumerate(ts)}
            return integrand.eval_float(env)

        approx = _gauss_legendre_simplex(fn, dim)
        assert abs(float(Fraction(exact.rational_value())) - approx) < 1e-8
