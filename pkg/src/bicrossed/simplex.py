"""Affine simplices and exact integration of polynomial forms over them."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .forms import PolyForm
from .scalars import Scalar


class AffineSimplex:
    """p-simplex given by p+1 vertices; each vertex maps coordinate -> Scalar."""

    __slots__ = ("p", "coords", "vertices")

    def __init__(self, coords, vertices):
        self.coords = tuple(coords)
        self.vertices = [dict(v) for v in vertices]
        self.p = len(self.vertices) - 1
        if self.p < 0:
            raise ValueError("a simplex needs at least one vertex")
        for v in self.vertices:
            missing = set(self.coords) - set(v)
            if missing:
                raise ValueError(f"vertex missing coordinates {sorted(missing)}")

    def barycentric_substitution(self):
        """coordinate -> Scalar in t1..tp (t0 eliminated as 1 - sum ti)."""
        sub = {}
        v0 = self.vertices[0]
        for c in self.coords:
            expr = v0[c]
            for i, vi in enumerate(self.vertices[1:], start=1):
                diff = vi[c] - v0[c]
                if not diff.is_zero():
                    expr = expr + Scalar.var(f"t{i}") * diff
            sub[c] = expr
        return sub


def dirichlet_moment(exponents):
    """Exact value of the integral of t1^a1...tp^ap over the standard p-simplex."""
    p = len(exponents)
    num = 1
    for a in exponents:
        num *= factorial(a)
    return Fraction(num, factorial(p + sum(a for a in exponents)))


def integrate_monomials_over_std_simplex(poly, p):
    """Integrate a Scalar polynomial in t1..tp over the standard p-simplex."""
    tvars = tuple(f"t{i}" for i in range(1, p + 1))
    total = Scalar.zero()
    for (mono, trig, pi_pow, rad), c in poly.terms.items():
        if any(v in tvars for v, _, _ in trig):
            raise ValueError("trig in barycentric variables is not integrable exactly")
        texp = [0] * p
        rest = []
        for v, e in mono:
            if v in tvars:
                texp[tvars.index(v)] = e
            else:
                rest.append((v, e))
        weight = dirichlet_moment(texp)
        total = total + Scalar({(tuple(rest), trig, pi_pow, rad): c * weight})
    return total


def integrate_over_simplex(form, simplex):
    """Integrate a degree-p PolyForm over an AffineSimplex with p+1 vertices.

    The form is pulled back along the affine parametrization x = sum ti*vi and
    evaluated exactly by the Dirichlet formula.  The result is a Scalar in
    whatever symbols the vertices carry."""
    if form.is_zero():
        return Scalar.zero()
    p = simplex.p
    if p == 0:
        if form.degree() != 0:
            raise ValueError("0-simplex integral expects a 0-form")
        return form.terms.get((), Scalar.zero()).substitute(simplex.vertices[0])
    if form.degree() != p:
        raise ValueError(f"form degree {form.degree()} != simplex dimension {p}")
    sub = simplex.barycentric_substitution()
    # only the simplex parameters are chart coordinates; vertex symbols stay scalar
    torder = tuple(f"t{i}" for i in range(1, p + 1))
    pulled = form.pullback(sub, order=torder)
    top = pulled.terms.get(torder, Scalar.zero())
    return integrate_monomials_over_std_simplex(top, p)
