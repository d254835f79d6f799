"""Symbolic models of a matched pair of Lie groups in exponential coordinates.

A GroupModel carries the combined group law of G = G1 bowtie G2 plus the two
action laws.  Two-point expressions use the variable suffixes ".1" / ".2" for
the first and second argument.  All shipped models have trivial H2, so the
nucleus L2 is all of G2 and exponential coordinates of G2 are global.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .forms import PolyForm
from .scalars import Scalar
from .simplex import AffineSimplex


def _suffix(expr_vars, point, tag):
    return {f"{c}.{tag}": point[c] for c in expr_vars}


class GroupModel:
    def __init__(self, g1_coords, g2_coords, mul, inv, act_left, act_right, h2_coords=()):
        self.g1_coords = tuple(g1_coords)
        self.g2_coords = tuple(g2_coords)
        if tuple(h2_coords):
            raise ValueError("nontrivial H2 blocks are not supported")
        self.coords = self.g1_coords + self.g2_coords
        self.mul = dict(mul)  # coord -> Scalar in {c.1, c.2}
        self.inv = dict(inv)  # coord -> Scalar in {c}
        self.act_left = dict(act_left)  # g1-coord -> Scalar in {g2.1, g1.2}
        self.act_right = dict(act_right)  # g2-coord -> Scalar in {g2.1, g1.2}

    # -- points ----------------------------------------------------------
    def identity(self):
        return {c: Scalar.zero() for c in self.coords}

    def symbolic_point(self, tag, coords=None):
        """Point with fresh symbols named  <coord><tag>  (e.g. x0, y0, z0)."""
        coords = coords if coords is not None else self.coords
        p = self.identity()
        for c in coords:
            p[c] = Scalar.var(f"{c}{tag}")
        return p

    def g1_point(self, tag=""):
        p = self.identity()
        for c in self.g1_coords:
            p[c] = Scalar.var(f"{c}{tag}") if tag else Scalar.var(c)
        return p

    def g2_point(self, tag=""):
        p = self.identity()
        for c in self.g2_coords:
            p[c] = Scalar.var(f"{c}{tag}") if tag else Scalar.var(c)
        return p

    def point_from_rationals(self, values):
        p = self.identity()
        for c, v in values.items():
            p[c] = Scalar.rational(v)
        return p

    def mul_points(self, p, q):
        sub = _suffix(self.coords, p, 1) | _suffix(self.coords, q, 2)
        return {c: self.mul[c].substitute(sub) for c in self.coords}

    def inv_point(self, p):
        sub = {c: p[c] for c in self.coords}
        return {c: self.inv[c].substitute(sub) for c in self.coords}

    def act_left_point(self, psi, phi):
        """psi |> phi: g2-point acting on g1-point, result a g1-point."""
        sub = {f"{c}.1": psi[c] for c in self.g2_coords} | {f"{c}.2": phi[c] for c in self.g1_coords}
        out = self.identity()
        for c in self.g1_coords:
            out[c] = self.act_left[c].substitute(sub)
        return out

    def act_right_point(self, psi, phi):
        """psi <| phi: result a g2-point."""
        sub = {f"{c}.1": psi[c] for c in self.g2_coords} | {f"{c}.2": phi[c] for c in self.g1_coords}
        out = self.identity()
        for c in self.g2_coords:
            out[c] = self.act_right[c].substitute(sub)
        return out

    def is_identity(self, p):
        return all(p[c].is_zero() for c in self.coords)

    # -- axiom checks ------------------------------------------------------
    def axiom_report(self):
        """Symbolic verification of the group and matched-pair axioms.

        Returns a list of (check-name, ok, detail)."""
        out = []
        e = self.identity()
        g = self.symbolic_point("")
        a = self.symbolic_point("1_")
        b = self.symbolic_point("2_")
        c3 = self.symbolic_point("3_")

        def eq_points(p, q):
            return all((p[c] - q[c]).is_zero() for c in self.coords)

        out.append(("group.identity_left", eq_points(self.mul_points(e, g), g), ""))
        out.append(("group.identity_right", eq_points(self.mul_points(g, e), g), ""))
        out.append(("group.inverse", eq_points(self.mul_points(g, self.inv_point(g)), e), ""))
        out.append(("group.inverse_left", eq_points(self.mul_points(self.inv_point(g), g), e), ""))
        lhs = self.mul_points(self.mul_points(a, b), c3)
        rhs = self.mul_points(a, self.mul_points(b, c3))
        out.append(("group.associativity", eq_points(lhs, rhs), ""))

        # factor subgroups close and the factorization g = phi * psi holds
        phi = self.g1_point()
        psi = self.g2_point()
        prod = self.mul_points(phi, psi)
        want = {c: phi[c] for c in self.g1_coords} | {c: psi[c] for c in self.g2_coords}
        out.append(("group.factorization", eq_points(prod, self.identity() | want), ""))
        p1a, p1b = self.g1_point("1_"), self.g1_point("2_")
        m11 = self.mul_points(p1a, p1b)
        out.append(("group.g1_closed", all(m11[c].is_zero() for c in self.g2_coords), ""))
        p2a, p2b = self.g2_point("1_"), self.g2_point("2_")
        m22 = self.mul_points(p2a, p2b)
        out.append(("group.g2_closed", all(m22[c].is_zero() for c in self.g1_coords), ""))

        # psi phi = (psi |> phi)(psi <| phi)
        mixed = self.mul_points(psi, phi)
        left_part = self.act_left_point(psi, phi)
        right_part = self.act_right_point(psi, phi)
        acted = self.mul_points(
            self.identity() | {c: left_part[c] for c in self.g1_coords},
            self.identity() | {c: right_part[c] for c in self.g2_coords},
        )
        out.append(("group.action_factorization", eq_points(mixed, acted), ""))

        # matched-pair conditions for the group actions
        out.append(("group.act_left_unit", eq_points(self.act_left_point(psi, self.identity()), e), ""))
        out.append(("group.act_right_unit", eq_points(self.act_right_point(self.identity(), phi), e), ""))
        phi1, phi2 = self.g1_point("1_"), self.g1_point("2_")
        lhs1 = self.act_left_point(psi, self._g1_mul(phi1, phi2))
        rhs1 = self._g1_mul(
            self.act_left_point(psi, phi1),
            self.act_left_point(self.act_right_point(psi, phi1), phi2),
        )
        out.append(("group.matched_left", eq_points(lhs1, rhs1), ""))
        psi1, psi2 = self.g2_point("1_"), self.g2_point("2_")
        lhs2 = self.act_right_point(self._g2_mul(psi1, psi2), phi)
        rhs2 = self._g2_mul(
            self.act_right_point(psi1, self.act_left_point(psi2, phi)),
            self.act_right_point(psi2, phi),
        )
        out.append(("group.matched_right", eq_points(lhs2, rhs2), ""))
        out.append(("group.affine_right_action", self.right_action_is_affine(), ""))
        return out

    def _g1_mul(self, p, q):
        m = self.mul_points(p, q)
        return self.identity() | {c: m[c] for c in self.g1_coords}

    def _g2_mul(self, p, q):
        m = self.mul_points(p, q)
        return self.identity() | {c: m[c] for c in self.g2_coords}

    def right_action_is_affine(self):
        """The right G1-action must be affine in the exponential coordinates of L2."""
        for c in self.g2_coords:
            expr = self.act_right[c]
            for key in expr.terms:
                mono = key[0]
                deg = sum(e for v, e in mono if v.endswith(".1"))
                if deg > 1:
                    return False
        return True

    # -- gamma machinery ---------------------------------------------------
    def gamma(self, psi=None):
        """gamma_i^j(psi) = <psi^{-1} |> Z_i, omega_j> as a matrix of Scalars
        in the coordinates of the symbolic g2-point psi."""
        psi = psi if psi is not None else self.g2_point()
        psi_inv = self.inv_point(self.identity() | {c: psi[c] for c in self.g2_coords})
        n = len(self.g1_coords)
        mat = [[Scalar.zero()] * n for _ in range(n)]
        for i, ci in enumerate(self.g1_coords):
            curve = self.identity()
            curve[ci] = Scalar.var("t?")
            image = self.act_left_point(psi_inv, curve)
            for j, cj in enumerate(self.g1_coords):
                mat[i][j] = image[cj].derivative("t?").substitute({"t?": Scalar.zero()})
        return mat

    def big_gamma(self, psi=None, phi=None):
        """Gamma_i^j(psi)(phi0) = gamma_i^j(psi <| phi0)."""
        psi = psi if psi is not None else self.g2_point()
        phi = phi if phi is not None else self.g1_point()
        acted = self.act_right_point(psi, phi)
        base = self.gamma()
        sub = {f"{c}": acted[c] for c in self.g2_coords}
        return [[entry.substitute(sub) for entry in row] for row in base]

    def sigma(self, psi=None):
        """sigma = det(gamma), a group-like representative function on G2."""
        return det(self.gamma(psi))

    def gamma_at(self, mat_or_point):
        """Evaluate the symbolic gamma matrix at a concrete/symbolic g2-point."""
        base = self.gamma()
        sub = {c: mat_or_point[c] for c in self.g2_coords}
        return [[entry.substitute(sub) for entry in row] for row in base]

    # -- invariant frames ----------------------------------------------------
    def _jacobian_at_identity(self, left):
        """d/dh of g*h (left=True) or h*g (left=False) at h = e; rows/cols in
        the combined coordinate order, entries are Scalars in the g-coords."""
        n = len(self.coords)
        gsub = {f"{c}.{1 if left else 2}": Scalar.var(c) for c in self.coords}
        mat = [[Scalar.zero()] * n for _ in range(n)]
        for i, ci in enumerate(self.coords):
            expr = self.mul[ci].substitute(gsub)
            for j, cj in enumerate(self.coords):
                hv = f"{cj}.{2 if left else 1}"
                d = expr.derivative(hv)
                zeros = {f"{c}.{2 if left else 1}": Scalar.zero() for c in self.coords}
                mat[i][j] = d.substitute(zeros)
        return mat

    def left_invariant_frame(self):
        """Left-invariant coframe on G dual to the coordinate basis at e."""
        jinv = invert_matrix(self._jacobian_at_identity(left=True))
        return self._frame_from(jinv)

    def right_invariant_frame(self):
        jinv = invert_matrix(self._jacobian_at_identity(left=False))
        return self._frame_from(jinv)

    def _frame_from(self, jinv):
        frame = []
        for i in range(len(self.coords)):
            items = []
            for j, cj in enumerate(self.coords):
                if not jinv[i][j].is_zero():
                    items.append(((cj,), jinv[i][j]))
            frame.append(PolyForm.from_terms(self.coords, items))
        return frame

    def factor_model(self, which):
        """GroupModel of the G1 or G2 factor alone (for factor frames)."""
        if which == 1:
            keep, other = self.g1_coords, self.g2_coords
        else:
            keep, other = self.g2_coords, self.g1_coords
        zero2 = {f"{c}.{k}": Scalar.zero() for c in other for k in (1, 2)}
        zero1 = {c: Scalar.zero() for c in other}
        mul = {c: self.mul[c].substitute(zero2) for c in keep}
        inv = {c: self.inv[c].substitute(zero1) for c in keep}
        if which == 1:
            return GroupModel(keep, (), mul, inv, {}, {})
        return GroupModel((), keep, mul, inv, {}, {})

    def maurer_cartan_frame(self):
        """Per-factor left-invariant frames (G1 frame then L2 frame), expressed
        on the combined chart; these are the theta_i of the basis at e."""
        frame = []
        for which in (1, 2):
            fm = self.factor_model(which)
            if not fm.coords:
                continue
            for f in fm.left_invariant_frame():
                frame.append(PolyForm(self.coords, dict(f.terms)))
        return frame

    def check_left_invariance(self, form, factor=None):
        """Pull back under left translation by a fully symbolic element."""
        model = self if factor is None else self.factor_model(factor)
        order = model.coords
        form = PolyForm(order, dict(form.terms))
        asub = {f"{c}.1": Scalar.var(f"{c}&") for c in order}
        sub = {}
        for c in order:
            sub[c] = model.mul[c].substitute(asub | {f"{d}.2": Scalar.var(d) for d in order})
        pulled = form.pullback(sub, order=order)
        return pulled == form

    # -- nu map and simplices -----------------------------------------------
    def nu_point(self, phi=None, psi=None):
        """nu(phi, psi) = phi * (psi <| phi)^(-1) as a combined-coordinate point."""
        phi = phi if phi is not None else self.g1_point()
        psi = psi if psi is not None else self.g2_point()
        acted = self.act_right_point(psi, phi)
        g2inv = self.inv_point(self.identity() | {c: acted[c] for c in self.g2_coords})
        return self.mul_points(
            self.identity() | {c: phi[c] for c in self.g1_coords},
            g2inv,
        )

    def nu_substitution(self):
        """Coordinate substitution implementing the orientation-corrected
        pullback (inversion on the L2 slot folded in): the map
        (phi, psi) -> phi * (psi^{-1} <| phi)^{-1}."""
        phi = self.g1_point()
        psi = self.g2_point()
        psi_inv = self.inv_point(self.identity() | {c: psi[c] for c in self.g2_coords})
        nu = self.nu_point(phi, psi_inv)
        return {c: nu[c] for c in self.coords}

    def build_simplex(self, points):
        """Affine simplex in the exponential coordinates of L2 = G2."""
        verts = []
        for p in points:
            if any(c in p and not p[c].is_zero() for c in self.g1_coords):
                raise ValueError("simplex vertices must be G2 points")
            verts.append({c: p[c] for c in self.g2_coords})
        return AffineSimplex(self.g2_coords, verts)


# -- exact linear algebra over Scalar ----------------------------------------

def det(mat):
    n = len(mat)
    if n == 0:
        return Scalar.one()
    if n == 1:
        return mat[0][0]
    total = Scalar.zero()
    for j in range(n):
        if mat[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = mat[0][j] * det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def invert_matrix(mat):
    """Adjugate inverse; the determinant must canonicalize to a nonzero rational
    (true for unipotent/rotation Jacobians of the supported models)."""
    n = len(mat)
    d = det(mat)
    if not d.is_rational() or d.is_zero():
        raise ValueError(f"frame solve failed: determinant {d.text()} is not a nonzero constant")
    dval = d.rational_value()
    out = [[Scalar.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [mat[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            sign = -1 if (i + j) % 2 else 1
            out[i][j] = det(minor) * Fraction(sign, 1) / dval
    return out


def matrix_mul(a, b):
    n, m, k = len(a), len(b[0]) if b else 0, len(b)
    out = [[Scalar.zero()] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            s = Scalar.zero()
            for l in range(k):
                s = s + a[i][l] * b[l][j]
            out[i][j] = s
    return out


def matrix_substitute(mat, sub):
    return [[e.substitute(sub) for e in row] for row in mat]


def matrix_equal(a, b):
    return all((x - y).is_zero() for ra, rb in zip(a, b) for x, y in zip(ra, rb))


# -- BCH group law from structure constants -----------------------------------

def bch_group_law(g, coords=None):
    """Group law in exponential coordinates for a nilpotent Lie algebra of
    class <= 3:  log(e^A e^B) = A + B + [A,B]/2 + ([A,[A,B]] + [B,[B,A]])/12."""
    coords = tuple(coords) if coords else tuple(g.names)
    # nilpotency class <= 3: gamma_4 = [g, [g, [g, g]]] must vanish
    for i, j, k, l in itertools.product(range(g.dim), repeat=4):
        inner = g.bracket({k: Fraction(1)}, {l: Fraction(1)})
        inner = g.bracket({j: Fraction(1)}, inner)
        if g.bracket({i: Fraction(1)}, inner):
            raise ValueError("structure constants exceed nilpotency class 3")

    def vec(tag):
        return {i: Scalar.var(f"{coords[i]}.{tag}") for i in range(g.dim)}

    def bracket(a, b):
        out = {i: Scalar.zero() for i in range(g.dim)}
        for i, ca in a.items():
            for j, cb in b.items():
                if isinstance(ca, Scalar) and ca.is_zero():
                    continue
                for k, c in g.bracket_basis(i, j).items():
                    out[k] = out[k] + ca * cb * c
        return out

    A, B = vec(1), vec(2)
    AB = bracket(A, B)
    AAB = bracket(A, AB)
    BBA = bracket(B, {k: -v for k, v in AB.items()})
    law = {}
    for i in range(g.dim):
        expr = A[i] + B[i] + AB.get(i, Scalar.zero()) * Fraction(1, 2)
        expr = expr + (AAB.get(i, Scalar.zero()) + BBA.get(i, Scalar.zero())) * Fraction(1, 12)
        law[coords[i]] = expr
    inv = {coords[i]: -Scalar.var(coords[i]) for i in range(g.dim)}
    return law, inv
