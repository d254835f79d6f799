"""Lie algebras by structure constants, matched pairs, bicrossed products,
and Chevalley-Eilenberg cohomology with exact rational linear algebra."""

from __future__ import annotations

import itertools
from fractions import Fraction


class LieAlgebra:
    """Finite-dimensional Lie algebra with a named basis.

    brackets: {(i, j): {k: coeff}} for i < j, meaning [e_i, e_j] = sum coeff_k e_k.
    """

    def __init__(self, names, brackets=None, check=True):
        self.names = list(names)
        self.dim = len(self.names)
        table = {}
        for (i, j), comps in (brackets or {}).items():
            if i == j:
                raise ValueError("bracket of a basis vector with itself must vanish")
            comps = {k: Fraction(c) for k, c in comps.items() if c}
            if not comps:
                continue
            if i > j:
                i, j = j, i
                comps = {k: -c for k, c in comps.items()}
            table[(i, j)] = comps
        self.table = table
        if check:
            bad = self.jacobi_violations()
            if bad:
                i, j, k = bad[0]
                raise ValueError(f"Jacobi identity fails on basis triple ({i},{j},{k})")

    def bracket_basis(self, i, j):
        """[e_i, e_j] as {k: Fraction}."""
        if i == j:
            return {}
        if i < j:
            return dict(self.table.get((i, j), {}))
        return {k: -c for k, c in self.table.get((j, i), {}).items()}

    def bracket(self, a, b):
        """Bracket of coefficient vectors {i: Fraction}."""
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, Fraction(0)) + ca * cb * c
        return {k: c for k, c in out.items() if c}

    def jacobi_violations(self):
        bad = []
        for i, j, k in itertools.combinations(range(self.dim), 3):
            acc = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket_basis(a, b)
                for m, cm in inner.items():
                    for l, cl in self.bracket_basis(m, c).items():
                        acc[l] = acc.get(l, Fraction(0)) + cm * cl
            if any(v for v in acc.values()):
                bad.append((i, j, k))
        return bad

    def ad_matrix(self, i):
        """Matrix of ad_{e_i} in the basis (columns = images of e_j)."""
        mat = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, c in self.bracket_basis(i, j).items():
                mat[k][j] = c
        return mat

    def delta_character(self):
        """delta(Z) = Tr(ad_Z) as a rational row vector."""
        out = []
        for i in range(self.dim):
            mat = self.ad_matrix(i)
            out.append(sum(mat[j][j] for j in range(self.dim)))
        return out

    def __repr__(self):
        return f"LieAlgebra({self.names})"


class MatchedPairLie:
    """Matched pair (g1, g2): left action |> of g2 on g1, right action <| of g1 on g2.

    left_action[(j, i)] = coefficients in g1 of Y_j |> X_i  (Y in g2, X in g1)
    right_action[(j, i)] = coefficients in g2 of Y_j <| X_i
    """

    def __init__(self, g1, g2, left_action=None, right_action=None):
        self.g1 = g1
        self.g2 = g2
        self.left = {k: {i: Fraction(c) for i, c in v.items() if c} for k, v in (left_action or {}).items()}
        self.right = {k: {i: Fraction(c) for i, c in v.items() if c} for k, v in (right_action or {}).items()}

    def act_left(self, y, x):
        """(y |> x) for coefficient vectors y on g2, x on g1; result on g1."""
        out = {}
        for j, cy in y.items():
            for i, cx in x.items():
                for k, c in self.left.get((j, i), {}).items():
                    out[k] = out.get(k, Fraction(0)) + cy * cx * c
        return {k: c for k, c in out.items() if c}

    def act_right(self, y, x):
        out = {}
        for j, cy in y.items():
            for i, cx in x.items():
                for k, c in self.right.get((j, i), {}).items():
                    out[k] = out.get(k, Fraction(0)) + cy * cx * c
        return {k: c for k, c in out.items() if c}

    def validate(self):
        """Check the four matched-pair identities on all basis triples.

        Returns a list of violation records (condition, indices)."""
        g1, g2 = self.g1, self.g2
        bad = []

        def vsub(a, b):
            out = dict(a)
            for k, c in b.items():
                out[k] = out.get(k, Fraction(0)) - c
            return {k: c for k, c in out.items() if c}

        e1 = lambda i: {i: Fraction(1)}
        # 1: [Y1,Y2] |> X = Y1 |> (Y2 |> X) - Y2 |> (Y1 |> X)
        for a, b in itertools.combinations(range(g2.dim), 2):
            for i in range(g1.dim):
                lhs = self.act_left(g2.bracket_basis(a, b), e1(i))
                rhs = vsub(
                    self.act_left({a: Fraction(1)}, self.act_left({b: Fraction(1)}, e1(i))),
                    self.act_left({b: Fraction(1)}, self.act_left({a: Fraction(1)}, e1(i))),
                )
                if vsub(lhs, rhs):
                    bad.append(("condition 1 (left action of brackets)", (a, b, i)))
        # 2: Y <| [X1,X2] = (Y <| X1) <| X2 - (Y <| X2) <| X1
        for i, j in itertools.combinations(range(g1.dim), 2):
            for a in range(g2.dim):
                lhs = self.act_right({a: Fraction(1)}, g1.bracket_basis(i, j))
                rhs = vsub(
                    self.act_right(self.act_right({a: Fraction(1)}, e1(i)), e1(j)),
                    self.act_right(self.act_right({a: Fraction(1)}, e1(j)), e1(i)),
                )
                if vsub(lhs, rhs):
                    bad.append(("condition 2 (right action of brackets)", (a, i, j)))
        # 3: Y |> [X1,X2] = [Y|>X1, X2] + [X1, Y|>X2] + (Y<|X1)|>X2 - (Y<|X2)|>X1
        for i, j in itertools.combinations(range(g1.dim), 2):
            for a in range(g2.dim):
                y = {a: Fraction(1)}
                lhs = self.act_left(y, g1.bracket_basis(i, j))
                rhs = {}
                for part in (
                    g1.bracket(self.act_left(y, e1(i)), e1(j)),
                    g1.bracket(e1(i), self.act_left(y, e1(j))),
                    self.act_left(self.act_right(y, e1(i)), e1(j)),
                    {k: -c for k, c in self.act_left(self.act_right(y, e1(j)), e1(i)).items()},
                ):
                    for k, c in part.items():
                        rhs[k] = rhs.get(k, Fraction(0)) + c
                if vsub(lhs, {k: c for k, c in rhs.items() if c}):
                    bad.append(("condition 3 (left action Leibniz)", (a, i, j)))
        # 4: [Y1,Y2] <| X = [Y1<|X, Y2] + [Y1, Y2<|X] + Y1<|(Y2|>X) - Y2<|(Y1|>X)
        for a, b in itertools.combinations(range(g2.dim), 2):
            for i in range(g1.dim):
                lhs = self.act_right(g2.bracket_basis(a, b), e1(i))
                rhs = {}
                for part in (
                    g2.bracket(self.act_right({a: Fraction(1)}, e1(i)), {b: Fraction(1)}),
                    g2.bracket({a: Fraction(1)}, self.act_right({b: Fraction(1)}, e1(i))),
                    self.act_right({a: Fraction(1)}, self.act_left({b: Fraction(1)}, e1(i))),
                    {k: -c for k, c in self.act_right({b: Fraction(1)}, self.act_left({a: Fraction(1)}, e1(i))).items()},
                ):
                    for k, c in part.items():
                        rhs[k] = rhs.get(k, Fraction(0)) + c
                if vsub(lhs, {k: c for k, c in rhs.items() if c}):
                    bad.append(("condition 4 (right action Leibniz)", (a, b, i)))
        return bad

    def bicrossed(self):
        """The bicrossed-product Lie algebra on g1 + g2 (g1 indices first)."""
        if self.validate():
            raise ValueError("not a matched pair; bicrossed product undefined")
        n1 = self.g1.dim
        names = list(self.g1.names) + list(self.g2.names)
        brackets = {}

        def put(i, j, comps):
            comps = {k: c for k, c in comps.items() if c}
            if comps:
                brackets[(i, j)] = comps

        for i, j in itertools.combinations(range(n1), 2):
            put(i, j, self.g1.bracket_basis(i, j))
        for a, b in itertools.combinations(range(self.g2.dim), 2):
            put(n1 + a, n1 + b, {n1 + k: c for k, c in self.g2.bracket_basis(a, b).items()})
        # [X_i, Y_a] = -(Y_a |> X_i) + -(Y_a <| X_i)  since [X+0, 0+Y] = -(Y|>X) + -(Y<|X)
        for i in range(n1):
            for a in range(self.g2.dim):
                comps = {}
                for k, c in self.act_left({a: Fraction(1)}, {i: Fraction(1)}).items():
                    comps[k] = comps.get(k, Fraction(0)) - c
                for k, c in self.act_right({a: Fraction(1)}, {i: Fraction(1)}).items():
                    comps[n1 + k] = comps.get(n1 + k, Fraction(0)) - c
                put(i, n1 + a, comps)
        return LieAlgebra(names, brackets)


# ---------------------------------------------------------------------------
# exterior algebra over the dual and Chevalley-Eilenberg cohomology


def ce_differential_matrix(g, k):
    """Matrix of the CE differential from wedge^k g* to wedge^{k+1} g* (trivial coeffs).

    (d a)(x_0..x_k) = sum_{i<j} (-1)^{i+j} a([x_i,x_j], x_0..^i..^j..x_k)."""
    rows = list(itertools.combinations(range(g.dim), k + 1))
    cols = list(itertools.combinations(range(g.dim), k))
    col_index = {c: n for n, c in enumerate(cols)}
    mat = [[Fraction(0)] * len(cols) for _ in rows]
    for r, tup in enumerate(rows):
        for i, j in itertools.combinations(range(k + 1), 2):
            rest = tuple(tup[m] for m in range(k + 1) if m not in (i, j))
            sign = (-1) ** (i + j)
            for l, c in g.bracket_basis(tup[i], tup[j]).items():
                if l in rest:
                    continue
                merged, s2 = _insert_sorted(rest, l)
                mat[r][col_index[merged]] += sign * s2 * c
    return mat, cols, rows


def _insert_sorted(tup, l):
    pos = 0
    while pos < len(tup) and tup[pos] < l:
        pos += 1
    sign = (-1) ** pos
    return tup[:pos] + (l,) + tup[pos:], sign


def rref(mat):
    """Reduced row echelon form over Fraction; returns (rref, pivot columns)."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def matrix_rank(mat):
    if not mat or not mat[0]:
        return 0
    _, piv = rref(mat)
    return len(piv)


def kernel_basis(mat, ncols):
    """Basis of the kernel of mat (list of rows) as column vectors, from RREF."""
    if not mat:
        return [_unit(ncols, j) for j in range(ncols)]
    r, pivots = rref(mat)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def _unit(n, j):
    v = [Fraction(0)] * n
    v[j] = Fraction(1)
    return v


def in_span(vectors, v):
    """Is v in the rational span of vectors?"""
    if not vectors:
        return all(x == 0 for x in v)
    mat = [list(w) for w in vectors]
    return matrix_rank(mat) == matrix_rank(mat + [list(v)])


class CEComplex:
    """Chevalley-Eilenberg complex of a Lie algebra, optionally relative to a
    subalgebra spanned by basic_indices (h2-basic cochains)."""

    def __init__(self, g, basic_indices=()):
        self.g = g
        self.basic = tuple(basic_indices)
        self._d = {}

    def differential(self, k):
        if k not in self._d:
            self._d[k] = ce_differential_matrix(self.g, k)
        return self._d[k]

    def basis(self, k):
        return list(itertools.combinations(range(self.g.dim), k))

    def basic_subspace(self, k):
        """Basis (as coefficient vectors) of the h2-basic k-cochains:
        iota_xi a = 0 and iota_xi (d a) = 0 for all xi in the subalgebra."""
        cols = self.basis(k)
        n = len(cols)
        if not self.basic:
            return [_unit(n, j) for j in range(n)]
        constraints = []
        # iota_xi a = 0: rows indexed by (xi, (k-1)-tuple)
        lower = list(itertools.combinations(range(self.g.dim), k - 1)) if k else []
        col_index = {c: m for m, c in enumerate(cols)}
        for xi in self.basic:
            for low in lower:
                if xi in low:
                    continue
                merged, sign = _insert_sorted(low, xi)
                row = [Fraction(0)] * n
                row[col_index[merged]] = Fraction(sign)
                constraints.append(row)
        dmat, dcols, drows = self.differential(k)
        lower2 = list(itertools.combinations(range(self.g.dim), k))
        for xi in self.basic:
            for low in lower2:
                if xi in low:
                    continue
                merged, sign = _insert_sorted(low, xi)
                r = drows.index(merged)
                constraints.append([sign * dmat[r][c] for c in range(n)])
        if not constraints:
            return [_unit(n, j) for j in range(n)]
        return kernel_basis(constraints, n)

    def betti(self, k):
        dk, _, _ = self.differential(k)
        rank_k = matrix_rank(dk)
        dim_k = len(self.basis(k))
        rank_prev = matrix_rank(self.differential(k - 1)[0]) if k > 0 else 0
        return dim_k - rank_k - rank_prev

    def betti_numbers(self):
        return [self.betti(k) for k in range(self.g.dim + 1)]

    def representatives(self, k):
        """Deterministic cocycle representatives for H^k: RREF kernel basis
        vectors not in the image of the previous differential."""
        dk, _, _ = self.differential(k)
        n = len(self.basis(k))
        if dk:
            ker = kernel_basis(dk, n)
        else:
            ker = [_unit(n, j) for j in range(n)]
        prev, _, _ = self.differential(k - 1) if k > 0 else (None, None, None)
        image = []
        if prev and prev[0]:
            # columns of prev span the image inside wedge^k
            for c in range(len(prev[0])):
                image.append([prev[r][c] for r in range(len(prev))])
        reps = []
        span = list(image)
        for v in ker:
            if not in_span(span, v):
                reps.append(v)
                span.append(v)
        return reps


def natural_split(g1_dim, l2_dim, coeffs, n):
    """Split an element of wedge^n (g1 + l2)* into (q, p)-bigraded components.

    coeffs: {sorted index tuple -> Fraction} over the combined basis with g1
    indices first.  Returns {(q, p): {(g1-tuple, l2-tuple): Fraction}}.
    With g1 indices before l2 indices the evaluation on (X..|xi..) tuples
    carries no extra sign."""
    out = {}
    for tup, c in coeffs.items():
        if len(tup) != n:
            raise ValueError("inhomogeneous element")
        i1 = tuple(i for i in tup if i < g1_dim)
        i2 = tuple(i - g1_dim for i in tup if i >= g1_dim)
        q, p = len(i1), len(i2)
        out.setdefault((q, p), {})[(i1, i2)] = c
    return out


def natural_split_inverse(g1_dim, l2_dim, split):
    """Inverse of natural_split: reassemble the combined antisymmetric element."""
    coeffs = {}
    for (q, p), comp in split.items():
        for (i1, i2), c in comp.items():
            tup = tuple(i1) + tuple(i + g1_dim for i in i2)
            coeffs[tup] = coeffs.get(tup, Fraction(0)) + c
    return {k: c for k, c in coeffs.items() if c}
