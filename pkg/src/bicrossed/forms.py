"""Differential forms with Scalar coefficients.

A PolyForm stores, per antisymmetric degree, a map from strictly increasing
tuples of coordinate names to Scalar coefficients.  The coordinate order used
to sort index tuples is carried explicitly so wedges of forms over the same
chart compose deterministically.
"""

from __future__ import annotations

from .scalars import Scalar


def _sort_signed(indices, pos):
    """Sort differential names by chart position, tracking the permutation sign.

    Returns (sign, tuple) with sign 0 if a name repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort; degrees are tiny
    for i in range(1, len(idx)):
        j = i
        while j > 0 and pos[idx[j - 1]] > pos[idx[j]]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return 0, ()
    return sign, tuple(idx)


class PolyForm:
    """Differential form on a chart with named coordinates."""

    __slots__ = ("order", "terms")

    def __init__(self, order, terms=None):
        self.order = tuple(order)
        self.terms = terms or {}

    @staticmethod
    def zero(order):
        return PolyForm(order)

    @staticmethod
    def scalar(order, s):
        if isinstance(s, (int,)):
            s = Scalar.rational(s)
        if s.is_zero():
            return PolyForm(order)
        return PolyForm(order, {(): s})

    @staticmethod
    def d_coord(order, name, coeff=None):
        if name not in order:
            raise ValueError(f"unknown coordinate {name}")
        c = coeff if coeff is not None else Scalar.one()
        if c.is_zero():
            return PolyForm(order)
        return PolyForm(order, {(name,): c})

    @staticmethod
    def from_terms(order, items):
        """items: iterable of (indices, Scalar); indices need not be sorted."""
        pos = {v: i for i, v in enumerate(order)}
        acc = {}
        for indices, coeff in items:
            sgn, key = _sort_signed(tuple(indices), pos)
            if sgn == 0 or coeff.is_zero():
                continue
            c = coeff * sgn
            nc = acc.get(key, Scalar.zero()) + c
            if nc.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = nc
        return PolyForm(order, acc)

    # ------------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({len(k) for k in self.terms})

    def degree(self):
        """Degree of a homogeneous form (error when mixed)."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous form of degrees {degs}")
        return degs[0]

    def component(self, degree):
        return PolyForm(self.order, {k: c for k, c in self.terms.items() if len(k) == degree})

    def coefficient(self, indices):
        pos = {v: i for i, v in enumerate(self.order)}
        sgn, key = _sort_signed(tuple(indices), pos)
        if sgn == 0:
            return Scalar.zero()
        return self.terms.get(key, Scalar.zero()) * sgn

    def __add__(self, other):
        if self.order != other.order:
            raise ValueError("charts differ")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            nc = terms.get(k, Scalar.zero()) + c
            if nc.is_zero():
                terms.pop(k, None)
            else:
                terms[k] = nc
        return PolyForm(self.order, terms)

    def __neg__(self):
        return PolyForm(self.order, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if isinstance(s, int):
            s = Scalar.rational(s)
        terms = {}
        for k, c in self.terms.items():
            nc = c * s
            if not nc.is_zero():
                terms[k] = nc
        return PolyForm(self.order, terms)

    def wedge(self, other):
        if self.order != other.order:
            raise ValueError("charts differ")
        pos = {v: i for i, v in enumerate(self.order)}
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                sgn, key = _sort_signed(k1 + k2, pos)
                if sgn == 0:
                    continue
                c = c1 * c2 * sgn
                nc = acc.get(key, Scalar.zero()) + c
                if nc.is_zero():
                    acc.pop(key, None)
                else:
                    acc[key] = nc
        return PolyForm(self.order, acc)

    def exterior_derivative(self):
        pos = {v: i for i, v in enumerate(self.order)}
        acc = []
        for k, c in self.terms.items():
            for v in self.order:
                dc = c.derivative(v)
                if not dc.is_zero():
                    acc.append(((v,) + k, dc))
        return PolyForm.from_terms(self.order, acc)

    def contract(self, name):
        """Interior product with the coordinate vector field d/d(name)."""
        acc = {}
        for k, c in self.terms.items():
            if name not in k:
                continue
            i = k.index(name)
            sgn = -1 if i % 2 else 1
            key = k[:i] + k[i + 1 :]
            nc = acc.get(key, Scalar.zero()) + c * sgn
            if nc.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = nc
        return PolyForm(self.order, acc)

    def contract_vector(self, components):
        """Interior product with sum components[v] * d/dv; components maps name->Scalar."""
        out = PolyForm(self.order)
        for v, s in components.items():
            if isinstance(s, int):
                s = Scalar.rational(s)
            if s.is_zero():
                continue
            out = out + self.contract(v).scale(s)
        return out

    def pullback(self, substitution, order=None):
        """Pull back along the map whose components are substitution[coord].

        Every coordinate of the source chart must be present.  The target
        chart order defaults to the union of variables in the substitution."""
        for v in self.order:
            if v not in substitution:
                raise KeyError(f"substitution missing coordinate {v}")
        if order is None:
            seen = []
            for v in self.order:
                for w in sorted(substitution[v].variables()):
                    if w not in seen:
                        seen.append(w)
            order = tuple(sorted(seen))
        diffs = {}
        for v in self.order:
            comp = []
            expr = substitution[v]
            for w in order:
                dc = expr.derivative(w)
                if not dc.is_zero():
                    comp.append(((w,), dc))
            diffs[v] = PolyForm.from_terms(order, comp)
        out_terms = []
        for k, c in self.terms.items():
            term = PolyForm.scalar(order, c.substitute(substitution))
            for v in k:
                term = term.wedge(diffs[v])
            out_terms.extend(term.terms.items())
        return PolyForm.from_terms(order, out_terms)

    def substitute_coeffs(self, mapping):
        """Substitute variables inside coefficients only (differentials untouched)."""
        acc = {}
        for k, c in self.terms.items():
            nc = c.substitute(mapping)
            if not nc.is_zero():
                acc[k] = nc
        return PolyForm(self.order, acc)

    def map_coeffs(self, f):
        acc = {}
        for k, c in self.terms.items():
            nc = f(c)
            if not nc.is_zero():
                acc[k] = nc
        return PolyForm(self.order, acc)

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, frozenset((k, frozenset(c.terms.items())) for k, c in self.terms.items())))

    def sorted_terms(self):
        pos = {v: i for i, v in enumerate(self.order)}
        return sorted(self.terms.items(), key=lambda kc: (len(kc[0]), tuple(pos[v] for v in kc[0])))

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            base = "^".join(f"d{v}" for v in k)
            cs = c.text()
            if k:
                cs = f"({cs})*{base}" if ("+" in cs or " - " in cs or len(c.terms) > 1) else f"{cs}*{base}"
                if c == Scalar.one():
                    cs = base
            parts.append(cs)
        return " + ".join(parts)

    def latex(self):
        from .scalars import _latex_name

        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            base = r" \wedge ".join(f"d{_latex_name(v)}" for v in k)
            if not k:
                parts.append(c.latex())
            elif c == Scalar.one():
                parts.append(base)
            else:
                cs = c.latex()
                if len(c.terms) > 1:
                    cs = f"({cs})"
                parts.append(f"{cs}\\, {base}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PolyForm({self.text()})"
