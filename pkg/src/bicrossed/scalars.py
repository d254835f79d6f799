"""Exact scalar coefficient ring.

Elements are finite sums of terms

    (rational) * x1^a1...xk^ak * sin(v)^s cos(v)^c ... * sqrt(pi)^m * sqrt(r)

with named coordinate variables, trig factors of single variables, a formal
sqrt(pi) unit and a squarefree integer radicand r.  The canonical form is
unique: sin(v)^2 is eagerly rewritten to 1 - cos(v)^2 (so sin-exponents are
0 or 1), radicands are squarefree, and terms are kept in a sorted dict.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
import math

# term keys ------------------------------------------------------------
# mono: tuple of (var, exp>0) sorted by var
# trig: tuple of (var, sin_exp in {0,1}, cos_exp>=0) sorted, not both zero
# key = (mono, trig, sqrtpi_power, radicand)

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _squarefree(n):
    """Split n = s^2 * r with r squarefree; return (s, r). n >= 1."""
    s, r = 1, 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
            s *= d
        if n % d == 0:
            n //= d
            r *= d
        d += 1
    return s, r * n


def _mul_mono(m1, m2):
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
        if d[v] == 0:
            del d[v]
    return tuple(sorted(d.items()))


class Scalar:
    """Immutable element of the coefficient ring."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: dict key -> Fraction, assumed canonical; do not mutate
        self.terms = terms or {}

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero():
        return Scalar()

    @staticmethod
    def rational(q):
        q = Fraction(q)
        if q == 0:
            return Scalar()
        return Scalar({((), (), 0, 1): q})

    @staticmethod
    def one():
        return Scalar.rational(1)

    @staticmethod
    def var(name, exp=1, coeff=1):
        if exp == 0:
            return Scalar.rational(coeff)
        return Scalar({(((name, exp),), (), 0, 1): Fraction(coeff)})

    @staticmethod
    def monomial(coeff, mono):
        c = Fraction(coeff)
        if c == 0:
            return Scalar()
        return Scalar({(tuple(sorted(mono)), (), 0, 1): c})

    @staticmethod
    def sin(name):
        return Scalar({((), ((name, 1, 0),), 0, 1): _ONE})

    @staticmethod
    def cos(name):
        return Scalar({((), ((name, 0, 1),), 0, 1): _ONE})

    @staticmethod
    def sqrt_pi(power=1):
        return Scalar({((), (), power, 1): _ONE})

    @staticmethod
    def sqrt_int(n):
        """sqrt(n) for a positive integer n, reduced to squarefree form."""
        if n <= 0:
            raise ValueError("radicand must be positive")
        s, r = _squarefree(n)
        return Scalar({((), (), 0, r): Fraction(s)})

    # -- ring structure -------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            nc = terms.get(k, _ZERO) + c
            if nc == 0:
                terms.pop(k, None)
            else:
                terms[k] = nc
        return Scalar(terms)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.rational(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Scalar()
            return Scalar({k: c * other for k, c in self.terms.items()})
        acc = {}
        for (m1, t1, p1, r1), c1 in self.terms.items():
            for (m2, t2, p2, r2), c2 in other.terms.items():
                mono = _mul_mono(m1, m2)
                coeff = c1 * c2
                # radical product: sqrt(r1)sqrt(r2) = g*sqrt(r1r2/g^2)
                if r1 == 1 and r2 == 1:
                    rad = 1
                else:
                    g = math.gcd(r1, r2)
                    coeff *= g
                    rad = (r1 // g) * (r2 // g)
                # trig product with sin^2 -> 1 - cos^2 reduction
                _accumulate_trig(acc, mono, _mul_trig_raw(t1, t2), p1 + p2, rad, coeff)
        return Scalar({k: c for k, c in acc.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = Scalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, q):
        q = Fraction(q)
        if q == 0:
            raise ZeroDivisionError
        return self * (1 / q)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_rational(self):
        if not self.terms:
            return True
        if len(self.terms) != 1:
            return False
        ((mono, trig, p, r),) = self.terms
        return not mono and not trig and p == 0 and r == 1

    def rational_value(self):
        if not self.terms:
            return _ZERO
        ((key, c),) = self.terms.items()
        if key != ((), (), 0, 1):
            raise ValueError(f"not a rational constant: {self}")
        return c

    # -- calculus -------------------------------------------------------
    def variables(self):
        out = set()
        for mono, trig, _, _ in self.terms:
            out.update(v for v, _ in mono)
            out.update(v for v, _, _ in trig)
        return out

    def degree(self, var=None):
        """Total polynomial degree (trig factors count 0), or degree in var."""
        deg = -1
        for mono, _, _, _ in self.terms:
            if var is None:
                d = sum(e for _, e in mono)
            else:
                d = sum(e for v, e in mono if v == var)
            deg = max(deg, d)
        return deg

    def is_polynomial_in(self, allowed):
        """True if every variable (incl. trig args) lies in allowed and no radicals."""
        for mono, trig, p, r in self.terms:
            if p or r != 1:
                return False
            if any(v not in allowed for v, _ in mono):
                return False
            if any(v not in allowed for v, _, _ in trig):
                return False
        return True

    def has_trig(self):
        return any(trig for _, trig, _, _ in self.terms)

    def derivative(self, var):
        acc = {}
        for (mono, trig, p, r), c in self.terms.items():
            # power rule on the monomial part
            for i, (v, e) in enumerate(mono):
                if v != var:
                    continue
                if e == 1:
                    nm = mono[:i] + mono[i + 1 :]
                else:
                    nm = mono[:i] + ((v, e - 1),) + mono[i + 1 :]
                _accumulate_trig(acc, nm, trig, p, r, c * e)
            # chain rule on trig factors of var
            for i, (v, s, co) in enumerate(trig):
                if v != var:
                    continue
                rest = trig[:i] + trig[i + 1 :]
                if s:  # sin^1 cos^co -> cos^{co+1} (+ lower from cos-part below)
                    _accumulate_trig(acc, mono, _mul_trig_raw(rest, ((v, 0, co + 1),)), p, r, c)
                if co:  # derivative of cos^co: -co sin cos^{co-1}, times sin^s
                    t = _mul_trig_raw(rest, ((v, s + 1, co - 1),))
                    _accumulate_trig(acc, mono, t, p, r, -c * co)
        return Scalar({k: c for k, c in acc.items() if c != 0})

    def substitute(self, mapping):
        """Replace variables by Scalars.  Variables occurring inside sin/cos must
        be replaced by integer-linear combinations of variables."""
        out = Scalar.zero()
        lincache = {}
        for (mono, trig, p, r), c in self.terms.items():
            term = Scalar({((), (), p, r): c})
            for v, e in mono:
                term = term * (mapping.get(v, Scalar.var(v)) ** e)
            for v, s, co in trig:
                if v in mapping:
                    arg = mapping[v]
                    key = id(arg)
                    if key not in lincache:
                        lincache[key] = _as_int_linear(arg)
                    lin = lincache[key]
                    sv, cv = _sin_cos_of_linear(lin)
                else:
                    sv, cv = Scalar.sin(v), Scalar.cos(v)
                if s:
                    term = term * sv
                if co:
                    term = term * cv**co
            out = out + term
        return out

    def eval_float(self, env):
        """Numeric evaluation; env maps variable names to floats.  Test oracle use."""
        total = 0.0
        for (mono, trig, p, r), c in self.terms.items():
            x = float(c) * math.pi ** (p / 2.0) * math.sqrt(r)
            for v, e in mono:
                x *= env[v] ** e
            for v, s, co in trig:
                if s:
                    x *= math.sin(env[v])
                if co:
                    x *= math.cos(env[v]) ** co
            total += x
        return total

    # -- printing -------------------------------------------------------
    def __repr__(self):
        return f"Scalar({self.text()})"

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: _term_sort_key(kc[0]))

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            s = _term_text(key, c)
            if parts and not s.startswith("-"):
                parts.append("+ " + s)
            elif parts:
                parts.append("- " + s[1:])
            else:
                parts.append(s)
        return " ".join(parts)

    def latex(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            s = _term_latex(key, c)
            if parts and not s.startswith("-"):
                parts.append("+ " + s)
            elif parts:
                parts.append("- " + s[1:])
            else:
                parts.append(s)
        return " ".join(parts)


def _mul_trig_raw(t1, t2):
    d = {}
    for v, s, c in t1:
        d[v] = (s, c)
    for v, s, c in t2:
        os, oc = d.get(v, (0, 0))
        d[v] = (os + s, oc + c)
    return tuple(sorted((v, s, c) for v, (s, c) in d.items()))


def _accumulate_trig(acc, mono, trig, p, r, coeff):
    """Add coeff * mono*trig*sqrtpi^p*sqrt(r) to acc, rewriting sin^2 = 1 - cos^2."""
    stack = [(trig, coeff)]
    while stack:
        t, c = stack.pop()
        for i, (v, s, co) in enumerate(t):
            if s >= 2:
                rest = t[:i] + t[i + 1 :]
                low = _mul_trig_raw(rest, ((v, s - 2, co),)) if (s - 2 or co) else rest
                high = _mul_trig_raw(rest, ((v, s - 2, co + 2),))
                stack.append((low, c))
                stack.append((high, -c))
                break
        else:
            t = tuple(x for x in t if x[1] or x[2])
            key = (mono, t, p, r)
            nc = acc.get(key, _ZERO) + c
            if nc == 0:
                acc.pop(key, None)
            else:
                acc[key] = nc


def _as_int_linear(s):
    """Decompose a Scalar as an integer-linear combination of variables.

    Returns tuple of (var, int) sorted; raises if s is not Z-linear."""
    lin = {}
    for (mono, trig, p, r), c in s.terms.items():
        if trig or p or r != 1:
            raise ValueError("trig argument must be an integer-linear combination of variables")
        if len(mono) != 1 or mono[0][1] != 1 or c.denominator != 1:
            raise ValueError(f"trig argument must be Z-linear in variables, got {s}")
        v = mono[0][0]
        lin[v] = lin.get(v, 0) + int(c)
    return tuple(sorted((v, n) for v, n in lin.items() if n))


@lru_cache(maxsize=None)
def _sin_cos_of_linear(lin):
    """(sin, cos) of sum n_i * v_i via angle addition; lin sorted tuple."""
    if not lin:
        return Scalar.zero(), Scalar.one()
    v, n = lin[0]
    rest = lin[1:]
    if n < 0:
        s1, c1 = _sin_cos_of_linear(((v, -n),))
        s1 = -s1
    elif n == 1:
        s1, c1 = Scalar.sin(v), Scalar.cos(v)
    else:
        s0, c0 = _sin_cos_of_linear(((v, n - 1),))
        sv, cv = Scalar.sin(v), Scalar.cos(v)
        s1 = s0 * cv + c0 * sv
        c1 = c0 * cv - s0 * sv
    if not rest:
        return s1, c1
    s2, c2 = _sin_cos_of_linear(rest)
    return s1 * c2 + c1 * s2, c1 * c2 - s1 * s2


# -- term ordering and printing ----------------------------------------

def _term_sort_key(key):
    mono, trig, p, r = key
    return (
        -sum(e for _, e in mono),
        tuple((v, -e) for v, e in mono),
        trig,
        p,
        r,
    )


def _frac_text(c):
    return str(c)


def _factor_texts(key):
    mono, trig, p, r = key
    out = []
    for v, e in mono:
        out.append(v if e == 1 else f"{v}^{e}")
    for v, s, co in trig:
        if s:
            out.append(f"sin({v})")
        if co:
            out.append(f"cos({v})" if co == 1 else f"cos({v})^{co}")
    if p:
        out.append("sqrt(pi)" if p == 1 else f"sqrt(pi)^{p}")
    if r != 1:
        out.append(f"sqrt({r})")
    return out


def _term_text(key, c):
    facs = _factor_texts(key)
    if not facs:
        return _frac_text(c)
    body = "*".join(facs)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{_frac_text(c)}*{body}"


_GREEK = {"theta": r"\theta", "phi": r"\phi", "psi": r"\psi"}


def _latex_name(v):
    # x0 -> x_{0}, theta -> \theta
    base = v.rstrip("0123456789")
    sub = v[len(base) :]
    base = _GREEK.get(base, base)
    return f"{base}_{{{sub}}}" if sub else base


def _term_latex(key, c):
    mono, trig, p, r = key
    facs = []
    for v, e in mono:
        n = _latex_name(v)
        facs.append(n if e == 1 else f"{n}^{{{e}}}")
    for v, s, co in trig:
        n = _latex_name(v)
        if s:
            facs.append(rf"\sin({n})")
        if co:
            facs.append(rf"\cos({n})" if co == 1 else rf"\cos^{{{co}}}({n})")
    if p:
        facs.append(r"\sqrt{\pi}" if p == 1 else rf"\sqrt{{\pi}}^{{{p}}}")
    if r != 1:
        facs.append(rf"\sqrt{{{r}}}")
    body = " ".join(facs)
    if not facs:
        return _frac_latex(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{_frac_latex(c)} {body}"


def _frac_latex(c):
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return rf"{sign}\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


ZERO = Scalar.zero()
ONE = Scalar.one()
