"""Minimal exact polynomials: integer/rational univariate in x and integer
bivariate in x, y.  Terms render in canonical order: descending total
degree, then descending x-exponent.  Rationals always print as p/q.
"""

from fractions import Fraction


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _coeff_str(c, lead, with_var):
    sign = "- " if c < 0 else ("" if lead else "+ ")
    mag = -c if c < 0 else c
    if with_var and mag == 1:
        return sign
    return f"{sign}{mag}*" if with_var else f"{sign}{mag}"


class Poly:
    """Univariate polynomial with exact int/Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            c = _norm(c)
            if c != 0:
                clean[int(e)] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls({})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return Poly(out)

    def scale(self, k):
        return Poly({e: c * k for e, c in self.terms.items()})

    def substitute_neg(self):
        """p(x) -> p(-x)"""
        return Poly({e: c * (-1) ** e for e, c in self.terms.items()})

    def __call__(self, x):
        return _norm(sum(c * Fraction(x) ** e for e, c in self.terms.items())) if self.terms else 0

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_integral(self):
        return all(isinstance(c, int) for c in self.terms.values())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            lead = not parts
            if e == 0:
                parts.append(_coeff_str(c, lead, with_var=False))
            else:
                var = "x" if e == 1 else f"x^{e}"
                parts.append(_coeff_str(c, lead, with_var=True) + var)
        return " ".join(parts)

    __repr__ = __str__


class Poly2:
    """Bivariate integer polynomial in x and y."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = _norm(c)
            if c != 0:
                clean[(int(i), int(j))] = c
        self.terms = clean

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Poly2(out)

    def scale(self, k):
        return Poly2({t: c * k for t, c in self.terms.items()})

    def substitute(self, x_sign=1, y=None):
        """Specialize: flip x when x_sign == -1, evaluate y when given.
        Returns Poly in x when y is evaluated, else Poly2."""
        if y is None:
            return Poly2({(i, j): c * (x_sign ** i) for (i, j), c in self.terms.items()})
        out = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, 0) + c * (x_sign ** i) * (y ** j)
        return Poly(out)

    def __call__(self, x, y):
        return _norm(sum(c * Fraction(x) ** i * Fraction(y) ** j
                         for (i, j), c in self.terms.items())) if self.terms else 0

    def __eq__(self, other):
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda t: (-(t[0] + t[1]), -t[0]))
        parts = []
        for i, j in keys:
            c = self.terms[(i, j)]
            lead = not parts
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            if mono:
                parts.append(_coeff_str(c, lead, with_var=True) + mono)
            else:
                parts.append(_coeff_str(c, lead, with_var=False))
        return " ".join(parts)

    __repr__ = __str__
