"""Sparse commutative polynomials in three projective coordinates.

Terms map exponent triples to nonzero coefficients of the ambient field.
A polynomial carries its coordinate names so curve reports can print in
x,y,z or r,s,t as appropriate.
"""

from .fields import FieldError

DEFAULT_NAMES = ("x", "y", "z")


class Poly3:
    __slots__ = ("field", "names", "terms")

    def __init__(self, field, terms=None, names=DEFAULT_NAMES):
        self.field = field
        self.names = tuple(names)
        clean = {}
        if terms:
            for e, c in terms.items():
                if not field.is_zero(c):
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def zero(cls, field, names=DEFAULT_NAMES):
        return cls(field, {}, names)

    @classmethod
    def constant(cls, field, c, names=DEFAULT_NAMES):
        return cls(field, {(0, 0, 0): c}, names)

    @classmethod
    def monomial(cls, field, exps, c=None, names=DEFAULT_NAMES):
        if c is None:
            c = field.one()
        return cls(field, {tuple(exps): c}, names)

    @classmethod
    def variable(cls, field, i, names=DEFAULT_NAMES):
        e = [0, 0, 0]
        e[i] = 1
        return cls(field, {tuple(e): field.one()}, names)

    @classmethod
    def linear_form(cls, field, coeffs, names=DEFAULT_NAMES):
        """c0*x + c1*y + c2*z from a coefficient triple."""
        t = {}
        for i, c in enumerate(coeffs):
            if not field.is_zero(c):
                e = [0, 0, 0]
                e[i] = 1
                t[tuple(e)] = c
        return cls(field, t, names)

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d=None):
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            return False
        return True if d is None else degs == {d}

    def __add__(self, other):
        f = self.field
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = f.add(t.get(e, f.zero()), c)
        return Poly3(f, t, self.names)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return Poly3(f, {e: f.neg(c) for e, c in self.terms.items()}, self.names)

    def __mul__(self, other):
        f = self.field
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                t[e] = f.add(t.get(e, f.zero()), f.mul(c1, c2))
        return Poly3(f, t, self.names)

    def scale(self, c):
        f = self.field
        return Poly3(f, {e: f.mul(c, v) for e, v in self.terms.items()}, self.names)

    def __eq__(self, other):
        return isinstance(other, Poly3) and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero())

    def proportional_to(self, other):
        """Return k with self == k*other, or None."""
        f = self.field
        if other.is_zero():
            return None
        if self.is_zero():
            return f.zero()
        e0 = next(iter(other.terms))
        c = self.terms.get(e0)
        if c is None:
            return None
        k = f.div(c, other.terms[e0])
        return k if self == other.scale(k) else None

    def eval(self, pt):
        f = self.field
        out = f.zero()
        for (i, j, k), c in self.terms.items():
            v = f.mul(f.mul(f.pow(pt[0], i), f.pow(pt[1], j)), f.pow(pt[2], k))
            out = f.add(out, f.mul(c, v))
        return out

    def partial(self, var):
        """Formal partial derivative with respect to coordinate index var."""
        f = self.field
        t = {}
        for e, c in self.terms.items():
            n = e[var]
            if n == 0:
                continue
            e2 = list(e)
            e2[var] = n - 1
            t[tuple(e2)] = f.mul(f.of_int(n), c)
        return Poly3(f, t, self.names)

    def _sorted_terms(self):
        # graded-lex, highest degree first, then lex on exponents
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def leading(self):
        if not self.terms:
            return None
        return self._sorted_terms()[0]

    def __str__(self):
        f = self.field
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}"
                for n, k in zip(self.names, e)
                if k > 0
            )
            cs = f.scalar_str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"Poly3({self})"


def gradient(fpoly):
    """The three formal partial derivatives."""
    return (fpoly.partial(0), fpoly.partial(1), fpoly.partial(2))


def eval_projective(fpoly, pt):
    """Evaluate a homogeneous form at a canonical projective representative."""
    if not fpoly.is_homogeneous():
        raise FieldError("eval_projective requires a homogeneous form")
    return fpoly.eval(pt)


def divide_if_divides(fpoly, gpoly):
    """Return q with fpoly == q*gpoly when the division is exact, else None."""
    if gpoly.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    fld = fpoly.field
    rem = fpoly
    qt = {}
    ge, gc = gpoly.leading()
    while not rem.is_zero():
        re, rc = rem.leading()
        de = (re[0] - ge[0], re[1] - ge[1], re[2] - ge[2])
        if min(de) < 0:
            return None
        c = fld.div(rc, gc)
        qt[de] = c
        rem = rem - Poly3(fld, {de: c}, fpoly.names) * gpoly
    return Poly3(fld, qt, fpoly.names)


class LinearFormMatrix:
    """3x3 matrix of degree <= 1 forms, as used to factor multilinearized
    quadratic relations."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise FieldError("LinearFormMatrix must be 3x3")
        for r in self.rows:
            for e in r:
                if e.degree() > 1:
                    raise FieldError("entries must have degree <= 1")
        self.field = self.rows[0][0].field

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def evaluate(self, pt):
        """Scalar 3x3 matrix of the entries at a point."""
        return [[e.eval(pt) for e in row] for row in self.rows]

    def det(self):
        r = self.rows
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def __str__(self):
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.rows) + "]"


def det3(m):
    """Exact determinant of a 3x3 matrix of linear forms."""
    return m.det()
