"""Exact ground fields: the rationals, quadratic extensions of the rationals,
and prime fields F_p with p not in {2, 3}.

Field elements are plain immutable values (int residues, Fraction, or pairs of
Fractions) and all arithmetic goes through a Field object.  Canonical forms are
unique, so `==` and hashing work structurally.
"""

from fractions import Fraction
import math


class FieldError(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _squarefree(n):
    n = abs(n)
    i = 2
    while i * i <= n:
        if n % (i * i) == 0:
            return False
        i += 1
    return True


class Field:
    """Common interface for the three supported ground fields."""

    kind = None

    def __eq__(self, other):
        return isinstance(other, Field) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(tuple(sorted(self.to_json().items())))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero()

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = self.one()
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def sum(self, vals):
        out = self.zero()
        for v in vals:
            out = self.add(out, v)
        return out

    def is_finite(self):
        return self.kind == "Fp"

    def to_json(self):
        raise NotImplementedError

    def __repr__(self):
        return f"Field({self.to_json()})"


class Rationals(Field):
    kind = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def of_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def sqrt(self, a):
        """Exact rational square root, or None."""
        if a < 0:
            return None
        n, d = a.numerator, a.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def random(self, rng, height=20):
        num = rng.randint(-height, height)
        den = rng.randint(1, height)
        return Fraction(num, den)

    def to_json(self):
        return {"kind": "Q"}

    def scalar_to_json(self, a):
        return f"{a.numerator}/{a.denominator}"

    def scalar_from_json(self, s):
        try:
            return Fraction(s)
        except (ValueError, TypeError) as e:
            raise FieldError(f"bad rational scalar {s!r}: {e}")

    def scalar_str(self, a):
        return str(a)


class QuadExt(Field):
    """Q(sqrt(d)) for a fixed nonsquare squarefree integer d.

    Elements are pairs (u, v) of Fractions meaning u + v*sqrt(d).  A single
    extension suffices here; towers are out of scope.
    """

    kind = "QSqrt"

    def __init__(self, d):
        d = int(d)
        if d == 0 or d == 1 or not _squarefree(d):
            raise FieldError(f"QuadExt requires a squarefree d not in {{0,1}}, got {d}")
        r = math.isqrt(d) if d > 0 else -1
        if d > 0 and r * r == d:
            raise FieldError(f"QuadExt requires a nonsquare d, got {d}")
        self.d = d

    def zero(self):
        return (Fraction(0), Fraction(0))

    def one(self):
        return (Fraction(1), Fraction(0))

    def of_int(self, n):
        return (Fraction(n), Fraction(0))

    def gen(self):
        """The adjoined square root of d."""
        return (Fraction(0), Fraction(1))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mul(self, a, b):
        return (a[0] * b[0] + self.d * a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def neg(self, a):
        return (-a[0], -a[1])

    def inv(self, a):
        n = a[0] * a[0] - self.d * a[1] * a[1]
        if n == 0:
            if a == self.zero():
                raise ZeroDivisionError("inverse of 0")
            raise FieldError("norm 0 on a nonzero element; d must be square")
        return (a[0] / n, -a[1] / n)

    def sqrt(self, a):
        """Solve (u + v sqrt d)^2 = a via the norm equations."""
        q = Rationals()
        x, y = a
        if y == 0:
            r = q.sqrt(x)
            if r is not None:
                return (r, Fraction(0))
            rv = q.sqrt(x / self.d)
            if rv is not None:
                return (Fraction(0), rv)
            return None
        norm = q.sqrt(x * x - self.d * y * y)
        if norm is None:
            return None
        for sign in (1, -1):
            u2 = (x + sign * norm) / 2
            u = q.sqrt(u2)
            if u is not None and u != 0:
                return (u, y / (2 * u))
        return None

    def random(self, rng, height=10):
        q = Rationals()
        return (q.random(rng, height), q.random(rng, height))

    def to_json(self):
        return {"kind": "QSqrt", "d": self.d}

    def scalar_to_json(self, a):
        q = Rationals()
        return [q.scalar_to_json(a[0]), q.scalar_to_json(a[1])]

    def scalar_from_json(self, s):
        if not isinstance(s, (list, tuple)) or len(s) != 2:
            raise FieldError(f"bad QSqrt scalar {s!r}")
        q = Rationals()
        return (q.scalar_from_json(s[0]), q.scalar_from_json(s[1]))

    def scalar_str(self, a):
        u, v = a
        if v == 0:
            return str(u)
        if u == 0:
            return f"{v}*sqrt({self.d})"
        return f"{u}+{v}*sqrt({self.d})"


class PrimeField(Field):
    kind = "Fp"

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p in (2, 3):
            raise FieldError("characteristic 2 and 3 are unsupported")
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def of_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)

    def units(self):
        return range(1, self.p)

    def sqrt(self, a):
        """Deterministic square root mod p (Tonelli-Shanks); canonical root
        is the smaller residue of the pair."""
        p = self.p
        a = a % p
        if a == 0:
            return 0
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            r = pow(a, (p + 1) // 4, p)
            return min(r, p - r)
        # Tonelli-Shanks with the smallest nonresidue as auxiliary.
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return min(r, p - r)

    def random(self, rng):
        return rng.randrange(self.p)

    def random_unit(self, rng):
        return rng.randrange(1, self.p)

    def mult_order(self, a):
        a = a % self.p
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = x * a % self.p
            k += 1
        return k

    def to_json(self):
        return {"kind": "Fp", "p": self.p}

    def scalar_to_json(self, a):
        return a % self.p

    def scalar_from_json(self, s):
        if not isinstance(s, int):
            try:
                s = int(s)
            except (ValueError, TypeError):
                raise FieldError(f"bad Fp scalar {s!r}")
        return s % self.p

    def scalar_str(self, a):
        return str(a % self.p)


def field_from_json(obj):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FieldError(f"bad field spec {obj!r}")
    kind = obj["kind"]
    if kind == "Q":
        return Rationals()
    if kind == "QSqrt":
        return QuadExt(obj["d"])
    if kind == "Fp":
        return PrimeField(obj["p"])
    raise FieldError(f"unknown field kind {kind!r}")


def parse_field(text):
    """Parse CLI field syntax: Q, QSqrt:-2, Fp:13."""
    parts = text.split(":")
    if parts[0] == "Q" and len(parts) == 1:
        return Rationals()
    if parts[0] == "QSqrt" and len(parts) == 2:
        return QuadExt(int(parts[1]))
    if parts[0] == "Fp" and len(parts) == 2:
        return PrimeField(int(parts[1]))
    raise FieldError(f"cannot parse field {text!r}")


def canonical_point(field, vec):
    """Scale a nonzero coordinate vector so its first nonzero entry is 1."""
    for c in vec:
        if not field.is_zero(c):
            s = field.inv(c)
            return tuple(field.mul(s, x) for x in vec)
    raise FieldError("zero vector has no projective representative")


def projective_points(field):
    """All points of P^2 over a prime field, canonicalized, no duplicates."""
    if field.kind != "Fp":
        raise FieldError("point enumeration requires a finite field")
    p = field.p
    pts = [(0, 0, 1)]
    pts += [(0, 1, c) for c in range(p)]
    pts += [(1, a, b) for a in range(p) for b in range(p)]
    return sorted(pts)
