import random
from fractions import Fraction

import pytest

from pointscheme.fields import PrimeField, Rationals
from pointscheme.poly import (
    LinearFormMatrix,
    Poly3,
    det3,
    divide_if_divides,
    eval_projective,
    gradient,
)


def P(field, terms, names=("x", "y", "z")):
    return Poly3(field, {e: field.of_int(c) for e, c in terms.items()}, names)


def random_poly(field, rng, deg=3, nterms=4):
    t = {}
    for _ in range(nterms):
        i = rng.randrange(deg + 1)
        j = rng.randrange(deg + 1 - i)
        k = rng.randrange(deg + 1 - i - j)
        t[(i, j, k)] = field.random(rng)
    return Poly3(field, t)


def tgh_matrix(field, g, h):
    # the multilinearization factor for the elliptic family, rows in left coords
    lf = lambda cs: Poly3.linear_form(field, [field.of_int(c) if isinstance(c, int) else c for c in cs])
    z, o = field.zero(), field.one()
    return LinearFormMatrix(
        [
            [lf([0, -1, 0]), lf([1, 0, 0]), lf([0, 0, 0])],
            [lf([-1, 0, 0]), lf([0, field.neg(g), 1]), lf([0, 1, 0])],
            [lf([0, 0, 0]), lf([0, h, 0]), lf([0, 0, 1])],
        ]
    )


def test_det3_elliptic_family():
    for field in (Rationals(), PrimeField(13)):
        rng = random.Random(5)
        for _ in range(5):
            g, h = field.random(rng), field.random(rng)
            m = tgh_matrix(field, g, h)
            expected = Poly3(
                field,
                {(0, 3, 0): h, (2, 0, 1): field.one(), (0, 1, 2): field.neg(field.one()), (0, 2, 1): g},
            )
            assert det3(m) == expected


def test_det3_skew_family_is_xyz():
    # S(d,D) rows: [-y, x, 0], [z, 0, -d x], [0, z, -D y]
    field = Rationals()
    d, D = Fraction(2), Fraction(5)
    lf = lambda cs: Poly3.linear_form(field, cs)
    m = LinearFormMatrix(
        [
            [lf([0, -1, 0]), lf([1, 0, 0]), lf([0, 0, 0])],
            [lf([0, 0, 1]), lf([0, 0, 0]), lf([-d, 0, 0])],
            [lf([0, 0, 0]), lf([0, 0, 1]), lf([0, -D, 0])],
        ]
    )
    got = det3(m)
    expected = P(field, {(1, 1, 1): 1}).scale(D - d)
    k = got.proportional_to(expected)
    assert k is not None and k * k == 1


def test_det3_diagonal():
    field = Rationals()
    x = Poly3.variable(field, 0)
    m = LinearFormMatrix([[x, Poly3.zero(field), Poly3.zero(field)],
                          [Poly3.zero(field), x, Poly3.zero(field)],
                          [Poly3.zero(field), Poly3.zero(field), x]])
    assert det3(m) == P(field, {(3, 0, 0): 1})


def test_det3_matches_cofactor_rows():
    field = PrimeField(7)
    rng = random.Random(1)
    rows = [[Poly3.linear_form(field, [field.random(rng) for _ in range(3)]) for _ in range(3)]
            for _ in range(3)]
    m = LinearFormMatrix(rows)
    d = det3(m)

    def minor(i, j):
        idx = [k for k in range(3) if k != i]
        jdx = [k for k in range(3) if k != j]
        a, b = rows[idx[0]][jdx[0]], rows[idx[0]][jdx[1]]
        c, e = rows[idx[1]][jdx[0]], rows[idx[1]][jdx[1]]
        return a * e - b * c

    for i in range(3):
        acc = Poly3.zero(field)
        for j in range(3):
            term = rows[i][j] * minor(i, j)
            if (i + j) % 2:
                term = -term
            acc = acc + term
        assert acc == d


def test_divide_examples():
    field = Rationals()
    f = P(field, {(1, 2, 0): 1})
    g = P(field, {(0, 1, 0): 1})
    assert divide_if_divides(f, g) == P(field, {(1, 1, 0): 1})

    # x*(2yz + x^2) / x
    f2 = P(field, {(1, 1, 1): 2, (3, 0, 0): 1})
    assert divide_if_divides(f2, P(field, {(1, 0, 0): 1})) == P(field, {(0, 1, 1): 2, (2, 0, 0): 1})

    f3 = P(field, {(1, 1, 1): 1})
    g3 = P(field, {(1, 0, 0): 1, (0, 1, 0): 1})
    assert divide_if_divides(f3, g3) is None

    with pytest.raises(ZeroDivisionError):
        divide_if_divides(f3, Poly3.zero(field))


def test_divide_random_products():
    for field in (Rationals(), PrimeField(13)):
        rng = random.Random(23)
        found = 0
        while found < 50:
            f = random_poly(field, rng)
            g = random_poly(field, rng)
            if f.is_zero() or g.is_zero():
                continue
            found += 1
            q = divide_if_divides(f * g, g)
            assert q == f


def test_gradient_examples():
    field = Rationals()
    # d/dt of a r^3 - a r^2 s - 2 r s^2 + 2 r s t + 2 s^2 t - r t^2 - s t^2
    a = Fraction(7)
    F = Poly3(
        field,
        {
            (3, 0, 0): a,
            (2, 1, 0): -a,
            (1, 2, 0): Fraction(-2),
            (1, 1, 1): Fraction(2),
            (0, 2, 1): Fraction(2),
            (1, 0, 2): Fraction(-1),
            (0, 1, 2): Fraction(-1),
        },
        names=("r", "s", "t"),
    )
    dt = gradient(F)[2]
    # 2(r+s)(s-t)
    r = Poly3.variable(field, 0, names=("r", "s", "t"))
    s = Poly3.variable(field, 1, names=("r", "s", "t"))
    t = Poly3.variable(field, 2, names=("r", "s", "t"))
    assert dt == (r + s) * (s - t) * Poly3.constant(field, Fraction(2), names=("r", "s", "t"))

    f = P(field, {(3, 0, 0): 1})
    assert gradient(f) == (P(field, {(2, 0, 0): 3}), Poly3.zero(field), Poly3.zero(field))
    f2 = P(field, {(1, 1, 1): 1})
    assert gradient(f2) == (P(field, {(0, 1, 1): 1}), P(field, {(1, 0, 1): 1}), P(field, {(1, 1, 0): 1}))


def test_eval_examples():
    field = Rationals()
    xyz = P(field, {(1, 1, 1): 1})
    g = Fraction(6)
    assert eval_projective(xyz, (Fraction(0), Fraction(2), g)) == 0

    # the node of the degenerate elliptic point scheme lies on the curve
    h = -g * g / 4
    f = Poly3(field, {(0, 3, 0): h, (2, 0, 1): Fraction(1), (0, 1, 2): Fraction(-1), (0, 2, 1): g})
    assert eval_projective(f, (Fraction(0), Fraction(2), g)) == 0

    sq = P(field, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    assert eval_projective(sq, (Fraction(1), Fraction(0), Fraction(0))) == 1


def test_euler_identity_on_cubics():
    for field in (Rationals(), PrimeField(13)):
        rng = random.Random(9)
        for _ in range(20):
            t = {}
            for _ in range(5):
                i = rng.randrange(4)
                j = rng.randrange(4 - i)
                k = 3 - i - j
                t[(i, j, k)] = field.random(rng)
            f = Poly3(field, t)
            gx, gy, gz = gradient(f)
            x, y, z = (Poly3.variable(field, i) for i in range(3))
            lhs = x * gx + y * gy + z * gz
            assert lhs == f.scale(field.of_int(3))


def test_poly_str_canonical():
    field = Rationals()
    f = Poly3(field, {(0, 3, 0): Fraction(2), (2, 0, 1): Fraction(1), (0, 1, 2): Fraction(-1)})
    assert str(f) == "x^2*z + 2*y^3 - y*z^2"
    assert str(Poly3.zero(field)) == "0"
    g = Poly3(field, {(1, 0, 0): Fraction(1)}, names=("r", "s", "t"))
    assert str(g) == "r"
