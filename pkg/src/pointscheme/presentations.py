"""Quadratic presentations on three degree-1 generators.

A relation is a 9-vector of scalars over the ordered degree-2 monomial basis
xx, xy, xz, yx, yy, yz, zx, zy, zz (in terms of the presentation's own
generator names).  The canonical form of the relation space is its reduced
row echelon basis; isomorphism testing reduces to degree-1 linear maps
carrying one relation space onto the other.
"""

import numpy as np

from .fields import FieldError, PrimeField, canonical_point
from . import linalg

MONOMIAL_PAIRS = [(i, j) for i in range(3) for j in range(3)]


def monomial_index(i, j):
    return 3 * i + j


class PresentationError(ValueError):
    pass


class Presentation:
    """k<g0,g1,g2> / (relation space spanned by the given degree-2 tensors)."""

    def __init__(self, field, gens, relations):
        self.field = field
        self.gens = tuple(gens)
        if len(self.gens) != 3:
            raise PresentationError("exactly three generators are supported")
        if len(set(self.gens)) != 3 or any(len(g) != 1 for g in self.gens):
            raise PresentationError("generators must be three distinct single letters")
        rels = []
        for r in relations:
            r = tuple(r)
            if len(r) != 9:
                raise PresentationError("each relation must be a 9-vector")
            rels.append(r)
        self.relations = tuple(rels)
        self._canonical = None

    def relation_space(self):
        """Canonical reduced row echelon basis of the relation span."""
        if self._canonical is None:
            rows, pivots = linalg.rref(self.field, self.relations)
            self._canonical = (tuple(rows), tuple(pivots))
        return self._canonical[0]

    def relation_pivots(self):
        self.relation_space()
        return self._canonical[1]

    def dim(self):
        return len(self.relation_space())

    def contains_relation(self, vec):
        rows = self.relation_space()
        return linalg.in_row_space(self.field, rows, self.relation_pivots(), vec)

    def same_relation_space(self, other):
        return self.field == other.field and self.relation_space() == other.relation_space()

    def relation_matrices(self):
        """Each relation as a 3x3 coefficient matrix C with r = sum C[i][j] g_i g_j."""
        return [
            [[r[monomial_index(i, j)] for j in range(3)] for i in range(3)]
            for r in self.relations
        ]

    def monomial_name(self, idx):
        i, j = divmod(idx, 3)
        return self.gens[i] + self.gens[j]

    def relation_str(self, r):
        f = self.field
        parts = []
        for idx, c in enumerate(r):
            if f.is_zero(c):
                continue
            cs = f.scalar_str(c)
            m = self.monomial_name(idx)
            if cs == "1":
                parts.append(m)
            elif cs == "-1":
                parts.append(f"-{m}")
            else:
                parts.append(f"{cs}*{m}")
        if not parts:
            return "0"
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __str__(self):
        rels = ", ".join(self.relation_str(r) for r in self.relations)
        return f"k<{','.join(self.gens)}> / ({rels})"

    def __repr__(self):
        return f"Presentation({self})"

    def to_json(self):
        f = self.field
        rels = []
        for r in self.relations:
            terms = []
            for idx, c in enumerate(r):
                if not f.is_zero(c):
                    terms.append([f.scalar_to_json(c), self.monomial_name(idx)])
            rels.append(terms)
        return {"field": f.to_json(), "gens": list(self.gens), "relations": rels}


def relation_vector(field, gens, coeffs):
    """Build a 9-vector from a dict of 2-letter monomials, e.g. {"xy": 1, "yx": -1}."""
    pos = {g: i for i, g in enumerate(gens)}
    v = [field.zero()] * 9
    for mono, c in coeffs.items():
        if len(mono) != 2 or mono[0] not in pos or mono[1] not in pos:
            raise PresentationError(f"bad degree-2 monomial {mono!r} for gens {gens}")
        idx = monomial_index(pos[mono[0]], pos[mono[1]])
        v[idx] = field.add(v[idx], c if not isinstance(c, int) else field.of_int(c))
    return tuple(v)


def presentation(field, gens, *rels):
    """Convenience constructor from monomial-coefficient dicts."""
    return Presentation(field, gens, [relation_vector(field, gens, r) for r in rels])


class LinearMap:
    """Invertible-checkable 3x3 change of generators; column j is the image
    of the j-th generator."""

    def __init__(self, field, matrix):
        self.field = field
        self.m = tuple(tuple(row) for row in matrix)
        if len(self.m) != 3 or any(len(r) != 3 for r in self.m):
            raise PresentationError("LinearMap must be 3x3")

    def det(self):
        return linalg.mat_det3(self.field, self.m)

    def is_invertible(self):
        return not self.field.is_zero(self.det())

    def inverse(self):
        return LinearMap(self.field, linalg.mat_inv3(self.field, self.m))

    def compose(self, other):
        """self after other."""
        return LinearMap(self.field, linalg.mat_mul(self.field, self.m, other.m))

    def transform_relation(self, vec):
        """Image of a degree-2 tensor under phi (x) phi: C -> M C M^T."""
        f = self.field
        c = [[vec[monomial_index(i, j)] for j in range(3)] for i in range(3)]
        mc = linalg.mat_mul(f, self.m, c)
        mt = [[self.m[j][i] for j in range(3)] for i in range(3)]
        out = linalg.mat_mul(f, mc, mt)
        return tuple(out[i][j] for i, j in MONOMIAL_PAIRS)

    def to_json(self):
        f = self.field
        return [[f.scalar_to_json(c) for c in row] for row in self.m]

    def __str__(self):
        f = self.field
        return "[" + "; ".join(", ".join(f.scalar_str(c) for c in row) for row in self.m) + "]"

    def __repr__(self):
        return f"LinearMap({self})"


def identity_map(field):
    one, zero = field.one(), field.zero()
    return LinearMap(field, [[one, zero, zero], [zero, one, zero], [zero, zero, one]])


def map_from_images(field, images):
    """LinearMap sending generator j to the linear combination images[j],
    given as coefficient triples in the generators."""
    return LinearMap(field, [[images[j][i] for j in range(3)] for i in range(3)])


def apply_change_of_variables(phi, pres):
    """Transform every relation by phi (x) phi.  Requires phi invertible."""
    if not phi.is_invertible():
        raise PresentationError("singular change of variables")
    if phi.field != pres.field:
        raise PresentationError("field mismatch")
    return Presentation(pres.field, pres.gens, [phi.transform_relation(r) for r in pres.relations])


def is_iso_witness(phi, a, b):
    """True iff phi is invertible and phi (x) phi maps the relation space of a
    onto the relation space of b."""
    if a.field != b.field:
        raise PresentationError("presentations live over different fields")
    if phi.field != a.field:
        raise PresentationError("map field mismatch")
    if not phi.is_invertible():
        return False
    if a.dim() != b.dim():
        return False
    return all(b.contains_relation(phi.transform_relation(r)) for r in a.relation_space())


class IsoWitness:
    """An explicit isomorphism certificate between two named algebras."""

    def __init__(self, source, target, linear_map):
        self.source = source
        self.target = target
        self.map = linear_map

    def verify(self, a, b):
        return is_iso_witness(self.map, a, b)

    def to_json(self):
        return {"source": str(self.source), "target": str(self.target), "map": self.map.to_json()}


def quadratic_dual(pres):
    """Relations of the dual: the orthogonal complement of the relation space
    under the monomial-wise pairing."""
    f = pres.field
    rows = pres.relation_space()
    if rows:
        basis = linalg.nullspace(f, rows)
    else:
        basis = linalg.nullspace(f, [], ncols=9)
    return Presentation(f, pres.gens, basis)


def _pgl3_candidates(p):
    """All 3x3 matrices over F_p with first nonzero entry 1, in lexicographic
    order of the flattened entries, as one int8 array."""
    blocks = []
    for lead in range(8, -1, -1):
        nfree = 8 - lead
        n = p ** nfree
        block = np.zeros((n, 9), dtype=np.int8)
        block[:, lead] = 1
        if nfree:
            vals = np.arange(n)
            for pos in range(nfree):
                div = p ** (nfree - 1 - pos)
                block[:, lead + 1 + pos] = (vals // div) % p
        blocks.append(block)
    return np.concatenate(blocks)


def _batch_det3_mod(ms, p):
    a = ms
    det = (
        a[:, 0, 0] * (a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1])
        - a[:, 0, 1] * (a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0])
        + a[:, 0, 2] * (a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0])
    )
    return det % p


def brute_force_iso_search(a, b, max_p=7, force=False, chunk=65536):
    """Exhaust PGL_3(F_p) for a witness a -> b; returns the lexicographically
    first LinearMap that verifies, or None.

    Absence over F_p certifies nothing about the algebraic closure; callers
    must combine with isomorphism invariants.
    """
    if a.field != b.field:
        raise PresentationError("presentations live over different fields")
    field = a.field
    if not isinstance(field, PrimeField):
        raise PresentationError("brute force search needs a prime field")
    p = field.p
    if p > max_p and not force:
        raise PresentationError(f"p={p} exceeds the search guard {max_p}; pass force=True")
    if a.dim() != b.dim():
        return None

    rel_mats = np.array(
        [[[int(c) for c in row] for row in m] for m in a.relation_matrices()], dtype=np.int64
    )
    rows = np.array([[int(c) for c in r] for r in b.relation_space()], dtype=np.int64)
    ann = linalg.nullspace_mod(rows, p)

    cands = _pgl3_candidates(p)
    for start in range(0, len(cands), chunk):
        batch = cands[start : start + chunk].astype(np.int64).reshape(-1, 3, 3)
        det = _batch_det3_mod(batch, p)
        ok = det != 0
        if not ok.any():
            continue
        good = np.nonzero(ok)[0]
        ms = batch[good]
        mask = np.ones(len(ms), dtype=bool)
        for c in rel_mats:
            img = np.matmul(np.matmul(ms, c) % p, ms.transpose(0, 2, 1)) % p
            flat = img.reshape(len(ms), 9)
            resid = flat @ ann.T % p
            mask &= ~resid.any(axis=1)
            if not mask.any():
                break
        if mask.any():
            m = batch[good[np.nonzero(mask)[0][0]]]
            phi = LinearMap(field, [[int(v) % p for v in row] for row in m])
            assert is_iso_witness(phi, a, b)
            return phi
    return None


def parse_presentation(obj):
    """Presentation from the JSON schema {"field":..., "gens":..., "relations":[[...]]}."""
    from .fields import field_from_json

    if not isinstance(obj, dict):
        raise PresentationError("presentation JSON must be an object")
    for key in ("field", "gens", "relations"):
        if key not in obj:
            raise PresentationError(f"missing key {key!r}")
    field = field_from_json(obj["field"])
    gens = obj["gens"]
    if not isinstance(gens, list) or len(gens) != 3:
        raise PresentationError("gens must be a list of three names")
    pos = {g: i for i, g in enumerate(gens)}
    rels = []
    for ri, terms in enumerate(obj["relations"]):
        v = [field.zero()] * 9
        for ti, term in enumerate(terms):
            where = f"relations[{ri}][{ti}]"
            if not isinstance(term, (list, tuple)) or len(term) != 2:
                raise PresentationError(f"{where}: term must be [coeff, monomial]")
            cs, mono = term
            try:
                c = field.scalar_from_json(cs)
            except FieldError as e:
                raise PresentationError(f"{where}: {e}")
            if not isinstance(mono, str) or len(mono) != 2:
                raise PresentationError(f"{where}: monomial {mono!r} is not quadratic")
            if mono[0] not in pos or mono[1] not in pos:
                raise PresentationError(f"{where}: unknown monomial {mono!r}")
            idx = monomial_index(pos[mono[0]], pos[mono[1]])
            v[idx] = field.add(v[idx], c)
        rels.append(tuple(v))
    return Presentation(field, gens, rels)


__all__ = [
    "Presentation",
    "PresentationError",
    "LinearMap",
    "IsoWitness",
    "presentation",
    "relation_vector",
    "identity_map",
    "map_from_images",
    "apply_change_of_variables",
    "is_iso_witness",
    "quadratic_dual",
    "brute_force_iso_search",
    "parse_presentation",
    "canonical_point",
]
